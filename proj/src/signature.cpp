#include "brieskorn/signature.hpp"

#include <cmath>
#include <vector>

#include "inner_tuples.hpp"

namespace brieskorn {

SignatureCount SignatureCount::scaled(std::int64_t k) const {
  return {checked_mul(sigma_plus, k), checked_mul(sigma_minus, k), checked_mul(sigma_zero, k),
          checked_mul(mu, k)};
}

// ---------------------------------------------------------------------------
// Families

ExponentTuple FamilySignature::member(std::int64_t k) const {
  std::vector<std::int64_t> raw;
  raw.reserve(base.size() + 1);
  raw.push_back(a0()(k));
  raw.insert(raw.end(), base.begin(), base.end());
  return ExponentTuple(raw);
}

SignatureCount FamilySignature::at(std::int64_t k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "family parameter k must be >= 1");
  return per_k.scaled(k) + offset;
}

FamilySignature family_signature(const ExponentTuple& base, std::int64_t modulus, int sign,
                                 const CountOptions& options) {
  if (sign != 1 && sign != -1)
    throw Error(ErrorCode::InvalidFamily, "sign must be +1 or -1, got " + std::to_string(sign));
  if (modulus < 1) throw Error(ErrorCode::NotCommonMultiple, "modulus must be positive");
  for (auto b : base) {
    if (modulus % b != 0)
      throw Error(ErrorCode::NotCommonMultiple,
                  std::to_string(modulus) + " is not divisible by " + std::to_string(b));
  }

  FamilySignature fam{base, modulus, sign, {}, {}};
  // Throws InvalidFamily if a_0(1) < 2.
  (void)fam.a0();

  FamilySignature plus_family{base, modulus, 1, {}, {}};
  fam.per_k = signature_counts_fast(plus_family.member(1), options);
  if (sign == -1) {
    const SignatureCount first = signature_counts_fast(fam.member(1), options);
    fam.offset = first - fam.per_k;
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Asymptotic densities

AsymptoticDensity asymptotic_ratio(const ExponentTuple& base, const CountOptions& options) {
  const detail::InnerTuples tuples(base.exponents());
  if (static_cast<std::uint64_t>(tuples.count()) > options.budget)
    throw Error(ErrorCode::BudgetExceeded, "inner enumeration of " + std::to_string(tuples.count()) +
                                               " tuples exceeds budget");
  const std::int64_t denom = tuples.denominator();
  const std::int64_t total = tuples.count();
  const int jobs = resolve_jobs(options.jobs);
  const std::int64_t chunks = std::max<std::int64_t>(1, std::min<std::int64_t>(total, jobs * 16LL));

  // Per-chunk numerators over denom; summed exactly afterwards.
  std::vector<__int128> plus(chunks), minus(chunks);
#pragma omp parallel for schedule(static) num_threads(jobs)
  for (std::int64_t c = 0; c < chunks; ++c) {
    __int128 p = 0, m = 0;
    tuples.walk(detail::chunk_begin(total, chunks, c), detail::chunk_begin(total, chunks, c + 1),
                [&](std::int64_t numer) {
                  const std::int64_t floor_y = numer / denom;
                  const std::int64_t rem = numer % denom;
                  const bool even = floor_y % 2 == 0;
                  // t in (0, 1 - rem/M) stays in floor_y's interval, the rest in the next.
                  (even ? p : m) += denom - rem;
                  (even ? m : p) += rem;
                });
    plus[c] = p;
    minus[c] = m;
  }
  auto to_integer = [](__int128 v) {
    Integer hi(static_cast<long>(v >> 62));
    Integer lo(static_cast<unsigned long>(v & ((static_cast<__int128>(1) << 62) - 1)));
    return Integer(hi * (Integer(1) << 62) + lo);
  };
  Integer plus_sum = 0, minus_sum = 0;
  for (std::int64_t c = 0; c < chunks; ++c) {
    plus_sum += to_integer(plus[c]);
    minus_sum += to_integer(minus[c]);
  }
  AsymptoticDensity out;
  out.plus = Rational(plus_sum, Integer(static_cast<long>(denom)));
  out.minus = Rational(minus_sum, Integer(static_cast<long>(denom)));
  out.plus.canonicalize();
  out.minus.canonicalize();
  out.zero = 0;
  return out;
}

// ---------------------------------------------------------------------------
// CLT heuristic

namespace {
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
}  // namespace

CltEstimate signature_estimate_clt(const ExponentTuple& a) {
  CltEstimate out;
  const double terms = static_cast<double>(a.size());
  out.mean = terms / 2.0;
  Rational var = 0;
  for (auto v : a) var += Rational(Integer(static_cast<long>(v - 2)), Integer(static_cast<long>(12 * v)));
  out.variance = var.get_d();
  const double mu = milnor_number(a).get_d();

  if (var == 0) {
    // Every a_i = 2: the sum is exactly (n+1)/2.
    out.degenerate = true;
    if (a.size() % 2 == 0) return out;  // integer sum, contributes to neither
    const auto floor_mean = static_cast<std::int64_t>(a.size() / 2);
    (floor_mean % 2 == 0 ? out.sigma_plus : out.sigma_minus) = mu;
    return out;
  }

  const double sd = std::sqrt(out.variance);
  double plus = 0.0, minus = 0.0;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(a.size()); ++k) {
    const double lo = normal_cdf((static_cast<double>(k) - out.mean) / sd);
    const double hi = normal_cdf((static_cast<double>(k + 1) - out.mean) / sd);
    (k % 2 == 0 ? plus : minus) += hi - lo;
  }
  out.sigma_plus = plus * mu;
  out.sigma_minus = minus * mu;
  return out;
}

}  // namespace brieskorn
