#include "brieskorn/search.hpp"

#include <algorithm>
#include <numeric>

#include "brieskorn/mec.hpp"
#include "brieskorn/topology.hpp"

namespace brieskorn {

namespace {

void factor_rec(std::int64_t rest, int slots, std::int64_t cap, std::vector<std::int64_t>& prefix,
                std::vector<std::vector<std::int64_t>>& out) {
  if (slots == 1) {
    if (rest <= cap) {
      prefix.push_back(rest);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // Largest part first so the output is lexicographically descending.
  for (std::int64_t d = std::min(rest, cap); d >= 1; --d) {
    if (rest % d != 0) continue;
    // The remaining slots-1 parts are <= d, so their product is at most d^(slots-1).
    std::int64_t reach = 1;
    bool enough = false;
    for (int i = 0; i < slots - 1; ++i) {
      reach *= d;
      if (reach >= rest / d) {
        enough = true;
        break;
      }
    }
    if (!enough) continue;
    prefix.push_back(d);
    factor_rec(rest / d, slots - 1, d, prefix, out);
    prefix.pop_back();
  }
}

bool canonical_less(const SearchHit& x, const SearchHit& y) {
  if (x.s != y.s) return x.s < y.s;
  return std::lexicographical_compare(x.tuple.begin(), x.tuple.end(), y.tuple.begin(), y.tuple.end());
}

std::vector<ExponentTuple> candidates_for(std::int64_t s, const SearchProfile& profile) {
  std::vector<ExponentTuple> out;
  for (const auto& b : factorizations(checked_mul(profile.mu_per_s, s), profile.parts)) {
    std::vector<std::int64_t> a(b.size());
    std::transform(b.begin(), b.end(), a.begin(), [](std::int64_t x) { return x + 1; });
    out.emplace_back(a);
  }
  return out;
}

std::optional<SearchHit> evaluate(std::int64_t s, const ExponentTuple& a, const SearchProfile& profile) {
  CountOptions serial;
  serial.jobs = 1;
  const SignatureCount sc = signature_counts_fast_serial(a, serial);
  if (sc.sigma_plus != profile.plus_per_s * s || sc.sigma_minus != profile.minus_per_s * s) return std::nullopt;
  if (a.n() < 3 || !sphere_criterion(a).is_sphere) return std::nullopt;
  SearchHit hit{s, a, sc, true, false, false};
  if (a.n() % 2 == 0) {
    const Integer order = sigma_m_const(a.n() / 2) / 8;
    Integer idx = Integer(static_cast<long>(sc.signature() / 8)) % order;
    hit.standard_smooth = sc.signature() % 8 == 0 && idx == 0;
    if (hit.standard_smooth)
      hit.ac_zero = morita_formula(a.n(), Integer(static_cast<long>(sc.signature())), Integer(static_cast<long>(sc.mu)))
                        .is_zero();
  }
  return hit;
}

void validate_range(std::int64_t s_min, std::int64_t s_max) {
  if (s_min < 1 || s_max < s_min)
    throw Error(ErrorCode::InvalidArgument,
                "need 1 <= s_min <= s_max, got [" + std::to_string(s_min) + "," + std::to_string(s_max) + "]");
}

}  // namespace

std::vector<std::vector<std::int64_t>> factorizations(std::int64_t M, int parts) {
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "cannot factor " + std::to_string(M));
  if (parts < 1) throw Error(ErrorCode::InvalidArgument, "need at least one part");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  factor_rec(M, parts, M, prefix, out);
  return out;
}

std::vector<SearchHit> search_exotic_spheres(std::int64_t s_min, std::int64_t s_max, const SearchOptions& options) {
  validate_range(s_min, s_max);
  const int jobs = resolve_jobs(options.jobs);
  std::vector<SearchHit> all;
  for (std::int64_t s = s_min; s <= s_max; ++s) {
    const auto cands = candidates_for(s, options.profile);
    const auto count = static_cast<std::int64_t>(cands.size());
    std::vector<std::optional<SearchHit>> slots(cands.size());
    // Failures inside the parallel region are rethrown after it.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        slots[i] = evaluate(s, cands[i], options.profile);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SearchHit> hits;
    for (auto& h : slots) {
      if (h) hits.push_back(std::move(*h));
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) { return canonical_less(y, x); });
    if (options.on_s_done) options.on_s_done(s, hits);
    all.insert(all.end(), hits.begin(), hits.end());
  }
  return all;
}

std::vector<SearchHit> search_exotic_spheres_serial(std::int64_t s_min, std::int64_t s_max,
                                                    const SearchProfile& profile) {
  validate_range(s_min, s_max);
  std::vector<SearchHit> all;
  for (std::int64_t s = s_min; s <= s_max; ++s) {
    std::vector<SearchHit> hits;
    for (const auto& a : candidates_for(s, profile)) {
      if (auto h = evaluate(s, a, profile)) hits.push_back(std::move(*h));
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) { return canonical_less(y, x); });
    all.insert(all.end(), hits.begin(), hits.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Scaled families

ScaledFamily::ScaledFamily(ExponentTuple base, int sign, const CountOptions& options)
    : base_(std::move(base)),
      sign_(sign),
      modulus_(lcm_of(base_.exponents())),
      law_(family_signature(base_, modulus_, sign_, options)) {}

ExponentTuple ScaledFamily::member(std::int64_t k) const { return law_.member(k); }

Integer ScaledFamily::mu(std::int64_t k) const { return milnor_number(member(k)); }

std::optional<AcClass> ScaledFamily::ac(std::int64_t k, const CountOptions& /*options*/) const {
  const ExponentTuple a = member(k);
  if (a.n() % 2 != 0 || a.n() < 3 || !sphere_criterion(a).is_sphere) return std::nullopt;
  const Integer sigma(static_cast<long>(signature(k).signature()));
  if (sigma % 8 != 0) return std::nullopt;
  const Integer order = sigma_m_const(a.n() / 2) / 8;
  if (Integer(sigma / 8) % order != 0) return std::nullopt;
  return morita_formula(a.n(), sigma, milnor_number(a));
}

// ---------------------------------------------------------------------------
// Combination

ComboRecipe find_trivial_ac_combo(const ExponentTuple& sigma1, const ExponentTuple& sigma2,
                                  const CountOptions& options) {
  if (sigma1.n() != sigma2.n())
    throw Error(ErrorCode::DimensionMismatch, "dimensions " + std::to_string(sigma1.dimension()) + " and " +
                                                  std::to_string(sigma2.dimension()) + " differ");
  if (sigma1.n() % 2 != 0)
    throw Error(ErrorCode::BadDimension, "combination needs dimension 4m-1, got " + std::to_string(sigma1.dimension()));

  const AcClass c1 = almost_contact_class(sigma1, options);
  const AcClass c2 = almost_contact_class(sigma2, options);
  if (!(c1.primary > 0 && c2.primary < 0))
    throw Error(ErrorCode::SignConditionFailed,
                "need ac1 > 0 > ac2, got " + c1.to_string() + " and " + c2.to_string());

  ComboRecipe r{sigma1, sigma2, c1.primary, c2.primary, 0, 0, 0, 0, 0, 0, c1, false};
  const Integer abs2 = -c2.primary;
  mpz_gcd(r.gcd.get_mpz_t(), r.ac1.get_mpz_t(), abs2.get_mpz_t());
  r.count1 = abs2 / r.gcd;
  r.count2 = r.ac1 / r.gcd;
  r.ac_total = connected_sum_ac({{c1, r.count1}, {c2, r.count2}});
  if (!r.ac_total.is_zero()) throw Error(ErrorCode::Internal, "combination did not cancel the ac class");

  r.chi1 = mean_euler_characteristic(sigma1, options.jobs).value;
  r.chi2 = mean_euler_characteristic(sigma2, options.jobs).value;
  r.chi_m = chi_m_connected_sum({{r.chi1, r.count1}, {r.chi2, r.count2}}, sigma1.n());
  r.nontrivial = r.chi_m != standard_sphere_chi_m(sigma1.dimension());
  return r;
}

}  // namespace brieskorn
