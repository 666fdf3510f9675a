#include "brieskorn/mec.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "brieskorn/indices.hpp"
#include "brieskorn/signature.hpp"

namespace brieskorn {

Integer OrbitStratum::contribution() const {
  Integer c = Integer(static_cast<long>(frequency)) * Integer(static_cast<long>(chi_s1));
  return sign < 0 ? Integer(-c) : c;
}

namespace {

constexpr std::size_t kMaxSubsetBits = 30;

ExponentTuple sub_tuple(const ExponentTuple& a, const std::vector<std::size_t>& idx) {
  std::vector<std::int64_t> raw;
  raw.reserve(idx.size());
  for (auto i : idx) raw.push_back(a[i]);
  return ExponentTuple(raw);
}

}  // namespace

std::vector<OrbitStratum> orbit_strata(const ExponentTuple& a) {
  const std::size_t k = a.size();
  if (k > kMaxSubsetBits)
    throw Error(ErrorCode::BudgetExceeded, "stratum enumeration over 2^" + std::to_string(k) + " subsets");

  std::map<std::int64_t, std::vector<std::size_t>> by_period;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::int64_t L = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) L = checked_lcm(L, a[j]);
    }
    if (by_period.count(L)) continue;
    std::vector<std::size_t> saturated;
    for (std::size_t j = 0; j < k; ++j) {
      if (L % a[j] == 0) saturated.push_back(j);
    }
    by_period.emplace(L, std::move(saturated));
  }

  std::vector<OrbitStratum> out;
  out.reserve(by_period.size());
  for (auto& [L, subset] : by_period) {
    OrbitStratum s{subset, sub_tuple(a, subset), L, 2 * static_cast<int>(subset.size()) - 3, rs_index(a, L),
                   0, 0, 1};
    s.chi_s1 = euler_char_s1(s.sub).get_si();
    out.push_back(std::move(s));
  }
  return out;
}

Integer euler_char_s1(const ExponentTuple& sub) {
  const std::size_t k = sub.size();
  if (k > kMaxSubsetBits) throw Error(ErrorCode::BudgetExceeded, "too many exponents for inclusion-exclusion");
  Rational total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    const int bits = std::popcount(mask);
    if (bits < 2) continue;
    Integer prod = 1;
    std::int64_t L = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) {
        prod *= static_cast<long>(sub[j]);
        L = checked_lcm(L, sub[j]);
      }
    }
    Rational term(prod, Integer(static_cast<long>(L)));
    term.canonicalize();
    total += bits % 2 == 0 ? term : Rational(-term);
  }
  if (total.get_den() != 1)
    throw Error(ErrorCode::NonIntegerResult, "S^1 Euler characteristic of " + sub.to_string() + " is " +
                                                 to_string(total));
  return total.get_num();
}

std::int64_t frequency(std::int64_t L_i, std::int64_t L_principal, const std::vector<std::int64_t>& larger,
                       int jobs) {
  if (L_i < 1 || L_principal < 1) throw Error(ErrorCode::InvalidArgument, "periods must be positive");
  if (L_i == L_principal) return 1;
  // m*L_i is a multiple of L_j iff m is a multiple of L_j / gcd(L_i, L_j).
  std::vector<std::int64_t> steps;
  for (auto Lj : larger) {
    if (Lj <= L_i) continue;
    const std::int64_t d = Lj / std::gcd(L_i, Lj);
    bool redundant = false;
    for (auto s : steps) {
      if (d % s == 0) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    std::erase_if(steps, [d](std::int64_t s) { return s % d == 0; });
    steps.push_back(d);
  }
  const std::int64_t upper = (L_principal - 1) / L_i;
  std::int64_t count = 0;
  const int threads = resolve_jobs(jobs);
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : count)
  for (std::int64_t m = 1; m <= upper; ++m) {
    bool hit = false;
    for (auto s : steps) {
      if (m % s == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) ++count;
  }
  return count;
}

MecResult mean_euler_characteristic(const ExponentTuple& a, int jobs) {
  MecResult out;
  out.mu_principal = principal_rs_index(a);
  if (out.mu_principal == 0)
    throw Error(ErrorCode::ZeroPrincipalIndex, "principal orbit of " + a.to_string() + " has index 0");

  out.strata = orbit_strata(a);
  const std::int64_t Lp = out.strata.back().L;
  std::vector<std::int64_t> periods;
  for (const auto& s : out.strata) periods.push_back(s.L);

  Integer numerator = 0;
  for (auto& s : out.strata) {
    s.frequency = frequency(s.L, Lp, periods, jobs);
    const std::int64_t exponent = s.rs - (static_cast<std::int64_t>(s.subset.size()) - 2);
    s.sign = (exponent % 2 == 0) ? 1 : -1;
    out.numerator_contributions.push_back(s.contribution());
    numerator += out.numerator_contributions.back();
  }
  const long denom = static_cast<long>(out.mu_principal < 0 ? -out.mu_principal : out.mu_principal);
  out.value = Rational(numerator, Integer(denom));
  out.value.canonicalize();
  return out;
}

Rational chi_m_connected_sum(const std::vector<std::pair<Rational, Integer>>& parts, int n) {
  if (parts.empty()) throw Error(ErrorCode::EmptyInput, "connected sum of no parts");
  Rational total = 0;
  Integer count = 0;
  for (const auto& [chi, c] : parts) {
    if (c < 1) throw Error(ErrorCode::InvalidArgument, "part counts must be positive");
    total += chi * Rational(c);
    count += c;
  }
  Rational correction(Integer(count - 1), Integer(2));
  correction.canonicalize();
  total += (n % 2 == 0) ? correction : Rational(-correction);
  return total;
}

Rational standard_sphere_chi_m(int dimension) {
  if (dimension != 7 && dimension != 11 && dimension != 15)
    throw Error(ErrorCode::UnsupportedDimension,
                "no reference value for the standard sphere in dimension " + std::to_string(dimension));
  return Rational(-1, 2);
}

}  // namespace brieskorn
