#pragma once

// Reeb orbit strata, S^1-equivariant Euler characteristics, frequencies and
// the mean Euler characteristic chi_m with its connected-sum rule.

#include <cstdint>
#include <utility>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn {

/// Points whose coordinates j in `subset` are nonzero, periodic with period
/// L*pi/2. subset = {j : a_j | L} and L = lcm of those a_j.
struct OrbitStratum {
  std::vector<std::size_t> subset;  // indices into the canonical tuple
  ExponentTuple sub;                // the sub-tuple a_S
  std::int64_t L = 0;
  int dim = 0;                      // 2|S| - 3
  std::int64_t rs = 0;              // rs_index(a, L)
  std::int64_t chi_s1 = 0;
  std::int64_t frequency = 0;
  int sign = 1;                     // (-1)^{rs - (|S|-2)}

  /// sign * frequency * chi_s1
  Integer contribution() const;
};

struct MecResult {
  Rational value;
  std::int64_t mu_principal = 0;
  std::vector<OrbitStratum> strata;  // increasing L, principal last
  std::vector<Integer> numerator_contributions;
};

/// All saturated strata, deduplicated by L, sorted by increasing L. Frequencies
/// and signs are left at their defaults; see mean_euler_characteristic.
std::vector<OrbitStratum> orbit_strata(const ExponentTuple& a);

/// sum over index sets T with |T| >= 2 of (-1)^|T| prod_T a_j / lcm_T a_j.
Integer euler_char_s1(const ExponentTuple& sub);

/// #{m >= 1 : m*L_i < L_principal, no larger period divides m*L_i}.
/// Returns 1 when L_i == L_principal.
std::int64_t frequency(std::int64_t L_i, std::int64_t L_principal, const std::vector<std::int64_t>& larger,
                       int jobs = 0);

/// Throws ZeroPrincipalIndex if the principal orbit has index 0, and
/// BudgetExceeded for tuples with more than 30 exponents.
MecResult mean_euler_characteristic(const ExponentTuple& a, int jobs = 0);

/// sum count_i chi_i + (sum count_i - 1) (-1)^n / 2. Throws EmptyInput.
Rational chi_m_connected_sum(const std::vector<std::pair<Rational, Integer>>& parts, int n);

/// -1/2 for dimensions 7, 11, 15; UnsupportedDimension otherwise.
Rational standard_sphere_chi_m(int dimension);

}  // namespace brieskorn
