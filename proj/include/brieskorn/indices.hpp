#pragma once

// Robbin-Salamon indices of Brieskorn critical submanifolds, Morse-Bott
// generator degrees and the perturbed Conley-Zehnder indices on
// Sigma(2l,2,2,2) and Sigma(lp,p,2,2).

#include <cstdint>
#include <string>

#include "brieskorn/arith.hpp"

namespace brieskorn {

enum class OrbitKind { GammaPlus, GammaMinus, GammaZeroPlus, GammaZeroMinus, GammaZeroK };

std::string to_string(OrbitKind kind);

struct OrbitLabel {
  OrbitKind kind = OrbitKind::GammaPlus;
  std::int64_t multiplicity = 1;
  /// Branch index, only meaningful for GammaZeroK.
  std::int64_t branch = 0;

  /// Throws InvalidArgument on multiplicity < 1 or a branch on a non-branch kind.
  static OrbitLabel make(OrbitKind kind, std::int64_t multiplicity, std::int64_t branch = 0);

  std::string to_string() const;

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// mu_RS(N_{L pi/2}) = sum_j (floor(L/a_j) + ceil(L/a_j)) - 2L. Total in L >= 1.
std::int64_t rs_index(const ExponentTuple& a, std::int64_t period);

/// mu_RS + morse_index - (dim_crit - 1)/2; dim_crit must be odd.
std::int64_t generator_degree(std::int64_t mu_rs, std::int64_t morse_index, std::int64_t dim_crit);

/// Index of the principal orbit, 2 lcm(a) (sum 1/a_j - 1). Even, may be 0.
std::int64_t principal_rs_index(const ExponentTuple& a);

/// Perturbed indices on Sigma(2l,2,2,2):
///   N gamma^{0,+-}: 2N + 2Nl, N gamma^+: 2 ceil(N/l) + 2N - 2,
///   N gamma^-: 2 floor(N/l) + 2N + 2.
std::int64_t ustilovsky_cz(std::int64_t ell, const OrbitLabel& orbit);

/// Perturbed indices on Sigma(lp,p,2,2):
///   N gamma^+: 2 ceil(2N/lp) + 2 ceil(2N/p) - 2,
///   N gamma^-: 2 floor(2N/lp) + 2 floor(2N/p) + 2,
///   N gamma^{0,k}: 2N + 2Nl for every branch 0 <= k < p.
/// GammaZeroPlus/GammaZeroMinus are accepted as branches 0/1 when p = 2.
std::int64_t ustilovsky_cz_p(std::int64_t ell, std::int64_t p, const OrbitLabel& orbit);

// Floor/ceil for positive denominators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace brieskorn
