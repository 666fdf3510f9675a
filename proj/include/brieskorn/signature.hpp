#pragma once

// Lattice-point counts sigma^+, sigma^-, sigma^0 of the Milnor filling's
// intersection form, the family scaling law, the asymptotic sigma^+/sigma^-
// densities and a CLT-based heuristic estimate.

#include <cstdint>
#include <utility>

#include "brieskorn/arith.hpp"

namespace brieskorn {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct CountOptions {
  /// Maximum number of tuple visits before BudgetExceeded.
  std::uint64_t budget = kDefaultBudget;
  /// Worker count for the parallel kernels; 0 means all available threads.
  int jobs = 0;
};

/// Resolves jobs == 0 to the OpenMP default.
int resolve_jobs(int jobs);

/// Counts of j with 0 < j_k < a_k by where sum j_k/a_k falls: an odd interval
/// (2k, 2k+1) for sigma_plus, an even one (2k+1, 2k+2) for sigma_minus, an
/// integer for sigma_zero. The three always sum to mu.
struct SignatureCount {
  std::int64_t sigma_plus = 0;
  std::int64_t sigma_minus = 0;
  std::int64_t sigma_zero = 0;
  std::int64_t mu = 0;

  std::int64_t signature() const noexcept { return sigma_plus - sigma_minus; }

  SignatureCount& operator+=(const SignatureCount& other) noexcept {
    sigma_plus += other.sigma_plus;
    sigma_minus += other.sigma_minus;
    sigma_zero += other.sigma_zero;
    mu += other.mu;
    return *this;
  }
  friend SignatureCount operator+(SignatureCount a, const SignatureCount& b) noexcept { return a += b; }
  friend SignatureCount operator-(const SignatureCount& a, const SignatureCount& b) noexcept {
    return {a.sigma_plus - b.sigma_plus, a.sigma_minus - b.sigma_minus, a.sigma_zero - b.sigma_zero,
            a.mu - b.mu};
  }
  /// Componentwise multiple; throws Overflow.
  SignatureCount scaled(std::int64_t k) const;

  friend bool operator==(const SignatureCount&, const SignatureCount&) = default;
};

/// Serial reference: visits all mu(a) tuples with exact integer classification.
SignatureCount signature_counts_naive(const ExponentTuple& a, const CountOptions& options = {});

/// Parallel kernel: enumerates only (j_1, ..., j_n) with a_0 the largest
/// exponent and counts the admissible j_0 per integer interval in closed form.
/// Identical results to signature_counts_naive for every worker count.
SignatureCount signature_counts_fast(const ExponentTuple& a, const CountOptions& options = {});

/// Same kernel, single-threaded (kept for the benchmark and equivalence tests).
SignatureCount signature_counts_fast_serial(const ExponentTuple& a, const CountOptions& options = {});

/// Family a_0(k) = k * modulus + sign over a fixed base (a_1, ..., a_n).
/// Counts at k are slope * k + offset. For sign = +1 the offset is zero
/// (every j_0 block of length k lands in one integer interval); for sign = -1
/// the law is affine.
struct FamilySignature {
  ExponentTuple base;
  std::int64_t modulus = 0;
  int sign = 1;
  SignatureCount per_k;
  SignatureCount offset;

  ParamLinear a0() const { return ParamLinear(modulus, sign); }
  ExponentTuple member(std::int64_t k) const;
  SignatureCount at(std::int64_t k) const;
};

/// Throws NotCommonMultiple if modulus is not divisible by every base
/// exponent, InvalidFamily if sign is not +-1 or a_0(1) < 2.
FamilySignature family_signature(const ExponentTuple& base, std::int64_t modulus, int sign,
                                 const CountOptions& options = {});

/// Limit densities per unit of a_0: each inner tuple y contributes the Lebesgue
/// measure of t in (0,1) with y + t in an odd (plus) or even (minus) interval.
struct AsymptoticDensity {
  Rational plus;
  Rational minus;
  Rational zero;  // always 0, kept for the partition check

  Rational ratio() const { return plus / minus; }
};

AsymptoticDensity asymptotic_ratio(const ExponentTuple& base, const CountOptions& options = {});

/// Heuristic normal approximation of sigma^+ and sigma^-. Not exact; never used
/// by the search. The normalization divides by the standard deviation
/// sqrt(sum (a_i - 2) / (12 a_i)).
struct CltEstimate {
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  bool degenerate = false;  // zero variance: exact point-mass classification
};

CltEstimate signature_estimate_clt(const ExponentTuple& a);

}  // namespace brieskorn
