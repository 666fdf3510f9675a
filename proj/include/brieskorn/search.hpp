#pragma once

// Brute-force search for exotic but homotopically standard contact spheres,
// scaled exponent families, and the two-family connected-sum solver that
// kills the almost contact class.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "brieskorn/classify.hpp"
#include "brieskorn/signature.hpp"

namespace brieskorn {

/// All non-increasing sequences of `parts` integers >= 1 with product M, in
/// lexicographically descending order.
std::vector<std::vector<std::int64_t>> factorizations(std::int64_t M, int parts);

/// Linear targets per unit s: mu = mu_per_s*s, sigma^+ = plus_per_s*s,
/// sigma^- = minus_per_s*s, over tuples with `parts` exponents.
struct SearchProfile {
  int parts = 5;
  std::int64_t mu_per_s = 720;
  std::int64_t plus_per_s = 472;
  std::int64_t minus_per_s = 248;

  static SearchProfile dim7() { return {}; }
};

struct SearchHit {
  std::int64_t s = 0;
  ExponentTuple tuple;
  SignatureCount sigma;
  bool sphere = false;
  bool standard_smooth = false;
  bool ac_zero = false;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchOptions {
  SearchProfile profile;
  int jobs = 0;
  /// Called once per s with that s's hits in canonical order, as soon as s is done.
  std::function<void(std::int64_t s, const std::vector<SearchHit>&)> on_s_done;
};

/// Hits sorted by s, then exponents descending lexicographically. Identical
/// for every worker count.
std::vector<SearchHit> search_exotic_spheres(std::int64_t s_min, std::int64_t s_max,
                                             const SearchOptions& options = {});

/// Single-threaded reference of the same search.
std::vector<SearchHit> search_exotic_spheres_serial(std::int64_t s_min, std::int64_t s_max,
                                                    const SearchProfile& profile = {});

/// a_0(k) = k * lcm(base) + sign over a fixed base.
class ScaledFamily {
 public:
  /// Computes the scaling law once; throws InvalidFamily for sign != +-1.
  ScaledFamily(ExponentTuple base, int sign, const CountOptions& options = {});

  const ExponentTuple& base() const noexcept { return base_; }
  int sign() const noexcept { return sign_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  ExponentTuple member(std::int64_t k) const;
  Integer mu(std::int64_t k) const;
  /// Signature counts via the scaling law.
  SignatureCount signature(std::int64_t k) const { return law_.at(k); }
  const FamilySignature& law() const noexcept { return law_; }
  /// Morita's class when member(k) is a standard smooth sphere, else empty.
  std::optional<AcClass> ac(std::int64_t k, const CountOptions& options = {}) const;

 private:
  ExponentTuple base_;
  int sign_;
  std::int64_t modulus_;
  FamilySignature law_;
};

struct ComboRecipe {
  ExponentTuple sigma1;
  ExponentTuple sigma2;
  Integer ac1;     // > 0
  Integer ac2;     // < 0
  Integer count1;  // |ac2| / gcd
  Integer count2;  // ac1 / gcd
  Integer gcd;     // gcd(ac1, |ac2|)
  Rational chi1;
  Rational chi2;
  Rational chi_m;
  AcClass ac_total;
  bool nontrivial = false;
};

/// Throws DimensionMismatch, SignConditionFailed, NotStandardSphere.
ComboRecipe find_trivial_ac_combo(const ExponentTuple& sigma1, const ExponentTuple& sigma2,
                                  const CountOptions& options = {});

}  // namespace brieskorn
