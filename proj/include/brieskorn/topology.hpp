#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/arith.hpp"
#include "brieskorn/signature.hpp"

namespace brieskorn {

enum class SphereCondition { TwoCoprimeExponents, OddEvenSet, NotSphere };

std::string to_string(SphereCondition c);

/// Brieskorn's exponent criterion for Sigma(a) to be a topological sphere.
/// Witness indices refer to positions in the canonical (non-increasing) tuple.
/// For OddEvenSet the first index is the globally coprime exponent, the rest
/// form the odd set with pairwise gcd 2.
struct SphereVerdict {
  bool is_sphere = false;
  SphereCondition condition = SphereCondition::NotSphere;
  std::vector<std::size_t> witness;
};

/// Requires n >= 3; throws DimensionTooLow otherwise.
SphereVerdict sphere_criterion(const ExponentTuple& a);

/// Re-checks a verdict's witness against the gcd conditions.
bool witness_is_valid(const ExponentTuple& a, const SphereVerdict& verdict);

/// Free rank of H_{n-1}(Sigma(a)): the number of j with integral sum j_k/a_k.
std::int64_t middle_betti(const ExponentTuple& a, const CountOptions& options = {});

struct DiffeoClass {
  int dimension = 0;
  bool is_topological_sphere = false;
  std::int64_t sigma = 0;
  /// sigma/8 mod sigma_m/8 in [0, sigma_m/8); only for spheres of dimension 4m-1.
  std::optional<Integer> bp_index;
  std::optional<bool> is_standard_smooth;
};

/// Combines the sphere criterion with the fast signature count.
DiffeoClass diffeo_class(const ExponentTuple& a, const CountOptions& options = {});

enum class SigmaEllType { ProductSphere, UnitCotangent, ProductSphereSumKervaire, UnitCotangentSumKervaire };

struct SigmaEllLabel {
  SigmaEllType type;
  int n;
  std::string text;
};

/// Diffeomorphism type of Sigma(2l, 2, ..., 2) (n+1 entries, n >= 3 odd),
/// looked up by l mod 4. For n = 3 the Kervaire summand is trivial and
/// S*S^3 = S^2 x S^3, so every l gives S^2xS^3.
SigmaEllLabel sigma_ell_diffeo_type(std::int64_t ell, int n);

}  // namespace brieskorn
