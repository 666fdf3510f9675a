#pragma once

// Almost contact classes of Brieskorn spheres: the group pi_{2n-1}(SO(2n)/U(n)),
// Morita's formula and connected-sum arithmetic.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/arith.hpp"
#include "brieskorn/signature.hpp"

namespace brieskorn {

enum class AcShape { ZPlusZ2, ZModFactorial, Z, ZModHalfFactorial };

std::string to_string(AcShape shape);

struct AcGroup {
  int n = 0;
  AcShape shape = AcShape::Z;
  std::optional<Integer> modulus;  // (n-1)! or (n-1)!/2 for the cyclic cases

  bool cyclic() const noexcept { return modulus.has_value(); }
  friend bool operator==(const AcGroup&, const AcGroup&) = default;
};

/// n mod 4 = 0: Z + Z_2, 1: Z_{(n-1)!}, 2: Z, 3: Z_{(n-1)!/2}. Requires n >= 2.
AcGroup ac_group(int n);

struct AcClass {
  AcGroup group;
  Integer primary;               // in [0, modulus) when cyclic
  std::optional<int> secondary;  // Z_2 part, present iff n = 0 mod 4

  bool is_zero() const { return primary == 0 && secondary.value_or(0) == 0; }
  std::string to_string() const;
  friend bool operator==(const AcClass&, const AcClass&) = default;
};

/// Reduces into canonical representatives for the group.
AcClass make_ac_class(const AcGroup& group, Integer primary, int secondary = 0);

/// Morita's formula evaluated from counts, without the sphere precondition.
/// n = 0 mod 4: (sigma/(4 S_m) - mu/2, 0); n = 2 mod 4: -sigma/(4 S_m) - mu/2;
/// n odd: mu/2 reduced modulo the cyclic order. m = n/2 for even n.
AcClass morita_formula(int n, const Integer& sigma, const Integer& mu);

/// Morita's formula on a standard smooth sphere. Throws NotStandardSphere
/// unless the tuple is a topological sphere of dimension 4m-1 with bP index 0;
/// odd-n spheres are refused because their smooth type is not decided here.
AcClass almost_contact_class(const ExponentTuple& a, const CountOptions& options = {});

bool is_homotopically_standard(const ExponentTuple& a, const CountOptions& options = {});

/// Componentwise sum of count * class. Throws MixedGroups or EmptyInput.
AcClass connected_sum_ac(const std::vector<std::pair<AcClass, Integer>>& parts);

}  // namespace brieskorn
