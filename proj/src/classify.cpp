#include "brieskorn/classify.hpp"

#include "brieskorn/topology.hpp"

namespace brieskorn {

std::string to_string(AcShape shape) {
  switch (shape) {
    case AcShape::ZPlusZ2: return "Z+Z2";
    case AcShape::ZModFactorial: return "Z/(n-1)!";
    case AcShape::Z: return "Z";
    case AcShape::ZModHalfFactorial: return "Z/((n-1)!/2)";
  }
  return "?";
}

AcGroup ac_group(int n) {
  if (n < 2) throw Error(ErrorCode::DimensionTooLow, "ac group needs n >= 2, got " + std::to_string(n));
  const Integer f = factorial(static_cast<unsigned>(n - 1));
  switch (n % 4) {
    case 0: return {n, AcShape::ZPlusZ2, std::nullopt};
    case 1: return {n, AcShape::ZModFactorial, f};
    case 2: return {n, AcShape::Z, std::nullopt};
    default: return {n, AcShape::ZModHalfFactorial, Integer(f / 2)};
  }
}

std::string AcClass::to_string() const {
  if (secondary) return "(" + brieskorn::to_string(primary) + "," + std::to_string(*secondary) + ")";
  return brieskorn::to_string(primary);
}

AcClass make_ac_class(const AcGroup& group, Integer primary, int secondary) {
  AcClass out{group, std::move(primary), std::nullopt};
  if (group.modulus) {
    out.primary %= *group.modulus;
    if (out.primary < 0) out.primary += *group.modulus;
  }
  if (group.shape == AcShape::ZPlusZ2) out.secondary = ((secondary % 2) + 2) % 2;
  return out;
}

AcClass morita_formula(int n, const Integer& sigma, const Integer& mu) {
  const AcGroup group = ac_group(n);
  if (mu % 2 != 0) throw Error(ErrorCode::Internal, "odd Milnor number in Morita's formula");
  const Integer half_mu = mu / 2;
  if (n % 2 != 0) return make_ac_class(group, half_mu);

  const Rational term = Rational(sigma) / (4 * s_m_const(n / 2));
  if (term.get_den() != 1)
    throw Error(ErrorCode::NonIntegerResult, "sigma/(4 S_m) = " + to_string(term) + " is not an integer");
  const Integer t = term.get_num();
  if (n % 4 == 0) return make_ac_class(group, Integer(t - half_mu), 0);
  return make_ac_class(group, Integer(-t - half_mu));
}

AcClass almost_contact_class(const ExponentTuple& a, const CountOptions& options) {
  if (a.n() % 2 != 0)
    throw Error(ErrorCode::NotStandardSphere,
                "smooth type in dimension " + std::to_string(a.dimension()) + " is not decided; use morita_formula");
  const DiffeoClass dc = diffeo_class(a, options);
  if (!dc.is_topological_sphere) throw Error(ErrorCode::NotStandardSphere, a.to_string() + " is not a sphere");
  if (!dc.is_standard_smooth.value_or(false))
    throw Error(ErrorCode::NotStandardSphere,
                a.to_string() + " is exotic (bP index " + to_string(*dc.bp_index) + ")");
  return morita_formula(a.n(), Integer(static_cast<long>(dc.sigma)), milnor_number(a));
}

bool is_homotopically_standard(const ExponentTuple& a, const CountOptions& options) {
  return almost_contact_class(a, options).is_zero();
}

AcClass connected_sum_ac(const std::vector<std::pair<AcClass, Integer>>& parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptyInput, "connected sum of no parts");
  const AcGroup& group = parts.front().first.group;
  Integer primary = 0;
  Integer secondary = 0;
  for (const auto& [cls, count] : parts) {
    if (!(cls.group == group)) throw Error(ErrorCode::MixedGroups, "parts live in different ac groups");
    primary += count * cls.primary;
    secondary += count * cls.secondary.value_or(0);
  }
  return make_ac_class(group, primary, static_cast<int>(Integer(secondary % 2).get_si()));
}

}  // namespace brieskorn
