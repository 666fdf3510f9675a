#include "brieskorn/indices.hpp"

namespace brieskorn {

std::string to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::GammaPlus: return "gamma+";
    case OrbitKind::GammaMinus: return "gamma-";
    case OrbitKind::GammaZeroPlus: return "gamma0+";
    case OrbitKind::GammaZeroMinus: return "gamma0-";
    case OrbitKind::GammaZeroK: return "gamma0k";
  }
  return "?";
}

OrbitLabel OrbitLabel::make(OrbitKind kind, std::int64_t multiplicity, std::int64_t branch) {
  if (multiplicity < 1) throw Error(ErrorCode::InvalidArgument, "orbit multiplicity must be >= 1");
  if (kind != OrbitKind::GammaZeroK && branch != 0)
    throw Error(ErrorCode::InvalidArgument, "branch index given for " + brieskorn::to_string(kind));
  if (branch < 0) throw Error(ErrorCode::BranchOutOfRange, "negative branch index");
  return {kind, multiplicity, branch};
}

std::string OrbitLabel::to_string() const {
  std::string out = multiplicity == 1 ? "" : std::to_string(multiplicity);
  out += brieskorn::to_string(kind);
  if (kind == OrbitKind::GammaZeroK) out += "[" + std::to_string(branch) + "]";
  return out;
}

std::int64_t rs_index(const ExponentTuple& a, std::int64_t period) {
  if (period < 1) throw Error(ErrorCode::InvalidArgument, "period parameter L must be >= 1");
  std::int64_t sum = 0;
  for (auto aj : a) sum = checked_add(sum, floor_div(period, aj) + ceil_div(period, aj));
  return checked_add(sum, -checked_mul(2, period));
}

std::int64_t generator_degree(std::int64_t mu_rs, std::int64_t morse_index, std::int64_t dim_crit) {
  if (dim_crit < 1 || dim_crit % 2 == 0)
    throw Error(ErrorCode::NonIntegerDegree,
                "critical manifold dimension " + std::to_string(dim_crit) + " is not odd");
  if (morse_index < 0 || morse_index > dim_crit)
    throw Error(ErrorCode::InvalidArgument, "Morse index out of range");
  return mu_rs + morse_index - (dim_crit - 1) / 2;
}

std::int64_t principal_rs_index(const ExponentTuple& a) { return rs_index(a, lcm_of(a.exponents())); }

std::int64_t ustilovsky_cz(std::int64_t ell, const OrbitLabel& orbit) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "l must be >= 1");
  const std::int64_t n = orbit.multiplicity;
  switch (orbit.kind) {
    case OrbitKind::GammaZeroPlus:
    case OrbitKind::GammaZeroMinus:
      return 2 * n + 2 * n * ell;
    case OrbitKind::GammaPlus:
      return 2 * ceil_div(n, ell) + 2 * n - 2;
    case OrbitKind::GammaMinus:
      return 2 * floor_div(n, ell) + 2 * n + 2;
    case OrbitKind::GammaZeroK:
      break;
  }
  throw Error(ErrorCode::WrongFamily, "branch orbits belong to Sigma(lp,p,2,2)");
}

std::int64_t ustilovsky_cz_p(std::int64_t ell, std::int64_t p, const OrbitLabel& orbit) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "l must be >= 1");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be >= 2");
  const std::int64_t n = orbit.multiplicity;
  switch (orbit.kind) {
    case OrbitKind::GammaPlus:
      return 2 * ceil_div(2 * n, ell * p) + 2 * ceil_div(2 * n, p) - 2;
    case OrbitKind::GammaMinus:
      return 2 * floor_div(2 * n, ell * p) + 2 * floor_div(2 * n, p) + 2;
    case OrbitKind::GammaZeroPlus:
    case OrbitKind::GammaZeroMinus:
      if (p != 2) throw Error(ErrorCode::WrongFamily, "gamma0+- only exist for p = 2; use a branch index");
      return 2 * n + 2 * n * ell;
    case OrbitKind::GammaZeroK:
      if (orbit.branch < 0 || orbit.branch >= p)
        throw Error(ErrorCode::BranchOutOfRange,
                    "branch " + std::to_string(orbit.branch) + " not in [0," + std::to_string(p) + ")");
      return 2 * n + 2 * n * ell;
  }
  throw Error(ErrorCode::Internal, "unreachable orbit kind");
}

}  // namespace brieskorn
