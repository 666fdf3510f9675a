#include "brieskorn/topology.hpp"

#include <numeric>

namespace brieskorn {

std::string to_string(SphereCondition c) {
  switch (c) {
    case SphereCondition::TwoCoprimeExponents: return "TwoCoprimeExponents";
    case SphereCondition::OddEvenSet: return "OddEvenSet";
    case SphereCondition::NotSphere: return "NotSphere";
  }
  return "?";
}

namespace {

bool coprime_to_all_others(const ExponentTuple& a, std::size_t i) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != i && std::gcd(a[i], a[j]) != 1) return false;
  }
  return true;
}

// Connected components of the graph on `nodes` with an edge when gcd > 1,
// each sorted, in order of their smallest index.
std::vector<std::vector<std::size_t>> gcd_components(const ExponentTuple& a,
                                                     const std::vector<std::size_t>& nodes) {
  std::vector<int> comp(nodes.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      out.back().push_back(nodes[u]);
      for (std::size_t v = 0; v < nodes.size(); ++v) {
        if (comp[v] < 0 && std::gcd(a[nodes[u]], a[nodes[v]]) != 1) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

SphereVerdict sphere_criterion(const ExponentTuple& a) {
  if (a.n() < 3)
    throw Error(ErrorCode::DimensionTooLow, "sphere criterion needs n >= 3, got n = " + std::to_string(a.n()));

  std::vector<std::size_t> isolated;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coprime_to_all_others(a, i)) isolated.push_back(i);
  }
  if (isolated.size() >= 2)
    return {true, SphereCondition::TwoCoprimeExponents, {isolated[0], isolated[1]}};
  if (isolated.size() == 1) {
    // The odd set must be a whole gcd-component (its members are coprime to
    // everything outside) and a clique with every pairwise gcd equal to 2.
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != isolated[0]) rest.push_back(i);
    }
    for (const auto& comp : gcd_components(a, rest)) {
      if (comp.size() < 3 || comp.size() % 2 == 0) continue;
      bool all_two = true;
      for (std::size_t x = 0; x < comp.size() && all_two; ++x) {
        for (std::size_t y = x + 1; y < comp.size(); ++y) {
          if (std::gcd(a[comp[x]], a[comp[y]]) != 2) {
            all_two = false;
            break;
          }
        }
      }
      if (all_two) {
        SphereVerdict v{true, SphereCondition::OddEvenSet, {isolated[0]}};
        v.witness.insert(v.witness.end(), comp.begin(), comp.end());
        return v;
      }
    }
  }
  return {};
}

bool witness_is_valid(const ExponentTuple& a, const SphereVerdict& verdict) {
  const auto& w = verdict.witness;
  for (auto i : w) {
    if (i >= a.size()) return false;
  }
  switch (verdict.condition) {
    case SphereCondition::NotSphere:
      return w.empty() && !verdict.is_sphere;
    case SphereCondition::TwoCoprimeExponents:
      return verdict.is_sphere && w.size() == 2 && w[0] != w[1] && coprime_to_all_others(a, w[0]) &&
             coprime_to_all_others(a, w[1]);
    case SphereCondition::OddEvenSet: {
      if (!verdict.is_sphere || w.size() < 4 || (w.size() - 1) % 2 == 0) return false;
      if (!coprime_to_all_others(a, w[0])) return false;
      std::vector<bool> in_set(a.size(), false);
      for (std::size_t k = 1; k < w.size(); ++k) in_set[w[k]] = true;
      if (in_set[w[0]]) return false;
      for (std::size_t k = 1; k < w.size(); ++k) {
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (j == w[k]) continue;
          const auto g = std::gcd(a[w[k]], a[j]);
          if (in_set[j] ? g != 2 : g != 1) return false;
        }
      }
      return true;
    }
  }
  return false;
}

std::int64_t middle_betti(const ExponentTuple& a, const CountOptions& options) {
  return signature_counts_fast(a, options).sigma_zero;
}

DiffeoClass diffeo_class(const ExponentTuple& a, const CountOptions& options) {
  DiffeoClass out;
  out.dimension = a.dimension();
  out.sigma = signature_counts_fast(a, options).signature();
  out.is_topological_sphere = a.n() >= 3 && sphere_criterion(a).is_sphere;
  if (out.is_topological_sphere && a.n() % 2 == 0) {
    const int m = a.n() / 2;
    if (out.sigma % 8 != 0)
      throw Error(ErrorCode::Internal, "signature of a sphere filling not divisible by 8: " + a.to_string());
    const Integer order = sigma_m_const(m) / 8;
    Integer idx = Integer(static_cast<long>(out.sigma / 8)) % order;
    if (idx < 0) idx += order;
    out.bp_index = idx;
    out.is_standard_smooth = (idx == 0);
  }
  return out;
}

SigmaEllLabel sigma_ell_diffeo_type(std::int64_t ell, int n) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "l must be >= 1");
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::BadParity, "n must be odd and >= 3, got " + std::to_string(n));
  const auto sn = "S^" + std::to_string(n);
  const auto product = "S^" + std::to_string(n - 1) + "x" + sn;
  if (n == 3) return {SigmaEllType::ProductSphere, n, product};
  switch (ell % 4) {
    case 0: return {SigmaEllType::ProductSphere, n, product};
    case 1: return {SigmaEllType::UnitCotangent, n, "S*" + sn};
    case 2: return {SigmaEllType::ProductSphereSumKervaire, n, "(" + product + ")#K"};
    default: return {SigmaEllType::UnitCotangentSumKervaire, n, "S*" + sn + "#K"};
  }
}

}  // namespace brieskorn
