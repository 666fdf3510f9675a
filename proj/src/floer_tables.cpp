#include "brieskorn/floer_tables.hpp"

#include <algorithm>
#include <array>

namespace brieskorn {

void GradedRankTable::add(std::int64_t degree, std::int64_t count) {
  if (degree > max_degree_ || count == 0) return;
  auto& r = ranks_[degree];
  r += count;
  if (r == 0) ranks_.erase(degree);
}

void GradedRankTable::set(std::int64_t degree, std::int64_t rank) {
  if (degree > max_degree_) return;
  if (rank == 0)
    ranks_.erase(degree);
  else
    ranks_[degree] = rank;
}

std::int64_t GradedRankTable::rank(std::int64_t degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

namespace {

void check_ell(std::int64_t ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "l must be >= 1");
}

void check_odd_n(int n, int min_n) {
  if (n < min_n || n % 2 == 0)
    throw Error(ErrorCode::BadDimension,
                "n must be odd and >= " + std::to_string(min_n) + ", got " + std::to_string(n));
}

// Calls emit(degree) for each chain generator with degree <= max_degree.
template <class Emit>
void for_each_chain_degree(std::int64_t ell, int n, std::int64_t max_degree, Emit&& emit) {
  for (std::int64_t N = 1;; ++N) {
    const std::int64_t stretch = 2 * N * (n - 2);
    // Lower bound over both branches; increasing in N.
    if (2 * (N / ell) + stretch - n + 1 > max_degree) break;
    if (N % ell == 0) {
      const std::int64_t base = 2 * (N / ell) + stretch;
      for (std::int64_t d : std::array<std::int64_t, 4>{-n + 1, 0, 1, n}) emit(base + d);
    } else {
      const std::int64_t base = 2 * (N / ell) + stretch;
      for (std::int64_t d : std::array<std::int64_t, 4>{-n + 3, 1, 2, n}) emit(base + d);
    }
  }
}

}  // namespace

GradedRankTable sc_plus_ranks(std::int64_t ell, int n, std::int64_t max_degree) {
  check_ell(ell);
  check_odd_n(n, 3);
  GradedRankTable table(max_degree, "Z/2");
  for_each_chain_degree(ell, n, max_degree, [&](std::int64_t d) { table.add(d); });
  return table;
}

GradedRankTable sh_plus_high_dim(std::int64_t ell, int n, std::int64_t max_degree) {
  check_ell(ell);
  check_odd_n(n, 5);
  GradedRankTable table(max_degree, "Z/2");
  for_each_chain_degree(ell, n, max_degree, [&](std::int64_t d) { table.set(d, 1); });
  return table;
}

GradedRankTable sh_plus_dim5(std::int64_t ell, std::int64_t max_degree) {
  check_ell(ell);
  GradedRankTable table(max_degree, "Z/2");
  if (ell == 1) {
    table.set(2, 1);
    for (std::int64_t k = 4; k <= max_degree; ++k) table.set(k, 1);
    return table;
  }
  table.set(2, 1);
  table.set(3, 1);
  const std::int64_t period = 2 * ell + 2;
  for (std::int64_t k = 4; k <= max_degree; ++k) {
    // k = period*N + j with j in {-1,0,1,2}, N >= 1
    const std::int64_t shifted = k + 1;
    const bool windowed = (shifted % period) <= 3 && shifted / period >= 1;
    table.set(k, windowed ? 1 : 2);
  }
  return table;
}

std::string GeneratorEntry::to_string() const {
  return label.to_string() + (is_max ? "_M" : "_m") + "@" + std::to_string(degree);
}

std::vector<GeneratorEntry> generator_table(std::int64_t ell, std::int64_t max_degree) {
  if (ell < 2) throw Error(ErrorCode::InvalidArgument, "generator table needs l >= 2");
  std::vector<GeneratorEntry> out;
  auto push = [&](OrbitKind kind, std::int64_t N) {
    const auto label = OrbitLabel::make(kind, N);
    const std::int64_t cz = ustilovsky_cz(ell, label);
    if (cz <= max_degree) out.push_back({cz, label, false});
    if (cz + 1 <= max_degree) out.push_back({cz + 1, label, true});
  };
  // Every index for multiplicity N is at least 2N.
  for (std::int64_t N = 1; 2 * N <= max_degree; ++N) {
    push(OrbitKind::GammaPlus, N);
    push(OrbitKind::GammaMinus, N);
    push(OrbitKind::GammaZeroPlus, N);
    push(OrbitKind::GammaZeroMinus, N);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedRankTable ch_ranks_lp(std::int64_t p, std::int64_t max_degree) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be >= 2");
  GradedRankTable table(max_degree, "Q");
  table.set(2, p - 1);
  for (std::int64_t k = 4; k <= max_degree; k += 2) table.set(k, p);
  return table;
}

GradedRankTable relative_homology_ranks(std::int64_t ell, int n) {
  check_ell(ell);
  check_odd_n(n, 3);
  GradedRankTable table(2 * n, "Z");
  table.set(n, 2 * ell - 1);
  table.set(2 * n, 1);
  return table;
}

PartialRankTable sh_plus_lp_known(std::int64_t ell, std::int64_t p) {
  check_ell(ell);
  if (p < 2 || p % 2 != 0) throw Error(ErrorCode::InvalidArgument, "known ranks are stated for even p only");
  PartialRankTable out;
  for (std::int64_t k = 4; k <= 2 * ell; ++k) out.known[k] = p;
  for (std::int64_t k = 2 * ell + 1; k <= 2 * ell + 4; ++k) out.known[k] = p - 1;
  return out;
}

std::map<std::int64_t, std::int64_t> perturbed_degree_multiset(std::int64_t ell, std::int64_t max_degree) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& g : generator_table(ell, max_degree)) ++out[g.degree];
  return out;
}

}  // namespace brieskorn
