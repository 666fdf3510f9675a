#pragma once

// Graded rank tables for the positive symplectic homology of Sigma(2l,2,...,2)
// and related chain-level / contact-homology tables. The theorems are encoded
// as closed-form tables; no differentials are computed.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brieskorn/indices.hpp"

namespace brieskorn {

class GradedRankTable {
 public:
  GradedRankTable(std::int64_t max_degree, std::string coefficient_label)
      : max_degree_(max_degree), label_(std::move(coefficient_label)) {}

  /// Adds `count` to the rank in `degree`; degrees above max_degree are dropped.
  void add(std::int64_t degree, std::int64_t count = 1);
  void set(std::int64_t degree, std::int64_t rank);

  std::int64_t rank(std::int64_t degree) const;
  std::int64_t max_degree() const noexcept { return max_degree_; }
  const std::string& coefficient_label() const noexcept { return label_; }
  /// Only nonzero ranks are stored.
  const std::map<std::int64_t, std::int64_t>& ranks() const noexcept { return ranks_; }
  bool empty() const noexcept { return ranks_.empty(); }

  friend bool operator==(const GradedRankTable& a, const GradedRankTable& b) {
    return a.max_degree_ == b.max_degree_ && a.ranks_ == b.ranks_;
  }

 private:
  std::int64_t max_degree_;
  std::string label_;
  std::map<std::int64_t, std::int64_t> ranks_;
};

/// Morse-Bott chain ranks of SC^+ for Sigma(2l,2,...,2), n odd >= 3:
/// around c = 2 floor(N/l) + 2N(n-2), shifts {-n+1,0,1,n} when l | N and
/// {-n+3,1,2,n} otherwise (the l | N base is 2N/l + 2N(n-2)). Tag "Z/2".
GradedRankTable sc_plus_ranks(std::int64_t ell, int n, std::int64_t max_degree);

/// SH^+ for n >= 5: rank one in exactly the chain degrees (zero differential).
/// Throws BadDimension if n < 5 or n even.
GradedRankTable sh_plus_high_dim(std::int64_t ell, int n, std::int64_t max_degree);

/// SH^+ of Sigma(2l,2,2,2). l >= 2: rank 1 at 2, 3 and (2l+2)N + {-1,0,1,2},
/// rank 2 at every other degree >= 4. l = 1: rank 1 at 2 and every k >= 4.
GradedRankTable sh_plus_dim5(std::int64_t ell, std::int64_t max_degree);

struct GeneratorEntry {
  std::int64_t degree = 0;
  OrbitLabel label;
  bool is_max = false;  // min generators sit at mu_CZ, max at mu_CZ + 1

  std::string to_string() const;
  friend auto operator<=>(const GeneratorEntry&, const GeneratorEntry&) = default;
};

/// Perturbed generators of SC^+ for n = 3, l >= 2, sorted by degree then label.
std::vector<GeneratorEntry> generator_table(std::int64_t ell, std::int64_t max_degree);

/// Contact homology of Sigma(lp,p,2,2) over Q: p-1 in degree 2, p in even
/// degrees >= 4. Independent of l.
GradedRankTable ch_ranks_lp(std::int64_t p, std::int64_t max_degree);

/// H_*(W, Sigma_l; Z): 2l-1 in degree n, 1 in degree 2n.
GradedRankTable relative_homology_ranks(std::int64_t ell, int n);

/// SH^+ of Sigma(lp,p,2,2) for p even, restricted to the degrees where the
/// rank is known: p for k = 4..2l, p-1 for k = 2l+1..2l+4. Other degrees are
/// unknown and absent.
struct PartialRankTable {
  std::map<std::int64_t, std::int64_t> known;
  std::string coefficient_label = "Z/2";
};
PartialRankTable sh_plus_lp_known(std::int64_t ell, std::int64_t p);

/// Degree multiset of the perturbed generators for n = 3 (two per orbit).
std::map<std::int64_t, std::int64_t> perturbed_degree_multiset(std::int64_t ell, std::int64_t max_degree);

}  // namespace brieskorn
