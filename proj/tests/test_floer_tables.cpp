#include <doctest.h>

#include <map>

#include "brieskorn/floer_tables.hpp"

using namespace brieskorn;

namespace {
using Ranks = std::map<std::int64_t, std::int64_t>;
}

TEST_SUITE("floer_tables") {
  TEST_CASE("Morse-Bott chain ranks") {
    CHECK(sc_plus_ranks(2, 3, 5).ranks() == Ranks{{2, 1}, {3, 1}, {4, 2}, {5, 1}});
    CHECK(sc_plus_ranks(2, 5, 8).ranks() == Ranks{{4, 1}, {7, 1}, {8, 1}});
    // l = 1: every N is divisible by l, base 4N.
    CHECK(sc_plus_ranks(1, 3, 9).ranks() == Ranks{{2, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}});
    CHECK(sc_plus_ranks(2, 3, 5).coefficient_label() == "Z/2");
    CHECK_THROWS_AS(sc_plus_ranks(2, 4, 5), Error);
  }

  TEST_CASE("chain degrees stay above the index bound for n = 3") {
    for (std::int64_t ell = 2; ell <= 6; ++ell) {
      const auto table = sc_plus_ranks(ell, 3, 100);
      for (const auto& [d, r] : table.ranks()) CHECK(d >= 2);
    }
  }

  TEST_CASE("high-dimensional homology equals the chain table") {
    CHECK(sh_plus_high_dim(2, 5, 11).ranks() == Ranks{{4, 1}, {7, 1}, {8, 1}, {10, 1}, {11, 1}});
    CHECK(sh_plus_high_dim(3, 5, 3).empty());
    for (std::int64_t ell = 1; ell <= 5; ++ell) {
      for (int n : {5, 7, 9}) CHECK(sh_plus_high_dim(ell, n, 120) == sc_plus_ranks(ell, n, 120));
    }
    CHECK_THROWS_AS(sh_plus_high_dim(2, 3, 10), Error);
    CHECK_THROWS_AS(sh_plus_high_dim(2, 6, 10), Error);
  }

  TEST_CASE("dimension five homology") {
    CHECK(sh_plus_dim5(2, 9).ranks() ==
          Ranks{{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 2}});
    CHECK(sh_plus_dim5(1, 5).ranks() == Ranks{{2, 1}, {4, 1}, {5, 1}});
    CHECK(sh_plus_dim5(3, 4).ranks() == Ranks{{2, 1}, {3, 1}, {4, 2}});
  }

  TEST_CASE("homology is dominated by chains") {
    for (std::int64_t ell = 1; ell <= 5; ++ell) {
      const auto sh = sh_plus_dim5(ell, 80);
      const auto sc = sc_plus_ranks(ell, 3, 80);
      for (std::int64_t d = 0; d <= 80; ++d) {
        CAPTURE(ell);
        CAPTURE(d);
        CHECK(sh.rank(d) <= sc.rank(d));
      }
    }
  }

  TEST_CASE("chain rank is one in the rank-one windows") {
    for (std::int64_t ell = 2; ell <= 5; ++ell) {
      const auto sc = sc_plus_ranks(ell, 3, 200);
      for (std::int64_t N = 1; (2 * ell + 2) * N + 2 <= 200; ++N) {
        for (std::int64_t j = -1; j <= 2; ++j) CHECK(sc.rank((2 * ell + 2) * N + j) == 1);
      }
    }
  }

  TEST_CASE("generator table") {
    const auto g3 = generator_table(2, 3);
    REQUIRE(g3.size() == 2);
    CHECK(g3[0].to_string() == "gamma+_m@2");
    CHECK(g3[1].to_string() == "gamma+_M@3");

    const auto g5 = generator_table(2, 5);
    std::vector<std::string> names;
    for (const auto& e : g5) names.push_back(e.to_string());
    CHECK(names == std::vector<std::string>{"gamma+_m@2", "gamma+_M@3", "2gamma+_m@4", "gamma-_m@4", "2gamma+_M@5",
                                            "gamma-_M@5"});

    const auto g8 = generator_table(3, 8);
    std::int64_t first_zero = -1;
    for (const auto& e : g8) {
      if (e.label.kind == OrbitKind::GammaZeroPlus && first_zero < 0) first_zero = e.degree;
      CHECK(e.degree == ustilovsky_cz(3, e.label) + (e.is_max ? 1 : 0));
    }
    CHECK(first_zero == 8);
    CHECK_THROWS_AS(generator_table(1, 10), Error);
  }

  TEST_CASE("perturbed generators exceed the chain table by one cancelling quadruple per window") {
    // Each window (2l+2)N + {-1,0,1,2} carries one extra generator in the
    // perturbed complex; elsewhere the two multisets agree.
    for (std::int64_t ell = 2; ell <= 4; ++ell) {
      const std::int64_t D = 60;
      const auto pert = perturbed_degree_multiset(ell, D);
      const auto chain = sc_plus_ranks(ell, 3, D);
      for (std::int64_t d = 0; d <= D; ++d) {
        const std::int64_t shifted = d + 1;
        const bool window = shifted / (2 * ell + 2) >= 1 && shifted % (2 * ell + 2) <= 3;
        const auto it = pert.find(d);
        const std::int64_t p = it == pert.end() ? 0 : it->second;
        CAPTURE(ell);
        CAPTURE(d);
        CHECK(p - chain.rank(d) == (window ? 1 : 0));
      }
    }
  }

  TEST_CASE("contact homology and relative homology") {
    CHECK(ch_ranks_lp(2, 6).ranks() == Ranks{{2, 1}, {4, 2}, {6, 2}});
    CHECK(ch_ranks_lp(3, 4).ranks() == Ranks{{2, 2}, {4, 3}});
    CHECK(ch_ranks_lp(2, 1).empty());
    CHECK(ch_ranks_lp(3, 4).coefficient_label() == "Q");
    CHECK(relative_homology_ranks(2, 3).ranks() == Ranks{{3, 3}, {6, 1}});
    CHECK(relative_homology_ranks(1, 5).ranks() == Ranks{{5, 1}, {10, 1}});
    CHECK(relative_homology_ranks(3, 3).ranks() == Ranks{{3, 5}, {6, 1}});
  }

  TEST_CASE("partial table for Sigma(lp,p,2,2)") {
    const auto t = sh_plus_lp_known(3, 4);
    CHECK(t.known == Ranks{{4, 4}, {5, 4}, {6, 4}, {7, 3}, {8, 3}, {9, 3}, {10, 3}});
    CHECK_THROWS_AS(sh_plus_lp_known(3, 3), Error);
  }
}
