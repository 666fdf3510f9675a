#include <doctest.h>

#include <random>

#include "brieskorn/indices.hpp"
#include "oracles.hpp"

using namespace brieskorn;

TEST_SUITE("indices") {
  TEST_CASE("Robbin-Salamon index against exact rationals") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const ExponentTuple a(oracle::random_tuple(rng, 2, 6, 40, INT64_MAX));
      std::uniform_int_distribution<std::int64_t> Ld(1, 5000);
      const auto L = Ld(rng);
      CHECK(rs_index(a, L) == oracle::rs_exact(a, L));
    }
    CHECK_THROWS_AS(rs_index({3, 3}, 0), Error);
  }

  TEST_CASE("principal indices") {
    CHECK(principal_rs_index({79, 13, 6, 3, 3}) == -950);
    CHECK(principal_rs_index({13, 11, 7, 4, 3}) == -2546);
    CHECK(principal_rs_index({2, 2}) == 0);
  }

  TEST_CASE("generator degrees") {
    CHECK(generator_degree(4, 0, 3) == 3);
    CHECK(generator_degree(4, 3, 3) == 6);
    CHECK_THROWS_AS(generator_degree(4, 0, 2), Error);
    CHECK_THROWS_AS(generator_degree(4, 4, 3), Error);
  }

  TEST_CASE("perturbed indices on Sigma(2l,2,2,2)") {
    const std::int64_t ell = 2;
    CHECK(ustilovsky_cz(ell, OrbitLabel::make(OrbitKind::GammaPlus, 1)) == 2);
    CHECK(ustilovsky_cz(ell, OrbitLabel::make(OrbitKind::GammaMinus, 1)) == 4);
    CHECK(ustilovsky_cz(ell, OrbitLabel::make(OrbitKind::GammaZeroPlus, 1)) == 2 * ell + 2);
    CHECK(ustilovsky_cz(ell, OrbitLabel::make(OrbitKind::GammaPlus, ell + 1)) == 2 * ell + 4);
    CHECK_THROWS_AS(ustilovsky_cz(ell, OrbitLabel::make(OrbitKind::GammaZeroK, 1, 0)), Error);
  }

  TEST_CASE("p = 2 specializes to the l-family") {
    for (std::int64_t ell = 1; ell <= 6; ++ell) {
      for (std::int64_t N = 1; N <= 50; ++N) {
        for (auto kind : {OrbitKind::GammaPlus, OrbitKind::GammaMinus, OrbitKind::GammaZeroPlus,
                          OrbitKind::GammaZeroMinus}) {
          const auto o = OrbitLabel::make(kind, N);
          CHECK(ustilovsky_cz_p(ell, 2, o) == ustilovsky_cz(ell, o));
        }
      }
    }
  }

  TEST_CASE("branch orbits") {
    const auto o = OrbitLabel::make(OrbitKind::GammaZeroK, 2, 1);
    CHECK(ustilovsky_cz_p(3, 3, o) == 4 + 12);
    CHECK_THROWS_AS(ustilovsky_cz_p(3, 3, OrbitLabel::make(OrbitKind::GammaZeroK, 2, 3)), Error);
    CHECK_THROWS_AS(ustilovsky_cz_p(3, 3, OrbitLabel::make(OrbitKind::GammaZeroPlus, 2)), Error);
    CHECK_THROWS_AS(OrbitLabel::make(OrbitKind::GammaPlus, 0), Error);
  }

  TEST_CASE("floor and ceil") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(7, 2) == 3);
    CHECK(ceil_div(7, 2) == 4);
  }
}
