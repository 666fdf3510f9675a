#include <doctest.h>

#include <random>

#include "brieskorn/signature.hpp"
#include "oracles.hpp"

using namespace brieskorn;

TEST_SUITE("signature") {
  TEST_CASE("reference values") {
    const auto c = signature_counts_fast({79, 13, 6, 3, 3});
    CHECK(c.sigma_plus == 12272);
    CHECK(c.sigma_minus == 6448);
    CHECK(c.sigma_zero == 0);
    CHECK(c.signature() == 5824);
    CHECK(signature_counts_fast({13, 11, 7, 4, 3}).signature() == 1344);
  }

  TEST_CASE("naive and fast agree with the convolution oracle") {
    for (const ExponentTuple& a : {ExponentTuple{2, 2}, ExponentTuple{3, 2}, ExponentTuple{5, 3, 2},
                                   ExponentTuple{6, 4, 3}, ExponentTuple{79, 13, 6, 3, 3},
                                   ExponentTuple{13, 11, 7, 4, 3}, ExponentTuple{3, 2, 2, 2, 2, 2}}) {
      CAPTURE(a.to_string());
      const auto ref = oracle::signature_convolution(a);
      CHECK(signature_counts_naive(a) == ref);
      CHECK(signature_counts_fast(a) == ref);
      CHECK(signature_counts_fast_serial(a) == ref);
    }
  }

  TEST_CASE("fast equals naive on random tuples") {
    std::mt19937_64 rng(20240607);
    for (int trial = 0; trial < 120; ++trial) {
      const ExponentTuple a(oracle::random_tuple(rng, 2, 6, 30, 50000));
      CAPTURE(a.to_string());
      const auto naive = signature_counts_naive(a);
      CHECK(signature_counts_fast(a) == naive);
      CHECK(naive.sigma_plus + naive.sigma_minus + naive.sigma_zero == milnor_number_i64(a));
    }
  }

  TEST_CASE("worker count does not change the counts") {
    const ExponentTuple a{35713, 9, 8, 8, 8, 8, 8};
    CountOptions one, four;
    one.jobs = 1;
    four.jobs = 4;
    CHECK(signature_counts_fast(a, one) == signature_counts_fast(a, four));
  }

  TEST_CASE("budget is enforced") {
    CountOptions tiny;
    tiny.budget = 100;
    CHECK_THROWS_AS(signature_counts_naive({79, 13, 6, 3, 3}, tiny), Error);
    CHECK_THROWS_AS(signature_counts_fast({79, 13, 6, 3, 3}, tiny), Error);
  }

  TEST_CASE("scaling law for sign +1 families") {
    const auto fam = family_signature({13, 6, 3, 3}, 78, 1);
    CHECK(fam.offset == SignatureCount{});
    for (std::int64_t k = 1; k <= 3; ++k) {
      CAPTURE(k);
      CHECK(fam.member(k) == ExponentTuple{78 * k + 1, 13, 6, 3, 3});
      CHECK(fam.at(k) == signature_counts_fast(fam.member(k)));
      CHECK(fam.at(k) == signature_counts_fast({79, 13, 6, 3, 3}).scaled(k));
    }
  }

  TEST_CASE("sign -1 families are affine") {
    for (const ExponentTuple& base : {ExponentTuple{13, 6, 3, 3}, ExponentTuple{3, 2, 2, 2}}) {
      const std::int64_t L = lcm_of(base.exponents());
      const auto fam = family_signature(base, L, -1);
      for (std::int64_t k = 1; k <= 4; ++k) {
        CAPTURE(k);
        CHECK(fam.at(k) == signature_counts_naive(fam.member(k)));
      }
    }
  }

  TEST_CASE("family validation") {
    CHECK_THROWS_AS(family_signature({13, 6, 3, 3}, 77, 1), Error);
    CHECK_THROWS_AS(family_signature({13, 6, 3, 3}, 78, 2), Error);
    try {
      family_signature({2, 2}, 2, -1);
      FAIL("a_0(1) = 1 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidFamily);
    }
  }

  TEST_CASE("asymptotic ratio matches the per-k counts of the +1 family") {
    // For a_0 = kL + 1 the per-k counts are L times the density (a block of L
    // values of j_0 per unit of k).
    const ExponentTuple base{13, 6, 3, 3};
    const auto d = asymptotic_ratio(base);
    const auto fam = family_signature(base, 78, 1);
    CHECK(d.plus * 78 == Rational(fam.per_k.sigma_plus));
    CHECK(d.minus * 78 == Rational(fam.per_k.sigma_minus));
    CHECK(d.ratio() == Rational(59, 31));
  }

  TEST_CASE("normal approximation is close for a moderate tuple") {
    const ExponentTuple a{79, 13, 6, 3, 3};
    const auto est = signature_estimate_clt(a);
    CHECK_FALSE(est.degenerate);
    CHECK(est.sigma_plus + est.sigma_minus == doctest::Approx(18720.0).epsilon(1e-3));
    CHECK(est.sigma_plus == doctest::Approx(12272.0).epsilon(0.1));

    const auto point = signature_estimate_clt({2, 2, 2});
    CHECK(point.degenerate);
    CHECK(point.sigma_minus == 1.0);
  }
}
