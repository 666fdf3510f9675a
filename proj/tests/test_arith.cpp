#include <doctest.h>

#include <random>

#include "brieskorn/arith.hpp"
#include "oracles.hpp"

using namespace brieskorn;

TEST_SUITE("arith") {
  TEST_CASE("tuples are validated and sorted descending") {
    const ExponentTuple a{3, 13, 79, 6, 3};
    CHECK(a.to_string() == "(79,13,6,3,3)");
    CHECK(a.n() == 4);
    CHECK(a.dimension() == 7);
    CHECK(ExponentTuple{2, 2} == ExponentTuple{2, 2});

    auto code_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::Internal;
    };
    CHECK(code_of([] { ExponentTuple{3, 1}; }) == ErrorCode::EntryTooSmall);
    CHECK(code_of([] { ExponentTuple{5}; }) == ErrorCode::TooShort);
  }

  TEST_CASE("milnor number") {
    CHECK(milnor_number({79, 13, 6, 3, 3}) == 18720);
    CHECK(milnor_number({2, 2}) == 1);
    CHECK(milnor_number_i64({13, 11, 7, 4, 3}) == 12 * 10 * 6 * 3 * 2);
    CHECK_THROWS_AS(milnor_number_i64({4000000000, 4000000000, 4000000000}), Error);
  }

  TEST_CASE("checked arithmetic refuses to wrap") {
    CHECK(checked_mul(1 << 20, 1 << 20) == (std::int64_t{1} << 40));
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), Error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Error);
    CHECK(checked_lcm(6, 4) == 12);
    const std::vector<std::int64_t> v{79, 13, 6, 3, 3};
    CHECK(lcm_of(v) == 6162);
  }

  TEST_CASE("linear parameters") {
    const ParamLinear p(78, 1);
    CHECK(p(1) == 79);
    CHECK(p(3) == 235);
    CHECK_THROWS_AS(ParamLinear(1, 0), Error);
    CHECK_THROWS_AS(p(0), Error);
  }

  TEST_CASE("bernoulli numbers agree with Akiyama-Tanigawa") {
    CHECK(bernoulli(1) == Rational(1, 6));
    CHECK(bernoulli(2) == Rational(1, 30));
    CHECK(bernoulli(3) == Rational(1, 42));
    CHECK(bernoulli(4) == Rational(1, 30));
    for (int m = 1; m <= 20; ++m) CHECK(bernoulli(m) == oracle::bernoulli_abs(m));
  }

  TEST_CASE("Kervaire-Milnor and Morita constants") {
    CHECK(sigma_m_const(2) == 224);
    CHECK(sigma_m_const(3) == 7936);
    CHECK(sigma_m_const(4) == 65024);
    CHECK(s_m_const(2) == Rational(7, 45));
    CHECK(s_m_const(3) == Rational(62, 945));
    CHECK(s_m_const(4) == Rational(127, 4725));
    CHECK(Rational(1) / (4 * s_m_const(2)) == Rational(45, 28));
    CHECK_THROWS_AS(sigma_m_const(1), Error);
  }

  TEST_CASE("rational rendering") {
    CHECK(to_string(Rational(-3269, 950)) == "-3269/950");
    CHECK(to_string(Rational(4, 1)) == "4");
    CHECK(to_decimal(Rational(-3269, 950)) == "-3.44105");
  }
}
