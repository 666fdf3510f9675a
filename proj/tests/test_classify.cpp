#include <doctest.h>

#include <random>

#include "brieskorn/classify.hpp"
#include "brieskorn/search.hpp"
#include "brieskorn/topology.hpp"
#include "oracles.hpp"

using namespace brieskorn;

namespace {
ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}
}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("Massey groups") {
    CHECK(ac_group(4).shape == AcShape::ZPlusZ2);
    CHECK_FALSE(ac_group(4).cyclic());
    CHECK(ac_group(6).shape == AcShape::Z);
    CHECK(ac_group(5).shape == AcShape::ZModFactorial);
    CHECK(*ac_group(5).modulus == 24);
    CHECK(ac_group(7).shape == AcShape::ZModHalfFactorial);
    CHECK(*ac_group(7).modulus == 360);
    CHECK(code_of([] { ac_group(1); }) == ErrorCode::DimensionTooLow);
  }

  TEST_CASE("Morita values") {
    CHECK(almost_contact_class({11, 9, 9, 5, 3}).primary == -40);
    CHECK(almost_contact_class({13, 10, 9, 3, 3}).primary == 72);
    CHECK(almost_contact_class({167, 3, 2, 2, 2}).primary == 194);
    const auto z = almost_contact_class({79, 13, 6, 3, 3});
    CHECK(z.is_zero());
    CHECK(z.secondary == 0);
    CHECK(z.to_string() == "(0,0)");
  }

  TEST_CASE("homotopical standardness") {
    CHECK(is_homotopically_standard({79, 13, 6, 3, 3}));
    CHECK(is_homotopically_standard({13, 11, 7, 4, 3}));
    CHECK_FALSE(is_homotopically_standard({167, 3, 2, 2, 2}));
  }

  TEST_CASE("the precondition is enforced") {
    CHECK(code_of([] { almost_contact_class({7, 3, 2, 2, 2}); }) == ErrorCode::NotStandardSphere);
    CHECK(code_of([] { almost_contact_class({2, 2, 2, 2, 2}); }) == ErrorCode::NotStandardSphere);
    CHECK(code_of([] { almost_contact_class({5, 3, 2, 2}); }) == ErrorCode::NotStandardSphere);
  }

  TEST_CASE("formula on every residue") {
    // n = 5, 7: mu/2 reduced into [0, modulus).
    CHECK(morita_formula(5, 0, 100).primary == 50 % 24);
    CHECK(morita_formula(5, 0, -100).primary == 22);
    CHECK(morita_formula(7, 0, 1000).primary == 500 % 360);
    // n = 6: -sigma/(4 S_3) - mu/2, never reduced.
    // 1/(4 S_3) = 945/248, so 992 contributes -3780.
    CHECK(morita_formula(6, 992, 10).primary == -3785);
    CHECK(code_of([] { morita_formula(4, 8, 2); }) == ErrorCode::NonIntegerResult);
  }

  TEST_CASE("connected sums of classes") {
    const auto m1 = almost_contact_class({11, 9, 9, 5, 3});
    const auto m2 = almost_contact_class({13, 10, 9, 3, 3});
    const auto m3 = almost_contact_class({167, 3, 2, 2, 2});
    const auto m4 = connected_sum_ac({{m1, 2}, {m2, 1}});
    CHECK(m4.primary == -8);
    const auto m5 = connected_sum_ac({{m4, 24}, {m3, 1}});
    CHECK(m5.primary == 2);
    const auto m6 = connected_sum_ac({{m4, 1}, {m5, 3}});
    CHECK(m6.primary == -2);
    CHECK(connected_sum_ac({{m2, 1}, {m1, 2}}) == m4);
    CHECK(connected_sum_ac({{m1, 1}, {m1, 1}, {m2, 1}}) == m4);
    CHECK(code_of([&] { connected_sum_ac({{m1, 1}, {make_ac_class(ac_group(6), 3), 1}}); }) ==
          ErrorCode::MixedGroups);
    // cyclic groups wrap
    const auto c = make_ac_class(ac_group(5), 20);
    CHECK(connected_sum_ac({{c, 2}}).primary == 16);
  }

  TEST_CASE("family ac closed form") {
    for (int m : {2, 3, 4}) {
      CAPTURE(m);
      const Integer sm = sigma_m_const(m);
      const std::int64_t k = Integer(sm / 8).get_si();
      std::vector<std::int64_t> raw{6 * k + 1, 3};
      raw.resize(2 * m + 1, 2);
      const auto ac = almost_contact_class(ExponentTuple(raw));
      const Rational expect = Rational(sm) * (Rational(1) / (4 * s_m_const(m)) - Rational(3, 4));
      CHECK(Rational(ac.primary) == expect);
    }
  }

  TEST_CASE("ac classes of spheres are even") {
    std::mt19937_64 rng(99);
    int standard = 0, odd_n = 0;
    for (int trial = 0; trial < 40000 && (standard < 25 || odd_n < 25); ++trial) {
      const ExponentTuple a(oracle::random_tuple(rng, 4, 6, 40, 300000));
      if (!sphere_criterion(a).is_sphere) continue;
      if (a.n() % 2 == 1) {
        if (odd_n >= 25) continue;
        ++odd_n;
        CHECK(milnor_number(a) % 2 == 0);
        continue;
      }
      const auto dc = diffeo_class(a);
      if (!*dc.is_standard_smooth) continue;
      ++standard;
      const auto ac = almost_contact_class(a);
      CHECK(ac.primary % 2 == 0);
      CHECK(ac.secondary.value_or(0) == 0);
    }
    CHECK(standard >= 25);
    CHECK(odd_n >= 25);
  }
}
