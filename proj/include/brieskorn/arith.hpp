#pragma once

// Exponent tuples, exact integer/rational arithmetic and the number-theoretic
// constants (Bernoulli numbers, Kervaire-Milnor sigma_m, Morita's S_m).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "brieskorn/error.hpp"

namespace brieskorn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Validated Brieskorn exponents (a_0, ..., a_n), stored non-increasing.
/// n = size() - 1 and Sigma(a) has dimension 2n - 1.
class ExponentTuple {
 public:
  /// Throws EntryTooSmall / TooShort.
  explicit ExponentTuple(std::span<const std::int64_t> raw);
  ExponentTuple(std::initializer_list<std::int64_t> raw);

  std::span<const std::int64_t> exponents() const noexcept { return exponents_; }
  std::int64_t operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t size() const noexcept { return exponents_.size(); }
  int n() const noexcept { return static_cast<int>(exponents_.size()) - 1; }
  int dimension() const noexcept { return 2 * n() - 1; }

  auto begin() const noexcept { return exponents_.begin(); }
  auto end() const noexcept { return exponents_.end(); }

  std::string to_string() const;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<std::int64_t> exponents_;
};

ExponentTuple make_exponents(std::span<const std::int64_t> raw);

/// c*k + r for a family parameter k >= 1; c*k + r >= 2 for every k >= 1.
class ParamLinear {
 public:
  ParamLinear(std::int64_t coefficient, std::int64_t offset);

  std::int64_t coefficient() const noexcept { return coefficient_; }
  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t operator()(std::int64_t k) const;

 private:
  std::int64_t coefficient_;
  std::int64_t offset_;
};

// Checked 64-bit helpers; throw Overflow instead of wrapping.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
std::int64_t lcm_of(std::span<const std::int64_t> values);

/// mu(a) = prod (a_i - 1).
Integer milnor_number(const ExponentTuple& a);
/// mu(a) as a 64-bit value; throws Overflow if it does not fit.
std::int64_t milnor_number_i64(const ExponentTuple& a);

/// m-th Bernoulli number with the convention B_1 = 1/6, B_2 = 1/30, B_3 = 1/42,
/// i.e. |B_{2m}| in the standard indexing. Cached; thread-safe.
Rational bernoulli(int m);

/// sigma_m = 2^{2m+1} (2^{2m-1} - 1) numerator(4 B_m / m), m >= 2.
Integer sigma_m_const(int m);

/// S_m = 2^{2m} (2^{2m-1} - 1) B_m / (2m)!, m >= 1.
Rational s_m_const(int m);

Integer factorial(unsigned n);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& q, int significant = 6);

}  // namespace brieskorn
