#include "brieskorn/arith.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>

namespace brieskorn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EntryTooSmall: return "EntryTooSmall";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotCommonMultiple: return "NotCommonMultiple";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NonIntegerDegree: return "NonIntegerDegree";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::BranchOutOfRange: return "BranchOutOfRange";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::ZeroPrincipalIndex: return "ZeroPrincipalIndex";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NotStandardSphere: return "NotStandardSphere";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::SignConditionFailed: return "SignConditionFailed";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ExponentTuple

ExponentTuple::ExponentTuple(std::span<const std::int64_t> raw) {
  if (raw.size() < 2)
    throw Error(ErrorCode::TooShort, "need at least two exponents, got " + std::to_string(raw.size()));
  for (auto v : raw) {
    if (v < 2) throw Error(ErrorCode::EntryTooSmall, "exponent " + std::to_string(v) + " < 2");
  }
  exponents_.assign(raw.begin(), raw.end());
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
}

ExponentTuple::ExponentTuple(std::initializer_list<std::int64_t> raw)
    : ExponentTuple(std::span<const std::int64_t>(raw.begin(), raw.size())) {}

std::string ExponentTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out + ")";
}

ExponentTuple make_exponents(std::span<const std::int64_t> raw) { return ExponentTuple(raw); }

// ---------------------------------------------------------------------------
// ParamLinear

ParamLinear::ParamLinear(std::int64_t coefficient, std::int64_t offset)
    : coefficient_(coefficient), offset_(offset) {
  // c*k + r is monotone in k, so it suffices to check k = 1 and the sign of c.
  if (coefficient < 0 || checked_add(coefficient, offset) < 2)
    throw Error(ErrorCode::InvalidFamily, "c*k + r must be >= 2 for all k >= 1 (c=" +
                                              std::to_string(coefficient) + ", r=" +
                                              std::to_string(offset) + ")");
}

std::int64_t ParamLinear::operator()(std::int64_t k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "family parameter k must be >= 1");
  return checked_add(checked_mul(coefficient_, k), offset_);
}

// ---------------------------------------------------------------------------
// Checked arithmetic

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t lcm_of(std::span<const std::int64_t> values) {
  std::int64_t l = 1;
  for (auto v : values) l = checked_lcm(l, v);
  return l;
}

Integer milnor_number(const ExponentTuple& a) {
  Integer mu = 1;
  for (auto v : a) mu *= Integer(static_cast<long>(v - 1));
  return mu;
}

std::int64_t milnor_number_i64(const ExponentTuple& a) {
  std::int64_t mu = 1;
  for (auto v : a) mu = checked_mul(mu, v - 1);
  return mu;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Standard B_0..B_max via sum_{k=0}^{n} C(n+1,k) B_k = 0.
class BernoulliCache {
 public:
  Rational get(unsigned index) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= index) {
      const auto n = static_cast<unsigned>(values_.size());
      if (n == 0) {
        values_.emplace_back(1);
        continue;
      }
      Rational acc = 0;
      for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * values_[k];
      Rational b = -acc / Rational(Integer(n + 1));
      b.canonicalize();
      values_.push_back(b);
    }
    return values_[index];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Rational bernoulli(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "bernoulli index must be >= 1");
  Rational b = bernoulli_cache().get(2u * static_cast<unsigned>(m));
  return abs(b);
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

namespace {
Integer pow2(unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}
}  // namespace

Integer sigma_m_const(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "sigma_m needs m >= 2");
  const auto um = static_cast<unsigned>(m);
  Rational q = Rational(4) * bernoulli(m) / Rational(Integer(m));
  q.canonicalize();
  return pow2(2 * um + 1) * (pow2(2 * um - 1) - 1) * Integer(q.get_num());
}

Rational s_m_const(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "S_m needs m >= 1");
  const auto um = static_cast<unsigned>(m);
  Rational s = Rational(pow2(2 * um) * (pow2(2 * um - 1) - 1)) * bernoulli(m) /
               Rational(factorial(2 * um));
  s.canonicalize();
  return s;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << q.get_d();
  return os.str();
}

}  // namespace brieskorn
