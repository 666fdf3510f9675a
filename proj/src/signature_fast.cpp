// Fast lattice-point counting. With y = P/M the inner sum over (j_1..j_n),
// x = y + j_0/a_0 ranges over (y, y+1) as j_0 runs through 1..a_0-1, so it
// crosses at most one integer. The number of j_0 on each side of that integer
// is a single division.

#include <algorithm>
#include <vector>

#include <omp.h>

#include "brieskorn/signature.hpp"
#include "inner_tuples.hpp"

namespace brieskorn {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1, omp_get_max_threads());
}

namespace {

struct Partial {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  std::int64_t zero = 0;
};

// Classification of all j_0 for one inner numerator P.
inline void classify_inner(std::int64_t numer, std::int64_t denom, std::int64_t a0, Partial& acc) {
  const std::int64_t floor_y = numer / denom;
  const std::int64_t rem = numer % denom;
  const bool even = (floor_y % 2) == 0;
  if (rem == 0) {
    (even ? acc.plus : acc.minus) += a0 - 1;
    return;
  }
  // j_0 * M < a0 * (M - rem) keeps x below the next integer.
  const __int128 bound = static_cast<__int128>(a0) * (denom - rem);
  const auto below = static_cast<std::int64_t>((bound - 1) / denom);
  const std::int64_t on = (bound % denom == 0) ? 1 : 0;
  const std::int64_t above = a0 - 1 - below - on;
  if (even) {
    acc.plus += below;
    acc.minus += above;
  } else {
    acc.minus += below;
    acc.plus += above;
  }
  acc.zero += on;
}

struct Split {
  std::int64_t a0;
  std::vector<std::int64_t> inner;
};

// a_0 is the first maximal entry; the canonical tuple is non-increasing.
Split split_largest(const ExponentTuple& a) {
  auto ex = a.exponents();
  return {ex[0], std::vector<std::int64_t>(ex.begin() + 1, ex.end())};
}

SignatureCount run_fast(const ExponentTuple& a, const CountOptions& options, int jobs) {
  const auto split = split_largest(a);
  const detail::InnerTuples tuples(split.inner);
  if (static_cast<std::uint64_t>(tuples.count()) > options.budget)
    throw Error(ErrorCode::BudgetExceeded, "inner enumeration of " + std::to_string(tuples.count()) +
                                               " tuples exceeds budget " + std::to_string(options.budget));
  const std::int64_t mu = milnor_number_i64(a);
  const std::int64_t denom = tuples.denominator();
  const std::int64_t a0 = split.a0;
  const std::int64_t total = tuples.count();

  std::int64_t plus = 0, minus = 0, zero = 0;
  if (jobs <= 1) {
    Partial acc;
    tuples.walk(0, total, [&](std::int64_t p) { classify_inner(p, denom, a0, acc); });
    plus = acc.plus;
    minus = acc.minus;
    zero = acc.zero;
  } else {
    const std::int64_t chunks = std::min<std::int64_t>(total, static_cast<std::int64_t>(jobs) * 16);
#pragma omp parallel for schedule(static) num_threads(jobs) reduction(+ : plus, minus, zero)
    for (std::int64_t c = 0; c < chunks; ++c) {
      Partial acc;
      tuples.walk(detail::chunk_begin(total, chunks, c), detail::chunk_begin(total, chunks, c + 1),
                  [&](std::int64_t p) { classify_inner(p, denom, a0, acc); });
      plus += acc.plus;
      minus += acc.minus;
      zero += acc.zero;
    }
  }
  SignatureCount out{plus, minus, zero, mu};
  if (plus + minus + zero != mu)
    throw Error(ErrorCode::Internal, "signature partition does not sum to mu for " + a.to_string());
  return out;
}

}  // namespace

SignatureCount signature_counts_fast(const ExponentTuple& a, const CountOptions& options) {
  return run_fast(a, options, resolve_jobs(options.jobs));
}

SignatureCount signature_counts_fast_serial(const ExponentTuple& a, const CountOptions& options) {
  return run_fast(a, options, 1);
}

}  // namespace brieskorn
