#pragma once

// Mixed-radix walk over (j_1, ..., j_n), 0 < j_i < b_i, tracking the numerator
// P of sum j_i / b_i over the common denominator M = lcm(b_i). Any contiguous
// range of the flattened index space can be walked independently, which is how
// the parallel kernels split work.

#include <cstdint>
#include <span>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn::detail {

class InnerTuples {
 public:
  explicit InnerTuples(std::span<const std::int64_t> radices) : radix_(radices.begin(), radices.end()) {
    denom_ = lcm_of(radices);
    weight_.resize(radix_.size());
    count_ = 1;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      weight_[i] = denom_ / radix_[i];
      count_ = checked_mul(count_, radix_[i] - 1);
    }
    checked_mul(denom_, static_cast<std::int64_t>(radix_.size()) + 1);
  }

  std::int64_t denominator() const noexcept { return denom_; }
  std::int64_t count() const noexcept { return count_; }

  /// Calls visit(P) for flattened indices [first, last).
  template <class Visit>
  void walk(std::int64_t first, std::int64_t last, Visit&& visit) const {
    if (first >= last) return;
    const std::size_t len = radix_.size();
    std::vector<std::int64_t> j(len);
    std::int64_t numer = 0;
    std::int64_t rest = first;
    for (std::size_t i = 0; i < len; ++i) {
      const std::int64_t span = radix_[i] - 1;
      j[i] = 1 + rest % span;
      rest /= span;
      numer += j[i] * weight_[i];
    }
    for (std::int64_t idx = first; idx < last; ++idx) {
      visit(numer);
      for (std::size_t i = 0; i < len; ++i) {
        if (j[i] + 1 < radix_[i]) {
          ++j[i];
          numer += weight_[i];
          break;
        }
        numer -= (j[i] - 1) * weight_[i];
        j[i] = 1;
      }
    }
  }

 private:
  std::vector<std::int64_t> radix_;
  std::vector<std::int64_t> weight_;
  std::int64_t denom_ = 1;
  std::int64_t count_ = 1;
};

/// Splits [0, total) into `chunks` nearly equal ranges.
inline std::int64_t chunk_begin(std::int64_t total, std::int64_t chunks, std::int64_t c) {
  return static_cast<std::int64_t>(static_cast<__int128>(total) * c / chunks);
}

}  // namespace brieskorn::detail
