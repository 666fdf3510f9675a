// Serial reference implementation of the lattice-point counts. Deliberately
// the direct transcription: every tuple j is visited and sum j_k / a_k is
// classified with one integer division over the common denominator.

#include <vector>

#include "brieskorn/signature.hpp"

namespace brieskorn {

SignatureCount signature_counts_naive(const ExponentTuple& a, const CountOptions& options) {
  const auto mu = milnor_number(a);
  if (mu > Integer(static_cast<unsigned long>(options.budget)))
    throw Error(ErrorCode::BudgetExceeded,
                "naive enumeration of " + mu.get_str() + " tuples exceeds budget " +
                    std::to_string(options.budget));

  const std::int64_t denom = lcm_of(a.exponents());
  const std::size_t len = a.size();
  std::vector<std::int64_t> weight(len);
  for (std::size_t i = 0; i < len; ++i) weight[i] = denom / a[i];
  // Largest numerator is sum (a_i - 1) * weight_i < len * denom.
  checked_mul(denom, static_cast<std::int64_t>(len));

  std::vector<std::int64_t> j(len, 1);
  std::int64_t numer = 0;
  for (std::size_t i = 0; i < len; ++i) numer += weight[i];

  SignatureCount out;
  while (true) {
    const std::int64_t q = numer / denom;
    if (numer % denom == 0)
      ++out.sigma_zero;
    else if (q % 2 == 0)
      ++out.sigma_plus;
    else
      ++out.sigma_minus;

    std::size_t i = 0;
    for (; i < len; ++i) {
      if (j[i] + 1 < a[i]) {
        ++j[i];
        numer += weight[i];
        break;
      }
      numer -= (j[i] - 1) * weight[i];
      j[i] = 1;
    }
    if (i == len) break;
  }
  out.mu = out.sigma_plus + out.sigma_minus + out.sigma_zero;
  return out;
}

}  // namespace brieskorn
