#include "antipal/bigint.hpp"

#include <stdexcept>

namespace antipal {

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be nonnegative, got " +
                                std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; every prefix product is itself a binomial, so each
  // division is exact.
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

BigCount pow2(std::int64_t e) {
  if (e < 0) {
    throw std::invalid_argument("pow2: negative exponent " + std::to_string(e));
  }
  BigCount result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return result;
}

BigCount exact_div(const BigCount& dividend, const BigCount& divisor,
                   const std::string& what) {
  if (divisor == 0) throw std::logic_error(what + ": division by zero");
  if (!mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error(what + ": " + dividend.get_str() +
                           " is not divisible by " + divisor.get_str());
  }
  BigCount q;
  mpz_divexact(q.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

std::string to_string(const BigCount& value) { return value.get_str(); }

bool fits_json_safe_integer(const BigCount& value) {
  static const BigCount kLimit = pow2(53) - 1;
  return abs(value) <= kLimit;
}

}  // namespace antipal
