#include "antipal/sequences.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace antipal {
namespace {

// Prefix tables indexed by n >= 0. Entry n = 0 is the zero term.
class KbonacciCache {
 public:
  BigCount get(int k, std::int64_t n) {
    std::lock_guard lock(mutex_);
    auto& values = tables_[k];
    if (values.empty()) {
      values.push_back(0);  // f_k(0)
      values.push_back(1);  // f_k(1)
    }
    // Running window sum keeps extension linear in n.
    while (static_cast<std::int64_t>(values.size()) <= n) {
      const std::size_t m = values.size();
      BigCount next = 0;
      for (std::size_t i = 1; i <= static_cast<std::size_t>(k) && i <= m; ++i) {
        next += values[m - i];
      }
      values.push_back(std::move(next));
    }
    return values[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<BigCount>> tables_;
};

KbonacciCache& cache() {
  static KbonacciCache instance;
  return instance;
}

}  // namespace

BigCount kbonacci(int k, std::int64_t n) {
  if (k < 2) {
    throw std::invalid_argument("kbonacci: k must be >= 2, got " +
                                std::to_string(k));
  }
  if (n < 1) return 0;
  return cache().get(k, n);
}

BigCount tribonacci_closed(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument(
        "tribonacci_closed: defined for n >= 1 (f_3(1) = 1 is the base term)");
  }
  BigCount total = 0;
  for (std::int64_t j = 0; j <= n / 4; ++j) {
    const std::int64_t exponent = n - 4 * j - 1;
    // exponent is -1 only when n = 4j; the factor (n-2j) = 2j is then even.
    BigCount numerator = binomial(n - 3 * j, j) * static_cast<long>(n - 2 * j);
    BigCount denominator = static_cast<long>(n - 3 * j);
    if (exponent >= 0) {
      numerator *= pow2(exponent);
    } else {
      denominator *= 2;
    }
    BigCount term = exact_div(numerator, denominator,
                              "tribonacci_closed term j=" + std::to_string(j));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigCount tribonacci_partial_sum(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("tribonacci_partial_sum: n must be >= 0");
  }
  return exact_div(tribonacci(n) + tribonacci(n + 2) - 1, 2,
                   "tribonacci_partial_sum");
}

}  // namespace antipal
