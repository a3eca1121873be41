#pragma once

#include <cstdint>

#include "antipal/bigint.hpp"

namespace antipal {

/// f_k(n): zero for n < 1, f_k(1) = 1, and each later term is the sum of the
/// previous k. Values are memoized per k in a lock-protected cache that
/// only ever grows. Throws std::invalid_argument for k < 2.
BigCount kbonacci(int k, std::int64_t n);

/// Fibonacci f_2(n) with f_2(n) = 0 for n < 1.
inline BigCount fibonacci(std::int64_t n) { return kbonacci(2, n); }

/// Tribonacci f_3(n) with f_3(n) = 0 for n < 1.
inline BigCount tribonacci(std::int64_t n) { return kbonacci(3, n); }

/**
 * f_3(n+1) from the alternating binomial sum
 *
 *   sum_{j=0}^{floor(n/4)} (-1)^j C(n-3j, j) (n-2j)/(n-3j) 2^(n-4j-1).
 *
 * Each summand is formed as an integer and divided exactly; a nonzero
 * remainder throws std::logic_error. Defined for n >= 1 only; n < 1 throws
 * std::invalid_argument.
 */
BigCount tribonacci_closed(std::int64_t n);

/// sum_{j=0}^{n} f_3(j) via (f_3(n) + f_3(n+2) - 1) / 2.
BigCount tribonacci_partial_sum(std::int64_t n);

}  // namespace antipal
