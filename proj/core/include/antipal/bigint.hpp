#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace antipal {

/// Arbitrary-precision integer used for every count, sequence value and
/// coefficient. Counts are nonnegative; signed values only appear as
/// intermediates (alternating sums, evaluation at q = -1).
using BigCount = mpz_class;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
/// Requires n >= 0.
BigCount binomial(std::int64_t n, std::int64_t k);

/// 2^e for e >= 0.
BigCount pow2(std::int64_t e);

/// Exact quotient; throws std::logic_error if `divisor` does not divide
/// `dividend`. `what` names the computation in the message.
BigCount exact_div(const BigCount& dividend, const BigCount& divisor,
                   const std::string& what);

std::string to_string(const BigCount& value);

/// True when |value| <= 2^53 - 1, i.e. representable as a JSON number
/// without loss in IEEE double consumers.
bool fits_json_safe_integer(const BigCount& value);

}  // namespace antipal
