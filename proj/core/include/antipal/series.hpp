#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antipal/bigint.hpp"

namespace antipal {

/**
 * Formal power series in q known exactly for powers below `order()`.
 *
 * Binary operations require equal orders and never look past the
 * truncation; coefficients are exact integers.
 */
class TruncatedSeries {
 public:
  /// The zero series of the given order (order >= 1).
  explicit TruncatedSeries(std::size_t order);
  /// Takes the first `order` coefficients of `coeffs`, zero-padding.
  TruncatedSeries(std::vector<BigCount> coeffs, std::size_t order);

  static TruncatedSeries constant(const BigCount& c, std::size_t order);
  /// q^k truncated (zero if k >= order).
  static TruncatedSeries monomial(std::size_t k, const BigCount& c,
                                  std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const BigCount> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of q^k; throws std::out_of_range when k >= order.
  const BigCount& operator[](std::size_t k) const;

  /// Multiplies by q^k, dropping terms that fall past the order.
  TruncatedSeries shifted(std::size_t k) const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<BigCount> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs);
TruncatedSeries series_sub(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs);
TruncatedSeries series_mul(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs);
/// lhs / rhs for rhs with constant term +1 or -1; the quotient is then
/// integral. Throws std::domain_error for any other constant term.
TruncatedSeries series_div(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs);
TruncatedSeries series_scale(const TruncatedSeries& s, const BigCount& c);
/// base^exponent by repeated squaring, truncating after each product.
TruncatedSeries series_pow(const TruncatedSeries& base, unsigned exponent);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_mul(a, b);
}
inline TruncatedSeries operator/(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_div(a, b);
}

/// (1 + sign*q)^m expanded by the binomial theorem, sign in {+1, -1}.
TruncatedSeries binomial_power(int sign, unsigned m, std::size_t order);

/// 2q^3 / ((1 - q^2)(1 - q)): the q^n coefficient counts ordered pairs of
/// distinct positive integers with sum n.
TruncatedSeries series_D(std::size_t order);

/// 2^floor(s/2) q^floor(3s/2) / ((1 - q)^s (1 + q)^floor(s/2)); the q^n
/// coefficient is ac(n, s).
TruncatedSeries series_G(unsigned s, std::size_t order);

}  // namespace antipal
