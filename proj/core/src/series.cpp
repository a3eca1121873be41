#include "antipal/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace antipal {
namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                        const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order, 0) {
  if (order == 0) {
    throw std::invalid_argument("TruncatedSeries: order must be >= 1");
  }
}

TruncatedSeries::TruncatedSeries(std::vector<BigCount> coeffs,
                                 std::size_t order)
    : coeffs_(std::move(coeffs)) {
  if (order == 0) {
    throw std::invalid_argument("TruncatedSeries: order must be >= 1");
  }
  coeffs_.resize(order, 0);
}

TruncatedSeries TruncatedSeries::constant(const BigCount& c,
                                          std::size_t order) {
  return monomial(0, c, order);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, const BigCount& c,
                                          std::size_t order) {
  TruncatedSeries s(order);
  if (k < order) s.coeffs_[k] = c;
  return s;
}

const BigCount& TruncatedSeries::operator[](std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw std::out_of_range("coefficient q^" + std::to_string(k) +
                            " is past the truncation order " +
                            std::to_string(coeffs_.size()));
  }
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries out(order());
  for (std::size_t i = k; i < order(); ++i) out.coeffs_[i] = coeffs_[i - k];
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
  require_same_order(lhs, rhs, "series_add");
  std::vector<BigCount> out(lhs.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] + rhs[i];
  return TruncatedSeries(std::move(out), lhs.order());
}

TruncatedSeries series_sub(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
  require_same_order(lhs, rhs, "series_sub");
  std::vector<BigCount> out(lhs.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] - rhs[i];
  return TruncatedSeries(std::move(out), lhs.order());
}

TruncatedSeries series_mul(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
  require_same_order(lhs, rhs, "series_mul");
  const std::size_t order = lhs.order();
  const auto a = lhs.coeffs();
  const auto b = rhs.coeffs();
  std::vector<BigCount> out(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out), order);
}

TruncatedSeries series_div(const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
  require_same_order(lhs, rhs, "series_div");
  const BigCount& lead = rhs[0];
  if (lead != 1 && lead != -1) {
    throw std::domain_error(
        "series_div: denominator constant term must be +1 or -1, got " +
        lead.get_str());
  }
  const std::size_t order = lhs.order();
  const auto b = rhs.coeffs();
  std::vector<BigCount> q(order, 0);
  // q[n] = (lhs[n] - sum_{k=1}^{n} b[k] q[n-k]) / b[0], and b[0] = +-1.
  for (std::size_t n = 0; n < order; ++n) {
    BigCount acc = lhs[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (b[k] != 0) acc -= b[k] * q[n - k];
    }
    q[n] = lead == 1 ? acc : BigCount(-acc);
  }
  return TruncatedSeries(std::move(q), order);
}

TruncatedSeries series_scale(const TruncatedSeries& s, const BigCount& c) {
  std::vector<BigCount> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& x : out) x *= c;
  return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries series_pow(const TruncatedSeries& base, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::constant(1, base.order());
  TruncatedSeries square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

TruncatedSeries binomial_power(int sign, unsigned m, std::size_t order) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("binomial_power: sign must be +1 or -1");
  }
  std::vector<BigCount> out(order, 0);
  const std::size_t last = std::min<std::size_t>(m, order - 1);
  for (std::size_t k = 0; k <= last; ++k) {
    out[k] = binomial(m, static_cast<std::int64_t>(k));
    if (sign < 0 && k % 2 == 1) out[k] = -out[k];
  }
  return TruncatedSeries(std::move(out), order);
}

TruncatedSeries series_D(std::size_t order) {
  const auto numerator = TruncatedSeries::monomial(3, 2, order);
  const auto one_minus_q = binomial_power(-1, 1, order);
  const auto one_minus_q2 = TruncatedSeries::constant(1, order) -
                            TruncatedSeries::monomial(2, 1, order);
  return numerator / (one_minus_q2 * one_minus_q);
}

TruncatedSeries series_G(unsigned s, std::size_t order) {
  const unsigned half = s / 2;
  const auto numerator =
      TruncatedSeries::monomial((3 * s) / 2, pow2(half), order);
  const auto denominator =
      binomial_power(-1, s, order) * binomial_power(1, half, order);
  return numerator / denominator;
}

}  // namespace antipal
