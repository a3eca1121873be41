#include "antipal/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace antipal {

IntPolynomial::IntPolynomial(std::vector<BigCount> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(std::size_t k, const BigCount& c) {
  std::vector<BigCount> coeffs(k + 1, 0);
  coeffs[k] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigCount IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigCount(0);
}

BigCount IntPolynomial::evaluate(const BigCount& q) const {
  BigCount acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigCount> out(k, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigCount> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigCount> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigCount> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const BigCount magnitude = abs(c[k]);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += 'q';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": n must be >= 0, got " +
                                std::to_string(n));
  }
}

// Two-term q-Fibonacci family F_n = F_{n-1} + q^(n - offset) F_{n-2}.
IntPolynomial qfib(int n, int offset) {
  IntPolynomial prev;                          // F_0
  IntPolynomial curr = IntPolynomial::monomial(0);  // F_1
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    IntPolynomial next =
        curr + prev.shifted(static_cast<std::size_t>(k - offset));
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

class PhiCache {
 public:
  IntPolynomial get(int n) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) {
      const auto q = IntPolynomial::monomial(1);
      values_ = {IntPolynomial::monomial(0), q, q,
                 q + IntPolynomial::monomial(2)};
    }
    static const IntPolynomial q2_minus_1 =
        IntPolynomial({BigCount(-1), BigCount(0), BigCount(1)});
    while (static_cast<int>(values_.size()) <= n) {
      const std::size_t m = values_.size();
      values_.push_back(values_[m - 1] + values_[m - 2] +
                        q2_minus_1 * values_[m - 3]);
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<IntPolynomial> values_;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

}  // namespace

IntPolynomial qfib_F(int n) {
  require_nonnegative(n, "qfib_F");
  return qfib(n, 2);
}

IntPolynomial qfib_Fhat(int n) {
  require_nonnegative(n, "qfib_Fhat");
  return qfib(n, 1);
}

IntPolynomial phi(int n) {
  require_nonnegative(n, "phi");
  return phi_cache().get(n);
}

BigCount phi_coefficient(int n, int s) {
  if (s < 0) throw std::invalid_argument("phi_coefficient: s must be >= 0");
  return phi(n).coefficient(static_cast<std::size_t>(s));
}

ParitySplit phi_parity_split(int n) {
  const IntPolynomial p = phi(n);
  const BigCount at_one = p.evaluate(1);
  const BigCount at_minus_one = p.evaluate(-1);
  return {exact_div(at_one + at_minus_one, 2, "phi_parity_split even"),
          exact_div(at_one - at_minus_one, 2, "phi_parity_split odd")};
}

}  // namespace antipal
