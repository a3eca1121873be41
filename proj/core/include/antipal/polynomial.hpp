#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "antipal/bigint.hpp"

namespace antipal {

/// Dense integer polynomial in q, kept normalized (no trailing zeros).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigCount> coeffs);

  static IntPolynomial monomial(std::size_t k, const BigCount& c = 1);

  std::span<const BigCount> coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of q^k; zero past the degree.
  BigCount coefficient(std::size_t k) const;
  BigCount evaluate(const BigCount& q) const;

  IntPolynomial shifted(std::size_t k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigCount> coeffs_;
};

/// Ascending powers with unit coefficients elided: "q+4q^2+12q^3", "1",
/// "1-q^2", "0".
std::string to_string(const IntPolynomial& p);

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + q^(n-2) F_{n-2}.
IntPolynomial qfib_F(int n);

/// F^_0 = 0, F^_1 = 1, F^_n = F^_{n-1} + q^(n-1) F^_{n-2}.
IntPolynomial qfib_Fhat(int n);

/// phi_0 = 1, phi_1 = phi_2 = q, phi_3 = q + q^2, and for n > 3
/// phi_n = phi_{n-1} + phi_{n-2} + (q^2 - 1) phi_{n-3}.
/// The coefficient of q^s counts flip classes of anti-palindromic
/// compositions of n with s parts.
IntPolynomial phi(int n);

/// [q^s] phi_n.
BigCount phi_coefficient(int n, int s);

struct ParitySplit {
  BigCount even_sum;  // (phi_n(1) + phi_n(-1)) / 2
  BigCount odd_sum;   // (phi_n(1) - phi_n(-1)) / 2
  friend bool operator==(const ParitySplit&, const ParitySplit&) = default;
};

ParitySplit phi_parity_split(int n);

}  // namespace antipal
