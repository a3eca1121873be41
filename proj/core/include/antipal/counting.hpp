#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "antipal/bigint.hpp"

namespace antipal {

/// 1 when j is even, 0 when odd.
constexpr int chi(long j) noexcept { return j % 2 == 0 ? 1 : 0; }

/// 1 when m is odd, 2 when m is even: the smallest possible |a - b| for a
/// pair of distinct positive integers with a + b = m.
constexpr int delta(long m) noexcept { return m % 2 == 0 ? 2 : 1; }

// Counts of anti-palindromic compositions of n. All take n >= 0 and throw
// std::invalid_argument otherwise.

/// Even length: 1 at n = 0, else 2 f_3(n-2).
BigCount ac0(int n);
/// Odd length: 0, 1 at n = 0, 1, else f_3(n-1) + f_3(n-3).
BigCount ac1(int n);
/// All lengths: 1 at n = 0, else f_3(n) + f_3(n-2).
BigCount ac_total(int n);

/**
 * ac(n, s) from the binomial sums
 *   s = 2a:    sum over r + 2t = n - 3a     of 2^a C(a+r-1, r) C(a+t-1, t)
 *   s = 2a+1:  sum over r + 2t = n - 3a - 1 of 2^a C(a+r,   r) C(a+t-1, t)
 * with s = 0 and s = 1 given directly ([n = 0] and [n >= 1]).
 */
BigCount ac_ns_binomial(int n, int s);

/**
 * ac(n, s) from the dynamic program
 *   ac(n,s) = ac(n-1,s) + ac(n-2,s) + 2 ac(n-3,s-2) - ac(n-3,s),
 * used only for n >= 3 and s >= 3. Lengths 0, 1, 2 and rows n < 3 are
 * seeded from their closed forms. Rows are cached process-wide; the cache
 * is append-only and guarded by a mutex.
 */
BigCount ac_ns_recurrence(int n, int s);

/// rac(n, s) = ac(n, s) / 2^floor(s/2). Throws std::logic_error if the
/// division is not exact.
BigCount rac_ns(int n, int s);

struct RacTotals {
  BigCount rac0, rac1, rac;
  friend bool operator==(const RacTotals&, const RacTotals&) = default;
};

/// (f_2(n-2), f_2(n-1), f_2(n)) for n >= 2; the rows n = 0 and n = 1 are
/// (1, 0, 1) and (0, 1, 1).
RacTotals rac_totals(int n);

/// ac_0(n) from the endpoint-insertion convolution
///   ac_0(n) = sum_{m=0}^{n-3} (n - m - 1 - chi(n-m)) ac_0(m),
/// seeded with 1, 0, 0. Independent of the tribonacci closed form.
BigCount ac0_convolution(int n);

/// Swappable set of count formulas. Verification runs every check against
/// this bundle so a harness can inject a deliberately broken formula.
struct CountingFormulas {
  std::function<BigCount(int)> ac0 = antipal::ac0;
  std::function<BigCount(int)> ac1 = antipal::ac1;
  std::function<BigCount(int)> ac_total = antipal::ac_total;
  std::function<BigCount(int, int)> ac_ns = antipal::ac_ns_binomial;
  std::function<BigCount(int, int)> rac_ns = antipal::rac_ns;
  std::function<RacTotals(int)> rac_totals = antipal::rac_totals;
};

struct IdentityCheck {
  std::string name;
  std::string statement;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing instance, empty when passed.
  std::string counterexample;
  /// Human-readable instance at the largest checked argument.
  std::string witness;
  /// Known exceptions outside the checked range.
  std::vector<std::string> notes;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  /// nullptr if no check has that name.
  const IdentityCheck* find(std::string_view name) const;
};

/**
 * Checks the counting identities for every argument up to `max_n`:
 *
 *   theorem1    ac_0(n) = 2 f_3(n-2), against the convolution and the
 *               even-length sum of ac(n, s)
 *   theorem2    ac(n) = f_3(n) + f_3(n-2) = ac_0(n) + ac_1(n) = sum_s ac(n,s)
 *   prop1       ac_0(n) = f_3(n-1) + f_3(n-5) for n >= 4
 *   key         ac(n,2s) + ac(n,2s+1) = ac(n+1,2s+1)
 *   sum1        ac(n,2s+1) = sum_{j<n} ac(j,2s)
 *   back        ac(n) = ac_1(n+1)
 *   sum2        ac_1(n) = sum_{j<n} ac_0(j)
 *   sumt        sum_{j<=n} f_3(j) = (f_3(n) + f_3(n+2) - 1) / 2
 *   lem         ac_1(n) = f_3(n-3) + f_3(n-1) = odd-length sum, n >= 2
 *   lemma2      ac(n, s) recurrence agrees with the binomial sums
 *   corollary2  rac totals agree with the parity sums of rac(n, s)
 *
 * Failures are recorded in the report, never thrown.
 */
IdentityReport identity_suite(int max_n, const CountingFormulas& formulas = {});

}  // namespace antipal
