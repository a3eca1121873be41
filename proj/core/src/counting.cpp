#include "antipal/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "antipal/sequences.hpp"

namespace antipal {
namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": n must be >= 0, got " +
                                std::to_string(n));
  }
}

void require_nonnegative(int n, int s, const char* what) {
  if (n < 0 || s < 0) {
    throw std::invalid_argument(std::string(what) +
                                ": n and s must be >= 0, got (" +
                                std::to_string(n) + ", " + std::to_string(s) +
                                ")");
  }
}

// Rows of ac(n, s) for s in [0, n]; anything past the row is zero since a
// composition of n has at most n parts.
class AcNsTable {
 public:
  BigCount get(int n, int s) {
    if (n < 0 || s < 0 || s > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
  }

 private:
  BigCount at(int n, int s) const {
    if (n < 0 || s < 0 || s > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
  }

  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<BigCount> row(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
      row[0] = 1;
    } else if (n < 3) {
      row[1] = 1;
    } else {
      row[1] = 1;
      row[2] = 2 * ((n - 1) / 2);
      for (int s = 3; s <= n; ++s) {
        row[static_cast<std::size_t>(s)] = at(n - 1, s) + at(n - 2, s) +
                                           2 * at(n - 3, s - 2) -
                                           at(n - 3, s);
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<BigCount>> rows_;
};

AcNsTable& ac_ns_table() {
  static AcNsTable table;
  return table;
}

}  // namespace

BigCount ac0(int n) {
  require_nonnegative(n, "ac0");
  if (n == 0) return 1;
  return 2 * tribonacci(n - 2);
}

BigCount ac1(int n) {
  require_nonnegative(n, "ac1");
  if (n < 2) return n;  // rows n = 0, 1
  return tribonacci(n - 1) + tribonacci(n - 3);
}

BigCount ac_total(int n) {
  require_nonnegative(n, "ac_total");
  if (n == 0) return 1;
  return tribonacci(n) + tribonacci(n - 2);
}

BigCount ac_ns_binomial(int n, int s) {
  require_nonnegative(n, s, "ac_ns_binomial");
  if (s == 0) return n == 0 ? 1 : 0;
  if (s == 1) return n >= 1 ? 1 : 0;
  const int a = s / 2;
  const bool odd = s % 2 == 1;
  // The odd case carries the extra middle part, so its pairs share n-3a-1.
  const int budget = n - 3 * a - (odd ? 1 : 0);
  BigCount sum = 0;
  for (int t = 0; 2 * t <= budget; ++t) {
    const int r = budget - 2 * t;
    sum += binomial(odd ? a + r : a + r - 1, r) * binomial(a + t - 1, t);
  }
  return sum * pow2(a);
}

BigCount ac_ns_recurrence(int n, int s) {
  require_nonnegative(n, s, "ac_ns_recurrence");
  return ac_ns_table().get(n, s);
}

BigCount rac_ns(int n, int s) {
  require_nonnegative(n, s, "rac_ns");
  return exact_div(ac_ns_binomial(n, s), pow2(s / 2),
                   "rac_ns(" + std::to_string(n) + "," + std::to_string(s) +
                       ")");
}

RacTotals rac_totals(int n) {
  require_nonnegative(n, "rac_totals");
  if (n == 0) return {1, 0, 1};
  if (n == 1) return {0, 1, 1};
  return {fibonacci(n - 2), fibonacci(n - 1), fibonacci(n)};
}

BigCount ac0_convolution(int n) {
  require_nonnegative(n, "ac0_convolution");
  std::vector<BigCount> values = {1, 0, 0};
  for (int k = 3; k <= n; ++k) {
    BigCount next = 0;
    for (int m = 0; m <= k - 3; ++m) {
      next += (k - m - 1 - chi(k - m)) * values[static_cast<std::size_t>(m)];
    }
    values.push_back(std::move(next));
  }
  return values[static_cast<std::size_t>(n)];
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* IdentityReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string str(const BigCount& v) { return v.get_str(); }
std::string str(int v) { return std::to_string(v); }

IdentityCheck start(std::string name, std::string statement) {
  IdentityCheck check;
  check.name = std::move(name);
  check.statement = std::move(statement);
  return check;
}

// Records one instance; keeps only the first counterexample.
void expect(IdentityCheck& check, bool ok, const std::string& instance) {
  ++check.cases;
  if (!ok && check.passed) {
    check.passed = false;
    check.counterexample = instance;
  }
}

}  // namespace

IdentityReport identity_suite(int max_n, const CountingFormulas& f) {
  require_nonnegative(max_n, "identity_suite");
  const int N = max_n;
  IdentityReport report;

  // Formula values are reused across several checks.
  std::vector<BigCount> a0, a1, a;
  for (int n = 0; n <= N + 1; ++n) {
    a0.push_back(f.ac0(n));
    a1.push_back(f.ac1(n));
    a.push_back(f.ac_total(n));
  }
  auto ac_ns = [&](int n, int s) -> BigCount {
    if (s > n) return BigCount(0);
    return f.ac_ns(n, s);
  };
  auto parity_sum = [&](int n, int parity) {
    BigCount sum = 0;
    for (int s = parity; s <= n; s += 2) sum += ac_ns(n, s);
    return sum;
  };
  const auto idx = [](int n) { return static_cast<std::size_t>(n); };

  {
    IdentityCheck c = start("theorem1", "ac0(n) = 2*f3(n-2) for n >= 1");
    for (int n = 0; n <= N; ++n) {
      const BigCount conv = ac0_convolution(n);
      const BigCount even = parity_sum(n, 0);
      bool ok = a0[idx(n)] == conv && a0[idx(n)] == even;
      if (n >= 1) ok = ok && a0[idx(n)] == 2 * tribonacci(n - 2);
      expect(c, ok,
             "n=" + str(n) + ": ac0=" + str(a0[idx(n)]) + ", convolution=" +
                 str(conv) + ", even-length sum=" + str(even) +
                 (n >= 1 ? ", 2*f3(n-2)=" + str(2 * tribonacci(n - 2)) : ""));
    }
    c.witness = "ac0(" + str(N) + ")=" + str(a0[idx(N)]);
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("theorem2", "ac(n) = f3(n) + f3(n-2) for n >= 1");
    for (int n = 0; n <= N; ++n) {
      const BigCount split = a0[idx(n)] + a1[idx(n)];
      const BigCount by_len = parity_sum(n, 0) + parity_sum(n, 1);
      bool ok = a[idx(n)] == split && a[idx(n)] == by_len;
      if (n >= 1) ok = ok && a[idx(n)] == tribonacci(n) + tribonacci(n - 2);
      expect(c, ok,
             "n=" + str(n) + ": ac=" + str(a[idx(n)]) + ", ac0+ac1=" +
                 str(split) + ", sum over lengths=" + str(by_len));
    }
    c.witness = "ac(" + str(N) + ")=" + str(a[idx(N)]);
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("prop1", "ac0(n) = f3(n-1) + f3(n-5) for n >= 4");
    for (int n = 4; n <= N; ++n) {
      const BigCount rhs = tribonacci(n - 1) + tribonacci(n - 5);
      expect(c, a0[idx(n)] == rhs,
             "n=" + str(n) + ": ac0=" + str(a0[idx(n)]) +
                 ", f3(n-1)+f3(n-5)=" + str(rhs));
    }
    if (N >= 3) {
      c.notes.push_back("n=3 excluded: f3(2)+f3(-2)=" +
                        str(tribonacci(2) + tribonacci(-2)) + " but ac0(3)=" +
                        str(a0[3]));
    }
    if (N >= 4) c.witness = "ac0(" + str(N) + ")=" + str(a0[idx(N)]);
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("key", "ac(n,2s) + ac(n,2s+1) = ac(n+1,2s+1)");
    expect(c, ac_ns(0, 0) == 1 && ac_ns(0, 1) == 0,
           "base: ac(0,0)=" + str(ac_ns(0, 0)) + ", ac(0,1)=" +
               str(ac_ns(0, 1)));
    for (int n = 0; n <= N; ++n) {
      for (int s = 0; 2 * s <= n + 1; ++s) {
        const BigCount lhs = ac_ns(n, 2 * s) + ac_ns(n, 2 * s + 1);
        const BigCount rhs = ac_ns(n + 1, 2 * s + 1);
        expect(c, lhs == rhs,
               "(n,s)=(" + str(n) + "," + str(s) + "): " + str(lhs) +
                   " != " + str(rhs));
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("sum1", "ac(n,2s+1) = sum_{j<n} ac(j,2s)");
    for (int s = 0; 2 * s + 1 <= N; ++s) {
      BigCount running = 0;  // sum_{j<n} ac(j,2s)
      for (int n = 0; n <= N; ++n) {
        const BigCount lhs = ac_ns(n, 2 * s + 1);
        expect(c, lhs == running,
               "(n,s)=(" + str(n) + "," + str(s) + "): " + str(lhs) +
                   " != " + str(running));
        running += ac_ns(n, 2 * s);
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("back", "ac(n) = ac1(n+1)");
    for (int n = 0; n <= N; ++n) {
      expect(c, a[idx(n)] == a1[idx(n + 1)],
             "n=" + str(n) + ": ac=" + str(a[idx(n)]) + ", ac1(n+1)=" +
                 str(a1[idx(n + 1)]));
    }
    c.witness = "ac(" + str(N) + ")=" + str(a[idx(N)]) + "=ac1(" +
                str(N + 1) + ")";
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("sum2", "ac1(n) = sum_{j<n} ac0(j)");
    BigCount running = 0;
    for (int n = 0; n <= N; ++n) {
      expect(c, a1[idx(n)] == running,
             "n=" + str(n) + ": ac1=" + str(a1[idx(n)]) + ", sum=" +
                 str(running));
      running += a0[idx(n)];
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("sumt",
                    "sum_{j<=n} f3(j) = (f3(n) + f3(n+2) - 1) / 2");
    BigCount running = 0;
    for (int n = 0; n <= N; ++n) {
      running += tribonacci(n);
      const BigCount closed = tribonacci_partial_sum(n);
      expect(c, running == closed,
             "n=" + str(n) + ": sum=" + str(running) + ", closed=" +
                 str(closed));
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("lem", "ac1(n) = f3(n-3) + f3(n-1) for n >= 2");
    for (int n = 2; n <= N; ++n) {
      const BigCount rhs = tribonacci(n - 3) + tribonacci(n - 1);
      const BigCount odd = parity_sum(n, 1);
      expect(c, a1[idx(n)] == rhs && a1[idx(n)] == odd,
             "n=" + str(n) + ": ac1=" + str(a1[idx(n)]) +
                 ", f3(n-3)+f3(n-1)=" + str(rhs) + ", odd-length sum=" +
                 str(odd));
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("lemma2",
                    "ac(n,s) = ac(n-1,s) + ac(n-2,s) + 2ac(n-3,s-2) - "
                    "ac(n-3,s)");
    for (int n = 0; n <= N; ++n) {
      for (int s = 0; s <= n; ++s) {
        const BigCount rec = ac_ns_recurrence(n, s);
        const BigCount closed = ac_ns(n, s);
        expect(c, rec == closed,
               "(n,s)=(" + str(n) + "," + str(s) + "): recurrence=" +
                   str(rec) + ", binomial=" + str(closed));
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c = start("corollary2",
                    "rac0(n) = f2(n-2), rac1(n) = f2(n-1), rac(n) = f2(n)");
    for (int n = 0; n <= N; ++n) {
      BigCount even = 0, odd = 0;
      for (int s = 0; s <= n; ++s) {
        (s % 2 == 0 ? even : odd) += f.rac_ns(n, s);
      }
      const RacTotals t = f.rac_totals(n);
      bool ok = t.rac0 == even && t.rac1 == odd && t.rac == even + odd;
      if (n >= 1) ok = ok && t.rac == fibonacci(n);
      expect(c, ok,
             "n=" + str(n) + ": rac totals=(" + str(t.rac0) + "," +
                 str(t.rac1) + "," + str(t.rac) + "), parity sums=(" +
                 str(even) + "," + str(odd) + ")");
    }
    if (N >= 1) {
      c.notes.push_back("n=1: rac1(1)=1 while f2(0)=0; the f2(n-1) form "
                        "holds for n >= 2");
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace antipal
