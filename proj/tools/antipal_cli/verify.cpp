#include <algorithm>
#include <string>
#include <vector>

#include "antipal/bijection.hpp"
#include "antipal/composition.hpp"
#include "antipal/counting.hpp"
#include "antipal/polynomial.hpp"
#include "antipal/sequences.hpp"
#include "antipal/series.hpp"
#include "antipal_cli/cli.hpp"

namespace antipal::cli {
namespace {

// One line of the verify report.
struct Check {
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::string summary;
  std::string counterexample;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    if (passed) counterexample = what;
    passed = false;
  }
};

std::string line(const Check& c) {
  std::string out = c.name + ": ";
  out += c.passed ? c.summary + " ok" : "FAIL " + c.counterexample;
  out += '\n';
  for (const auto& note : c.notes) out += "  note: " + note + "\n";
  return out;
}

std::string at(int n) { return "n=" + std::to_string(n); }
std::string at(int n, int s) {
  return "(n,s)=(" + std::to_string(n) + "," + std::to_string(s) + ")";
}

Check check_brute(const VerifyOptions& o, const std::vector<CountTable>& brute) {
  const auto& f = o.formulas;
  Check c("brute");
  for (int n = 0; n <= o.max_brute && c.passed; ++n) {
    const CountTable& b = brute[static_cast<std::size_t>(n)];
    const RacTotals rac = f.rac_totals(n);
    auto cmp = [&](const std::string& what, const BigCount& formula,
                   const BigCount& oracle) {
      if (formula != oracle) {
        c.fail(at(n) + ": " + what + " formula=" + formula.get_str() +
               ", brute=" + oracle.get_str());
      }
    };
    cmp("ac0", f.ac0(n), b.ac0);
    cmp("ac1", f.ac1(n), b.ac1);
    cmp("ac", f.ac_total(n), b.ac);
    cmp("rac0", rac.rac0, b.rac0);
    cmp("rac1", rac.rac1, b.rac1);
    cmp("rac", rac.rac, b.rac);
    for (const auto& [s, counts] : b.by_length) {
      cmp("ac(n," + std::to_string(s) + ")", f.ac_ns(n, s), counts.ac);
      cmp("rac(n," + std::to_string(s) + ")", f.rac_ns(n, s), counts.rac);
    }
  }
  c.summary = "formulas match exhaustive counts for n<=" +
              std::to_string(o.max_brute);
  return c;
}

Check check_length_series(const VerifyOptions& o,
                     const std::vector<CountTable>& brute) {
  Check c("theorem3");
  const int order = o.max_n + 1;
  int max_s = 0;
  while ((3 * (max_s + 1)) / 2 <= o.max_n) ++max_s;
  for (int s = 0; s <= max_s + 1 && c.passed; ++s) {
    const TruncatedSeries g =
        series_G(static_cast<unsigned>(s), static_cast<std::size_t>(order));
    for (int n = 0; n < order; ++n) {
      const BigCount& coeff = g[static_cast<std::size_t>(n)];
      const BigCount formula = o.formulas.ac_ns(n, s);
      if (coeff != formula) {
        c.fail(at(n, s) + ": [q^n]G(q,s)=" + coeff.get_str() +
               ", ac_ns=" + formula.get_str());
        break;
      }
      if (n <= o.max_brute) {
        const auto& by_len = brute[static_cast<std::size_t>(n)].by_length;
        const auto it = by_len.find(s);
        const BigCount oracle = it == by_len.end() ? BigCount(0) : it->second.ac;
        if (coeff != oracle) {
          c.fail(at(n, s) + ": [q^n]G(q,s)=" + coeff.get_str() +
                 ", brute=" + oracle.get_str());
          break;
        }
      }
    }
  }
  c.summary = "G(q,s) coefficients match for s<=" + std::to_string(max_s + 1) +
              ", n<=" + std::to_string(o.max_n);
  return c;
}

Check check_reduced_polynomials(const VerifyOptions& o) {
  const auto& f = o.formulas;
  Check c("theorem4");
  for (int n = 0; n <= o.max_n && c.passed; ++n) {
    const IntPolynomial p = phi(n);
    for (int s = 0; s <= n + 1; ++s) {
      const BigCount coeff = p.coefficient(static_cast<std::size_t>(s));
      const BigCount formula = f.rac_ns(n, s);
      if (coeff < 0) {
        c.fail(at(n, s) + ": negative coefficient " + coeff.get_str() +
               " in phi_n");
        break;
      }
      if (coeff != formula) {
        c.fail(at(n, s) + ": [q^s]phi_n=" + coeff.get_str() +
               ", rac_ns=" + formula.get_str());
        break;
      }
    }
    const ParitySplit split = phi_parity_split(n);
    const RacTotals rac = f.rac_totals(n);
    if (c.passed && (split.even_sum != rac.rac0 || split.odd_sum != rac.rac1)) {
      c.fail(at(n) + ": phi parity split=(" + split.even_sum.get_str() + "," +
             split.odd_sum.get_str() + "), rac totals=(" + rac.rac0.get_str() +
             "," + rac.rac1.get_str() + ")");
    }
  }
  c.summary = "phi_n coefficients equal rac(n,s) for n<=" +
              std::to_string(o.max_n);
  return c;
}

Check check_bijection(const VerifyOptions& o) {
  Check c("bijection");
  const int last = std::min(o.max_brute, 18);
  std::size_t inputs = 0;
  for (int n = 3; n <= last && c.passed; ++n) {
    const BijectionSweep sweep = sweep_bijection(n);
    inputs += sweep.sources;
    if (!sweep.passed) c.fail(at(n) + ": " + sweep.failure);
  }
  if (last < 3) {
    c.summary = "skipped (needs --max-brute >= 3)";
  } else {
    c.summary = "round trip and surjectivity for 3<=n<=" +
                std::to_string(last) + " (" + std::to_string(inputs) +
                " inputs per sign)";
  }
  return c;
}

}  // namespace

CommandResult cmd_verify(const VerifyOptions& o) {
  if (o.max_n < 0 || o.max_brute < 0) {
    return {kUsage, "", "error: bounds must be >= 0\n"};
  }
  if (o.max_brute > o.max_n) {
    return {kUsage, "", "error: --max-brute must not exceed --max-n\n"};
  }
  if (o.max_brute > kBruteEnvelope) {
    return {kUsage, "",
            "error: --max-brute is limited to " +
                std::to_string(kBruteEnvelope) + "\n"};
  }

  std::vector<CountTable> brute;
  for (int n = 0; n <= o.max_brute; ++n) brute.push_back(brute_counts(n));

  std::vector<Check> checks;
  checks.push_back(check_brute(o, brute));

  const IdentityReport report = identity_suite(o.max_n, o.formulas);
  for (const IdentityCheck& id : report.checks) {
    Check c(id.name);
    c.passed = id.passed;
    c.counterexample = id.counterexample;
    c.notes = id.notes;
    c.summary = id.witness.empty()
                    ? id.statement + " (" + std::to_string(id.cases) + " cases)"
                    : id.witness;
    checks.push_back(std::move(c));
  }

  checks.push_back(check_length_series(o, brute));
  checks.push_back(check_reduced_polynomials(o));
  checks.push_back(check_bijection(o));

  CommandResult result;
  std::size_t failed = 0;
  for (const Check& c : checks) {
    result.out += line(c);
    if (!c.passed) ++failed;
  }
  if (failed == 0) {
    result.out += "all " + std::to_string(checks.size()) + " checks passed\n";
  } else {
    result.out += std::to_string(failed) + " of " +
                  std::to_string(checks.size()) + " checks failed\n";
    result.exit_code = kFailure;
  }
  return result;
}

}  // namespace antipal::cli
