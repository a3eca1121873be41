#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "antipal/bijection.hpp"
#include "antipal/composition.hpp"
#include "antipal/counting.hpp"
#include "antipal/sequences.hpp"
#include "antipal_cli/cli.hpp"
#include "antipal_cli/format.hpp"

namespace antipal::cli {
namespace {

CommandResult usage_error(const std::string& message) {
  return {kUsage, "", "error: " + message + "\n"};
}

// Largest s with floor(3s/2) <= n: the longest anti-palindromic
// composition of n.
int max_length_for(int n) {
  int s = 0;
  while ((3 * (s + 1)) / 2 <= n) ++s;
  return s;
}

struct Table1Row {
  int n;
  BigCount ac0, ac1, ac, rac0, rac1, rac;
};

Table1Row table1_row(int n, const CountingFormulas& f) {
  const RacTotals rac = f.rac_totals(n);
  return {n, f.ac0(n), f.ac1(n), f.ac_total(n), rac.rac0, rac.rac1, rac.rac};
}

// Compares one formula value with its brute-force counterpart, collecting a
// message on mismatch.
void compare(std::vector<std::string>& mismatches, const std::string& label,
             const BigCount& formula, const BigCount& brute) {
  if (formula != brute) {
    mismatches.push_back(label + ": formula " + formula.get_str() +
                         ", brute force " + brute.get_str());
  }
}

std::string render_table1(const std::vector<Table1Row>& rows, Format format) {
  if (format == Format::kJson) {
    Json out = Json::array();
    for (const auto& r : rows) {
      out.push_back({{"n", r.n},
                     {"ac0", to_json(r.ac0)},
                     {"ac1", to_json(r.ac1)},
                     {"ac", to_json(r.ac)},
                     {"rac0", to_json(r.rac0)},
                     {"rac1", to_json(r.rac1)},
                     {"rac", to_json(r.rac)}});
    }
    return out.dump() + "\n";
  }
  Grid grid{{"n", "ac0", "ac1", "ac", "rac0", "rac1", "rac"}, {}};
  for (const auto& r : rows) {
    grid.rows.push_back({std::to_string(r.n), r.ac0.get_str(), r.ac1.get_str(),
                         r.ac.get_str(), r.rac0.get_str(), r.rac1.get_str(),
                         r.rac.get_str()});
  }
  return format == Format::kCsv ? render_csv(grid) : render_aligned(grid);
}

std::string render_table2(const std::vector<std::vector<BigCount>>& ac,
                          const std::vector<std::vector<BigCount>>& rac,
                          int max_s, Format format) {
  const int rows = static_cast<int>(ac.size());
  if (format == Format::kJson) {
    Json out = Json::array();
    for (int n = 0; n < rows; ++n) {
      Json ac_row = Json::array();
      Json rac_row = Json::array();
      for (int s = 0; s <= max_s; ++s) {
        ac_row.push_back(to_json(ac[n][s]));
        rac_row.push_back(to_json(rac[n][s]));
      }
      out.push_back({{"n", n}, {"ac", ac_row}, {"rac", rac_row}});
    }
    return out.dump() + "\n";
  }
  if (format == Format::kCsv) {
    Grid grid{{"n"}, {}};
    for (int s = 0; s <= max_s; ++s) grid.header.push_back("ac_s" + std::to_string(s));
    for (int s = 0; s <= max_s; ++s) grid.header.push_back("rac_s" + std::to_string(s));
    for (int n = 0; n < rows; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      for (int s = 0; s <= max_s; ++s) row.push_back(ac[n][s].get_str());
      for (int s = 0; s <= max_s; ++s) row.push_back(rac[n][s].get_str());
      grid.rows.push_back(std::move(row));
    }
    return render_csv(grid);
  }
  auto half = [&](const char* name,
                  const std::vector<std::vector<BigCount>>& values) {
    Grid grid{{"n"}, {}};
    for (int s = 0; s <= max_s; ++s) {
      grid.header.push_back(std::string(name) + "(n," + std::to_string(s) + ")");
    }
    for (int n = 0; n < rows; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      for (int s = 0; s <= max_s; ++s) row.push_back(values[n][s].get_str());
      grid.rows.push_back(std::move(row));
    }
    return render_aligned(grid);
  };
  return half("ac", ac) + "\n" + half("rac", rac);
}

}  // namespace

CommandResult cmd_table(TableKind which, int max_n, Format format, bool verify,
                        const CountingFormulas& formulas) {
  if (max_n < 0) return usage_error("--max-n must be >= 0");
  if (format == Format::kBfile) {
    return usage_error("bfile output is only available for seq");
  }

  CommandResult result;
  std::vector<std::string> mismatches;
  const int brute_limit = verify ? std::min(max_n, kBruteEnvelope) : -1;
  if (verify && max_n > kBruteEnvelope) {
    result.err += "note: rows n > " + std::to_string(kBruteEnvelope) +
                  " are not brute-force checked\n";
  }

  if (which == TableKind::kTable1) {
    std::vector<Table1Row> rows;
    for (int n = 0; n <= max_n; ++n) rows.push_back(table1_row(n, formulas));
    for (int n = 0; n <= brute_limit; ++n) {
      const CountTable b = brute_counts(n);
      const Table1Row& r = rows[static_cast<std::size_t>(n)];
      const std::string at = "(n=" + std::to_string(n) + ")";
      compare(mismatches, "ac0" + at, r.ac0, b.ac0);
      compare(mismatches, "ac1" + at, r.ac1, b.ac1);
      compare(mismatches, "ac" + at, r.ac, b.ac);
      compare(mismatches, "rac0" + at, r.rac0, b.rac0);
      compare(mismatches, "rac1" + at, r.rac1, b.rac1);
      compare(mismatches, "rac" + at, r.rac, b.rac);
    }
    if (mismatches.empty()) result.out = render_table1(rows, format);
  } else {
    const int max_s = max_length_for(max_n);
    std::vector<std::vector<BigCount>> ac, rac;
    for (int n = 0; n <= max_n; ++n) {
      std::vector<BigCount> ac_row, rac_row;
      for (int s = 0; s <= max_s; ++s) {
        ac_row.push_back(formulas.ac_ns(n, s));
        rac_row.push_back(formulas.rac_ns(n, s));
      }
      ac.push_back(std::move(ac_row));
      rac.push_back(std::move(rac_row));
    }
    for (int n = 0; n <= brute_limit; ++n) {
      const CountTable b = brute_counts(n, max_s);
      for (int s = 0; s <= max_s; ++s) {
        const std::string at =
            "(" + std::to_string(n) + "," + std::to_string(s) + ")";
        const LengthCounts& bl = b.by_length.at(s);
        compare(mismatches, "ac" + at, ac[n][s], bl.ac);
        compare(mismatches, "rac" + at, rac[n][s], bl.rac);
      }
    }
    if (mismatches.empty()) result.out = render_table2(ac, rac, max_s, format);
  }

  if (!mismatches.empty()) {
    result.exit_code = kFailure;
    for (const auto& m : mismatches) result.err += "verify mismatch: " + m + "\n";
  }
  return result;
}

CommandResult cmd_seq(const std::string& name, int max_n, Format format) {
  if (max_n < 0) return usage_error("--max-n must be >= 0");

  std::function<BigCount(int)> term;
  if (name == "ac0") {
    term = ac0;
  } else if (name == "ac1") {
    term = ac1;
  } else if (name == "ac") {
    term = ac_total;
  } else if (name == "rac0") {
    term = [](int n) { return rac_totals(n).rac0; };
  } else if (name == "rac1") {
    term = [](int n) { return rac_totals(n).rac1; };
  } else if (name == "rac") {
    term = [](int n) { return rac_totals(n).rac; };
  } else if (name == "trib") {
    term = [](int n) { return tribonacci(n); };
  } else if (name == "fib") {
    term = [](int n) { return fibonacci(n); };
  } else if (name.starts_with("kbonacci:")) {
    const std::string k_text = name.substr(9);
    int k = 0;
    const auto [ptr, ec] =
        std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
    if (k_text.empty() || ec != std::errc{} ||
        ptr != k_text.data() + k_text.size() || k < 2) {
      return usage_error("kbonacci:K needs an integer K >= 2, got \"" +
                         k_text + "\"");
    }
    term = [k](int n) { return kbonacci(k, n); };
  } else {
    return usage_error("unknown sequence \"" + name +
                       "\" (expected ac0, ac1, ac, rac0, rac1, rac, trib, "
                       "fib or kbonacci:K)");
  }

  std::vector<BigCount> values;
  for (int n = 0; n <= max_n; ++n) values.push_back(term(n));

  CommandResult result;
  switch (format) {
    case Format::kBfile:
      for (int n = 0; n <= max_n; ++n) {
        result.out += std::to_string(n) + ' ' + values[n].get_str() + '\n';
      }
      break;
    case Format::kCsv:
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) result.out += ',';
        result.out += values[i].get_str();
      }
      result.out += '\n';
      break;
    case Format::kJson: {
      Json out = Json::array();
      for (const auto& v : values) out.push_back(to_json(v));
      result.out = out.dump() + "\n";
      break;
    }
    case Format::kTable: {
      Grid grid{{"n", name}, {}};
      for (int n = 0; n <= max_n; ++n) {
        grid.rows.push_back({std::to_string(n), values[n].get_str()});
      }
      result.out = render_aligned(grid);
      break;
    }
  }
  return result;
}

CompositionClass parse_class(const std::string& name) {
  if (name == "all") return CompositionClass::kAll;
  if (name == "palindromic") return CompositionClass::kPalindromic;
  if (name == "antipalindromic") return CompositionClass::kAntipalindromic;
  if (name == "reduced") return CompositionClass::kReduced;
  throw std::invalid_argument(
      "unknown class \"" + name +
      "\" (expected all, palindromic, antipalindromic or reduced)");
}

CommandResult cmd_enumerate(int n, CompositionClass cls,
                            std::optional<int> length) {
  if (n < 0 || n > kEnumerateEnvelope) {
    return usage_error("n must be in [0, " +
                       std::to_string(kEnumerateEnvelope) + "]");
  }
  if (length && *length < 0) return usage_error("--length must be >= 0");

  CommandResult result;
  for (const Composition& c : enumerate_compositions(n)) {
    if (length && c.size() != static_cast<std::size_t>(*length)) continue;
    bool keep = true;
    switch (cls) {
      case CompositionClass::kAll:
        break;
      case CompositionClass::kPalindromic:
        keep = is_palindromic(c);
        break;
      case CompositionClass::kAntipalindromic:
        keep = is_antipalindromic(c);
        break;
      case CompositionClass::kReduced:
        keep = is_antipalindromic(c) && flip_canonical(c) == c;
        break;
    }
    if (keep) result.out += to_string(c) + '\n';
  }
  return result;
}

CommandResult cmd_bijection(Direction direction, const std::string& input,
                            const std::optional<std::string>& sign) {
  CommandResult result;
  Composition c;
  try {
    c = parse_composition(input);
  } catch (const std::invalid_argument& e) {
    return {kFailure, "", std::string("error: ") + e.what() + "\n"};
  }

  if (direction == Direction::kForward) {
    if (!sign) return usage_error("forward needs --sign +3 or --sign -3");
    Sign lead{};
    try {
      lead = parse_sign(*sign);
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what());
    }
    try {
      result.out = to_string(forward(c, lead)) + '\n';
    } catch (const std::invalid_argument& e) {
      return {kFailure, "", std::string("error: ") + e.what() + "\n"};
    }
    return result;
  }

  if (sign) return usage_error("--sign only applies to forward");
  try {
    const InverseResult inv = inverse(c);
    result.out = to_string(inv.source) + ' ' + to_string(inv.lead) + '\n';
  } catch (const NotInImageError& e) {
    return {kFailure, "", std::string(e.what()) + "\n"};
  }
  return result;
}

}  // namespace antipal::cli
