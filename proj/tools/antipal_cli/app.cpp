#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "antipal_cli/cli.hpp"

namespace antipal::cli {
namespace {

// CLI11 check that reports our own parse errors in its usual style.
template <typename Parse>
CLI::Validator parses_with(Parse parse, std::string description) {
  return CLI::Validator(
      [parse](std::string& value) -> std::string {
        try {
          parse(value);
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
        return {};
      },
      std::move(description));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Anti-palindromic composition toolkit", "antipal"};
  app.require_subcommand(1);

  std::string format_name = "table";
  const auto format_check = parses_with(parse_format, "FORMAT");

  int table_max_n = 0;
  bool table_verify = false;
  auto* table1 = app.add_subcommand("table1", "ac0, ac1, ac, rac0, rac1, rac by n");
  auto* table2 = app.add_subcommand("table2", "ac(n,s) and rac(n,s) by n and s");
  for (auto* sub : {table1, table2}) {
    sub->add_option("--max-n", table_max_n, "largest n")->required();
    sub->add_option("--format", format_name, "table, csv or json")
        ->check(format_check);
    sub->add_flag("--verify", table_verify,
                  "recompute rows by exhaustive enumeration first");
  }

  std::string seq_name;
  int seq_max_n = 0;
  auto* seq = app.add_subcommand("seq", "print a(0..max_n) of a sequence");
  seq->add_option("name", seq_name,
                  "ac0 ac1 ac rac0 rac1 rac trib fib kbonacci:K")
      ->required();
  seq->add_option("--max-n", seq_max_n, "largest n")->required();
  seq->add_option("--format", format_name, "table, csv, json or bfile")
      ->check(format_check);

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run every cross-check");
  verify->add_option("--max-n", verify_options.max_n,
                     "bound for formula-level checks")
      ->required();
  verify->add_option("--max-brute", verify_options.max_brute,
                     "bound for exhaustive checks")
      ->required();

  int enum_n = 0;
  std::string class_name = "all";
  std::optional<int> enum_length;
  auto* enumerate = app.add_subcommand("enumerate", "list compositions of n");
  enumerate->add_option("n", enum_n, "size")->required();
  enumerate->add_option("--class", class_name,
                        "all, palindromic, antipalindromic or reduced")
      ->check(parses_with(parse_class, "CLASS"));
  enumerate->add_option("--length", enum_length, "only this many parts");

  std::string direction_name;
  std::string composition_text;
  std::optional<std::string> sign;
  auto* bijection = app.add_subcommand(
      "bijection", "map {1,2,3}-compositions to even anti-palindromic ones");
  bijection->add_option("direction", direction_name, "forward or inverse")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  bijection->add_option("composition", composition_text,
                        "composition such as \"(2,3,1)\"")
      ->required();
  bijection->add_option("--sign", sign, "+3 or -3 (forward only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CommandResult result;
  if (*table1 || *table2) {
    result = cmd_table(*table1 ? TableKind::kTable1 : TableKind::kTable2,
                       table_max_n, parse_format(format_name), table_verify);
  } else if (*seq) {
    result = cmd_seq(seq_name, seq_max_n, parse_format(format_name));
  } else if (*verify) {
    result = cmd_verify(verify_options);
  } else if (*enumerate) {
    result = cmd_enumerate(enum_n, parse_class(class_name), enum_length);
  } else if (*bijection) {
    result = cmd_bijection(direction_name == "forward" ? Direction::kForward
                                                       : Direction::kInverse,
                           composition_text, sign);
  }
  out << result.out;
  err << result.err;
  return result.exit_code;
}

}  // namespace antipal::cli
