#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "antipal/counting.hpp"

namespace antipal::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

enum class Format { kTable, kCsv, kJson, kBfile };

/// "table", "csv", "json" or "bfile"; throws std::invalid_argument.
Format parse_format(const std::string& name);

/// What a command printed and how it wants the process to exit. Commands
/// build their whole output before returning, so nothing is interleaved.
struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

enum class TableKind { kTable1, kTable2 };

/// Largest brute-force size used by `--verify` and `verify --max-brute`.
inline constexpr int kBruteEnvelope = 24;
/// Largest n accepted by `enumerate`.
inline constexpr int kEnumerateEnvelope = 28;

/**
 * table1: n, ac0, ac1, ac, rac0, rac1, rac for n = 0..max_n.
 * table2: ac(n, s) and rac(n, s) for n = 0..max_n and every length s with
 * floor(3s/2) <= max_n.
 * With `verify`, rows up to kBruteEnvelope are recomputed by exhaustive
 * enumeration first; any mismatch suppresses the table and exits 1.
 */
CommandResult cmd_table(TableKind which, int max_n, Format format, bool verify,
                        const CountingFormulas& formulas = {});

/// Sequence a(0..max_n). Names: ac0 ac1 ac rac0 rac1 rac trib fib
/// kbonacci:K.
CommandResult cmd_seq(const std::string& name, int max_n, Format format);

struct VerifyOptions {
  int max_n = 60;
  int max_brute = 20;
  /// Replaceable so tests can check that a broken formula is caught.
  CountingFormulas formulas;
};

/// Runs every cross-check and prints one summary line per check.
CommandResult cmd_verify(const VerifyOptions& options);

enum class CompositionClass { kAll, kPalindromic, kAntipalindromic, kReduced };

CompositionClass parse_class(const std::string& name);

CommandResult cmd_enumerate(int n, CompositionClass cls,
                            std::optional<int> length);

enum class Direction { kForward, kInverse };

CommandResult cmd_bijection(Direction direction, const std::string& input,
                            const std::optional<std::string>& sign);

/// Parses a full command line (args excludes the program name), dispatches
/// and writes the result. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace antipal::cli
