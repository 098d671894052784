#ifndef HESSPAVE_REPORT_HPP
#define HESSPAVE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hesspave/combinatorics.hpp"
#include "hesspave/oracle.hpp"

namespace hesspave {

inline constexpr int kSchemaVersion = 1;

enum class Command { cells, poincare, r0, verify, generic_flag, count, profile };
enum class OutputFormat { json, csv, text };

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2, kExitBudgetExceeded = 3 };

/// Invalid user input; carries every problem found, not only the first.
class InputError : public std::invalid_argument {
public:
  explicit InputError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

private:
  std::vector<std::string> problems_;
};

struct RunConfig {
  Command command = Command::cells;
  std::optional<Composition> lambda;
  /// Raw --lambda text, parsed when `lambda` is unset.
  std::optional<std::string> lambda_spec;
  /// Raw --h text: a comma list, "springer" or "shift:K". Empty selects the
  /// command default (Springer, or every h for verify).
  std::string h_spec;
  std::optional<int> q;
  int budget_bits = kDefaultBudgetBits;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::json;
  int workers = 1;
  std::optional<std::string> w_spec;        ///< generic-flag, profile
  std::optional<std::string> tableau_spec;  ///< profile; rows split by '/'
  std::optional<std::string> trace_spec;    ///< profile; "i,j"
};

Command parse_command(const std::string& name);
std::string command_name(Command c);
OutputFormat parse_format(const std::string& name);

/// Comma-separated positive integers. Throws InputError.
Composition parse_composition(const std::string& text);
/// "springer", "shift:K" or a comma list of n values. Throws InputError
/// listing every violated constraint.
HessenbergFunction parse_hessenberg(const std::string& text, int n);
/// One-line word, comma separated, optionally in brackets.
Permutation parse_permutation(const std::string& text);
/// Rows separated by '/' or newlines, entries by spaces or commas.
Tableau parse_tableau(const std::string& text);
/// Workers from HESSPAVE_WORKERS, or 1.
int default_workers();

struct CommandOutput {
  int exit_code = kExitOk;
  std::string body;  ///< rendered in the requested format, newline terminated
};

/// Validates the config and runs one command. Input problems produce exit
/// code 2 with an error report rather than an exception.
CommandOutput run_command(const RunConfig& config);

}  // namespace hesspave

#endif
