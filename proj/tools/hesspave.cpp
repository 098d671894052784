#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hesspave/report.hpp"

namespace {

struct Options {
  std::string lambda;
  std::string h;
  std::optional<int> q;
  int budget_bits = hesspave::kDefaultBudgetBits;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string format = "json";
  std::string out;
  std::optional<std::string> w;
  std::optional<std::string> tableau;
  std::optional<std::string> trace;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--lambda", o.lambda, "Composition, comma separated (e.g. 3,2,1)");
  sub->add_option("--h", o.h, "Hessenberg function: comma list, springer or shift:K");
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  sub->add_option("--workers", o.workers, "Worker threads (default HESSPAVE_WORKERS or 1)");
}

void add_oracle(CLI::App* sub, Options& o) {
  sub->add_option("--q", o.q, "Prime field size, at most 16");
  sub->add_option("--budget-bits", o.budget_bits, "Abort when log2 of the points to visit exceeds this");
  sub->add_option("--seed", o.seed, "Seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine pavings of type A Hessenberg varieties"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(HESSPAVE_VERSION));
  app.require_subcommand(1);
  Options o;

  auto* cells = app.add_subcommand("cells", "List the affine cells");
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial from cell dimensions");
  auto* r0 = app.add_subcommand("r0", "The zero-dimensional cell");
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  auto* flag = app.add_subcommand("generic-flag", "Symbolic generic flag of one cell");
  auto* count = app.add_subcommand("count", "Brute-force point count over F_q");
  auto* profile = app.add_subcommand("profile", "Inversion profile d(i,j) of a filling");
  for (auto* sub : {cells, poincare, r0, verify, flag, count, profile}) add_common(sub, o);
  add_oracle(verify, o);
  add_oracle(count, o);
  flag->add_option("--w", o.w, "Permutation in one-line notation, comma separated");
  profile->add_option("--w", o.w, "Permutation; the filling is R(w)");
  profile->add_option("--tableau", o.tableau, "Filling, rows separated by '/'");
  profile->add_option("--trace", o.trace, "Column pair i,j to sort step by step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hesspave::kExitInputError;
  }

  hesspave::RunConfig cfg;
  const auto* chosen = app.get_subcommands().front();
  cfg.command = hesspave::parse_command(chosen->get_name());
  cfg.format = hesspave::parse_format(o.format);
  if (!o.lambda.empty()) cfg.lambda_spec = o.lambda;
  cfg.h_spec = o.h;
  cfg.q = o.q;
  cfg.budget_bits = o.budget_bits;
  cfg.seed = o.seed;
  cfg.workers = o.workers.value_or(hesspave::default_workers());
  cfg.w_spec = o.w;
  cfg.tableau_spec = o.tableau;
  cfg.trace_spec = o.trace;

  const auto result = hesspave::run_command(cfg);

  if (o.out.empty()) {
    (result.exit_code == hesspave::kExitInputError ? std::cerr : std::cout) << result.body;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return hesspave::kExitInputError;
    }
    file << result.body;
  }
  return result.exit_code;
}
