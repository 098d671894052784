#ifndef HESSPAVE_VERIFY_HPP
#define HESSPAVE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hesspave/combinatorics.hpp"
#include "hesspave/oracle.hpp"

namespace hesspave {

struct CheckFailure {
  std::string invariant;
  std::string witness;
};

/// Outcome of one invariant suite: the number of checks performed and the
/// first failure, if any. A skipped suite carries the reason.
struct SuiteResult {
  std::string name;
  long long checks = 0;
  std::optional<CheckFailure> failure;
  std::optional<std::string> skipped;
  bool passed() const { return !failure.has_value(); }
};

/// Permutation and tableau conventions over all of S_n for one shape.
SuiteResult combinatorics_suite(const Composition& shape);

/// Inversion-set inclusions, monotonicity in h, cell enumeration against a
/// brute-force filter of S_n, Poincare totals, the one-box deletion
/// recursion, and the Mahonian distribution for one-column shapes.
SuiteResult paving_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs);

/// Standardization keeps h-strictness. Partitions only.
SuiteResult standardization_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs);
/// Maximal cells are standard and profiles grow under standardization.
/// Partitions only.
SuiteResult maximal_cells_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs);
/// A nonempty variety has exactly one zero-dimensional cell, whose tableau is
/// r0_tableau. Partitions only.
SuiteResult connectedness_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs);

/// Exact polynomial identities for the generators and generic flags of every
/// row-strict R(w): group law and commutativity, stabilization and kernel
/// preservation, the commutator formula, conjugation by v onto the level-y
/// generators, the level-n splitting, the difference formula and Springer
/// membership. With `hs` nonempty also checks that the zero coordinates cut
/// out the Hessenberg variety inside D_w exactly.
SuiteResult symbolic_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs = {});

struct OracleSuiteOptions {
  FieldSpec field{2};
  int budget_bits = kDefaultBudgetBits;
  int workers = 1;
  bool cell_checks = true;        ///< D_w equality, zero structure, projection
  int conjugation_trials = 2;     ///< 0 disables; only run for n <= 4
  std::uint64_t seed = 1;
};

/// Point counts against the paving prediction, plus the cell-level checks.
/// Throws BudgetExceeded.
SuiteResult oracle_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs,
                         const OracleSuiteOptions& options);

struct VerifyOptions {
  Composition shape;
  std::optional<HessenbergFunction> h;  ///< all admissible h when absent
  OracleSuiteOptions oracle;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::optional<std::string> budget_error;
  bool passed() const;
  const SuiteResult* first_failure() const;
};

/// Runs every suite scoped to the options. A budget overrun stops the run
/// and is reported with the suites completed so far.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace hesspave

#endif
