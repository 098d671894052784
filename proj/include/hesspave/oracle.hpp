#ifndef HESSPAVE_ORACLE_HPP
#define HESSPAVE_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesspave/combinatorics.hpp"

namespace hesspave {

// Brute-force point counts over small prime fields. Field arithmetic here is
// self-contained (lookup tables) so the counts are independent of the exact
// linear algebra used by the paving side.

/// Prime q <= 16.
struct FieldSpec {
  int q = 2;
  FieldSpec() = default;
  explicit FieldSpec(int q);
};

/// Thrown when log2 of the number of points to visit exceeds the budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, double bits, int budget)
      : std::runtime_error(what), bits_(bits), budget_(budget) {}
  double bits() const { return bits_; }
  int budget() const { return budget_; }

private:
  double bits_;
  int budget_;
};

inline constexpr int kDefaultBudgetBits = 24;
inline constexpr int kMaxOracleDimension = 8;

/// Dense n x n matrix with entries in [0, q), row-major.
struct SmallMatrix {
  int n = 0;
  std::vector<int> a;
  SmallMatrix() = default;
  explicit SmallMatrix(int n) : n(n), a(static_cast<std::size_t>(n) * n, 0) {}
  int& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  int operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
};

SmallMatrix small_nilpotent(const Composition& shape, int q);

struct CellCount {
  Permutation w;
  long long count = 0;
  long long predicted = 0;  ///< q^dim for a paving cell, else 0
  int dim = -1;             ///< -1 when R(w) is not h-strict
  bool match = false;
};

struct CountReport {
  int q = 2;
  HessenbergFunction h;
  std::vector<CellCount> per_cell;  ///< every w in S_n, lexicographic
  long long total = 0;
  long long predicted = 0;
  bool match = false;
};

/// Points u in U^w(F_q) with u w E in Hess(X_lambda, h).
long long cell_point_count(const Permutation& w, const Composition& shape, const HessenbergFunction& h,
                           FieldSpec field, int budget_bits = kDefaultBudgetBits);

/// Per-cell and total counts compared with the paving prediction.
CountReport variety_point_count(const Composition& shape, const HessenbergFunction& h, FieldSpec field,
                                int budget_bits = kDefaultBudgetBits, int workers = 1);
/// One enumeration pass serving several Hessenberg functions.
std::vector<CountReport> variety_point_counts(const Composition& shape, const std::vector<HessenbergFunction>& hs,
                                              FieldSpec field, int budget_bits = kDefaultBudgetBits,
                                              int workers = 1);

/// |Hess(X, h)(F_q)| for an arbitrary X, summed over all Schubert cells.
long long hessenberg_point_count(const SmallMatrix& x, const HessenbergFunction& h, FieldSpec field,
                                 int budget_bits = kDefaultBudgetBits, int workers = 1);

struct DwComparison {
  bool equal = false;
  long long dw_points = 0;       ///< distinct flags reached by the D_w parametrization
  long long assignments = 0;     ///< q^{d_w}
  long long cell_points = 0;     ///< |C_w cap B^X (F_q)| by brute force
  bool injective() const { return dw_points == assignments; }
};

/// D_w(F_q) against the brute-force C_w cap B^{X_lambda}(F_q). Requires R(w)
/// row-strict.
DwComparison dw_compare(const Permutation& w, const Composition& shape, FieldSpec field,
                        int budget_bits = kDefaultBudgetBits);
/// Set equality plus injectivity of the parametrization.
bool dw_equals_cell(const Permutation& w, const Composition& shape, FieldSpec field,
                    int budget_bits = kDefaultBudgetBits);

/// For every point u w E of C_w cap B^X: writing u w = u_i v u_0 y, row i of
/// u_i vanishes outside columns that end a row of R(e).
bool zeros_structure_check(const Permutation& w, const Composition& shape, FieldSpec field,
                           int budget_bits = kDefaultBudgetBits);

/// Projection pi : C_w -> C_y against X_{lambda'}, lambda' = shape minus the
/// box of n in R(w): (a) for points with u_i = I, F in B^X iff pi(F) in
/// B^{X_{lambda'}}; (b) for every F in B^X, pi(g^{-1} F) lies in
/// B^{X_{lambda'}} where g is the level-n generator matching u_i. Requires
/// R(w) row-strict.
bool projection_check(const Permutation& w, const Composition& shape, FieldSpec field,
                      int budget_bits = kDefaultBudgetBits);

struct ConjugationReport {
  std::uint64_t seed = 0;
  long long base_count = 0;
  std::vector<long long> trial_counts;
  bool invariant = false;
};

/// Point counts of Hess(g^{-1} X_lambda g, h) for random g in GL_n(F_q).
ConjugationReport conjugation_invariance(const Composition& shape, const HessenbergFunction& h, FieldSpec field,
                                         int trials, std::uint64_t seed, int budget_bits = kDefaultBudgetBits,
                                         int workers = 1);

/// g^{-1} X g over F_q; throws if g is singular.
SmallMatrix small_conjugate(const SmallMatrix& x, const SmallMatrix& g, int q);

}  // namespace hesspave

#endif
