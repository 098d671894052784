#ifndef HESSPAVE_PAVING_HPP
#define HESSPAVE_PAVING_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hesspave/combinatorics.hpp"

namespace hesspave {

/// A set of inversion pairs (k, l), k > l, kept sorted by decreasing k then
/// decreasing l. level(k) gives the slice inv^k = {l : (k, l) in the set}.
class InversionSet {
public:
  InversionSet() = default;
  explicit InversionSet(std::vector<InversionPair> pairs);

  const std::vector<InversionPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(InversionPair p) const;
  bool is_subset_of(const InversionSet& other) const;
  /// Smaller entries l with (k, l) present, increasing.
  std::vector<int> level(int k) const;
  /// Pairs of this set missing from `other`.
  InversionSet minus(const InversionSet& other) const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

private:
  std::vector<InversionPair> pairs_;
};

/// Hessenberg inversions of a filling: (k, l) with k > l, k either below l in
/// the same column or anywhere in a column strictly left of l, and k <= h(r)
/// for the entry r directly right of l. When l ends its row the second
/// condition holds vacuously. (These pairs are also called Hessenberg
/// dimension pairs.)
InversionSet hessenberg_inversions(const Tableau& t, const HessenbergFunction& h);
InversionSet hessenberg_inversions(const Permutation& w, const Composition& shape,
                                   const HessenbergFunction& h);
InversionSet springer_inversions(const Permutation& w, const Composition& shape);

struct CellDescriptor {
  Permutation w;
  Tableau tableau;
  InversionSet hess_inversions;
  InversionSet springer_inversions;
  int dim = 0;
};

/// h-strict fillings RS_h(shape), ordered lexicographically by the one-line
/// word of the corresponding permutation.
std::vector<Tableau> h_strict_tableaux(const Composition& shape, const HessenbergFunction& h,
                                       int workers = 1);

/// One affine cell per h-strict filling, in lexicographic order of w. An empty
/// result means the Hessenberg variety is empty.
std::vector<CellDescriptor> enumerate_cells(const Composition& shape, const HessenbergFunction& h,
                                            int workers = 1);

struct PoincareData {
  /// coeffs[k] = number of cells of dimension k.
  std::vector<long long> coeffs;
  long long total() const;
  /// Ranks of H_c^{2k}; odd-degree ranks vanish.
  const std::vector<long long>& betti_even() const { return coeffs; }
};

PoincareData poincare(const Composition& shape, const HessenbergFunction& h, int workers = 1);
PoincareData poincare(const std::vector<CellDescriptor>& cells);
std::vector<long long> betti_numbers(const Composition& shape, const HessenbergFunction& h);

/// Greedy filling of the columns right to left, each top to bottom, with the
/// largest unused value that keeps the filling h-strict. nullopt when some box
/// cannot be filled. For partitions this is the unique h-strict filling with
/// no Hessenberg inversions.
std::optional<Tableau> r0_tableau(const Composition& shape, const HessenbergFunction& h);

/// d(i, j), i <= j: Hessenberg inversions with k in column i and l in column j.
class InversionProfile {
public:
  InversionProfile() = default;
  explicit InversionProfile(int columns);

  int columns() const { return columns_; }
  int at(int i, int j) const;
  void add(int i, int j, int count = 1);
  int total() const;
  const std::map<std::pair<int, int>, int>& entries() const { return counts_; }

  friend bool operator==(const InversionProfile&, const InversionProfile&) = default;

private:
  int columns_ = 0;
  std::map<std::pair<int, int>, int> counts_;
};

/// Throws std::invalid_argument unless t is h-strict.
InversionProfile inversion_profile(const Tableau& t, const HessenbergFunction& h);

/// The columns (i, j, j+1) of a tableau lifted out as a grid, with blanks for
/// missing boxes. When i == j only columns (i, i+1) are kept.
struct ColumnWindow {
  int i = 0;
  int j = 0;
  std::vector<std::vector<std::optional<int>>> grid;  // rows x window columns

  bool two_column() const { return i == j; }
  std::string to_text() const;
  friend bool operator==(const ColumnWindow&, const ColumnWindow&) = default;
};

struct SortStep {
  ColumnWindow window;
  int pairs = 0;       ///< d(i, j) counted inside the window
  bool h_strict = false;  ///< h-strictness of the adjacent window columns
};

/// Bubble-sorts column i (dragging columns j and j+1 along), then column j
/// (dragging j+1), then column j+1, treating blanks as +infinity. The trace
/// starts with the unsorted window and records one step per swap.
std::vector<SortStep> column_sort_trace(const Tableau& t, int i, int j, const HessenbergFunction& h);

/// d(i, j) of a window under h.
int window_pairs(const ColumnWindow& w, const HessenbergFunction& h);

}  // namespace hesspave

#endif
