#ifndef HESSPAVE_COMBINATORICS_HPP
#define HESSPAVE_COMBINATORICS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hesspave {

// Values (tableau entries, permutation letters, Hessenberg arguments) and box
// positions are 1-based throughout the public interface.

/// Row lengths of a diagram, top row first. Zero parts are dropped on
/// construction, so an empty composition (n = 0) is possible and arises when
/// the last box of a one-box tableau is deleted.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int row_length(int row) const { return parts_.at(row - 1); }
  int num_columns() const;
  bool empty() const { return n_ == 0; }
  bool is_partition() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Nondecreasing h : [n] -> [n] with h(i) < i, stored as (h(1), ..., h(n)).
class HessenbergFunction {
public:
  HessenbergFunction() = default;
  /// Throws std::invalid_argument listing every violated constraint.
  explicit HessenbergFunction(std::vector<int> values);

  /// (0, 1, ..., n-1), the Springer fiber case.
  static HessenbergFunction springer(int n);
  /// h(i) = max(0, i - shift), shift >= 1.
  static HessenbergFunction shifted(int n, int shift);
  /// Every admissible function for the given n, in lexicographic order.
  static std::vector<HessenbergFunction> all(int n);
  /// Empty when the values are admissible.
  static std::vector<std::string> violations(std::span<const int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  bool is_springer() const;

  std::string to_string() const;

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
  std::vector<int> values_;
};

/// Pointwise order h1(i) <= h2(i). Throws on size mismatch.
bool h_leq(const HessenbergFunction& h1, const HessenbergFunction& h2);

/// A permutation of [n] in one-line notation: word()[i-1] = w(i).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// All of S_n in lexicographic order of the one-line word.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  /// Bruhat length, the number of inversions.
  int length() const;
  bool is_identity() const;

  /// Composition (v * y)(i) = v(y(i)).
  friend Permutation operator*(const Permutation& v, const Permutation& y);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

  std::string to_string() const;

private:
  std::vector<int> word_;
};

struct BoxPosition {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const BoxPosition&, const BoxPosition&) = default;
};

/// An immutable filling of a composition diagram by 1..n, each once.
class Tableau {
public:
  Tableau() = default;
  /// Rows top to bottom. Throws std::invalid_argument unless the entries are
  /// exactly {1, ..., n}. Empty rows are dropped.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Composition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int num_rows() const { return shape_.num_rows(); }
  int num_columns() const { return shape_.num_columns(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  std::optional<int> entry(BoxPosition p) const;
  BoxPosition position(int value) const { return index_[value - 1]; }
  /// Entry directly right of `value`, if its row continues.
  std::optional<int> right_of(int value) const;
  std::optional<int> left_of(int value) const;
  bool ends_row(int value) const { return !right_of(value).has_value(); }
  /// Entries of column `col`, top to bottom, skipping rows that are too short.
  std::vector<int> column(int col) const;

  /// One row per line, entries separated by single spaces.
  std::string to_text() const;
  static Tableau from_text(const std::string& text);

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

private:
  std::vector<std::vector<int>> rows_;
  Composition shape_;
  std::vector<BoxPosition> index_;
};

/// An inversion (k, l) with k > l, listed larger entry first.
struct InversionPair {
  int high = 0;
  int low = 0;
  friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

/// R(e): columns left to right, each filled bottom to top.
Tableau base_filling(const Composition& shape);
/// R(w): the box holding i in R(e) holds w^{-1}(i).
Tableau tableau_of(const Permutation& w, const Composition& shape);
/// Inverse of tableau_of: w(j) is the base label of the box holding j.
Permutation permutation_of(const Tableau& t);

bool is_row_strict(const Tableau& t);
/// l <= h(r) whenever l sits directly left of r. Throws on size mismatch.
bool is_h_strict(const Tableau& t, const HessenbergFunction& h);
/// Rows increase left to right and columns increase top to bottom.
bool is_standard(const Tableau& t);
/// Sorts every column increasingly downward. Throws unless row-strict.
Tableau standardize(const Tableau& t);

/// inv(w) sorted by decreasing high, then decreasing low.
std::vector<InversionPair> inversions(const Permutation& w);

struct Factorization {
  Permutation v;  ///< v(n) = w(n), other letters increasing
  Permutation y;  ///< y(n) = n, same relative order as w
};
/// w = v * y with l(w) = l(v) + l(y).
Factorization factorize(const Permutation& w);

struct BoxDeletion {
  Composition shape;
  Tableau tableau;
};
/// Removes the box holding n. Throws unless n ends its row.
BoxDeletion delete_last_box(const Tableau& t);

/// Partitions of n, largest first (lexicographically decreasing).
std::vector<Composition> partitions(int n);
/// Strict compositions of n (all parts positive).
std::vector<Composition> compositions(int n);

std::string join_ints(std::span<const int> values, const char* sep = ",");

}  // namespace hesspave

#endif
