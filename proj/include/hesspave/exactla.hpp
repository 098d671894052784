#ifndef HESSPAVE_EXACTLA_HPP
#define HESSPAVE_EXACTLA_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesspave/combinatorics.hpp"
#include "hesspave/domain.hpp"
#include "hesspave/matrix.hpp"
#include "hesspave/paving.hpp"
#include "hesspave/polynomial.hpp"

namespace hesspave {

// Matrix entries are addressed 0-based, but every Coordinate, Permutation
// letter and Hessenberg argument below is 1-based.

/// X_lambda: a one at (l, r) for each pair l -> r adjacent in a row of R(e).
template <class D>
Matrix<D> nilpotent_matrix(const Composition& shape, const D& dom = D{}) {
  const Tableau base = base_filling(shape);
  Matrix<D> x(dom, shape.size(), shape.size());
  for (const auto& row : base.rows())
    for (std::size_t c = 0; c + 1 < row.size(); ++c) x(row[c] - 1, row[c + 1] - 1) = dom.one();
  return x;
}

/// True iff M_{ij} = 0 whenever i > h(j).
template <class D>
bool hessenberg_space_contains(const Matrix<D>& m, const HessenbergFunction& h) {
  if (!m.square() || m.rows() != h.size()) throw std::invalid_argument("matrix and h sizes differ");
  for (int j = 1; j <= m.cols(); ++j)
    for (int i = h(j) + 1; i <= m.rows(); ++i)
      if (!m.domain().is_zero(m(i - 1, j - 1))) return false;
  return true;
}

/// P_v^{-1} M P_v, i.e. entry (a, b) of the result is M_{v(a), v(b)}.
template <class D>
Matrix<D> permutation_conjugate(const Matrix<D>& m, const Permutation& v) {
  Matrix<D> out(m.domain(), m.rows(), m.cols());
  for (int a = 1; a <= m.rows(); ++a)
    for (int b = 1; b <= m.cols(); ++b) out(a - 1, b - 1) = m(v(a) - 1, v(b) - 1);
  return out;
}

/// Off-diagonal support of a unipotent upper-triangular subgroup.
class UnipotentPattern {
public:
  /// U^w: (a, b) with a < b and w^{-1}(a) > w^{-1}(b); size l(w).
  static UnipotentPattern schubert(const Permutation& w);
  /// U_i: row i above the diagonal.
  static UnipotentPattern row(int n, int i);
  /// U_0: the strictly upper part of the leading (n-1) block.
  static UnipotentPattern leading_block(int n);

  int dimension() const { return n_; }
  /// Positions in row-major order.
  const std::vector<Coordinate>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool contains(Coordinate c) const {
    return std::binary_search(positions_.begin(), positions_.end(), c);
  }

  /// Upper unitriangular with off-diagonal support inside the pattern.
  template <class D>
  bool admits(const Matrix<D>& u) const {
    if (!u.square() || u.rows() != n_ || !u.is_upper_unitriangular()) return false;
    for (int r = 1; r <= n_; ++r)
      for (int c = r + 1; c <= n_; ++c)
        if (!u.domain().is_zero(u(r - 1, c - 1)) && !contains({r, c})) return false;
    return true;
  }
  /// I plus values placed on the positions in row-major order.
  template <class D>
  Matrix<D> build(const D& dom, const std::vector<typename D::value_type>& values) const {
    if (values.size() != positions_.size()) throw std::invalid_argument("pattern value count mismatch");
    auto u = Matrix<D>::identity(dom, n_);
    for (std::size_t t = 0; t < values.size(); ++t) u(positions_[t].row - 1, positions_[t].col - 1) = values[t];
    return u;
  }

private:
  int n_ = 0;
  std::vector<Coordinate> positions_;
};

/// One matrix slot of a B_k(w) generator: entry (row, col) carries `key`.
struct BkSlot {
  Coordinate entry;
  Coordinate key;
};

/// Keys (w(k), w(l)) for l in inv^k_lambda(w), decreasing w(l).
std::vector<Coordinate> bk_coordinates(const Permutation& w, const Composition& shape, int k);
/// Every slot of the level-k generator. For each key x = (w(k), w(l)) the
/// chain walks m = 0, 1, ... steps left from w(l) and w(k) in R(e) and puts x
/// at (row = m steps left of w(k), col = m steps left of w(l)).
std::vector<BkSlot> bk_slots(const Permutation& w, const Composition& shape, int k);

/// The level-k generator with the given coordinate values. `coords` must be
/// keyed exactly by bk_coordinates(w, shape, k).
template <class D>
Matrix<D> bk_generator(const D& dom, const Permutation& w, const Composition& shape, int k,
                       const std::map<Coordinate, typename D::value_type>& coords) {
  const auto keys = bk_coordinates(w, shape, k);
  std::string bad;
  for (const auto& key : keys)
    if (!coords.count(key)) bad += " missing " + to_string(key);
  for (const auto& [key, _] : coords)
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) bad += " unexpected " + to_string(key);
  if (!bad.empty()) throw std::invalid_argument("bk_generator coordinates:" + bad);
  auto g = Matrix<D>::identity(dom, w.size());
  for (const auto& slot : bk_slots(w, shape, k)) {
    auto& cell = g(slot.entry.row - 1, slot.entry.col - 1);
    cell = dom.add(cell, coords.at(slot.key));
  }
  return g;
}

/// bk_generator with the variable x_{ab} in place of each key (a, b).
Matrix<PolynomialRing> bk_generator_symbolic(const Permutation& w, const Composition& shape, int k);

/// An ordered basis (v_1 | ... | v_n) with invertible matrix.
template <class D>
class Flag {
public:
  explicit Flag(Matrix<D> basis) : basis_(std::move(basis)) {
    if (!basis_.square()) throw std::invalid_argument("flag basis must be square");
    if (basis_.domain().is_zero(determinant(basis_))) throw std::invalid_argument("flag basis is singular");
  }
  static Flag standard(const D& dom, int n) { return Flag(Matrix<D>::identity(dom, n)); }

  int size() const { return basis_.rows(); }
  const Matrix<D>& matrix() const { return basis_; }
  /// v_i, 1-based.
  typename Matrix<D>::Vector vector(int i) const { return basis_.column(i - 1); }

private:
  Matrix<D> basis_;
};

/// D_w coordinates: descending k, then descending w(l).
std::vector<Coordinate> dw_coordinates(const Permutation& w, const Composition& shape);

/// g_n ... g_2 w E with symbolic generators. Throws unless R(w) is row-strict.
Flag<PolynomialRing> generic_flag(const Permutation& w, const Composition& shape);

/// True iff X v_i lies in Span(v_1, ..., v_{h(i)}) for all i. Decided by
/// Cramer's rule: the coefficient of v_j in X v_i is det(V with column j
/// replaced by X v_i) / det V, so every such determinant with j > h(i) must
/// vanish. Over the polynomial ring this quantifies over all coordinate
/// values.
template <class D>
bool verify_flag_membership(const Flag<D>& flag, const Matrix<D>& x, const HessenbergFunction& h) {
  const int n = flag.size();
  if (x.rows() != n || x.cols() != n || h.size() != n) throw std::invalid_argument("flag, matrix and h sizes differ");
  const auto& v = flag.matrix();
  const auto xv = x * v;
  for (int i = 1; i <= n; ++i) {
    const auto target = xv.column(i - 1);
    bool zero = true;
    for (const auto& t : target) zero = zero && v.domain().is_zero(t);
    if (zero) continue;
    for (int j = h(i) + 1; j <= n; ++j) {
      auto m = v;
      m.set_column(j - 1, target);
      if (!v.domain().is_zero(determinant(std::move(m)))) return false;
    }
  }
  return true;
}

/// Keys (w(k), w(l)) for Springer inversions that are not Hessenberg
/// inversions. Throws unless R(w) is h-strict.
std::vector<Coordinate> hess_zero_coordinates(const Permutation& w, const Composition& shape,
                                              const HessenbergFunction& h);
/// generic_flag with the hess_zero_coordinates set to zero.
Flag<PolynomialRing> generic_hessenberg_flag(const Permutation& w, const Composition& shape,
                                             const HessenbergFunction& h);
/// Substitutes zero for the listed coordinates in every entry.
Flag<PolynomialRing> substitute_zero(const Flag<PolynomialRing>& flag, const std::vector<Coordinate>& coords);

/// v_l - X v_r - sum over Springer inversions (t, l) of x_{w(t)w(l)} v_t for
/// the generic flag, r the right neighbour of l in R(w). Throws if l ends its
/// row.
std::vector<Polynomial> difference_residual(const Permutation& w, const Composition& shape, int l);

template <class D>
struct BruhatForm {
  Permutation w;
  Matrix<D> u;  ///< in U^w, with g B = u w B
};

/// Column reduction of an invertible g over a field. Columns are processed
/// left to right: earlier pivot rows are cleared in order using the already
/// reduced columns, then the bottom-most nonzero entry becomes the pivot,
/// scaled to 1, and w(j) is its row.
template <class D>
BruhatForm<D> bruhat_canonical_form(const Matrix<D>& g) {
  static_assert(D::is_field, "bruhat_canonical_form requires a field");
  if (!g.square()) throw std::invalid_argument("matrix is not square");
  const D& d = g.domain();
  const int n = g.rows();
  std::vector<typename Matrix<D>::Vector> cols;
  std::vector<int> pivots;
  for (int j = 0; j < n; ++j) {
    auto c = g.column(j);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      const auto f = c[pivots[t]];
      if (d.is_zero(f)) continue;
      for (int r = 0; r < n; ++r) c[r] = d.sub(c[r], d.mul(f, cols[t][r]));
    }
    int piv = -1;
    for (int r = n - 1; r >= 0 && piv < 0; --r)
      if (!d.is_zero(c[r])) piv = r;
    if (piv < 0) throw std::invalid_argument("matrix is singular");
    const auto s = d.div(d.one(), c[piv]);
    for (auto& e : c) e = d.mul(e, s);
    cols.push_back(std::move(c));
    pivots.push_back(piv);
  }
  std::vector<int> word(n);
  for (int j = 0; j < n; ++j) word[j] = pivots[j] + 1;
  BruhatForm<D> out{Permutation(word), Matrix<D>(d, n, n)};
  for (int j = 0; j < n; ++j) out.u.set_column(pivots[j], cols[j]);
  return out;
}

template <class D>
struct UnipotentFactors {
  int i = 0;  ///< w(n)
  Permutation v;
  Permutation y;
  Matrix<D> u_i;  ///< in U_i
  Matrix<D> u_0;  ///< in U^y, padded to size n
};

/// The factorization u w = u_i v u_0 y for u in U^w.
template <class D>
UnipotentFactors<D> factor_unipotent(const Matrix<D>& u, const Permutation& w) {
  const int n = w.size();
  if (!UnipotentPattern::schubert(w).admits(u)) throw std::invalid_argument("matrix is not in U^w");
  const D& d = u.domain();
  const auto [v, y] = factorize(w);
  const int i = w(n);
  std::vector<typename D::value_type> c(n + 1, d.zero());
  auto u_i = Matrix<D>::identity(d, n);
  auto u_i_inv = Matrix<D>::identity(d, n);
  for (int m = i + 1; m <= n; ++m) {
    auto s = u(i - 1, m - 1);
    for (int j = i + 1; j < m; ++j) s = d.sub(s, d.mul(c[j], u(j - 1, m - 1)));
    c[m] = s;
    u_i(i - 1, m - 1) = s;
    u_i_inv(i - 1, m - 1) = d.neg(s);
  }
  auto u_0 = permutation_conjugate(u_i_inv * u, v);
  return {i, v, y, std::move(u_i), std::move(u_0)};
}

template <class D>
struct BnSplit {
  Matrix<D> u_i;
  Matrix<D> b_n;
};

/// g_n = u_i b_n: u_i keeps row w(n) of g_n, b_n = u_i^{-1} g_n.
template <class D>
BnSplit<D> bn_split(const Matrix<D>& g_n, const Permutation& w, const Composition& shape) {
  const int n = w.size();
  if (shape.size() != n || g_n.rows() != n || !g_n.is_upper_unitriangular())
    throw std::invalid_argument("matrix is not a level-n generator");
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n, false));
  for (const auto& slot : bk_slots(w, shape, n)) allowed[slot.entry.row - 1][slot.entry.col - 1] = true;
  const D& d = g_n.domain();
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (!allowed[r][c] && !d.is_zero(g_n(r, c))) throw std::invalid_argument("matrix is not a level-n generator");
  const int i = w(n);
  auto u_i = Matrix<D>::identity(d, n);
  auto u_i_inv = Matrix<D>::identity(d, n);
  for (int c = i; c < n; ++c) {
    u_i(i - 1, c) = g_n(i - 1, c);
    u_i_inv(i - 1, c) = d.neg(g_n(i - 1, c));
  }
  return {u_i, u_i_inv * g_n};
}

template <class D>
struct ProjectedFlag {
  Permutation w;
  Permutation y;  ///< restricted to [n-1]
  UnipotentFactors<D> factors;
  Flag<D> flag;  ///< u_0 y E' in dimension n - 1
};

/// pi : C_w -> C_y. Brings the flag to the form u w E, factors u w =
/// u_i v u_0 y and returns u_0 y E' on the first n - 1 coordinates.
template <class D>
ProjectedFlag<D> project_cell(const Flag<D>& f) {
  const int n = f.size();
  if (n < 1) throw std::invalid_argument("cannot project an empty flag");
  auto bf = bruhat_canonical_form(f.matrix());
  auto fac = factor_unipotent(bf.u, bf.w);
  std::vector<int> yw(fac.y.word().begin(), fac.y.word().end() - 1);
  Permutation y(yw);
  const auto& d = f.matrix().domain();
  auto u0 = fac.u_0.block(0, 0, n - 1, n - 1);
  Flag<D> out(u0 * Matrix<D>::permutation(d, y));
  return {bf.w, y, std::move(fac), std::move(out)};
}

/// The level-n generator whose row w(n) matches u_i. Used to strip u_i from a
/// point of C_w before projecting.
template <class D>
Matrix<D> level_n_lift(const Matrix<D>& u_i, const Permutation& w, const Composition& shape) {
  const int n = w.size();
  const int i = w(n);
  std::map<Coordinate, typename D::value_type> coords;
  for (const auto& key : bk_coordinates(w, shape, n)) coords[key] = u_i(i - 1, key.col - 1);
  return bk_generator(u_i.domain(), w, shape, n, coords);
}

/// Reduces each polynomial entry mod p under an assignment of its variables.
Matrix<PrimeField> evaluate_mod(const Matrix<PolynomialRing>& m, const PrimeField& field,
                                const std::map<Coordinate, std::uint32_t>& values);

}  // namespace hesspave

#endif
