#ifndef HESSPAVE_MATRIX_HPP
#define HESSPAVE_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hesspave/combinatorics.hpp"
#include "hesspave/domain.hpp"

namespace hesspave {

/// Dense matrix over a scalar domain. Indices are 0-based here; the free
/// helpers taking Permutation or Coordinate arguments speak 1-based values.
template <class D>
class Matrix {
public:
  using value_type = typename D::value_type;
  using Vector = std::vector<value_type>;

  Matrix() = default;
  Matrix(D dom, int rows, int cols)
      : dom_(std::move(dom)), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, dom_.zero()) {}

  static Matrix identity(const D& dom, int n) {
    Matrix m(dom, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
  }
  /// Column j is e_{w(j)}.
  static Matrix permutation(const D& dom, const Permutation& w) {
    Matrix m(dom, w.size(), w.size());
    for (int j = 1; j <= w.size(); ++j) m(w(j) - 1, j - 1) = dom.one();
    return m;
  }
  static Matrix from_columns(const D& dom, const std::vector<Vector>& cols) {
    const int n = cols.empty() ? 0 : static_cast<int>(cols.front().size());
    Matrix m(dom, n, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (static_cast<int>(cols[j].size()) != n) throw std::invalid_argument("ragged columns");
      for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const D& domain() const { return dom_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  value_type& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const value_type& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vector column(int c) const {
    Vector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(int c, const Vector& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix m(dom_, nr, nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!dom_.is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return square() && *this == identity(dom_, rows_); }
  bool is_upper_unitriangular() const {
    if (!square()) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c <= r; ++c)
        if (!dom_.equal((*this)(r, c), c == r ? dom_.one() : dom_.zero())) return false;
    return true;
  }

  Vector apply(const Vector& v) const {
    check(static_cast<int>(v.size()) == cols_, "matrix-vector size mismatch");
    Vector out(rows_, dom_.zero());
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (!dom_.is_zero((*this)(r, c)) && !dom_.is_zero(v[c]))
          out[r] = dom_.add(out[r], dom_.mul((*this)(r, c), v[c]));
    return out;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    check(x.cols_ == y.rows_, "matrix product size mismatch");
    const D& d = x.dom_;
    Matrix out(d, x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r)
      for (int k = 0; k < x.cols_; ++k) {
        const auto& xv = x(r, k);
        if (d.is_zero(xv)) continue;
        for (int c = 0; c < y.cols_; ++c)
          if (!d.is_zero(y(k, c))) out(r, c) = d.add(out(r, c), d.mul(xv, y(k, c)));
      }
    return out;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    check(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix sum size mismatch");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.dom_.add(x.a_[i], y.a_[i]);
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    check(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix difference size mismatch");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.dom_.sub(x.a_[i], y.a_[i]);
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!x.dom_.equal(x.a_[i], y.a_[i])) return false;
    return true;
  }

  template <class F>
  auto map(const F& f) const {
    using R = decltype(f(std::declval<const value_type&>()));
    std::vector<R> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(f(x));
    return out;
  }

  /// Rows of entries, one line per row, entries separated by tabs.
  std::string to_string() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (c) s += '\t';
        s += dom_.to_string((*this)(r, c));
      }
      s += '\n';
    }
    return s;
  }

private:
  static void check(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  }

  D dom_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<value_type> a_;
};

/// Fraction-free (Bareiss) determinant; exact in every domain.
template <class D>
typename D::value_type determinant(Matrix<D> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const D& d = m.domain();
  const int n = m.rows();
  if (n == 0) return d.one();
  bool negate = false;
  auto prev = d.one();
  for (int k = 0; k + 1 < n; ++k) {
    if (d.is_zero(m(k, k))) {
      int swap = -1;
      for (int r = k + 1; r < n && swap < 0; ++r)
        if (!d.is_zero(m(r, k))) swap = r;
      if (swap < 0) return d.zero();
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto t = d.sub(d.mul(m(i, j), m(k, k)), d.mul(m(i, k), m(k, j)));
        m(i, j) = d.div(t, prev);
      }
      m(i, k) = d.zero();
    }
    prev = m(k, k);
  }
  auto det = m(n - 1, n - 1);
  return negate ? d.neg(det) : det;
}

/// Gauss-Jordan inverse over a field; nullopt when singular.
template <class D>
std::optional<Matrix<D>> inverse(const Matrix<D>& m) {
  static_assert(D::is_field, "inverse requires a field");
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const D& d = m.domain();
  const int n = m.rows();
  Matrix<D> a = m;
  Matrix<D> inv = Matrix<D>::identity(d, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n && piv < 0; ++r)
      if (!d.is_zero(a(r, c))) piv = r;
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int k = 0; k < n; ++k) {
        std::swap(a(c, k), a(piv, k));
        std::swap(inv(c, k), inv(piv, k));
      }
    const auto s = d.div(d.one(), a(c, c));
    for (int k = 0; k < n; ++k) {
      a(c, k) = d.mul(a(c, k), s);
      inv(c, k) = d.mul(inv(c, k), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || d.is_zero(a(r, c))) continue;
      const auto f = a(r, c);
      for (int k = 0; k < n; ++k) {
        a(r, k) = d.sub(a(r, k), d.mul(f, a(c, k)));
        inv(r, k) = d.sub(inv(r, k), d.mul(f, inv(c, k)));
      }
    }
  }
  return inv;
}

/// Inverse of an upper unitriangular matrix over any ring.
template <class D>
Matrix<D> unitriangular_inverse(const Matrix<D>& u) {
  if (!u.is_upper_unitriangular()) throw std::invalid_argument("matrix is not upper unitriangular");
  const D& d = u.domain();
  const int n = u.rows();
  Matrix<D> inv = Matrix<D>::identity(d, n);
  for (int c = 0; c < n; ++c)
    for (int r = c - 1; r >= 0; --r) {
      auto s = d.zero();
      for (int k = r + 1; k <= c; ++k)
        if (!d.is_zero(u(r, k)) && !d.is_zero(inv(k, c))) s = d.add(s, d.mul(u(r, k), inv(k, c)));
      inv(r, c) = d.neg(s);
    }
  return inv;
}

/// Inverse of a matrix that is unitriangular up to a column permutation
/// (the shape u*w), over any ring.
template <class D>
Matrix<D> permuted_unitriangular_inverse(const Matrix<D>& uw, const Permutation& w) {
  const D& d = uw.domain();
  auto u = uw * Matrix<D>::permutation(d, w.inverse());
  return Matrix<D>::permutation(d, w.inverse()) * unitriangular_inverse(u);
}

/// Rank over a field.
template <class D>
int rank(Matrix<D> m) {
  static_assert(D::is_field, "rank requires a field");
  const D& d = m.domain();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows() && piv < 0; ++i)
      if (!d.is_zero(m(i, c))) piv = i;
    if (piv < 0) continue;
    for (int k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(piv, k));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (d.is_zero(m(i, c))) continue;
      const auto f = d.div(m(i, c), m(r, c));
      for (int k = c; k < m.cols(); ++k) m(i, k) = d.sub(m(i, k), d.mul(f, m(r, k)));
    }
    ++r;
  }
  return r;
}

}  // namespace hesspave

#endif
