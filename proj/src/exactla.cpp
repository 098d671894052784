#include "hesspave/exactla.hpp"

#include <algorithm>

namespace hesspave {

UnipotentPattern UnipotentPattern::schubert(const Permutation& w) {
  UnipotentPattern p;
  p.n_ = w.size();
  const Permutation inv = w.inverse();
  for (int a = 1; a <= p.n_; ++a)
    for (int b = a + 1; b <= p.n_; ++b)
      if (inv(a) > inv(b)) p.positions_.push_back({a, b});
  return p;
}

UnipotentPattern UnipotentPattern::row(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("row index out of range");
  UnipotentPattern p;
  p.n_ = n;
  for (int b = i + 1; b <= n; ++b) p.positions_.push_back({i, b});
  return p;
}

UnipotentPattern UnipotentPattern::leading_block(int n) {
  UnipotentPattern p;
  p.n_ = n;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) p.positions_.push_back({a, b});
  return p;
}

namespace {

void check_level(const Permutation& w, const Composition& shape, int k) {
  if (w.size() != shape.size()) throw std::invalid_argument("permutation and shape sizes differ");
  if (k < 2 || k > w.size()) throw std::invalid_argument("generator level out of range");
}

}  // namespace

std::vector<Coordinate> bk_coordinates(const Permutation& w, const Composition& shape, int k) {
  check_level(w, shape, k);
  std::vector<Coordinate> keys;
  for (int l : springer_inversions(w, shape).level(k)) keys.push_back({w(k), w(l)});
  std::sort(keys.begin(), keys.end(), [](Coordinate a, Coordinate b) { return a.col > b.col; });
  return keys;
}

std::vector<BkSlot> bk_slots(const Permutation& w, const Composition& shape, int k) {
  const Tableau base = base_filling(shape);
  std::vector<BkSlot> slots;
  for (const auto& key : bk_coordinates(w, shape, k)) {
    std::optional<int> col = key.col;
    std::optional<int> row = key.row;
    while (col && row) {
      slots.push_back({{*row, *col}, key});
      col = base.left_of(*col);
      row = base.left_of(*row);
    }
  }
  return slots;
}

Matrix<PolynomialRing> bk_generator_symbolic(const Permutation& w, const Composition& shape, int k) {
  std::map<Coordinate, Polynomial> coords;
  for (const auto& key : bk_coordinates(w, shape, k)) coords[key] = Polynomial::variable(key);
  return bk_generator(PolynomialRing{}, w, shape, k, coords);
}

std::vector<Coordinate> dw_coordinates(const Permutation& w, const Composition& shape) {
  std::vector<Coordinate> out;
  for (int k = w.size(); k >= 2; --k) {
    auto level = bk_coordinates(w, shape, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Flag<PolynomialRing> generic_flag(const Permutation& w, const Composition& shape) {
  if (w.size() != shape.size()) throw std::invalid_argument("permutation and shape sizes differ");
  if (!is_row_strict(tableau_of(w, shape)))
    throw std::invalid_argument("R(w) is not row-strict for w = " + w.to_string());
  const PolynomialRing ring;
  auto b = Matrix<PolynomialRing>::identity(ring, w.size());
  for (int k = w.size(); k >= 2; --k) b = b * bk_generator_symbolic(w, shape, k);
  return Flag<PolynomialRing>(b * Matrix<PolynomialRing>::permutation(ring, w));
}

std::vector<Coordinate> hess_zero_coordinates(const Permutation& w, const Composition& shape,
                                              const HessenbergFunction& h) {
  const Tableau t = tableau_of(w, shape);
  if (!is_h_strict(t, h)) throw std::invalid_argument("R(w) is not h-strict for w = " + w.to_string());
  std::vector<Coordinate> out;
  const auto dropped = springer_inversions(w, shape).minus(hessenberg_inversions(t, h));
  for (const auto& p : dropped.pairs())
    out.push_back({w(p.high), w(p.low)});
  return out;
}

Flag<PolynomialRing> substitute_zero(const Flag<PolynomialRing>& flag, const std::vector<Coordinate>& coords) {
  std::map<Coordinate, Rational> zeros;
  for (const auto& c : coords) zeros[c] = 0;
  auto m = flag.matrix();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = m(r, c).substitute(zeros);
  return Flag<PolynomialRing>(std::move(m));
}

Flag<PolynomialRing> generic_hessenberg_flag(const Permutation& w, const Composition& shape,
                                             const HessenbergFunction& h) {
  const auto zeros = hess_zero_coordinates(w, shape, h);
  return substitute_zero(generic_flag(w, shape), zeros);
}

std::vector<Polynomial> difference_residual(const Permutation& w, const Composition& shape, int l) {
  const Tableau t = tableau_of(w, shape);
  const auto r = t.right_of(l);
  if (!r) throw std::invalid_argument(std::to_string(l) + " ends its row in R(w)");
  const auto flag = generic_flag(w, shape);
  const auto x = nilpotent_matrix<PolynomialRing>(shape);
  auto res = flag.vector(l);
  const auto xr = x.apply(flag.vector(*r));
  for (std::size_t a = 0; a < res.size(); ++a) res[a] -= xr[a];
  const auto springer = springer_inversions(w, shape);
  for (const auto& p : springer.pairs()) {
    if (p.low != l) continue;
    const auto coeff = Polynomial::variable({w(p.high), w(l)});
    const auto vt = flag.vector(p.high);
    for (std::size_t a = 0; a < res.size(); ++a) res[a] -= coeff * vt[a];
  }
  return res;
}

Matrix<PrimeField> evaluate_mod(const Matrix<PolynomialRing>& m, const PrimeField& field,
                                const std::map<Coordinate, std::uint32_t>& values) {
  Matrix<PrimeField> out(field, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate_mod(field.characteristic(), values);
  return out;
}

}  // namespace hesspave
