#include <doctest.h>

#include <random>

#include "hesspave/exactla.hpp"

using namespace hesspave;

namespace {

Polynomial x(int r, int c) { return Polynomial::variable({r, c}); }

Matrix<PolynomialRing> unit_plus(int n, std::vector<std::tuple<int, int, Polynomial>> entries) {
  auto m = Matrix<PolynomialRing>::identity(PolynomialRing{}, n);
  for (auto& [r, c, p] : entries) m(r - 1, c - 1) = p;
  return m;
}

bool is_zero_vector(const std::vector<Polynomial>& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

template <class D>
Matrix<D> random_invertible(const D& dom, int n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  while (true) {
    Matrix<D> g(dom, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = dom.from_int(dist(rng));
    if (!dom.is_zero(determinant(g))) return g;
  }
}

}  // namespace

TEST_CASE("polynomial normal form") {
  const auto p = x(4, 5) * x(5, 6) + x(4, 6);
  CHECK(p.to_string() == "x_{4,5}*x_{5,6} + x_{4,6}");
  CHECK(p - p == Polynomial());
  CHECK((x(1, 2) + 1) * (x(1, 2) - 1) == x(1, 2) * x(1, 2) - 1);
  CHECK(((x(1, 2) + x(3, 4)) * x(2, 2)).divide_exact(x(2, 2)) == x(1, 2) + x(3, 4));
  CHECK_THROWS_AS(x(1, 2).divide_exact(x(3, 4)), std::domain_error);
  CHECK(p.substitute({{{4, 5}, Rational(0)}}) == x(4, 6));
  CHECK(p.evaluate_mod(2, {{{4, 5}, 1}, {{5, 6}, 1}, {{4, 6}, 1}}) == 0);
}

TEST_CASE("nilpotent matrix and hessenberg space") {
  const auto xm = nilpotent_matrix<RationalField>(Composition({2, 3, 1, 1}));
  for (int r = 1; r <= 7; ++r)
    for (int c = 1; c <= 7; ++c) {
      const bool one = (r == 3 && c == 5) || (r == 4 && c == 6) || (r == 5 && c == 7);
      CHECK(xm(r - 1, c - 1) == Rational(one ? 1 : 0));
    }
  CHECK(hessenberg_space_contains(xm, HessenbergFunction::springer(7)));
  CHECK_FALSE(hessenberg_space_contains(Matrix<RationalField>::identity(RationalField{}, 3), HessenbergFunction({0, 1, 2})));
  CHECK(nilpotent_matrix<RationalField>(Composition({1, 1, 1})) == Matrix<RationalField>(RationalField{}, 3, 3));
  CHECK_THROWS(hessenberg_space_contains(xm, HessenbergFunction::springer(6)));
}

TEST_CASE("B_k generators for (3,2,2)") {
  const Permutation w({3, 2, 6, 1, 7, 4, 5});
  const Composition lambda({3, 2, 2});
  CHECK(bk_generator_symbolic(w, lambda, 4) == unit_plus(7, {{1, 2, x(1, 2)}, {1, 6, x(1, 6)}}));
  CHECK(bk_generator_symbolic(w, lambda, 6) == unit_plus(7, {{4, 7, x(4, 7)}, {1, 6, x(4, 7)}}));
  CHECK(bk_generator_symbolic(w, lambda, 2).is_identity() == false);
  CHECK_THROWS(bk_generator(RationalField{}, w, lambda, 4, std::map<Coordinate, Rational>{{{9, 9}, Rational(1)}}));
}

TEST_CASE("B_k generators and generic flag for (2,2,2)") {
  const Permutation w({3, 6, 2, 1, 5, 4});
  const Composition lambda({2, 2, 2});
  CHECK(bk_generator_symbolic(w, lambda, 2).is_identity());
  CHECK(bk_generator_symbolic(w, lambda, 3) == unit_plus(6, {{2, 6, x(2, 6)}}));
  CHECK(bk_generator_symbolic(w, lambda, 4) == unit_plus(6, {{1, 2, x(1, 2)}, {1, 6, x(1, 6)}}));
  CHECK(bk_generator_symbolic(w, lambda, 5) == unit_plus(6, {{2, 3, x(5, 6)}, {5, 6, x(5, 6)}}));
  CHECK(bk_generator_symbolic(w, lambda, 6) ==
        unit_plus(6, {{1, 2, x(4, 5)}, {1, 3, x(4, 6)}, {4, 5, x(4, 5)}, {4, 6, x(4, 6)}}));

  const auto f = generic_flag(w, lambda);
  auto e = [](int i) {
    std::vector<Polynomial> v(6);
    v[i - 1] = 1;
    return v;
  };
  auto v1 = e(3);
  v1[0] = x(4, 6) + x(5, 6) * x(4, 5);
  v1[1] = x(5, 6);
  CHECK(f.vector(1) == v1);
  auto v2 = e(6);
  v2[0] = x(1, 2) * x(2, 6) + x(1, 6) + x(2, 6) * x(4, 5);
  v2[1] = x(2, 6);
  v2[3] = x(4, 5) * x(5, 6) + x(4, 6);
  v2[4] = x(5, 6);
  CHECK(f.vector(2) == v2);
  auto v3 = e(2);
  v3[0] = x(1, 2) + x(4, 5);
  CHECK(f.vector(3) == v3);
  CHECK(f.vector(4) == e(1));
  auto v5 = e(5);
  v5[3] = x(4, 5);
  CHECK(f.vector(5) == v5);
  CHECK(f.vector(6) == e(4));
  CHECK(dw_coordinates(w, lambda).size() == 6);
  CHECK(verify_flag_membership(f, nilpotent_matrix<PolynomialRing>(lambda), HessenbergFunction::springer(6)));

  for (int l = 1; l <= 6; ++l)
    if (!tableau_of(w, lambda).ends_row(l)) CHECK(is_zero_vector(difference_residual(w, lambda, l)));
  CHECK_THROWS(difference_residual(w, lambda, 6));
}

TEST_CASE("zero coordinates and the hessenberg generic flag") {
  const Permutation w({3, 6, 2, 1, 5, 4});
  const Composition lambda({2, 2, 2});
  const HessenbergFunction h({0, 1, 1, 1, 3, 4});
  CHECK(hess_zero_coordinates(w, lambda, h) == std::vector<Coordinate>{{1, 2}});
  const auto g = generic_hessenberg_flag(w, lambda, h);
  auto v3 = std::vector<Polynomial>(6);
  v3[1] = 1;
  v3[0] = x(4, 5);
  CHECK(g.vector(3) == v3);
  const auto xm = nilpotent_matrix<PolynomialRing>(lambda);
  CHECK(verify_flag_membership(g, xm, h));
  CHECK_FALSE(verify_flag_membership(generic_flag(w, lambda), xm, h));
  CHECK(hess_zero_coordinates(w, lambda, HessenbergFunction::springer(6)).empty());
  CHECK_THROWS(hess_zero_coordinates(w, lambda, HessenbergFunction({0, 0, 1, 1, 3, 4})));

  const Permutation w2({4, 3, 1, 6, 5, 7, 2});
  CHECK(hess_zero_coordinates(w2, Composition({2, 3, 1, 1}), HessenbergFunction({0, 0, 1, 2, 3, 5, 5})) ==
        std::vector<Coordinate>{{w2(3), w2(1)}});
  CHECK_THROWS(hess_zero_coordinates(w2, Composition({2, 3, 1, 1}), HessenbergFunction({0, 0, 1, 2, 3, 3, 3})));
  CHECK(generic_flag(Permutation::identity(4), Composition({2, 2})).matrix().is_identity());
}

TEST_CASE("bruhat canonical form") {
  const PrimeField f2(2);
  Matrix<PrimeField> g(f2, 2, 2);
  g(0, 0) = 1;
  g(1, 0) = 1;
  g(1, 1) = 1;
  const auto bf = bruhat_canonical_form(g);
  CHECK(bf.w == Permutation({2, 1}));
  auto u = Matrix<PrimeField>::identity(f2, 2);
  u(0, 1) = 1;
  CHECK(bf.u == u);

  const PrimeField f3(3);
  std::mt19937_64 rng(7);
  for (const auto& w : Permutation::all(4)) {
    CHECK(bruhat_canonical_form(Matrix<PrimeField>::permutation(f3, w)).u.is_identity());
    const auto pattern = UnipotentPattern::schubert(w);
    auto ru = Matrix<PrimeField>::identity(f3, 4);
    for (const auto& p : pattern.positions()) ru(p.row - 1, p.col - 1) = f3.from_int(static_cast<int>(rng() % 3));
    const auto back = bruhat_canonical_form(ru * Matrix<PrimeField>::permutation(f3, w));
    CHECK(back.w == w);
    CHECK(back.u == ru);

    const auto fac = factor_unipotent(ru, w);
    const auto v = Matrix<PrimeField>::permutation(f3, fac.v);
    const auto y = Matrix<PrimeField>::permutation(f3, fac.y);
    CHECK(fac.u_i * v * fac.u_0 * y == ru * Matrix<PrimeField>::permutation(f3, w));
  }
  CHECK_THROWS(bruhat_canonical_form(Matrix<PrimeField>(f3, 2, 2)));
}

TEST_CASE("level-n splitting of the (2,2,2) example") {
  const Permutation w({3, 6, 2, 1, 5, 4});
  const Composition lambda({2, 2, 2});
  const auto g6 = bk_generator_symbolic(w, lambda, 6);
  const auto s = bn_split(g6, w, lambda);
  CHECK(s.b_n == unit_plus(6, {{1, 2, x(4, 5)}, {1, 3, x(4, 6)}}));
  CHECK(s.u_i == unit_plus(6, {{4, 5, x(4, 5)}, {4, 6, x(4, 6)}}));
  CHECK(s.u_i * s.b_n == g6);
  const auto fac = factorize(w);
  CHECK(permutation_conjugate(s.b_n, fac.v) == s.b_n);
  CHECK(UnipotentPattern::leading_block(6).admits(permutation_conjugate(s.b_n, fac.v)));
  const auto id = bn_split(Matrix<PolynomialRing>::identity(PolynomialRing{}, 6), w, lambda);
  CHECK(id.u_i.is_identity());
  CHECK(id.b_n.is_identity());
}

TEST_CASE("project_cell sends a permutation flag to y E'") {
  const PrimeField f2(2);
  const Permutation w({3, 6, 2, 1, 5, 4});
  const auto p = project_cell(Flag<PrimeField>(Matrix<PrimeField>::permutation(f2, w)));
  CHECK(p.w == w);
  CHECK(p.flag.matrix() == Matrix<PrimeField>::permutation(f2, p.y));
}

TEST_CASE("membership duality over F_p and the rationals") {
  std::mt19937_64 rng(11);
  const Composition lambda({2, 1, 1});
  const auto hs = HessenbergFunction::all(4);
  const PrimeField f5(5);
  const auto x5 = nilpotent_matrix<PrimeField>(lambda, f5);
  const auto xq = nilpotent_matrix<RationalField>(lambda);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = hs[trial % hs.size()];
    const auto g = random_invertible(f5, 4, rng, 0, 4);
    CHECK(verify_flag_membership(Flag<PrimeField>(g), x5, h) == hessenberg_space_contains(*inverse(g) * x5 * g, h));
    const auto gq = random_invertible(RationalField{}, 4, rng, -2, 2);
    CHECK(verify_flag_membership(Flag<RationalField>(gq), xq, h) ==
          hessenberg_space_contains(*inverse(gq) * xq * gq, h));
  }
  // Flags built inside a cell are members, so the duality is not vacuous.
  const auto xs = nilpotent_matrix<PrimeField>(Composition({2}), f5);
  CHECK(verify_flag_membership(Flag<PrimeField>::standard(f5, 2), xs, HessenbergFunction({0, 1})));
  CHECK_FALSE(verify_flag_membership(Flag<PrimeField>(Matrix<PrimeField>::permutation(f5, Permutation({2, 1}))), xs,
                                     HessenbergFunction({0, 1})));
}
