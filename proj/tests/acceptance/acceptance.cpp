// One line per acceptance criterion: PASS/FAIL, elapsed time and limit.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "hesspave/exactla.hpp"
#include "hesspave/oracle.hpp"
#include "hesspave/paving.hpp"
#include "hesspave/report.hpp"
#include "hesspave/verify.hpp"

using namespace hesspave;

namespace {

using Rows = std::vector<std::vector<int>>;

struct Outcome {
  bool ok = true;
  std::string detail;
  long long checks = 0;
};

class Checks {
public:
  void expect(bool cond, const std::string& what) {
    ++out_.checks;
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void suite(const SuiteResult& r, const std::string& where) {
    out_.checks += r.checks;
    if (!r.passed() && out_.ok) {
      out_.ok = false;
      out_.detail = where + " " + r.name + ": " + r.failure->invariant + " at " + r.failure->witness;
    }
  }
  Outcome result() const { return out_; }

private:
  Outcome out_;
};

Polynomial x(int r, int c) { return Polynomial::variable({r, c}); }

Matrix<PolynomialRing> unit_plus(int n, std::vector<std::tuple<int, int, Polynomial>> entries) {
  auto m = Matrix<PolynomialRing>::identity(PolynomialRing{}, n);
  for (auto& [r, c, p] : entries) m(r - 1, c - 1) = p;
  return m;
}

std::vector<Polynomial> column(int n, std::vector<std::pair<int, Polynomial>> entries) {
  std::vector<Polynomial> v(n);
  for (auto& [r, p] : entries) v[r - 1] = p;
  return v;
}

std::vector<HessenbergFunction> all_h(int n) { return HessenbergFunction::all(n); }

int workers() {
  const int env = default_workers();
  if (env > 1) return env;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- criteria

Outcome worked_examples() {
  Checks c;
  const Composition l2311({2, 3, 1, 1});
  c.expect(base_filling(l2311).rows() == Rows{{4, 6}, {3, 5, 7}, {2}, {1}}, "base filling of (2,3,1,1)");
  const auto xm = nilpotent_matrix<RationalField>(l2311);
  bool ones = true;
  for (int r = 1; r <= 7; ++r)
    for (int col = 1; col <= 7; ++col) {
      const bool one = (r == 3 && col == 5) || (r == 4 && col == 6) || (r == 5 && col == 7);
      ones = ones && xm(r - 1, col - 1) == Rational(one ? 1 : 0);
    }
  c.expect(ones, "X_lambda of (2,3,1,1)");

  const Permutation w7({4, 3, 1, 6, 5, 7, 2});
  c.expect(tableau_of(w7, l2311).rows() == Rows{{1, 4}, {2, 5, 6}, {7}, {3}}, "R(w) for (2,3,1,1)");
  c.expect(hessenberg_inversions(w7, l2311, HessenbergFunction::springer(7)) ==
               InversionSet({{7, 6}, {7, 4}, {5, 4}, {3, 2}, {3, 1}, {2, 1}}),
           "Springer inversions for (2,3,1,1)");
  c.expect(hessenberg_inversions(w7, l2311, HessenbergFunction({0, 0, 1, 2, 3, 3, 3})) ==
               InversionSet({{7, 6}, {7, 4}, {5, 4}, {3, 2}, {2, 1}}),
           "Hessenberg inversions for (2,3,1,1)");

  const Composition l322({3, 2, 2});
  const Permutation w322({3, 2, 6, 1, 7, 4, 5});
  c.expect(tableau_of(w322, l322).rows() == Rows{{1, 3, 5}, {2, 7}, {4, 6}}, "R(w) for (3,2,2)");
  c.expect(springer_inversions(w322, l322) == InversionSet({{7, 5}, {6, 5}, {4, 2}, {4, 3}, {2, 1}}),
           "inversions for (3,2,2)");
  c.expect(bk_generator_symbolic(w322, l322, 4) == unit_plus(7, {{1, 2, x(1, 2)}, {1, 6, x(1, 6)}}), "B_4 for (3,2,2)");
  c.expect(bk_generator_symbolic(w322, l322, 6) == unit_plus(7, {{4, 7, x(4, 7)}, {1, 6, x(4, 7)}}), "B_6 for (3,2,2)");

  const Composition l222({2, 2, 2});
  const Permutation w({3, 6, 2, 1, 5, 4});
  c.expect(springer_inversions(w, l222) == InversionSet({{6, 5}, {6, 2}, {5, 2}, {4, 3}, {4, 2}, {3, 2}}),
           "inversions for (2,2,2)");
  c.expect(bk_generator_symbolic(w, l222, 2).is_identity(), "B_2 for (2,2,2)");
  c.expect(bk_generator_symbolic(w, l222, 3) == unit_plus(6, {{2, 6, x(2, 6)}}), "B_3 for (2,2,2)");
  c.expect(bk_generator_symbolic(w, l222, 4) == unit_plus(6, {{1, 2, x(1, 2)}, {1, 6, x(1, 6)}}), "B_4 for (2,2,2)");
  c.expect(bk_generator_symbolic(w, l222, 5) == unit_plus(6, {{2, 3, x(5, 6)}, {5, 6, x(5, 6)}}), "B_5 for (2,2,2)");
  c.expect(bk_generator_symbolic(w, l222, 6) ==
               unit_plus(6, {{1, 2, x(4, 5)}, {1, 3, x(4, 6)}, {4, 5, x(4, 5)}, {4, 6, x(4, 6)}}),
           "B_6 for (2,2,2)");
  const auto split = bn_split(bk_generator_symbolic(w, l222, 6), w, l222);
  c.expect(split.b_n == unit_plus(6, {{1, 2, x(4, 5)}, {1, 3, x(4, 6)}}), "b_6 for (2,2,2)");

  const auto f = generic_flag(w, l222);
  c.expect(f.vector(1) == column(6, {{3, 1}, {2, x(5, 6)}, {1, x(4, 6) + x(5, 6) * x(4, 5)}}), "D_w column 1");
  c.expect(f.vector(2) == column(6, {{6, 1},
                                     {5, x(5, 6)},
                                     {4, x(4, 6) + x(5, 6) * x(4, 5)},
                                     {2, x(2, 6)},
                                     {1, x(1, 6) + x(1, 2) * x(2, 6) + x(2, 6) * x(4, 5)}}),
           "D_w column 2");
  c.expect(f.vector(3) == column(6, {{2, 1}, {1, x(1, 2) + x(4, 5)}}), "D_w column 3");
  c.expect(f.vector(4) == column(6, {{1, 1}}), "D_w column 4");
  c.expect(f.vector(5) == column(6, {{5, 1}, {4, x(4, 5)}}), "D_w column 5");
  c.expect(f.vector(6) == column(6, {{4, 1}}), "D_w column 6");

  const HessenbergFunction h_sub({0, 1, 1, 1, 3, 4});
  c.expect(hess_zero_coordinates(w, l222, h_sub) == std::vector<Coordinate>{{1, 2}}, "x_12 is the zero coordinate");
  const auto g = generic_hessenberg_flag(w, l222, h_sub);
  c.expect(g.vector(3) == column(6, {{2, 1}, {1, x(4, 5)}}), "column 3 after x_12 = 0");
  c.expect(verify_flag_membership(g, nilpotent_matrix<PolynomialRing>(l222), h_sub), "membership after x_12 = 0");

  const Tableau r12({{2, 4, 8, 10}, {1, 5, 7, 11}, {3, 9, 12}, {6}});
  const auto h12 = HessenbergFunction::shifted(12, 2);
  c.expect(standardize(r12).rows() == Rows{{1, 4, 7, 10}, {2, 5, 8, 11}, {3, 9, 12}, {6}}, "std(R) for n = 12");
  const auto dr = inversion_profile(r12, h12);
  const auto ds = inversion_profile(standardize(r12), h12);
  c.expect(dr.at(1, 1) == 2 && ds.at(1, 1) == 3, "d(1,1): 2 vs 3");
  c.expect(dr.at(1, 2) == 1 && ds.at(1, 2) == 1, "d(1,2): 1 vs 1");
  c.expect(dr.at(3, 3) == 0 && ds.at(3, 3) == 1, "d(3,3): 0 vs 1");
  const auto t11 = column_sort_trace(r12, 1, 1, h12);
  c.expect(t11.size() == 3 && t11.front().pairs == 2 && t11.back().pairs == 3, "two-column trace");
  const auto t12 = column_sort_trace(r12, 1, 2, h12);
  c.expect(t12.size() == 4 && t12.back().window.grid.front() == std::vector<std::optional<int>>{1, 4, 7},
           "three-column trace");

  const auto r0 = r0_tableau(Composition({4, 4, 3, 1}), HessenbergFunction::shifted(12, 3));
  c.expect(r0 && r0->rows() == Rows{{3, 6, 9, 12}, {2, 5, 8, 11}, {4, 7, 10}, {1}}, "R_0 for (4,4,3,1)");
  c.expect(!is_h_strict(base_filling(Composition({4, 4, 3, 1})), HessenbergFunction::shifted(12, 3)),
           "base filling of (4,4,3,1) is not h-strict");
  return c.result();
}

Outcome point_counts() {
  Checks c;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions(n))
      for (int q : {2, 3}) {
        const auto reps = variety_point_counts(lambda, all_h(n), FieldSpec(q), kDefaultBudgetBits, workers());
        for (const auto& rep : reps) {
          const std::string where = "lambda=" + lambda.to_string() + " h=" + rep.h.to_string() + " q=" +
                                    std::to_string(q);
          c.expect(rep.total == rep.predicted, "total at " + where);
          for (const auto& cell : rep.per_cell) {
            long long expect = 0;
            if (cell.dim >= 0) {
              expect = 1;
              for (int k = 0; k < cell.dim; ++k) expect *= q;
            }
            c.expect(cell.count == expect, "cell " + cell.w.to_string() + " at " + where);
          }
        }
      }
  return c.result();
}

Outcome dw_equality() {
  Checks c;
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& w : Permutation::all(n)) {
        if (!is_row_strict(tableau_of(w, lambda))) continue;
        const auto cmp = dw_compare(w, lambda, FieldSpec(2));
        const long long expected = 1LL << springer_inversions(w, lambda).size();
        c.expect(cmp.equal && cmp.injective() && cmp.assignments == expected && cmp.cell_points == expected,
                 "D_w at lambda=" + lambda.to_string() + " w=" + w.to_string());
      }
  return c.result();
}

Outcome symbolic_identities() {
  Checks c;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : compositions(n)) c.suite(symbolic_suite(lambda), "lambda=" + lambda.to_string());
  return c.result();
}

Outcome maximal_cells() {
  Checks c;
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n))
      c.suite(maximal_cells_suite(lambda, all_h(n)), "lambda=" + lambda.to_string());
  return c.result();
}

Outcome connectedness() {
  Checks c;
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions(n))
      c.suite(connectedness_suite(lambda, all_h(n)), "lambda=" + lambda.to_string());
  return c.result();
}

long long hook_length_count(const Composition& lambda) {
  const auto& p = lambda.parts();
  long long num = 1, den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int col = 0; col < p[r]; ++col) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < p.size(); ++rr)
        if (p[rr] > col) ++below;
      den *= p[r] - col + below;
    }
  return num / den;
}

Outcome known_values() {
  Checks c;
  for (int n = 1; n <= 6; ++n) {
    std::vector<long long> mahonian(n * (n - 1) / 2 + 1, 0);
    for (const auto& w : Permutation::all(n)) ++mahonian[w.length()];
    c.expect(poincare(Composition(std::vector<int>(n, 1)), HessenbergFunction::springer(n)).coeffs == mahonian,
             "Mahonian distribution for (1^" + std::to_string(n) + ")");
  }
  const Composition l222({2, 2, 2});
  const auto pd = poincare(l222, HessenbergFunction::springer(6));
  c.expect(pd.coeffs.size() == 7 && pd.coeffs.back() == 5 && hook_length_count(l222) == 5,
           "top Betti number of (2,2,2)");
  for (int n = 1; n <= 8; ++n) {
    const auto cells = enumerate_cells(Composition({n}), HessenbergFunction::springer(n));
    c.expect(cells.size() == 1 && cells.front().dim == 0 && cells.front().w.is_identity(),
             "one cell for (" + std::to_string(n) + ")");
  }
  return c.result();
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked-example reproduction", 1, worked_examples},
      {2, "point-count identity, partitions n<=5, all h, q in {2,3}", 60, point_counts},
      {3, "D_w equals C_w cap B^X over F_2, partitions n<=4", 10, dw_equality},
      {4, "symbolic identity suite, compositions n<=5", 30, symbolic_identities},
      {5, "maximal cells are standard, profile inequality, partitions n<=6", 60, maximal_cells},
      {6, "unique zero-dimensional cell equals R_0, partitions n<=7", 120, connectedness},
      {7, "known-value cross-checks", 60, known_values},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.limit_s;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << out.checks
         << " checks, " << std::fixed << std::setprecision(2) << secs << " s, limit " << cr.limit_s << " s)";
    if (!out.ok) line << " -- " << out.detail;
    if (out.ok && !in_time) line << " -- over time limit";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
