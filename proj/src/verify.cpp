#include "hesspave/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hesspave/exactla.hpp"
#include "hesspave/paving.hpp"

namespace hesspave {

namespace {

constexpr int kExhaustiveLimit = 8;
constexpr int kSymbolicLimit = 6;

class Recorder {
public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  /// Counts one check; records the first failure. Returns ok.
  bool check(bool ok, const char* invariant, const std::function<std::string()>& witness) {
    ++r_.checks;
    if (!ok && !r_.failure) r_.failure = CheckFailure{invariant, witness()};
    return ok;
  }
  bool failed() const { return r_.failure.has_value(); }
  SuiteResult skip(std::string why) {
    r_.skipped = std::move(why);
    return r_;
  }
  SuiteResult result() const { return r_; }

private:
  SuiteResult r_;
};

std::string where(const Composition& shape, const HessenbergFunction* h, const Permutation* w) {
  std::string s = "lambda=" + shape.to_string();
  if (h) s += " h=" + h->to_string();
  if (w) s += " w=" + w->to_string();
  return s;
}

InversionSet as_set(const std::vector<InversionPair>& pairs) { return InversionSet(pairs); }

std::vector<int> sorted_column(const Tableau& t, int c) {
  auto v = t.column(c);
  std::sort(v.begin(), v.end());
  return v;
}

Permutation restrict_last(const Permutation& y) {
  return Permutation(std::vector<int>(y.word().begin(), y.word().end() - 1));
}

std::vector<HessenbergFunction> all_h_if_small(int n) {
  return n <= 5 ? HessenbergFunction::all(n) : std::vector<HessenbergFunction>{};
}

}  // namespace

// --------------------------------------------------------------- combinatorics

SuiteResult combinatorics_suite(const Composition& shape) {
  Recorder rec("combinatorics");
  const int n = shape.size();
  if (n > kExhaustiveLimit) return rec.skip("S_n enumeration limited to n <= " + std::to_string(kExhaustiveLimit));
  const Tableau base = base_filling(shape);
  const auto springer = HessenbergFunction::springer(n);
  const auto hs = all_h_if_small(n);
  rec.check(tableau_of(Permutation::identity(n), shape) == base, "identity labels the base filling",
            [&] { return where(shape, nullptr, nullptr); });

  for (const auto& w : Permutation::all(n)) {
    if (rec.failed()) break;
    auto wit = [&] { return where(shape, nullptr, &w); };
    const auto inv = inversions(w);
    rec.check(static_cast<int>(inv.size()) == w.length(), "|inv(w)| = l(w)", wit);

    if (n >= 1) {
      const auto [v, y] = factorize(w);
      bool shape_ok = v * y == w && v(n) == w(n) && y(n) == n;
      for (int a = 1; a + 1 < n; ++a) shape_ok = shape_ok && v(a) < v(a + 1);
      for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) shape_ok = shape_ok && ((w(a) < w(b)) == (y(a) < y(b)));
      rec.check(shape_ok, "factorization w = v y", wit);
      rec.check(w.length() == v.length() + y.length(), "l(w) = l(v) + l(y)", wit);
      std::vector<InversionPair> joined = inversions(y);
      const Permutation yinv = y.inverse();
      for (const auto& p : inversions(v)) {
        int a = yinv(p.high), b = yinv(p.low);
        joined.push_back(a > b ? InversionPair{a, b} : InversionPair{b, a});
      }
      const auto union_set = as_set(joined);
      rec.check(union_set.size() == joined.size() && union_set == as_set(inv), "inv(w) = inv(y) + y^-1 inv(v)", wit);
    }

    const Tableau t = tableau_of(w, shape);
    rec.check(permutation_of(t) == w, "permutation_of inverts tableau_of", wit);
    bool labels = true;
    const Permutation winv = w.inverse();
    for (int i = 1; i <= n; ++i) labels = labels && t.entry(base.position(i)) == winv(i);
    rec.check(labels, "box i of R(e) holds w^-1(i)", wit);
    const bool rs = is_row_strict(t);
    rec.check(is_h_strict(t, springer) == rs, "Springer h-strict = row-strict", wit);

    if (rs) {
      const Tableau s = standardize(t);
      bool columns = shape.is_partition() ? is_standard(s) && standardize(s) == s
                                          : !is_row_strict(s) || standardize(s) == s;
      for (int c = 1; c <= t.num_columns(); ++c)
        columns = columns && sorted_column(s, c) == sorted_column(t, c) && sorted_column(s, c) == s.column(c);
      rec.check(columns, "standardize is idempotent and keeps columns", wit);
      const auto del = delete_last_box(t);
      std::vector<std::vector<int>> kept;
      for (auto row : t.rows()) {
        std::erase(row, n);
        if (!row.empty()) kept.push_back(std::move(row));
      }
      const bool del_ok = del.shape.size() == n - 1 && del.tableau.rows() == kept;
      rec.check(del_ok, "deleting n keeps the rest", wit);
    }

    for (const auto& h1 : hs) {
      if (!is_h_strict(t, h1)) continue;
      for (const auto& h2 : hs)
        if (h_leq(h1, h2) && !rec.check(is_h_strict(t, h2), "h-strictness is monotone in h",
                                         [&] { return wit() + " h1=" + h1.to_string() + " h2=" + h2.to_string(); }))
          break;
    }
  }
  return rec.result();
}

// --------------------------------------------------------------------- paving

SuiteResult paving_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs) {
  Recorder rec("paving");
  const int n = shape.size();
  const bool exhaustive = n <= kExhaustiveLimit;
  const auto perms = exhaustive ? Permutation::all(n) : std::vector<Permutation>{};

  std::vector<InversionSet> springer;
  for (const auto& w : perms) {
    springer.push_back(springer_inversions(w, shape));
    rec.check(springer.back().is_subset_of(as_set(inversions(w))), "Springer inversions are inversions",
              [&] { return where(shape, nullptr, &w); });
  }

  for (const auto& h : hs) {
    if (rec.failed()) break;
    const auto cells = enumerate_cells(shape, h);
    std::vector<Permutation> listed;
    for (const auto& c : cells) {
      listed.push_back(c.w);
      auto wit = [&] { return where(shape, &h, &c.w); };
      rec.check(c.tableau == tableau_of(c.w, shape) && is_h_strict(c.tableau, h), "cell tableau is R(w), h-strict", wit);
      rec.check(c.hess_inversions == hessenberg_inversions(c.tableau, h) &&
                    c.dim == static_cast<int>(c.hess_inversions.size()),
                "cell dimension counts Hessenberg inversions", wit);
      rec.check(c.hess_inversions.is_subset_of(c.springer_inversions), "Hessenberg inversions are Springer", wit);
      std::set<int> rows_seen;
      bool distinct = true;
      for (int k = 1; k <= n && distinct; ++k) {
        rows_seen.clear();
        for (int l : c.springer_inversions.level(k)) distinct = distinct && rows_seen.insert(c.tableau.position(l).row).second;
      }
      rec.check(distinct, "inv^k entries lie in distinct rows", wit);
    }
    rec.check(std::is_sorted(listed.begin(), listed.end()), "cells are in lexicographic order",
              [&] { return where(shape, &h, nullptr); });
    const auto pd = poincare(cells);
    rec.check(pd.total() == static_cast<long long>(cells.size()), "Poincare coefficients sum to the cell count",
              [&] { return where(shape, &h, nullptr); });
    const auto parallel = enumerate_cells(shape, h, 3);
    bool same = parallel.size() == cells.size();
    for (std::size_t i = 0; same && i < cells.size(); ++i) same = parallel[i].w == cells[i].w;
    rec.check(same, "parallel enumeration matches serial", [&] { return where(shape, &h, nullptr); });

    if (exhaustive) {
      std::vector<Permutation> brute;
      for (const auto& w : perms)
        if (is_h_strict(tableau_of(w, shape), h)) brute.push_back(w);
      rec.check(brute == listed, "cells are exactly the h-strict fillings", [&] { return where(shape, &h, nullptr); });
      for (std::size_t i = 0; i < perms.size() && !rec.failed(); ++i)
        rec.check(hessenberg_inversions(perms[i], shape, h).is_subset_of(springer[i]),
                  "Hessenberg inversions are Springer", [&] { return where(shape, &h, &perms[i]); });
    }

    if (h.is_springer() && shape.num_columns() == 1 && exhaustive) {
      std::vector<long long> mahonian;
      for (const auto& w : perms) {
        if (static_cast<int>(mahonian.size()) <= w.length()) mahonian.resize(w.length() + 1, 0);
        ++mahonian[w.length()];
      }
      rec.check(pd.coeffs == mahonian, "one-column Springer fiber is Mahonian", [&] { return where(shape, &h, nullptr); });
    }
  }

  for (const auto& h1 : hs)
    for (const auto& h2 : hs) {
      if (rec.failed() || !h_leq(h1, h2) || h1 == h2) continue;
      for (const auto& w : perms)
        if (!rec.check(hessenberg_inversions(w, shape, h1).is_subset_of(hessenberg_inversions(w, shape, h2)),
                       "Hessenberg inversions grow with h",
                       [&] { return where(shape, &h1, &w) + " h2=" + h2.to_string(); }))
          break;
    }

  for (std::size_t idx = 0; idx < perms.size() && n >= 2 && !rec.failed(); ++idx) {
    const auto& w = perms[idx];
    const Tableau t = tableau_of(w, shape);
    if (!is_row_strict(t)) continue;
    const auto del = delete_last_box(t);
    const Permutation y = restrict_last(factorize(w).y);
    std::vector<InversionPair> lower;
    for (const auto& p : springer[idx].pairs())
      if (p.high != n) lower.push_back(p);
    rec.check(springer_inversions(y, del.shape) == InversionSet(lower), "deleting n restricts Springer inversions",
              [&] { return where(shape, nullptr, &w); });
  }
  return rec.result();
}

// ---------------------------------------------------------------- partitions

SuiteResult standardization_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs) {
  Recorder rec("standardization");
  if (!shape.is_partition()) return rec.skip("shape is not a partition");
  for (const auto& h : hs)
    for (const auto& c : enumerate_cells(shape, h))
      if (!rec.check(is_h_strict(standardize(c.tableau), h), "std(R) is h-strict",
                     [&] { return where(shape, &h, &c.w); }))
        return rec.result();
  return rec.result();
}

SuiteResult maximal_cells_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs) {
  Recorder rec("maximal cells");
  if (!shape.is_partition()) return rec.skip("shape is not a partition");
  for (const auto& h : hs) {
    const auto cells = enumerate_cells(shape, h);
    int top = -1;
    for (const auto& c : cells) top = std::max(top, c.dim);
    for (const auto& c : cells) {
      auto wit = [&] { return where(shape, &h, &c.w); };
      if (c.dim == top && !rec.check(is_standard(c.tableau), "maximal cells are standard", wit)) return rec.result();
      const auto before = inversion_profile(c.tableau, h);
      const auto after = inversion_profile(standardize(c.tableau), h);
      std::set<std::pair<int, int>> keys;
      for (const auto& [k, _] : before.entries()) keys.insert(k);
      for (const auto& [k, _] : after.entries()) keys.insert(k);
      bool dominated = true;
      bool strict = false;
      for (const auto& [i, j] : keys) {
        dominated = dominated && before.at(i, j) <= after.at(i, j);
        strict = strict || before.at(i, j) < after.at(i, j);
      }
      if (!rec.check(dominated, "d_R <= d_std(R)", wit)) return rec.result();
      if (!is_standard(c.tableau) && !rec.check(strict, "d_R < d_std(R) somewhere for non-standard R", wit))
        return rec.result();
    }
  }
  return rec.result();
}

SuiteResult connectedness_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs) {
  Recorder rec("connectedness");
  if (!shape.is_partition()) return rec.skip("shape is not a partition");
  for (const auto& h : hs) {
    const auto cells = enumerate_cells(shape, h);
    const auto r0 = r0_tableau(shape, h);
    auto wit = [&] { return where(shape, &h, nullptr); };
    if (cells.empty()) {
      if (!rec.check(!r0.has_value(), "r0 is empty exactly when the variety is", wit)) break;
      continue;
    }
    std::vector<const CellDescriptor*> zero;
    for (const auto& c : cells)
      if (c.dim == 0) zero.push_back(&c);
    if (!rec.check(zero.size() == 1, "exactly one zero-dimensional cell", wit)) break;
    if (!rec.check(r0.has_value() && *r0 == zero.front()->tableau, "the zero cell is r0", wit)) break;
  }
  return rec.result();
}

// ------------------------------------------------------------------- symbolic

SuiteResult symbolic_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs) {
  Recorder rec("symbolic");
  const int n = shape.size();
  if (n > kSymbolicLimit) return rec.skip("symbolic identities limited to n <= " + std::to_string(kSymbolicLimit));
  if (n < 1) return rec.result();
  using M = Matrix<PolynomialRing>;
  const PolynomialRing ring;
  const Tableau base = base_filling(shape);
  const M x = nilpotent_matrix<PolynomialRing>(shape);
  const auto springer_h = HessenbergFunction::springer(n);
  auto unit = [&](int a) {
    std::vector<Polynomial> e(n);
    e[a - 1] = Polynomial(1L);
    return e;
  };

  for (const auto& w : Permutation::all(n)) {
    if (rec.failed()) break;
    const Tableau t = tableau_of(w, shape);
    if (!is_row_strict(t)) continue;
    auto wit = [&] { return where(shape, nullptr, &w); };
    const auto [v, y] = factorize(w);
    const auto springer = springer_inversions(w, shape);

    for (int k = 2; k <= n && !rec.failed(); ++k) {
      auto kwit = [&] { return wit() + " k=" + std::to_string(k); };
      const auto keys = bk_coordinates(w, shape, k);
      std::map<Coordinate, Polynomial> c1, c2, sum;
      for (const auto& key : keys) {
        c1[key] = Polynomial::variable(key);
        c2[key] = Polynomial::variable({-key.row, -key.col});
        sum[key] = c1[key] + c2[key];
      }
      const M g = bk_generator(ring, w, shape, k, c1);
      const M g2 = bk_generator(ring, w, shape, k, c2);
      rec.check(g * g2 == bk_generator(ring, w, shape, k, sum), "generators add coordinates", kwit);
      rec.check(g * g2 == g2 * g, "generators commute", kwit);

      std::set<int> span;
      for (int j = 1; j <= k; ++j) span.insert(w(j));
      bool stable = true;
      for (int j = 1; j <= n; ++j) {
        const auto col = g.column(w(j) - 1);
        if (j >= k) {
          stable = stable && col == unit(w(j));
        } else {
          for (int r = 1; r <= n; ++r) stable = stable && (col[r - 1].is_zero() || span.count(r));
        }
      }
      rec.check(stable, "g_k fixes e_w(j) for j >= k and keeps Span e_w(1..k)", kwit);
      const M xg = x * g;
      bool kernel = true;
      for (int a = 1; a <= n; ++a)
        if (!base.left_of(a))
          for (int r = 0; r < n; ++r) kernel = kernel && xg(r, a - 1).is_zero();
      rec.check(kernel, "g_k preserves ker X", kwit);

      const M comm = g * x - x * g;
      bool formula = true;
      for (int j = 1; j <= n; ++j) {
        std::vector<Polynomial> expected(n);
        for (int l : springer.level(k))
          if (t.right_of(l) == j) expected[w(k) - 1] = Polynomial::variable({w(k), w(l)});
        formula = formula && comm.column(w(j) - 1) == expected;
      }
      rec.check(formula, "commutator formula", kwit);

      if (k == n) {
        rec.check(g * x == x * g, "top generator commutes with X", kwit);
        const auto split = bn_split(g, w, shape);
        rec.check(UnipotentPattern::row(n, w(n)).admits(split.u_i) && split.u_i * split.b_n == g &&
                      UnipotentPattern::leading_block(n).admits(permutation_conjugate(split.b_n, v)),
                  "top generator splits as u_i b_n", kwit);
      } else {
        const M conj = permutation_conjugate(g, v);
        bool corner = true;
        for (int a = 1; a <= n; ++a) {
          const Polynomial want = a == n ? Polynomial(1L) : Polynomial();
          corner = corner && conj(n - 1, a - 1) == want && conj(a - 1, n - 1) == want;
        }
        std::map<Coordinate, Coordinate> rename;
        const Permutation vinv = v.inverse();
        for (const auto& key : keys) rename[key] = {vinv(key.row), vinv(key.col)};
        M block = conj.block(0, 0, n - 1, n - 1);
        for (int r = 0; r < n - 1; ++r)
          for (int c = 0; c < n - 1; ++c) block(r, c) = block(r, c).rename(rename);
        const auto del = delete_last_box(t);
        rec.check(corner && block == bk_generator_symbolic(restrict_last(y), del.shape, k),
                  "v^-1 B_k(w) v = B_k(y)", kwit);
      }
    }
    if (rec.failed()) break;

    const auto flag = generic_flag(w, shape);
    rec.check(verify_flag_membership(flag, x, springer_h), "generic flag lies in the Springer fiber", wit);
    for (int l = 1; l <= n; ++l) {
      if (t.ends_row(l)) continue;
      const auto res = difference_residual(w, shape, l);
      rec.check(std::all_of(res.begin(), res.end(), [](const Polynomial& p) { return p.is_zero(); }),
                "difference formula", [&] { return wit() + " l=" + std::to_string(l); });
    }

    for (const auto& h : hs) {
      if (rec.failed() || !is_h_strict(t, h)) continue;
      auto hwit = [&] { return where(shape, &h, &w); };
      const auto zeros = hess_zero_coordinates(w, shape, h);
      rec.check(verify_flag_membership(substitute_zero(flag, zeros), x, h), "zero coordinates give Hess", hwit);
      for (const auto& keep : zeros) {
        std::vector<Coordinate> others;
        for (const auto& z : zeros)
          if (!(z == keep)) others.push_back(z);
        rec.check(!verify_flag_membership(substitute_zero(flag, others), x, h), "each zero coordinate is needed",
                  [&] { return hwit() + " kept " + to_string(keep); });
      }
    }
  }
  return rec.result();
}

// --------------------------------------------------------------------- oracle

SuiteResult oracle_suite(const Composition& shape, const std::vector<HessenbergFunction>& hs,
                         const OracleSuiteOptions& options) {
  Recorder rec("oracle q=" + std::to_string(options.field.q));
  const int n = shape.size();
  if (n < 1 || n > kMaxOracleDimension) return rec.skip("oracle supports 1 <= n <= " + std::to_string(kMaxOracleDimension));
  const auto reports = variety_point_counts(shape, hs, options.field, options.budget_bits, options.workers);
  for (const auto& rep : reports) {
    const CellCount* bad = nullptr;
    for (const auto& c : rep.per_cell)
      if (!c.match && !bad) bad = &c;
    rec.check(rep.match, "point count equals paving prediction", [&] {
      std::string s = where(shape, &rep.h, nullptr) + " q=" + std::to_string(rep.q) + " total=" +
                      std::to_string(rep.total) + " predicted=" + std::to_string(rep.predicted);
      if (bad)
        s += " cell " + bad->w.to_string() + " count=" + std::to_string(bad->count) +
             " predicted=" + std::to_string(bad->predicted);
      return s;
    });
    if (rec.failed()) return rec.result();
  }

  if (options.cell_checks) {
    for (const auto& w : Permutation::all(n)) {
      if (!is_row_strict(tableau_of(w, shape))) continue;
      auto wit = [&] { return where(shape, nullptr, &w) + " q=" + std::to_string(options.field.q); };
      if (!rec.check(dw_equals_cell(w, shape, options.field, options.budget_bits), "D_w equals C_w cap Springer fiber", wit) ||
          !rec.check(zeros_structure_check(w, shape, options.field, options.budget_bits), "u_i vanishes off row ends", wit) ||
          !rec.check(projection_check(w, shape, options.field, options.budget_bits), "projection respects the fiber", wit))
        return rec.result();
    }
  }

  if (options.conjugation_trials > 0 && n <= 4) {
    for (const auto& h : hs) {
      const auto rep = conjugation_invariance(shape, h, options.field, options.conjugation_trials, options.seed,
                                              options.budget_bits, options.workers);
      if (!rec.check(rep.invariant, "point count is conjugation invariant",
                     [&] { return where(shape, &h, nullptr) + " seed=" + std::to_string(options.seed); }))
        break;
    }
  }
  return rec.result();
}

// -------------------------------------------------------------------- driver

bool VerifyReport::passed() const {
  if (budget_error) return false;
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const SuiteResult* VerifyReport::first_failure() const {
  for (const auto& s : suites)
    if (!s.passed()) return &s;
  return nullptr;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport rep;
  const int n = options.shape.size();
  const auto hs = options.h ? std::vector<HessenbergFunction>{*options.h} : HessenbergFunction::all(n);
  const std::vector<std::function<SuiteResult()>> suites = {
      [&] { return combinatorics_suite(options.shape); },
      [&] { return paving_suite(options.shape, hs); },
      [&] { return standardization_suite(options.shape, hs); },
      [&] { return maximal_cells_suite(options.shape, hs); },
      [&] { return connectedness_suite(options.shape, hs); },
      [&] { return symbolic_suite(options.shape, hs); },
      [&] { return oracle_suite(options.shape, hs, options.oracle); },
  };
  for (const auto& run : suites) {
    try {
      rep.suites.push_back(run());
    } catch (const BudgetExceeded& e) {
      rep.budget_error = e.what();
      break;
    }
    if (!rep.suites.back().passed()) break;
  }
  return rep;
}

}  // namespace hesspave
