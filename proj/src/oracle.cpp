#include "hesspave/oracle.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "hesspave/exactla.hpp"
#include "hesspave/paving.hpp"

namespace hesspave {

FieldSpec::FieldSpec(int q) : q(q) {
  if (q < 2 || q > 16 || !PrimeField::is_prime(static_cast<std::uint64_t>(q)))
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime at most 16");
}

namespace {

class SmallField {
public:
  explicit SmallField(int q) : q_(q), inv_(q, 0) {
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (a * b % q == 1) inv_[a] = b;
  }
  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return a * b % q_; }
  int inv(int a) const { return inv_[a]; }

private:
  int q_;
  std::vector<int> inv_;
};

SmallMatrix multiply(const SmallField& f, const SmallMatrix& x, const SmallMatrix& y) {
  SmallMatrix out(x.n);
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      const int xv = x(r, k);
      if (!xv) continue;
      for (int c = 0; c < x.n; ++c) out(r, c) = f.add(out(r, c), f.mul(xv, y(k, c)));
    }
  return out;
}

/// Solves V B = rhs in place by Gauss-Jordan; false if V is singular.
bool solve(const SmallField& f, SmallMatrix v, SmallMatrix& rhs) {
  const int n = v.n;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n && piv < 0; ++r)
      if (v(r, c)) piv = r;
    if (piv < 0) return false;
    if (piv != c)
      for (int k = 0; k < n; ++k) {
        std::swap(v(c, k), v(piv, k));
        std::swap(rhs(c, k), rhs(piv, k));
      }
    const int s = f.inv(v(c, c));
    for (int k = 0; k < n; ++k) {
      v(c, k) = f.mul(v(c, k), s);
      rhs(c, k) = f.mul(rhs(c, k), s);
    }
    for (int r = 0; r < n; ++r) {
      const int t = v(r, c);
      if (r == c || !t) continue;
      for (int k = 0; k < n; ++k) {
        v(r, k) = f.sub(v(r, k), f.mul(t, v(c, k)));
        rhs(r, k) = f.sub(rhs(r, k), f.mul(t, rhs(c, k)));
      }
    }
  }
  return true;
}

/// Encodes m(i) = lowest nonzero row (1-based, 0 if none) of column i of
/// V^{-1} X V in base n + 1. The flag lies in Hess(X, h) iff m(i) <= h(i).
std::uint64_t profile_code(const SmallField& f, const SmallMatrix& v, const SmallMatrix& x) {
  SmallMatrix b = multiply(f, x, v);
  if (!solve(f, v, b)) throw std::logic_error("oracle produced a singular flag");
  std::uint64_t code = 0;
  for (int i = v.n - 1; i >= 0; --i) {
    int m = 0;
    for (int r = v.n - 1; r >= 0 && !m; --r)
      if (b(r, i)) m = r + 1;
    code = code * (v.n + 1) + m;
  }
  return code;
}

bool profile_within(std::uint64_t code, const HessenbergFunction& h) {
  const auto base = static_cast<std::uint64_t>(h.size() + 1);
  for (int i = 1; i <= h.size(); ++i) {
    if (static_cast<int>(code % base) > h(i)) return false;
    code /= base;
  }
  return true;
}

std::vector<Coordinate> free_positions(const Permutation& w) {
  std::vector<Coordinate> out;
  const Permutation inv = w.inverse();
  for (int a = 1; a <= w.size(); ++a)
    for (int b = a + 1; b <= w.size(); ++b)
      if (inv(a) > inv(b)) out.push_back({a, b});
  return out;
}

double log2_q(int q) { return std::log2(static_cast<double>(q)); }

void check_cell_budget(const Permutation& w, int q, int budget_bits) {
  const double bits = w.length() * log2_q(q);
  if (bits > budget_bits + 1e-9)
    throw BudgetExceeded("cell " + w.to_string() + " needs " + std::to_string(bits) + " bits", bits, budget_bits);
}

/// log2 of the number of F_q points of the flag variety of F_q^n.
double flag_variety_bits(int n, int q) {
  double bits = 0;
  for (int i = 1; i <= n; ++i) bits += std::log2((std::pow(q, i) - 1) / (q - 1));
  return bits;
}

void check_dimension(int n) {
  if (n < 1 || n > kMaxOracleDimension)
    throw std::invalid_argument("oracle supports 1 <= n <= " + std::to_string(kMaxOracleDimension));
}

/// Calls f(values, V) for every u in U^w(F_q), values in row-major order of
/// the free positions and V = u w.
template <class F>
void for_each_cell_point(const SmallField& field, const Permutation& w, F&& f) {
  const int n = w.size();
  const auto pos = free_positions(w);
  std::vector<int> values(pos.size(), 0);
  SmallMatrix v(n);
  for (int j = 0; j < n; ++j) v(w(j + 1) - 1, j) = 1;
  const Permutation winv = w.inverse();
  auto set = [&](std::size_t t, int val) { v(pos[t].row - 1, winv(pos[t].col) - 1) = val; };
  while (true) {
    f(static_cast<const std::vector<int>&>(values), static_cast<const SmallMatrix&>(v));
    std::size_t t = values.size();
    while (t > 0) {
      --t;
      if (++values[t] < field.q()) {
        set(t, values[t]);
        break;
      }
      values[t] = 0;
      set(t, 0);
      if (t == 0) return;
    }
    if (values.empty()) return;
  }
}

using Histogram = std::map<std::uint64_t, long long>;

Histogram cell_histogram(const SmallField& field, const Permutation& w, const SmallMatrix& x) {
  Histogram hist;
  for_each_cell_point(field, w, [&](const std::vector<int>&, const SmallMatrix& v) {
    ++hist[profile_code(field, v, x)];
  });
  return hist;
}

long long count_within(const Histogram& hist, const HessenbergFunction& h) {
  long long s = 0;
  for (const auto& [code, c] : hist)
    if (profile_within(code, h)) s += c;
  return s;
}

std::vector<Histogram> all_histograms(const SmallField& field, const std::vector<Permutation>& perms,
                                      const SmallMatrix& x, int workers) {
  std::vector<Histogram> out(perms.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < perms.size(); i = next++) out[i] = cell_histogram(field, perms[i], x);
  };
  workers = std::max(1, std::min<int>(workers, static_cast<int>(perms.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return out;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_full_budget(int n, int q, int budget_bits) {
  const double bits = flag_variety_bits(n, q);
  if (bits > budget_bits + 1e-9)
    throw BudgetExceeded("full flag variety over F_" + std::to_string(q) + " needs " + std::to_string(bits) + " bits",
                         bits, budget_bits);
}

SmallMatrix to_small(const Matrix<PrimeField>& m) {
  SmallMatrix s(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) s(r, c) = static_cast<int>(m(r, c));
  return s;
}

Matrix<PrimeField> from_values(const PrimeField& f, const UnipotentPattern& pat, const std::vector<int>& values) {
  std::vector<std::uint32_t> vals(values.begin(), values.end());
  return pat.build(f, vals);
}

}  // namespace

SmallMatrix small_nilpotent(const Composition& shape, int q) {
  return to_small(nilpotent_matrix<PrimeField>(shape, PrimeField(static_cast<std::uint32_t>(q))));
}

long long cell_point_count(const Permutation& w, const Composition& shape, const HessenbergFunction& h,
                           FieldSpec field, int budget_bits) {
  const int n = shape.size();
  check_dimension(n);
  if (w.size() != n || h.size() != n) throw std::invalid_argument("sizes of w, shape and h differ");
  check_cell_budget(w, field.q, budget_bits);
  const SmallField f(field.q);
  return count_within(cell_histogram(f, w, small_nilpotent(shape, field.q)), h);
}

std::vector<CountReport> variety_point_counts(const Composition& shape, const std::vector<HessenbergFunction>& hs,
                                              FieldSpec field, int budget_bits, int workers) {
  const int n = shape.size();
  check_dimension(n);
  for (const auto& h : hs)
    if (h.size() != n) throw std::invalid_argument("h has size " + std::to_string(h.size()) + ", expected " + std::to_string(n));
  check_full_budget(n, field.q, budget_bits);
  const SmallField f(field.q);
  const auto perms = Permutation::all(n);
  const auto hists = all_histograms(f, perms, small_nilpotent(shape, field.q), workers);

  std::vector<CountReport> reports;
  for (const auto& h : hs) {
    CountReport rep;
    rep.q = field.q;
    rep.h = h;
    rep.match = true;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      CellCount cc;
      cc.w = perms[i];
      cc.count = count_within(hists[i], h);
      const Tableau t = tableau_of(perms[i], shape);
      if (is_h_strict(t, h)) {
        cc.dim = static_cast<int>(hessenberg_inversions(t, h).size());
        cc.predicted = ipow(field.q, cc.dim);
      }
      cc.match = cc.count == cc.predicted;
      rep.match = rep.match && cc.match;
      rep.total += cc.count;
      rep.predicted += cc.predicted;
      rep.per_cell.push_back(std::move(cc));
    }
    rep.match = rep.match && rep.total == rep.predicted;
    reports.push_back(std::move(rep));
  }
  return reports;
}

CountReport variety_point_count(const Composition& shape, const HessenbergFunction& h, FieldSpec field,
                                int budget_bits, int workers) {
  return variety_point_counts(shape, {h}, field, budget_bits, workers).front();
}

long long hessenberg_point_count(const SmallMatrix& x, const HessenbergFunction& h, FieldSpec field,
                                 int budget_bits, int workers) {
  check_dimension(x.n);
  if (h.size() != x.n) throw std::invalid_argument("matrix and h sizes differ");
  check_full_budget(x.n, field.q, budget_bits);
  const SmallField f(field.q);
  long long total = 0;
  for (const auto& hist : all_histograms(f, Permutation::all(x.n), x, workers)) total += count_within(hist, h);
  return total;
}

DwComparison dw_compare(const Permutation& w, const Composition& shape, FieldSpec field, int budget_bits) {
  const int n = shape.size();
  check_dimension(n);
  check_cell_budget(w, field.q, budget_bits);
  const PrimeField pf(static_cast<std::uint32_t>(field.q));
  const SmallField f(field.q);
  const auto pattern = UnipotentPattern::schubert(w);
  const auto springer = HessenbergFunction::springer(n);
  const SmallMatrix x = small_nilpotent(shape, field.q);

  std::set<std::vector<int>> cell;
  for_each_cell_point(f, w, [&](const std::vector<int>& values, const SmallMatrix& v) {
    if (profile_within(profile_code(f, v, x), springer)) cell.insert(values);
  });

  const auto flag = generic_flag(w, shape);
  const auto coords = dw_coordinates(w, shape);
  DwComparison out;
  out.cell_points = static_cast<long long>(cell.size());
  out.assignments = ipow(field.q, static_cast<int>(coords.size()));
  std::set<std::vector<int>> reached;
  bool same_cell = true;
  std::vector<std::uint32_t> a(coords.size(), 0);
  for (long long idx = 0; idx < out.assignments; ++idx) {
    long long rest = idx;
    std::map<Coordinate, std::uint32_t> values;
    for (std::size_t t = coords.size(); t-- > 0;) {
      values[coords[t]] = static_cast<std::uint32_t>(rest % field.q);
      rest /= field.q;
    }
    const auto bf = bruhat_canonical_form(evaluate_mod(flag.matrix(), pf, values));
    if (!(bf.w == w)) {
      same_cell = false;
      continue;
    }
    std::vector<int> key;
    for (const auto& p : pattern.positions()) key.push_back(static_cast<int>(bf.u(p.row - 1, p.col - 1)));
    reached.insert(std::move(key));
  }
  out.dw_points = static_cast<long long>(reached.size());
  out.equal = same_cell && reached == cell;
  return out;
}

bool dw_equals_cell(const Permutation& w, const Composition& shape, FieldSpec field, int budget_bits) {
  const auto cmp = dw_compare(w, shape, field, budget_bits);
  return cmp.equal && cmp.injective();
}

bool zeros_structure_check(const Permutation& w, const Composition& shape, FieldSpec field, int budget_bits) {
  const int n = shape.size();
  check_dimension(n);
  check_cell_budget(w, field.q, budget_bits);
  const PrimeField pf(static_cast<std::uint32_t>(field.q));
  const SmallField f(field.q);
  const auto pattern = UnipotentPattern::schubert(w);
  const auto springer = HessenbergFunction::springer(n);
  const SmallMatrix x = small_nilpotent(shape, field.q);
  const Tableau base = base_filling(shape);
  const int i = w(n);
  bool ok = true;
  for_each_cell_point(f, w, [&](const std::vector<int>& values, const SmallMatrix& v) {
    if (!ok || !profile_within(profile_code(f, v, x), springer)) return;
    const auto fac = factor_unipotent(from_values(pf, pattern, values), w);
    for (int j = i + 1; j <= n; ++j)
      if (fac.u_i(i - 1, j - 1) != 0 && !base.ends_row(j)) ok = false;
  });
  return ok;
}

bool projection_check(const Permutation& w, const Composition& shape, FieldSpec field, int budget_bits) {
  const int n = shape.size();
  check_dimension(n);
  if (n < 2) return true;
  check_cell_budget(w, field.q, budget_bits);
  const PrimeField pf(static_cast<std::uint32_t>(field.q));
  const SmallField f(field.q);
  const auto pattern = UnipotentPattern::schubert(w);
  const auto springer = HessenbergFunction::springer(n);
  const auto springer_prime = HessenbergFunction::springer(n - 1);
  const SmallMatrix x = small_nilpotent(shape, field.q);
  const auto reduced = delete_last_box(tableau_of(w, shape));
  const auto x_prime = nilpotent_matrix<PrimeField>(reduced.shape, pf);
  bool ok = true;
  for_each_cell_point(f, w, [&](const std::vector<int>& values, const SmallMatrix& v) {
    if (!ok) return;
    const bool in = profile_within(profile_code(f, v, x), springer);
    const auto u = from_values(pf, pattern, values);
    const auto uw = u * Matrix<PrimeField>::permutation(pf, w);
    const auto projected = project_cell(Flag<PrimeField>(uw));
    if (projected.factors.u_i.is_identity() &&
        in != verify_flag_membership(projected.flag, x_prime, springer_prime))
      ok = false;
    if (in) {
      const auto g = level_n_lift(projected.factors.u_i, w, shape);
      const auto stripped = project_cell(Flag<PrimeField>(unitriangular_inverse(g) * uw));
      if (!verify_flag_membership(stripped.flag, x_prime, springer_prime)) ok = false;
    }
  });
  return ok;
}

SmallMatrix small_conjugate(const SmallMatrix& x, const SmallMatrix& g, int q) {
  const SmallField f(q);
  SmallMatrix rhs = multiply(f, x, g);
  if (!solve(f, g, rhs)) throw std::invalid_argument("conjugating matrix is singular");
  return rhs;
}

ConjugationReport conjugation_invariance(const Composition& shape, const HessenbergFunction& h, FieldSpec field,
                                         int trials, std::uint64_t seed, int budget_bits, int workers) {
  const int n = shape.size();
  check_dimension(n);
  const SmallField f(field.q);
  const SmallMatrix x = small_nilpotent(shape, field.q);
  ConjugationReport rep;
  rep.seed = seed;
  rep.base_count = hessenberg_point_count(x, h, field, budget_bits, workers);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, field.q - 1);
  for (int t = 0; t < trials; ++t) {
    SmallMatrix g(n);
    while (true) {
      for (auto& e : g.a) e = entry(rng);
      SmallMatrix probe(n);
      if (solve(f, g, probe)) break;
    }
    rep.trial_counts.push_back(hessenberg_point_count(small_conjugate(x, g, field.q), h, field, budget_bits, workers));
  }
  rep.invariant = true;
  for (long long c : rep.trial_counts) rep.invariant = rep.invariant && c == rep.base_count;
  return rep;
}

}  // namespace hesspave
