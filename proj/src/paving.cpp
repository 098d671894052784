#include "hesspave/paving.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hesspave {

// --------------------------------------------------------------- InversionSet

InversionSet::InversionSet(std::vector<InversionPair> pairs) : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_)
    if (p.high <= p.low) throw std::invalid_argument("inversion pairs must list the larger entry first");
  std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool InversionSet::contains(InversionPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p, std::greater<>());
}

bool InversionSet::is_subset_of(const InversionSet& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end(),
                       std::greater<>());
}

std::vector<int> InversionSet::level(int k) const {
  std::vector<int> out;
  for (const auto& p : pairs_)
    if (p.high == k) out.push_back(p.low);
  std::sort(out.begin(), out.end());
  return out;
}

InversionSet InversionSet::minus(const InversionSet& other) const {
  std::vector<InversionPair> out;
  std::set_difference(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                      std::back_inserter(out), std::greater<>());
  return InversionSet(std::move(out));
}

// ------------------------------------------------------------------ inversions

InversionSet hessenberg_inversions(const Tableau& t, const HessenbergFunction& h) {
  const int n = t.size();
  if (h.size() != n)
    throw std::invalid_argument("hessenberg_inversions: tableau has " + std::to_string(n) +
                                " boxes but h has " + std::to_string(h.size()) + " values");
  std::vector<InversionPair> out;
  for (int k = n; k >= 1; --k) {
    const BoxPosition pk = t.position(k);
    for (int l = k - 1; l >= 1; --l) {
      const BoxPosition pl = t.position(l);
      const bool placed = (pk.col == pl.col && pk.row > pl.row) || pk.col < pl.col;
      if (!placed) continue;
      const auto r = t.right_of(l);
      if (r && k > h(*r)) continue;
      out.push_back({k, l});
    }
  }
  return InversionSet(std::move(out));
}

InversionSet hessenberg_inversions(const Permutation& w, const Composition& shape,
                                   const HessenbergFunction& h) {
  return hessenberg_inversions(tableau_of(w, shape), h);
}

InversionSet springer_inversions(const Permutation& w, const Composition& shape) {
  return hessenberg_inversions(w, shape, HessenbergFunction::springer(w.size()));
}

// ----------------------------------------------------------------- enumeration

namespace {

// Backtracking over fillings: values 1..n are placed in increasing order, and
// value j goes into the box whose base label is w(j). Trying boxes by
// increasing base label yields permutations in lexicographic order.
class FillingSearch {
public:
  FillingSearch(const Composition& shape, const HessenbergFunction& h) : shape_(shape), h_(h) {
    const Tableau base = base_filling(shape);
    n_ = shape.size();
    boxes_.resize(n_ + 1);
    left_.assign(n_ + 1, 0);
    for (int r = 1; r <= shape.num_rows(); ++r)
      for (int c = 1; c <= shape.row_length(r); ++c) {
        const int label = base.at(r, c);
        boxes_[label] = {r, c};
        if (c > 1) left_[label] = base.at(r, c - 1);
      }
  }

  struct State {
    std::vector<int> value_at;  // base label -> value, 0 when empty
    std::vector<int> word;      // w(1..j)
  };

  State root() const { return {std::vector<int>(n_ + 1, 0), {}}; }

  // Candidate box labels for the next value, in increasing order.
  std::vector<int> candidates(const State& s) const {
    const int value = static_cast<int>(s.word.size()) + 1;
    std::vector<int> out;
    for (int label = 1; label <= n_; ++label) {
      if (s.value_at[label]) continue;
      const int left = left_[label];
      if (left) {
        const int lv = s.value_at[left];
        if (!lv || lv > h_(value)) continue;
      }
      out.push_back(label);
    }
    return out;
  }

  void place(State& s, int label) const {
    s.value_at[label] = static_cast<int>(s.word.size()) + 1;
    s.word.push_back(label);
  }
  void unplace(State& s) const {
    s.value_at[s.word.back()] = 0;
    s.word.pop_back();
  }

  void run(State& s, std::vector<Permutation>& out) const {
    if (static_cast<int>(s.word.size()) == n_) {
      out.emplace_back(s.word);
      return;
    }
    for (int label : candidates(s)) {
      place(s, label);
      run(s, out);
      unplace(s);
    }
  }

  // Prefix states at the given depth, in lexicographic order.
  void prefixes(State& s, int depth, std::vector<State>& out) const {
    if (static_cast<int>(s.word.size()) == depth || static_cast<int>(s.word.size()) == n_) {
      out.push_back(s);
      return;
    }
    for (int label : candidates(s)) {
      place(s, label);
      prefixes(s, depth, out);
      unplace(s);
    }
  }

  int size() const { return n_; }

private:
  Composition shape_;
  HessenbergFunction h_;
  int n_ = 0;
  std::vector<BoxPosition> boxes_;
  std::vector<int> left_;
};

std::vector<Permutation> h_strict_permutations(const Composition& shape, const HessenbergFunction& h,
                                               int workers) {
  if (h.size() != shape.size())
    throw std::invalid_argument("shape has " + std::to_string(shape.size()) + " boxes but h has " +
                                std::to_string(h.size()) + " values");
  FillingSearch search(shape, h);
  std::vector<Permutation> out;
  auto root = search.root();
  if (workers <= 1 || search.size() < 4) {
    search.run(root, out);
    return out;
  }
  std::vector<FillingSearch::State> tasks;
  search.prefixes(root, std::min(3, search.size()), tasks);
  std::vector<std::vector<Permutation>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) search.run(tasks[t], results[t]);
  };
  std::vector<std::jthread> pool;
  for (int k = 0; k < workers; ++k) pool.emplace_back(worker);
  pool.clear();
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

std::vector<Tableau> h_strict_tableaux(const Composition& shape, const HessenbergFunction& h,
                                       int workers) {
  std::vector<Tableau> out;
  for (const auto& w : h_strict_permutations(shape, h, workers)) out.push_back(tableau_of(w, shape));
  return out;
}

std::vector<CellDescriptor> enumerate_cells(const Composition& shape, const HessenbergFunction& h,
                                            int workers) {
  const auto springer = HessenbergFunction::springer(shape.size());
  std::vector<CellDescriptor> cells;
  for (auto& w : h_strict_permutations(shape, h, workers)) {
    Tableau t = tableau_of(w, shape);
    InversionSet hess = hessenberg_inversions(t, h);
    InversionSet spr = h.is_springer() ? hess : hessenberg_inversions(t, springer);
    const int dim = static_cast<int>(hess.size());
    cells.push_back({std::move(w), std::move(t), std::move(hess), std::move(spr), dim});
  }
  return cells;
}

long long PoincareData::total() const {
  long long s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

PoincareData poincare(const std::vector<CellDescriptor>& cells) {
  PoincareData out;
  for (const auto& c : cells) {
    if (static_cast<int>(out.coeffs.size()) <= c.dim) out.coeffs.resize(c.dim + 1, 0);
    ++out.coeffs[c.dim];
  }
  return out;
}

PoincareData poincare(const Composition& shape, const HessenbergFunction& h, int workers) {
  PoincareData out;
  for (const auto& w : h_strict_permutations(shape, h, workers)) {
    const auto dim = static_cast<int>(hessenberg_inversions(w, shape, h).size());
    if (static_cast<int>(out.coeffs.size()) <= dim) out.coeffs.resize(dim + 1, 0);
    ++out.coeffs[dim];
  }
  return out;
}

std::vector<long long> betti_numbers(const Composition& shape, const HessenbergFunction& h) {
  return poincare(shape, h).coeffs;
}

std::optional<Tableau> r0_tableau(const Composition& shape, const HessenbergFunction& h) {
  const int n = shape.size();
  if (h.size() != n) throw std::invalid_argument("r0_tableau: size mismatch between shape and h");
  std::vector<std::vector<int>> rows(shape.num_rows());
  for (int r = 0; r < shape.num_rows(); ++r) rows[r].assign(shape.parts()[r], 0);
  std::vector<char> used(n + 1, 0);
  for (int c = shape.num_columns(); c >= 1; --c) {
    for (int r = 1; r <= shape.num_rows(); ++r) {
      if (shape.row_length(r) < c) continue;
      int bound = n;
      if (shape.row_length(r) > c) bound = h(rows[r - 1][c]);
      int pick = 0;
      for (int v = bound; v >= 1; --v)
        if (!used[v]) {
          pick = v;
          break;
        }
      if (!pick) return std::nullopt;
      used[pick] = 1;
      rows[r - 1][c - 1] = pick;
    }
  }
  return Tableau(std::move(rows));
}

// ---------------------------------------------------------- InversionProfile

InversionProfile::InversionProfile(int columns) : columns_(columns) {}

int InversionProfile::at(int i, int j) const {
  if (i < 1 || j < i || j > columns_)
    throw std::out_of_range("inversion profile index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  auto it = counts_.find({i, j});
  return it == counts_.end() ? 0 : it->second;
}

void InversionProfile::add(int i, int j, int count) {
  if (i < 1 || j < i || j > columns_) throw std::out_of_range("inversion profile index out of range");
  counts_[{i, j}] += count;
}

int InversionProfile::total() const {
  int s = 0;
  for (const auto& [_, c] : counts_) s += c;
  return s;
}

InversionProfile inversion_profile(const Tableau& t, const HessenbergFunction& h) {
  if (!is_h_strict(t, h)) throw std::invalid_argument("inversion_profile: tableau is not h-strict");
  InversionProfile prof(t.num_columns());
  const auto inv = hessenberg_inversions(t, h);
  for (const auto& p : inv.pairs())
    prof.add(t.position(p.high).col, t.position(p.low).col);
  return prof;
}

// -------------------------------------------------------------- column sorting

std::string ColumnWindow::to_text() const {
  std::string out;
  for (const auto& row : grid) {
    bool any = false;
    for (const auto& e : row) any = any || e.has_value();
    if (!any) continue;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += row[c] ? std::to_string(*row[c]) : ".";
    }
    out += '\n';
  }
  return out;
}

int window_pairs(const ColumnWindow& w, const HessenbergFunction& h) {
  const std::size_t kcol = 0;
  const std::size_t lcol = w.two_column() ? 0 : 1;
  const std::size_t rcol = lcol + 1;
  int count = 0;
  for (std::size_t rl = 0; rl < w.grid.size(); ++rl) {
    const auto& l = w.grid[rl][lcol];
    if (!l) continue;
    const auto& r = w.grid[rl][rcol];
    for (std::size_t rk = 0; rk < w.grid.size(); ++rk) {
      const auto& k = w.grid[rk][kcol];
      if (!k || *k <= *l) continue;
      if (w.two_column() && rk <= rl) continue;
      if (r && *k > h(*r)) continue;
      ++count;
    }
  }
  return count;
}

namespace {

bool window_h_strict(const ColumnWindow& w, const HessenbergFunction& h) {
  const std::size_t left = w.two_column() ? 0 : 1;
  for (const auto& row : w.grid)
    if (row[left] && row[left + 1] && *row[left] > h(*row[left + 1])) return false;
  return true;
}

}  // namespace

std::vector<SortStep> column_sort_trace(const Tableau& t, int i, int j, const HessenbergFunction& h) {
  const int m = t.num_columns();
  if (i < 1 || j < i || j > m)
    throw std::invalid_argument("column_sort_trace: need 1 <= i <= j <= " + std::to_string(m) +
                                ", got i=" + std::to_string(i) + ", j=" + std::to_string(j));
  if (!is_h_strict(t, h)) throw std::invalid_argument("column_sort_trace: tableau is not h-strict");

  std::vector<int> cols = (i == j) ? std::vector<int>{i, i + 1} : std::vector<int>{i, j, j + 1};
  ColumnWindow win{i, j, {}};
  for (int r = 1; r <= t.num_rows(); ++r) {
    std::vector<std::optional<int>> row;
    for (int c : cols) row.push_back(t.entry({r, c}));
    win.grid.push_back(std::move(row));
  }

  std::vector<SortStep> trace;
  auto record = [&] { trace.push_back({win, window_pairs(win, h), window_h_strict(win, h)}); };
  record();

  constexpr int kBlank = std::numeric_limits<int>::max();
  auto key = [&](std::size_t r, std::size_t c) { return win.grid[r][c].value_or(kBlank); };
  auto bubble = [&](std::size_t c) {
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t r = 0; r + 1 < win.grid.size(); ++r) {
        if (key(r, c) <= key(r + 1, c)) continue;
        for (std::size_t d = c; d < cols.size(); ++d) std::swap(win.grid[r][d], win.grid[r + 1][d]);
        swapped = true;
        record();
      }
    }
  };
  for (std::size_t c = 0; c < cols.size(); ++c) bubble(c);
  return trace;
}

}  // namespace hesspave
