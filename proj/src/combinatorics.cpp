#include "hesspave/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hesspave {

std::string join_ints(std::span<const int> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
    if (p > 0) parts_.push_back(p);
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::num_columns() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::to_string() const { return "(" + join_ints(parts_) + ")"; }

// ------------------------------------------------------- HessenbergFunction

std::vector<std::string> HessenbergFunction::violations(std::span<const int> values) {
  std::vector<std::string> errs;
  if (values.empty()) errs.emplace_back("Hessenberg function must have at least one value");
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    if (values[k] < 0) {
      errs.push_back("h(" + std::to_string(i) + ") = " + std::to_string(values[k]) + " is negative");
    }
    if (values[k] >= i) {
      errs.push_back("h(" + std::to_string(i) + ") = " + std::to_string(values[k]) +
                     " violates h(i) < i");
    }
    if (k > 0 && values[k] < values[k - 1]) {
      errs.push_back("h(" + std::to_string(i) + ") = " + std::to_string(values[k]) + " < h(" +
                     std::to_string(i - 1) + ") = " + std::to_string(values[k - 1]) +
                     " violates monotonicity");
    }
  }
  return errs;
}

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  auto errs = violations(values_);
  if (!errs.empty()) {
    std::string msg = "invalid Hessenberg function";
    for (const auto& e : errs) msg += "; " + e;
    throw std::invalid_argument(msg);
  }
}

HessenbergFunction HessenbergFunction::springer(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::shifted(int n, int shift) {
  if (shift < 1) throw std::invalid_argument("shift must be at least 1");
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = std::max(0, i - shift);
  return HessenbergFunction(std::move(v));
}

std::vector<HessenbergFunction> HessenbergFunction::all(int n) {
  std::vector<HessenbergFunction> out;
  if (n < 1) return out;
  std::vector<int> cur(n, 0);
  std::function<void(int)> rec = [&](int i) {  // fill h(i), i 1-based
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = (i == 1 ? 0 : cur[i - 2]); v <= i - 1; ++v) {
      cur[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

bool HessenbergFunction::is_springer() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i - 1) return false;
  return true;
}

std::string HessenbergFunction::to_string() const { return "(" + join_ints(values_) + ")"; }

bool h_leq(const HessenbergFunction& h1, const HessenbergFunction& h2) {
  if (h1.size() != h2.size()) throw std::invalid_argument("h_leq: size mismatch");
  for (int i = 1; i <= h1.size(); ++i)
    if (h1(i) > h2(i)) return false;
  return true;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
      throw std::invalid_argument("not a permutation: [" + join_ints(word_) + "]");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int len = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (word_[i] < word_[j]) ++len;
  return len;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation operator*(const Permutation& v, const Permutation& y) {
  if (v.size() != y.size()) throw std::invalid_argument("permutation product: size mismatch");
  std::vector<int> w(v.size());
  for (int i = 1; i <= v.size(); ++i) w[i - 1] = v(y(i));
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const { return "[" + join_ints(word_) + "]"; }

// -------------------------------------------------------------------- Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) {
  for (auto& r : rows)
    if (!r.empty()) rows_.push_back(std::move(r));
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Composition(parts);
  const int n = shape_.size();
  index_.assign(n, BoxPosition{});
  std::vector<char> seen(n + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("tableau entries must be exactly 1.." + std::to_string(n));
      seen[v] = 1;
      index_[v - 1] = BoxPosition{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    }
  }
}

std::optional<int> Tableau::entry(BoxPosition p) const {
  if (p.row < 1 || p.row > num_rows() || p.col < 1 || p.col > shape_.row_length(p.row))
    return std::nullopt;
  return at(p.row, p.col);
}

std::optional<int> Tableau::right_of(int value) const {
  auto p = position(value);
  return entry({p.row, p.col + 1});
}

std::optional<int> Tableau::left_of(int value) const {
  auto p = position(value);
  return entry({p.row, p.col - 1});
}

std::vector<int> Tableau::column(int col) const {
  std::vector<int> out;
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) >= col) out.push_back(r[col - 1]);
  return out;
}

std::string Tableau::to_text() const {
  std::string out;
  for (const auto& r : rows_) {
    out += join_ints(r, " ");
    out += '\n';
  }
  return out;
}

Tableau Tableau::from_text(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("bad tableau entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

// ------------------------------------------------------------------ fillings

Tableau base_filling(const Composition& shape) {
  std::vector<std::vector<int>> rows(shape.num_rows());
  for (int r = 0; r < shape.num_rows(); ++r) rows[r].assign(shape.parts()[r], 0);
  int next = 1;
  for (int c = 1; c <= shape.num_columns(); ++c)
    for (int r = shape.num_rows(); r >= 1; --r)
      if (shape.row_length(r) >= c) rows[r - 1][c - 1] = next++;
  return Tableau(std::move(rows));
}

Tableau tableau_of(const Permutation& w, const Composition& shape) {
  if (w.size() != shape.size())
    throw std::invalid_argument("tableau_of: |w| = " + std::to_string(w.size()) +
                                " but the shape has " + std::to_string(shape.size()) + " boxes");
  auto rows = base_filling(shape).rows();
  const Permutation winv = w.inverse();
  for (auto& r : rows)
    for (int& v : r) v = winv(v);
  return Tableau(std::move(rows));
}

Permutation permutation_of(const Tableau& t) {
  const Tableau base = base_filling(t.shape());
  std::vector<int> w(t.size());
  for (int j = 1; j <= t.size(); ++j) {
    auto p = t.position(j);
    w[j - 1] = base.at(p.row, p.col);
  }
  return Permutation(std::move(w));
}

bool is_row_strict(const Tableau& t) {
  for (const auto& r : t.rows())
    for (std::size_t c = 1; c < r.size(); ++c)
      if (r[c - 1] >= r[c]) return false;
  return true;
}

bool is_h_strict(const Tableau& t, const HessenbergFunction& h) {
  if (t.size() != h.size())
    throw std::invalid_argument("is_h_strict: tableau has " + std::to_string(t.size()) +
                                " boxes but h has " + std::to_string(h.size()) + " values");
  for (const auto& r : t.rows())
    for (std::size_t c = 1; c < r.size(); ++c)
      if (r[c - 1] > h(r[c])) return false;
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_row_strict(t)) return false;
  for (int c = 1; c <= t.num_columns(); ++c) {
    // Column c must occupy a top segment of rows and increase downward.
    int prev = 0;
    bool gap = false;
    for (int r = 1; r <= t.num_rows(); ++r) {
      auto e = t.entry({r, c});
      if (!e) {
        gap = true;
        continue;
      }
      if (gap || *e < prev) return false;
      prev = *e;
    }
  }
  return true;
}

Tableau standardize(const Tableau& t) {
  if (!is_row_strict(t)) throw std::invalid_argument("standardize: tableau is not row-strict");
  auto rows = t.rows();
  for (int c = 1; c <= t.num_columns(); ++c) {
    std::vector<int> col = t.column(c);
    std::sort(col.begin(), col.end());
    std::size_t k = 0;
    for (auto& r : rows)
      if (static_cast<int>(r.size()) >= c) r[c - 1] = col[k++];
  }
  return Tableau(std::move(rows));
}

std::vector<InversionPair> inversions(const Permutation& w) {
  std::vector<InversionPair> out;
  for (int i = w.size(); i >= 1; --i)
    for (int j = i - 1; j >= 1; --j)
      if (w(i) < w(j)) out.push_back({i, j});
  return out;
}

Factorization factorize(const Permutation& w) {
  const int n = w.size();
  if (n < 1) throw std::invalid_argument("factorize: empty permutation");
  const int i = w(n);
  std::vector<int> vword;
  for (int a = 1; a <= n; ++a)
    if (a != i) vword.push_back(a);
  vword.push_back(i);
  Permutation v(std::move(vword));
  Permutation y = v.inverse() * w;
  return {std::move(v), std::move(y)};
}

BoxDeletion delete_last_box(const Tableau& t) {
  const int n = t.size();
  if (n == 0) throw std::invalid_argument("delete_last_box: empty tableau");
  if (!t.ends_row(n))
    throw std::invalid_argument("delete_last_box: " + std::to_string(n) + " does not end its row");
  auto rows = t.rows();
  rows[t.position(n).row - 1].pop_back();
  Tableau reduced(std::move(rows));
  return {reduced.shape(), std::move(reduced)};
}

std::vector<Composition> partitions(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n);
  return out;
}

}  // namespace hesspave
