#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <numeric>

#include "hesspave/combinatorics.hpp"

using namespace hesspave;

namespace {

// Hook-length formula, independent of any tableau enumeration.
long long hook_length_count(const Composition& lambda) {
  const auto& p = lambda.parts();
  long long num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  long long den = 1;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) {
      int below = 0;
      for (int rr = r + 1; rr < static_cast<int>(p.size()); ++rr)
        if (p[rr] > c) ++below;
      den *= (p[r] - c - 1) + below + 1;
    }
  return num / den;
}

long long count_standard(const Composition& lambda) {
  long long c = 0;
  for (const auto& w : Permutation::all(lambda.size()))
    if (is_standard(tableau_of(w, lambda))) ++c;
  return c;
}

}  // namespace

TEST_CASE("composition basics") {
  Composition c({2, 3, 1, 1});
  CHECK(c.size() == 7);
  CHECK(c.num_rows() == 4);
  CHECK(c.num_columns() == 3);
  CHECK_FALSE(c.is_partition());
  CHECK(Composition({3, 2, 2}).is_partition());
  CHECK(Composition({2, 0, 1}) == Composition({2, 1}));
  CHECK(Composition(std::vector<int>{}).empty());
}

TEST_CASE("hessenberg function validation") {
  CHECK(HessenbergFunction::springer(4).values() == std::vector<int>{0, 1, 2, 3});
  CHECK(HessenbergFunction::shifted(5, 2).values() == std::vector<int>{0, 0, 1, 2, 3});
  CHECK_THROWS_AS(HessenbergFunction({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HessenbergFunction({0, 1, 0}), std::invalid_argument);
  CHECK(HessenbergFunction::violations(std::vector<int>{2, 0}).size() == 2);
  // Admissible h for n are counted by the Catalan number C_n.
  const std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) CHECK(HessenbergFunction::all(n).size() == catalan[n - 1]);
  CHECK(h_leq(HessenbergFunction::shifted(4, 2), HessenbergFunction::springer(4)));
}

TEST_CASE("permutations") {
  Permutation w({4, 3, 1, 6, 5, 7, 2});
  CHECK(w.length() == 9);
  CHECK((w * w.inverse()).is_identity());
  CHECK(Permutation::all(4).size() == 24);
  CHECK_THROWS(Permutation({1, 1, 2}));
  const auto f = factorize(w);
  CHECK(f.v * f.y == w);
  CHECK(f.v.length() + f.y.length() == w.length());
  CHECK(f.v(7) == w(7));
  CHECK(f.y(7) == 7);
}

TEST_CASE("mahonian distribution by brute force") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<long long> dist(n * (n - 1) / 2 + 1, 0);
    for (const auto& w : Permutation::all(n)) {
      int inv = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (w(a) > w(b)) ++inv;
      CHECK(static_cast<int>(inversions(w).size()) == inv);
      ++dist[inv];
    }
    // Coefficients of prod_{k<=n} (1 + q + ... + q^{k-1}).
    std::vector<long long> poly{1};
    for (int k = 1; k <= n; ++k) {
      std::vector<long long> next(poly.size() + k - 1, 0);
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (int b = 0; b < k; ++b) next[a + b] += poly[a];
      poly = next;
    }
    CHECK(dist == poly);
  }
}

TEST_CASE("base filling and R(w)") {
  CHECK(base_filling(Composition({2, 3, 1, 1})).rows() ==
        std::vector<std::vector<int>>{{4, 6}, {3, 5, 7}, {2}, {1}});
  CHECK(tableau_of(Permutation({3, 2, 6, 1, 7, 4, 5}), Composition({3, 2, 2})).rows() ==
        std::vector<std::vector<int>>{{1, 3, 5}, {2, 7}, {4, 6}});
  CHECK(tableau_of(Permutation({4, 3, 1, 6, 5, 7, 2}), Composition({2, 3, 1, 1})).rows() ==
        std::vector<std::vector<int>>{{1, 4}, {2, 5, 6}, {7}, {3}});
  for (const auto& w : Permutation::all(5)) CHECK(permutation_of(tableau_of(w, Composition({2, 2, 1}))) == w);
}

TEST_CASE("h-strictness") {
  const auto h = HessenbergFunction::shifted(12, 3);
  CHECK_FALSE(is_h_strict(base_filling(Composition({4, 4, 3, 1})), h));
  CHECK(is_h_strict(Tableau({{3, 6, 9, 12}, {2, 5, 8, 11}, {4, 7, 10}, {1}}), h));
  CHECK(is_row_strict(Tableau({{1, 3}, {2}})));
  CHECK_FALSE(is_row_strict(Tableau({{3, 1}, {2}})));
}

TEST_CASE("standardization") {
  const Tableau r({{2, 4, 8, 10}, {1, 5, 7, 11}, {3, 9, 12}, {6}});
  CHECK(standardize(r).rows() == std::vector<std::vector<int>>{{1, 4, 7, 10}, {2, 5, 8, 11}, {3, 9, 12}, {6}});
  CHECK(is_standard(standardize(r)));
  CHECK(standardize(standardize(r)) == standardize(r));
}

TEST_CASE("standard tableau count matches the hook-length formula") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) CHECK(count_standard(lambda) == hook_length_count(lambda));
  CHECK(hook_length_count(Composition({2, 2, 2})) == 5);
}

TEST_CASE("partitions and compositions") {
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) {
    CHECK(partitions(n).size() == p[n - 1]);
    CHECK(compositions(n).size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("deleting the last box") {
  const auto d = delete_last_box(Tableau({{1, 3}, {2, 4}}));
  CHECK(d.shape == Composition({2, 1}));
  CHECK(d.tableau.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK_THROWS(delete_last_box(Tableau({{4, 1}, {2, 3}})));
}

TEST_CASE("text round trip") {
  const Tableau t({{1, 4}, {2, 5, 6}, {7}, {3}});
  CHECK(Tableau::from_text(t.to_text()) == t);
  CHECK_THROWS(Tableau::from_text("1 2\n2"));
}
