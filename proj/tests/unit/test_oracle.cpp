#include <doctest.h>

#include "hesspave/oracle.hpp"
#include "hesspave/paving.hpp"

using namespace hesspave;

namespace {

long long q_factorial(int n, long long q) {
  long long out = 1;
  for (int i = 1; i <= n; ++i) {
    long long bracket = 0, power = 1;
    for (int k = 0; k < i; ++k, power *= q) bracket += power;
    out *= bracket;
  }
  return out;
}

}  // namespace

TEST_CASE("field specification") {
  CHECK(FieldSpec(3).q == 3);
  CHECK_THROWS(FieldSpec(4));
  CHECK_THROWS(FieldSpec(17));
  CHECK_THROWS(FieldSpec(1));
}

TEST_CASE("hand-computed counts for n = 2") {
  // X regular: only the line ker X survives.
  CHECK(variety_point_count(Composition({2}), HessenbergFunction({0, 1}), FieldSpec(3)).total == 1);
  CHECK(variety_point_count(Composition({2}), HessenbergFunction({0, 0}), FieldSpec(3)).total == 0);
  // X = 0: every line of F_q^2.
  CHECK(variety_point_count(Composition({1, 1}), HessenbergFunction({0, 0}), FieldSpec(5)).total == 6);
}

TEST_CASE("X = 0 counts the full flag variety") {
  for (int n = 1; n <= 4; ++n)
    for (int q : {2, 3}) {
      const auto rep = variety_point_count(Composition(std::vector<int>(n, 1)), HessenbergFunction::springer(n),
                                           FieldSpec(q));
      CHECK(rep.total == q_factorial(n, q));
      CHECK(rep.match);
    }
}

TEST_CASE("springer fiber (2,2) over F_2") {
  const auto rep = variety_point_count(Composition({2, 2}), HessenbergFunction::springer(4), FieldSpec(2));
  CHECK(rep.total == 15);
  CHECK(rep.predicted == 15);
  CHECK(rep.per_cell.size() == 24);
  for (const auto& c : rep.per_cell) CHECK(c.match);
}

TEST_CASE("single cell counts of the (2,2,2) example") {
  const Permutation w({3, 6, 2, 1, 5, 4});
  const Composition lambda({2, 2, 2});
  CHECK(cell_point_count(w, lambda, HessenbergFunction::springer(6), FieldSpec(2)) == 64);
  CHECK(cell_point_count(w, lambda, HessenbergFunction({0, 1, 1, 1, 3, 4}), FieldSpec(2)) == 32);
}

TEST_CASE("batched counts agree with single counts and across workers") {
  const Composition lambda({2, 1, 1});
  const auto hs = HessenbergFunction::all(4);
  const auto batch = variety_point_counts(lambda, hs, FieldSpec(3), kDefaultBudgetBits, 2);
  REQUIRE(batch.size() == hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k) {
    const auto single = variety_point_count(lambda, hs[k], FieldSpec(3));
    CHECK(batch[k].total == single.total);
    CHECK(batch[k].match);
  }
}

TEST_CASE("budget is enforced before enumeration") {
  CHECK_THROWS_AS(variety_point_count(Composition({2, 2, 2}), HessenbergFunction::springer(6), FieldSpec(2), 8),
                  BudgetExceeded);
  try {
    cell_point_count(Permutation({6, 5, 4, 3, 2, 1}), Composition({2, 2, 2}), HessenbergFunction::springer(6),
                     FieldSpec(3), 10);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.bits() > 10);
    CHECK(e.budget() == 10);
  }
}

TEST_CASE("D_w equals the Springer cell") {
  const auto cmp = dw_compare(Permutation({3, 6, 2, 1, 5, 4}), Composition({2, 2, 2}), FieldSpec(2));
  CHECK(cmp.equal);
  CHECK(cmp.injective());
  CHECK(cmp.assignments == 64);
  CHECK(cmp.cell_points == 64);
  for (const auto& w : Permutation::all(4))
    if (is_row_strict(tableau_of(w, Composition({2, 1, 1}))))
      CHECK(dw_equals_cell(w, Composition({2, 1, 1}), FieldSpec(2)));
}

TEST_CASE("zero structure and projection checks") {
  const Composition lambda({2, 2});
  for (const auto& w : Permutation::all(4)) {
    if (!is_row_strict(tableau_of(w, lambda))) continue;
    CHECK(zeros_structure_check(w, lambda, FieldSpec(2)));
    CHECK(projection_check(w, lambda, FieldSpec(2)));
  }
}

TEST_CASE("counts are invariant under conjugation") {
  const auto rep = conjugation_invariance(Composition({2, 1}), HessenbergFunction({0, 0, 1}), FieldSpec(3), 3, 42);
  CHECK(rep.invariant);
  CHECK(rep.trial_counts.size() == 3);
  CHECK(rep.seed == 42);
  const auto again = conjugation_invariance(Composition({2, 1}), HessenbergFunction({0, 0, 1}), FieldSpec(3), 3, 42);
  CHECK(again.trial_counts == rep.trial_counts);

  SmallMatrix singular(2);
  CHECK_THROWS(small_conjugate(small_nilpotent(Composition({2}), 3), singular, 3));
  const auto x = small_nilpotent(Composition({2, 2}), 2);
  CHECK(hessenberg_point_count(x, HessenbergFunction::springer(4), FieldSpec(2)) == 15);
}
