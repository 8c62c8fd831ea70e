#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubiccount/brute_oracle.hpp"

using namespace cubiccount;

namespace {

FieldConfig F49() { return FieldConfig(7, 2, {1, 0, 1}); }

// 18 reference solutions of x1^3 + x2^3 = u + 1 over F_7[u]/(u^2+1);
// the other 18 are the coordinate swaps. Each is re-verified below by
// substitution.
const std::pair<std::vector<uint64_t>, std::vector<uint64_t>> kReferencePairs[] = {
    {{1, 0}, {0, 3}}, {{1, 0}, {0, 5}}, {{1, 0}, {0, 6}},
    {{2, 0}, {0, 3}}, {{2, 0}, {0, 5}}, {{2, 0}, {0, 6}},
    {{4, 0}, {0, 3}}, {{4, 0}, {0, 5}}, {{4, 0}, {0, 6}},
    {{4, 1}, {6, 3}}, {{4, 1}, {3, 5}}, {{4, 1}, {5, 6}},
    {{1, 2}, {6, 3}}, {{1, 2}, {3, 5}}, {{1, 2}, {5, 6}},
    {{2, 4}, {6, 3}}, {{2, 4}, {3, 5}}, {{2, 4}, {5, 6}},
};

}  // namespace

TEST_CASE("the F_49 solution list is complete and swap-closed") {
  FieldConfig F = F49();
  FieldElement one = F.one();
  FieldElement z = F.element({1, 1});

  CHECK(brute_N(F, one, one, z) == 36);

  auto sols = enumerate_N_solutions(F, one, one, z);
  REQUIRE(sols.size() == 36);

  auto contains = [&](const FieldElement& a, const FieldElement& b) {
    return std::find(sols.begin(), sols.end(), std::make_pair(a, b)) !=
           sols.end();
  };
  for (const auto& [a, b] : kReferencePairs) {
    FieldElement x1 = F.element(a);
    FieldElement x2 = F.element(b);
    CHECK(contains(x1, x2));
    CHECK(contains(x2, x1));  // closed under coordinate swap
  }

  // sorted lexicographically, constant term first
  CHECK(std::is_sorted(sols.begin(), sols.end(),
                       [](const auto& x, const auto& y) {
                         if (x.first != y.first)
                           return lex_less(x.first, y.first);
                         return lex_less(x.second, y.second);
                       }));

  // every listed pair actually solves the equation
  for (const auto& [x1, x2] : sols) {
    FieldElement lhs = F.add(F.mul(x1, F.mul(x1, x1)), F.mul(x2, F.mul(x2, x2)));
    CHECK(lhs == z);
  }
}

TEST_CASE("trivial counts") {
  for (auto [p, k] :
       {std::pair<uint64_t, unsigned>{7, 1}, {7, 2}, {5, 1}, {2, 2}}) {
    FieldConfig F(p, k);
    CHECK(brute_A(F, F.zero(), 1) == 1);  // only x = 0 cubes to 0
  }
  FieldConfig F5(5, 1);
  for (uint64_t i = 0; i < 5; ++i)
    CHECK(brute_A(F5, F5.element_at(i), 2) == 5);
}

TEST_CASE("budget enforcement") {
  FieldConfig F(7, 1);
  FieldElement one = F.one();
  CHECK_THROWS_AS(brute_M(F, one, one, one, {100}), BudgetExceededError);
  CHECK_THROWS_AS(brute_A(F, one, 3, {342}), BudgetExceededError);
  CHECK(brute_A(F, one, 3, {343}) == brute_A(F, one, 3));
  CHECK_THROWS_AS(brute_B(F, one, 2, {342}), BudgetExceededError);
  CHECK_THROWS_AS(enumerate_N_solutions(F, one, one, one, {48}),
                  BudgetExceededError);
}

TEST_CASE("determinism and argument validation") {
  FieldConfig F = F49();
  FieldElement a = F.element({3, 2});
  FieldElement b = F.element({0, 5});
  FieldElement c = F.element({6, 6});
  CHECK(brute_M(F, a, b, c) == brute_M(F, a, b, c));
  CHECK(brute_N(F, a, b, c) == brute_N(F, a, b, c));

  CHECK_THROWS_AS(brute_M(F, F.zero(), b, c), std::invalid_argument);
  CHECK_THROWS_AS(brute_N(F, a, F.zero(), c), std::invalid_argument);
  CHECK_THROWS_AS(brute_B(F, F.zero(), 1), std::invalid_argument);
  CHECK_THROWS_AS(brute_A(F, a, 0), std::invalid_argument);
  CHECK_THROWS_AS(brute_B(F, a, -1), std::invalid_argument);
}

TEST_CASE("definitional overlap M(1,1,z) = B_2(z)") {
  for (auto [p, k] : {std::pair<uint64_t, unsigned>{7, 1}, {13, 1}, {2, 2}}) {
    FieldConfig F(p, k);
    FieldElement one = F.one();
    for (uint64_t i = 1; i < F.q(); ++i) {
      FieldElement z = F.element_at(i);
      CHECK(brute_M(F, one, one, z) == brute_B(F, z, 2));
    }
  }
}

TEST_CASE("empty and symmetric solution lists") {
  FieldConfig P(7, 1);
  FieldElement one = P.one();
  FieldElement three = P.from_subfield(3);
  auto empty = enumerate_N_solutions(P, one, one, three);
  CHECK(empty.empty());
  CHECK(brute_A(P, three, 2) == 0);

  auto sols = enumerate_N_solutions(P, one, one, one);
  CHECK((BruteCount)sols.size() == brute_N(P, one, one, one));
  for (const auto& [x1, x2] : sols) {
    CHECK(std::find(sols.begin(), sols.end(), std::make_pair(x2, x1)) !=
          sols.end());
  }
}
