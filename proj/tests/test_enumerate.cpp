#include <set>

#include "doctest.h"
#include "jd/enumerate.hpp"
#include "oracle.hpp"

using namespace jd;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("degree zero is the bare support") {
  for (Support support : {Support::Circle, Support::Empty}) {
    const auto out = enumerate_diagrams(support, 0);
    REQUIRE(out.size() == 1);
    CHECK(out[0].key.legs == 0);
    CHECK(out[0].key.tri == 0);
    CHECK(out[0].key.edges.empty());
  }
}

TEST_CASE("degree one has a single class on each support") {
  const auto circle = enumerate_diagrams(Support::Circle, 1);
  REQUIRE(circle.size() == 1);
  CHECK(circle[0].key == canonicalize(single_chord()).key);

  const auto empty = enumerate_diagrams(Support::Empty, 1);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].key == canonicalize(theta()).key);
}

TEST_CASE("degree two matches the brute-force oracle") {
  for (Support support : {Support::Circle, Support::Empty}) {
    const auto classes = oracle::naive_enumerate(support, 2);
    int zero = 0;
    for (const auto& cls : classes) zero += cls.zero;

    EnumerateOptions include_zero;
    include_zero.exclude_zero_sign = false;
    const auto all = enumerate_diagrams(support, 2, include_zero);
    const auto nonzero = enumerate_diagrams(support, 2);

    CHECK(all.size() == classes.size());
    CHECK(all.size() - nonzero.size() == static_cast<size_t>(zero));

    // engine classes must be pairwise non-isomorphic and each oracle
    // class must canonicalize onto a listed key
    std::set<CanonKey> keys;
    for (const auto& cd : all) keys.insert(cd.key);
    CHECK(keys.size() == all.size());
    for (const auto& cls : classes) {
      CHECK(keys.count(canonicalize(cls.rep).key) == 1);
      CHECK((canonicalize(cls.rep).sign == Sign::Zero) == cls.zero);
    }
  }
}

TEST_CASE("degree-two class counts, frozen from the oracle") {
  // circle: crossing, parallel, the three-leg star, the two-leg bubble,
  // plus the antisymmetric one-leg bubble; empty: the two-bubble chain,
  // the complete graph on four vertices, theta disjoint theta
  EnumerateOptions include_zero;
  include_zero.exclude_zero_sign = false;
  CHECK(enumerate_diagrams(Support::Circle, 2, include_zero).size() == 5);
  CHECK(enumerate_diagrams(Support::Circle, 2).size() == 4);
  CHECK(enumerate_diagrams(Support::Empty, 2, include_zero).size() == 3);
  CHECK(enumerate_diagrams(Support::Empty, 2).size() == 3);
}

TEST_CASE("chord-only classes count 1, 2, 5, 18 at degrees 1..4") {
  const int expected[] = {1, 2, 5, 18};
  for (int m = 1; m <= 4; ++m) {
    int chords = 0;
    for (const auto& cd : enumerate_diagrams(Support::Circle, m))
      if (cd.key.legs == 2 * m) ++chords;
    CHECK(chords == expected[m - 1]);
  }
}

TEST_CASE("every circle class has all components on the circle") {
  for (int m = 0; m <= 3; ++m)
    for (const auto& cd : enumerate_diagrams(Support::Circle, m))
      CHECK(every_component_has_leg(to_diagram(cd.key)));
}

TEST_CASE("empty-support classes have 2m vertices and 3m edges") {
  for (int m = 0; m <= 3; ++m) {
    for (const auto& cd : enumerate_diagrams(Support::Empty, m)) {
      CHECK(cd.key.tri == 2 * m);
      CHECK(cd.key.legs == 0);
      CHECK(static_cast<int>(cd.key.edges.size()) == 3 * m);
    }
  }
}

TEST_CASE("results are deterministic and job-count independent") {
  const auto once = enumerate_diagrams(Support::Circle, 3);
  const auto twice = enumerate_diagrams(Support::Circle, 3);
  EnumerateOptions parallel;
  parallel.jobs = 3;
  const auto threaded = enumerate_diagrams(Support::Circle, 3, parallel);
  REQUIRE(once.size() == twice.size());
  REQUIRE(once.size() == threaded.size());
  for (size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].key == twice[i].key);
    CHECK(once[i].key == threaded[i].key);
  }
  // sorted by canonical key
  for (size_t i = 1; i < once.size(); ++i) CHECK(once[i - 1].key < once[i].key);
}

TEST_CASE("the degree budget is enforced") {
  CHECK_THROWS_AS(enumerate_diagrams(Support::Circle, 7), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_diagrams(Support::Empty, 5), BudgetExceeded);
  EnumerateOptions loose;
  loose.budget.max_degree_empty = 5;
  CHECK_THROWS_AS(enumerate_diagrams(Support::Empty, 6, loose), BudgetExceeded);
}

TEST_CASE("max_legs restricts to the low-leg classes") {
  EnumerateOptions capped;
  capped.max_legs = 2;
  const auto low = enumerate_diagrams(Support::Circle, 2, capped);
  for (const auto& cd : low) CHECK(cd.key.legs <= 2);

  std::set<CanonKey> full;
  for (const auto& cd : enumerate_diagrams(Support::Circle, 2))
    if (cd.key.legs <= 2) full.insert(cd.key);
  CHECK(full.size() == low.size());
  for (const auto& cd : low) CHECK(full.count(cd.key) == 1);
}

TEST_SUITE_END();
