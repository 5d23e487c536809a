#include "doctest.h"
#include "jd/linalg.hpp"

using namespace jd;

TEST_SUITE_BEGIN("relations");

TEST_CASE("AS vectors cancel against the folded signs") {
  for (Support support : {Support::Circle, Support::Empty}) {
    const int bound = support == Support::Circle ? 3 : 2;
    for (int m = 0; m <= bound; ++m)
      CHECK(as_relations(support, m).relations.empty());
  }
}

TEST_CASE("a wrong-sign AS family would kill theta") {
  // the fault-injection contract: a sign bug in AS generation turns the
  // cancelling pair into 2*theta, which collapses dim A_1(empty) to 0
  // and is caught by the tabulated-dimension check
  const auto gens = enumerate_diagrams(Support::Empty, 1);
  REQUIRE(gens.size() == 1);
  const ChordDiagram t = to_diagram(gens[0].key);

  DiagramVector buggy(Support::Empty, 1);
  ChordDiagram flipped = t;
  flipped.flip_orientation(0);
  buggy.add(t, 1);
  buggy.add(flipped, -1);  // wrong relative sign
  REQUIRE_FALSE(buggy.is_zero());

  SparseMatrix m;
  m.cols = 1;
  m.rows.push_back({{0, buggy.terms.begin()->second}});
  CHECK(1 - row_reduce(m).rank == 0);
  CHECK(build_quotient(Support::Empty, 1, QuotientFlags{}).dim() == 1);
}

TEST_CASE("IHX at degree 1 on the circle is empty") {
  CHECK(ihx_relations(Support::Circle, 1).relations.empty());
}

TEST_CASE("IHX on theta cancels identically") {
  CHECK(ihx_relations(Support::Empty, 1).relations.empty());
  CHECK(build_quotient(Support::Empty, 1, QuotientFlags{}).dim() == 1);
}

TEST_CASE("IHX at degree 2 on empty support has rank 1") {
  const RelationSet set = ihx_relations(Support::Empty, 2);
  CHECK_FALSE(set.relations.empty());
  CHECK(build_quotient(Support::Empty, 2, QuotientFlags{}).dim() == 2);
}

TEST_CASE("STU at degrees 0 and 1 cancels identically") {
  CHECK(stu_relations(0).relations.empty());
  CHECK(stu_relations(1).relations.empty());
  CHECK(build_quotient(Support::Circle, 1, QuotientFlags{}).dim() == 1);
}

TEST_CASE("FI kills exactly the isolated-chord classes") {
  const RelationSet deg1 = fi_relations(1);
  REQUIRE(deg1.relations.size() == 1);
  CHECK(deg1.relations[0].vec.terms.begin()->first ==
        canonicalize(single_chord()).key);

  // at degree 2 only the parallel-chords class contains an isolated chord
  const ChordDiagram parallel = make_diagram(
      Support::Circle,
      {Valence::Univalent, Valence::Univalent, Valence::Univalent,
       Valence::Univalent},
      {{0, 1}, {2, 3}}, {}, {0, 1, 2, 3});
  const RelationSet deg2 = fi_relations(2);
  REQUIRE(deg2.relations.size() == 1);
  CHECK(deg2.relations[0].vec.terms.begin()->first ==
        canonicalize(parallel).key);
  CHECK(deg2.relations[0].kind == RelationKind::FI);
}

TEST_CASE("relation vectors are homogeneous, canonical, deterministic") {
  for (int m = 0; m <= 3; ++m) {
    const auto gens = enumerate_diagrams(Support::Circle, m);
    const RelationSet a = ihx_relations(Support::Circle, m, gens);
    const RelationSet b = ihx_relations(Support::Circle, m, gens);
    REQUIRE(a.relations.size() == b.relations.size());
    for (size_t i = 0; i < a.relations.size(); ++i) {
      CHECK(a.relations[i].vec == b.relations[i].vec);
      for (const auto& [key, coeff] : a.relations[i].vec.terms) {
        CHECK(key.degree() == m);
        CHECK(key.support == Support::Circle);
        CHECK(coeff != 0);
      }
    }
  }
}

TEST_CASE("every relation vector reduces to zero in its quotient") {
  for (int m = 2; m <= 3; ++m) {
    const auto gens = enumerate_diagrams(Support::Circle, m);
    const QuotientSpace q =
        build_quotient(Support::Circle, m, {.fi = true, .stu = true}, gens);
    auto check_zero = [&q](const RelationSet& set) {
      for (const Relation& rel : set.relations) {
        const auto coords = q.reduce(rel.vec);
        for (const Rat& c : coords) CHECK(c == 0);
      }
    };
    check_zero(ihx_relations(Support::Circle, m, gens));
    check_zero(stu_relations(m, gens));
    check_zero(fi_relations(m, gens));
  }
}

TEST_CASE("dropping the separate STU family changes no dimension") {
  for (int m = 0; m <= 3; ++m) {
    const auto gens = enumerate_diagrams(Support::Circle, m);
    for (bool fi : {false, true}) {
      const int with_stu =
          build_quotient(Support::Circle, m, {.fi = fi, .stu = true}, gens).dim();
      const int without_stu =
          build_quotient(Support::Circle, m, {.fi = fi, .stu = false}, gens).dim();
      CHECK(with_stu == without_stu);
    }
  }
}

TEST_SUITE_END();
