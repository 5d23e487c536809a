#include <algorithm>
#include <random>

#include "doctest.h"
#include "jd/surgery.hpp"

using namespace jd;

namespace {

FramedLink link_of(std::initializer_list<const char*> names) {
  std::vector<LinkComponent> comps;
  int framing = 1;
  for (const char* name : names) {
    comps.push_back({name, framing});
    framing = -framing;
  }
  return make_framed_link(comps);
}

}  // namespace

TEST_SUITE_BEGIN("surgery");

TEST_CASE("the empty link brackets to the base manifold") {
  const ManifoldSymbol base{7, "M"};
  const auto oracle = make_synthetic_oracle(1);
  const BracketExpression expr = bracket(base, link_of({}), oracle);
  REQUIRE(expr.terms.size() == 1);
  CHECK(expr.terms.begin()->first == base);
  CHECK(expr.terms.begin()->second == 1);
}

TEST_CASE("a single component gives M minus the surgered manifold") {
  const ManifoldSymbol base{7, "M"};
  const auto oracle = make_synthetic_oracle(2);
  const FramedLink link = link_of({"K"});
  const BracketExpression expr = bracket(base, link, oracle);
  REQUIRE(expr.terms.size() == 2);
  CHECK(expr.terms.at(base) == 1);
  CHECK(expr.terms.at(oracle(base, link)) == -1);
}

TEST_CASE("two components give the inclusion-exclusion signs") {
  const ManifoldSymbol base{7, "M"};
  const auto oracle = make_synthetic_oracle(3);
  const FramedLink link = link_of({"K0", "K1"});
  const BracketExpression expr = bracket(base, link, oracle);
  REQUIRE(expr.terms.size() == 4);
  long long plus = 0, minus = 0;
  for (const auto& [sym, c] : expr.terms) (c > 0 ? plus : minus) += c;
  CHECK(plus == 2);
  CHECK(minus == -2);
}

TEST_CASE("an injective oracle yields 2^|L| signed terms") {
  const ManifoldSymbol base{11, "M"};
  for (int n = 0; n <= 4; ++n) {
    std::vector<LinkComponent> comps;
    for (int i = 0; i < n; ++i) comps.push_back({"c" + std::to_string(i), 1});
    const BracketExpression expr =
        bracket(base, make_framed_link(comps), make_synthetic_oracle(5));
    CHECK(static_cast<int>(expr.terms.size()) == 1 << n);
    long long abs_sum = 0;
    for (const auto& [sym, c] : expr.terms) abs_sum += c < 0 ? -c : c;
    CHECK(abs_sum == 1LL << n);
  }
}

TEST_CASE("the bracket ignores component order") {
  const ManifoldSymbol base{3, "M"};
  const auto oracle = make_synthetic_oracle(8, 3);
  std::vector<LinkComponent> comps{{"a", 1}, {"b", -1}, {"c", 1}};
  const BracketExpression fwd = bracket(base, make_framed_link(comps), oracle);
  std::reverse(comps.begin(), comps.end());
  const BracketExpression rev = bracket(base, make_framed_link(comps), oracle);
  CHECK(fwd == rev);
}

TEST_CASE("telescoping identity, deterministic cases") {
  const ManifoldSymbol base{1, "M"};
  for (int n = 1; n <= 3; ++n) {
    std::vector<LinkComponent> comps;
    for (int i = 0; i < n; ++i)
      comps.push_back({"K" + std::to_string(i), i % 2 ? -1 : 1});
    const FramedLink link = make_framed_link(comps);
    for (int k = 0; k < n; ++k) {
      CHECK(telescope_check(base, link, k, make_synthetic_oracle(17, 0)));
      CHECK(telescope_check(base, link, k, make_synthetic_oracle(17, 2)));
    }
  }
}

TEST_CASE("telescoping identity over randomized oracles") {
  const ManifoldSymbol base{1, "M"};
  std::mt19937_64 rng(0xfeedULL);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<LinkComponent> comps;
    for (int i = 0; i < n; ++i)
      comps.push_back({"K" + std::to_string(i), rng() % 2 ? -1 : 1});
    const FramedLink link = make_framed_link(comps);
    const auto oracle =
        make_synthetic_oracle(rng(), trial % 2 ? 0 : 2 + trial % 4);
    CHECK(telescope_check(base, link, static_cast<int>(rng() % n), oracle));
  }
}

TEST_CASE("synthetic oracles are restriction consistent") {
  const ManifoldSymbol base{9, "M"};
  const auto oracle = make_synthetic_oracle(31, 2);
  const FramedLink k = link_of({"K"});
  const FramedLink j = link_of({"J"});
  const FramedLink kj = make_framed_link({{"K", 1}, {"J", 1}});
  CHECK(oracle(oracle(base, k), j) == oracle(base, kj));
  CHECK(oracle(base, link_of({})) == base);
}

TEST_CASE("filtration span membership") {
  const ManifoldSymbol base{1, "M"};
  const auto oracle = make_synthetic_oracle(77);

  const FiltrationSpan none = filtration_span(base, {}, 0, oracle);
  BracketExpression zero;
  CHECK(none.contains(zero));
  BracketExpression just_m;
  just_m.add(base, 1);
  CHECK_FALSE(none.contains(just_m));

  const FramedLink k = link_of({"K"});
  const FiltrationSpan one = filtration_span(base, {k}, 1, oracle);
  CHECK(one.contains(bracket(base, k, oracle)));  // M - M_K
  CHECK_FALSE(one.contains(just_m));
}

TEST_CASE("generators with more components stay in the coarser span") {
  const ManifoldSymbol base{1, "M"};
  const auto oracle = make_synthetic_oracle(123, 2);
  const std::vector<FramedLink> links{
      make_framed_link({{"a", 1}, {"b", -1}}),
      make_framed_link({{"a", 1}, {"c", 1}}),
      make_framed_link({{"b", 1}, {"c", -1}, {"d", 1}})};
  const FiltrationSpan fine = filtration_span(base, links, 2, oracle);
  const FiltrationSpan coarse = filtration_span(base, links, 1, oracle);
  for (const BracketExpression& g : fine.generators) CHECK(coarse.contains(g));
}

TEST_CASE("validation and budget errors") {
  CHECK_THROWS_AS(make_framed_link({{"a", 2}}), ValidationError);
  CHECK_THROWS_AS(make_framed_link({{"a", 1}, {"a", -1}}), ValidationError);

  std::vector<LinkComponent> big;
  for (int i = 0; i < kMaxBracketComponents + 1; ++i)
    big.push_back({"c" + std::to_string(i), 1});
  const ManifoldSymbol base{1, "M"};
  CHECK_THROWS_AS(bracket(base, make_framed_link(big), make_synthetic_oracle(1)),
                  BudgetExceeded);

  CHECK_THROWS_AS(
      filtration_span(base, {link_of({"K"})}, 2, make_synthetic_oracle(1)),
      ValidationError);
}

TEST_SUITE_END();
