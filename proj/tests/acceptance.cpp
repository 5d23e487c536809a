// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "jd/algebra.hpp"
#include "jd/surgery.hpp"
#include "jd/verify.hpp"

namespace {

int failures = 0;

void report(int number, const std::string& title, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << title << " — " << detail << "\n";
  if (!pass) ++failures;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(JDCALC_BIN) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void criterion_1() {
  const jd::GradedAlgebra alg =
      jd::GradedAlgebra::build(jd::Support::Empty, 2, jd::QuotientFlags{});
  const int got = alg.weight_space_dim(2);
  std::ostringstream os;
  os << "cumulative dim on empty support at degree 2 = " << got << " (want 4)";
  report(1, "manifold-side dimension table", got == 4, os.str());
}

void criterion_2() {
  const jd::GradedAlgebra alg = jd::GradedAlgebra::build(
      jd::Support::Circle, 4, {.fi = true, .stu = true});
  const int got = alg.weight_space_dim(4);
  std::ostringstream os;
  os << "cumulative dim on the circle with FI at degree 4 = " << got
     << " (want 6)";
  report(2, "knot-side dimension table", got == 6, os.str());
}

void criterion_3() {
  bool pass = true;
  int compared = 0;
  std::ostringstream os;
  for (jd::Support support : {jd::Support::Circle, jd::Support::Empty}) {
    const int bound = support == jd::Support::Circle ? 4 : 3;
    for (int m = 0; m <= bound; ++m) {
      const auto gens = jd::enumerate_diagrams(support, m);
      std::vector<jd::QuotientFlags> variants{{.fi = false, .stu = true}};
      if (support == jd::Support::Circle)
        variants.push_back({.fi = true, .stu = true});
      for (jd::QuotientFlags flags : variants) {
        const int sparse = jd::build_quotient(support, m, flags, gens).dim();
        const int dense =
            jd::quotient_dim_dense_oracle(support, m, flags, gens);
        ++compared;
        if (sparse != dense) {
          pass = false;
          os << "mismatch at " << jd::to_string(support) << "/" << m << " ";
        }
      }
    }
  }
  if (pass) os << "sparse and dense eliminators agree on " << compared
               << " cases (circle <= 4, empty <= 3)";
  report(3, "two-oracle rank agreement", pass, os.str());
}

void criterion_4() {
  bool pass = true;
  std::ostringstream os;
  for (int m = 0; m <= 3; ++m) {
    const auto gens = jd::enumerate_diagrams(jd::Support::Circle, m);
    for (bool fi : {false, true}) {
      const int a =
          jd::build_quotient(jd::Support::Circle, m, {.fi = fi, .stu = true}, gens)
              .dim();
      const int b = jd::build_quotient(jd::Support::Circle, m,
                                       {.fi = fi, .stu = false}, gens)
                        .dim();
      if (a != b) {
        pass = false;
        os << "degree " << m << ": " << a << " vs " << b << " ";
      }
    }
  }
  if (pass) os << "dimensions unchanged at circle degrees <= 3, fi on and off";
  report(4, "relation-redundancy invariance", pass, os.str());
}

void criterion_5() {
  const jd::GradedAlgebra circle =
      jd::GradedAlgebra::build(jd::Support::Circle, 3, jd::QuotientFlags{});
  const jd::ProductCheckReport rc = jd::product_welldefined_check(circle, 3);
  const jd::GradedAlgebra empty =
      jd::GradedAlgebra::build(jd::Support::Empty, 2, jd::QuotientFlags{});
  const jd::ProductCheckReport re = jd::product_welldefined_check(empty, 2);
  std::ostringstream os;
  if (rc.pass && re.pass)
    os << "grading, cut-point independence and commutativity hold on "
       << rc.pairs_checked + re.pairs_checked << " pairs (circle total degree <= 3)";
  else
    os << rc.failures.size() + re.failures.size() << " failing pairs";
  report(5, "algebra properties", rc.pass && re.pass, os.str());
}

void criterion_6() {
  bool pass = true;
  std::ostringstream os;
  const jd::ManifoldSymbol base{1, "M"};

  for (int n = 0; n <= 4 && pass; ++n) {
    std::vector<jd::LinkComponent> comps;
    for (int i = 0; i < n; ++i)
      comps.push_back({"K" + std::to_string(i), i % 2 ? -1 : 1});
    const jd::BracketExpression expr = jd::bracket(
        base, jd::make_framed_link(comps), jd::make_synthetic_oracle(99));
    long long abs_sum = 0;
    for (const auto& [sym, c] : expr.terms) abs_sum += c < 0 ? -c : c;
    if (static_cast<int>(expr.terms.size()) != 1 << n || abs_sum != 1LL << n) {
      pass = false;
      os << "sign law fails at |L|=" << n;
    }
  }

  std::mt19937_64 rng(0xacce55ULL);
  int telescopes = 0;
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<jd::LinkComponent> comps;
    for (int i = 0; i < n; ++i)
      comps.push_back({"K" + std::to_string(i), rng() % 2 ? -1 : 1});
    const auto oracle =
        jd::make_synthetic_oracle(rng(), trial % 2 ? 0 : 2 + trial % 3);
    ++telescopes;
    if (!jd::telescope_check(base, jd::make_framed_link(comps),
                             static_cast<int>(rng() % n), oracle)) {
      pass = false;
      os << "telescoping fails at trial " << trial;
    }
  }
  if (pass)
    os << "2^|L| sign law (|L| <= 4) and " << telescopes
       << " randomized telescope checks hold";
  report(6, "surgery bracket laws", pass, os.str());
}

void criterion_7() {
  bool pass = true;
  int true_side = 0, false_side = 0;
  std::ostringstream os;
  for (bool fi : {true, false}) {
    const jd::GradedAlgebra alg = jd::GradedAlgebra::build(
        jd::Support::Circle, 4, {.fi = fi, .stu = true});
    for (int m : {1, 2}) {
      const jd::LegFiltrationSubspace span = jd::leg_deficient_span(alg, m);
      for (const jd::WeightSystem& w : jd::conway_annihilator_basis(alg, m)) {
        ++true_side;
        if (!jd::conway_criterion_check(alg, w, m)) pass = false;
      }
      // the dual functional at each span pivot coordinate is supported
      // inside the span, so the criterion must reject it
      for (const auto& row : span.span_rref.rows) {
        ++false_side;
        if (jd::conway_criterion_check(
                alg,
                jd::WeightSystem::basis_dual(alg, 2 * m, row.begin()->first),
                m))
          pass = false;
      }
      const jd::QuotientSpace& q = alg.at(2 * m);
      for (int i = 0; i < q.dim(); ++i) {
        std::vector<jd::Rat> unit(q.dim(), jd::Rat(0));
        unit[i] = 1;
        if (!span.contains(unit)) continue;
        ++false_side;
        if (jd::conway_criterion_check(
                alg, jd::WeightSystem::basis_dual(alg, 2 * m, i), m))
          pass = false;
      }
    }
  }
  os << "criterion true on " << true_side << " annihilating functionals, false on "
     << false_side << " in-span basis duals (m in {1,2})";
  report(7, "leg-filtration criterion", pass && true_side > 0 && false_side > 0,
         os.str());
}

void criterion_8() {
  bool pass = true;
  std::ostringstream os;
  const auto cache = std::filesystem::temp_directory_path() /
                     ("jdcalc-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(cache);

  const std::string cache_arg = "--cache-dir " + cache.string() + " ";
  const std::vector<std::string> invocations{
      "dims --support empty --max-degree 2",
      "dims --support circle --max-degree 3 --fi --emit records",
      "verify --telescope-oracles 10",
  };
  for (const std::string& args : invocations) {
    const RunResult first = run_cli(cache_arg + args);
    const RunResult second = run_cli(cache_arg + args);
    if (first.out != second.out || first.out.empty()) {
      pass = false;
      os << "rerun differs for '" << args << "' ";
    }
    std::filesystem::remove_all(cache);
    const RunResult cold = run_cli(cache_arg + args);
    if (cold.out != first.out) {
      pass = false;
      os << "cache deletion changed '" << args << "' ";
    }
  }
  std::filesystem::remove_all(cache);
  if (pass)
    os << "dims and verify are byte-identical across reruns and cache deletion";
  report(8, "determinism", pass, os.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << "acceptance: " << (8 - failures) << "/8 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
