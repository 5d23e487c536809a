#include "jd/verify.hpp"

#include <random>
#include <sstream>

namespace jd {
namespace {

CheckResult check_remark_dims_empty(int jobs) {
  EnumerateOptions options;
  options.jobs = jobs;
  const GradedAlgebra alg =
      GradedAlgebra::build(Support::Empty, 2, QuotientFlags{}, options);
  const int got = alg.weight_space_dim(2);
  std::ostringstream os;
  os << "cumulative dim at empty degree <= 2 is " << got << " (want 4)";
  return {"remark-dims-empty", got == 4, os.str()};
}

CheckResult check_remark_dims_circle(int jobs) {
  EnumerateOptions options;
  options.jobs = jobs;
  const GradedAlgebra alg = GradedAlgebra::build(
      Support::Circle, 4, QuotientFlags{.fi = true, .stu = true}, options);
  const int got = alg.weight_space_dim(4);
  std::ostringstream os;
  os << "cumulative dim at circle degree <= 4 with FI is " << got << " (want 6)";
  return {"remark-dims-circle-fi", got == 6, os.str()};
}

CheckResult check_two_oracle(const VerifyOptions& opt) {
  EnumerateOptions options;
  options.jobs = opt.jobs;
  bool pass = true;
  std::ostringstream os;
  int compared = 0;
  for (Support support : {Support::Circle, Support::Empty}) {
    const int bound =
        support == Support::Circle ? opt.circle_degree : opt.empty_degree;
    std::vector<QuotientFlags> variants{{.fi = false, .stu = true}};
    if (support == Support::Circle)
      variants.push_back({.fi = true, .stu = true});
    for (int m = 0; m <= bound; ++m) {
      const auto gens = enumerate_diagrams(support, m, options);
      for (QuotientFlags flags : variants) {
        const int sparse = build_quotient(support, m, flags, gens).dim();
        const int dense = quotient_dim_dense_oracle(support, m, flags, gens);
        ++compared;
        if (sparse != dense) {
          pass = false;
          os << " mismatch at " << to_string(support) << " degree " << m << " ("
             << flags.tag() << "): sparse " << sparse << " dense " << dense
             << ";";
        }
      }
    }
  }
  if (pass) os << "sparse and dense eliminators agree on " << compared
               << " (support, degree, flags) triples";
  return {"two-oracle-rank", pass, os.str()};
}

CheckResult check_stu_redundancy(const VerifyOptions& opt) {
  EnumerateOptions options;
  options.jobs = opt.jobs;
  bool pass = true;
  std::ostringstream os;
  for (int m = 0; m <= 3; ++m) {
    const auto gens = enumerate_diagrams(Support::Circle, m, options);
    for (bool fi : {false, true}) {
      const int with_stu =
          build_quotient(Support::Circle, m, {.fi = fi, .stu = true}, gens).dim();
      const int without_stu =
          build_quotient(Support::Circle, m, {.fi = fi, .stu = false}, gens).dim();
      if (with_stu != without_stu) {
        pass = false;
        os << " degree " << m << (fi ? " (fi)" : "") << ": " << with_stu
           << " vs " << without_stu << ";";
      }
    }
  }
  if (pass) os << "toggling the STU family changes no dimension at circle degrees <= 3";
  return {"stu-redundancy", pass, os.str()};
}

CheckResult check_products(const VerifyOptions& opt) {
  EnumerateOptions options;
  options.jobs = opt.jobs;
  const GradedAlgebra circle = GradedAlgebra::build(
      Support::Circle, opt.product_degree, QuotientFlags{}, options);
  const ProductCheckReport rc = product_welldefined_check(circle, opt.product_degree);
  const GradedAlgebra empty =
      GradedAlgebra::build(Support::Empty, 2, QuotientFlags{}, options);
  const ProductCheckReport re = product_welldefined_check(empty, 2);

  std::ostringstream os;
  if (rc.pass && re.pass) {
    os << "cut-point independence, commutativity and grading hold on "
       << rc.pairs_checked + re.pairs_checked << " generator pairs";
  } else {
    for (const auto& f : rc.failures) os << " circle: " << f << ";";
    for (const auto& f : re.failures) os << " empty: " << f << ";";
  }
  return {"product-structure", rc.pass && re.pass, os.str()};
}

CheckResult check_surgery(const VerifyOptions& opt) {
  bool pass = true;
  std::ostringstream os;

  const ManifoldSymbol base{1, "M"};
  std::mt19937_64 rng(0x1dea5eedULL);

  // term-count and sign law under an injective oracle
  for (int n = 0; n <= 4 && pass; ++n) {
    std::vector<LinkComponent> comps;
    for (int i = 0; i < n; ++i)
      comps.push_back({"K" + std::to_string(i), i % 2 ? -1 : 1});
    const FramedLink link = make_framed_link(comps);
    const SurgeryOracle oracle = make_synthetic_oracle(0xabcdef01ULL + n, 0);
    const BracketExpression expr = bracket(base, link, oracle);
    long long abs_sum = 0;
    for (const auto& [sym, c] : expr.terms) abs_sum += c < 0 ? -c : c;
    if (abs_sum != (1LL << n) ||
        static_cast<int>(expr.terms.size()) != (1 << n)) {
      pass = false;
      os << "term-count law fails at |L|=" << n;
    }
  }

  // telescoping identity over randomized oracles, with collisions
  int telescopes = 0;
  for (int trial = 0; trial < opt.telescope_oracles && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<LinkComponent> comps;
    for (int i = 0; i < n; ++i)
      comps.push_back({"K" + std::to_string(i), rng() % 2 ? -1 : 1});
    const FramedLink link = make_framed_link(comps);
    const int collisions = trial % 3 == 0 ? 0 : 2 + static_cast<int>(rng() % 3);
    const SurgeryOracle oracle = make_synthetic_oracle(rng(), collisions);
    const int k = static_cast<int>(rng() % n);
    ++telescopes;
    if (!telescope_check(base, link, k, oracle)) {
      pass = false;
      os << "telescoping fails at trial " << trial;
    }
  }

  if (pass)
    os << "2^|L| sign law and " << telescopes << " randomized telescope checks hold";
  return {"surgery-bracket", pass, os.str()};
}

CheckResult check_conway(const VerifyOptions& opt) {
  EnumerateOptions options;
  options.jobs = opt.jobs;
  bool pass = true;
  std::ostringstream os;
  int functionals = 0;

  for (bool fi : {true, false}) {
    const GradedAlgebra alg = GradedAlgebra::build(
        Support::Circle, 4, {.fi = fi, .stu = true}, options);
    for (int m : {1, 2}) {
      const LegFiltrationSubspace span = leg_deficient_span(alg, m);
      if (conway_space_dim(alg, m) != span.ambient_dim - span.dim()) {
        pass = false;
        os << " dim bookkeeping fails at m=" << m << ";";
      }
      for (const WeightSystem& w : conway_annihilator_basis(alg, m)) {
        ++functionals;
        if (!conway_criterion_check(alg, w, m)) {
          pass = false;
          os << " annihilator rejected at m=" << m << ";";
        }
      }
      // duals at the span pivot coordinates are supported inside the
      // span and must be rejected
      for (const auto& row : span.span_rref.rows) {
        ++functionals;
        if (conway_criterion_check(
                alg, WeightSystem::basis_dual(alg, 2 * m, row.begin()->first),
                m)) {
          pass = false;
          os << " in-span dual accepted at m=" << m << ";";
        }
      }
      if (!conway_criterion_check(alg, WeightSystem::zero(alg), m)) {
        pass = false;
        os << " zero functional rejected at m=" << m << ";";
      }
    }
  }
  if (pass)
    os << "criterion verified on " << functionals
       << " constructed functionals (m in {1,2}, fi on/off)";
  return {"conway-criterion", pass, os.str()};
}

CheckResult check_as_fold(const VerifyOptions& opt) {
  EnumerateOptions options;
  options.jobs = opt.jobs;
  bool pass = true;
  std::ostringstream os;
  for (Support support : {Support::Circle, Support::Empty}) {
    const int bound = support == Support::Circle ? 3 : 2;
    for (int m = 0; m <= bound; ++m) {
      const RelationSet set = as_relations(support, m, options);
      if (!set.relations.empty()) {
        pass = false;
        os << " nonzero AS vector at " << to_string(support) << " degree " << m
           << ";";
      }
    }
  }
  if (pass)
    os << "all AS vectors cancel against the folded canonical signs";
  return {"as-fold-consistency", pass, os.str()};
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_remark_dims_empty(options.jobs));
  report.checks.push_back(check_remark_dims_circle(options.jobs));
  report.checks.push_back(check_two_oracle(options));
  report.checks.push_back(check_stu_redundancy(options));
  report.checks.push_back(check_products(options));
  report.checks.push_back(check_surgery(options));
  report.checks.push_back(check_conway(options));
  report.checks.push_back(check_as_fold(options));
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " - " << c.detail
       << "\n";
    if (c.pass) ++passed;
  }
  os << "verify: " << passed << "/" << report.checks.size()
     << " checks passed\n";
  return os.str();
}

}  // namespace jd
