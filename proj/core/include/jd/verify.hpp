#ifndef JD_VERIFY_HPP
#define JD_VERIFY_HPP

#include <string>
#include <vector>

#include "jd/algebra.hpp"
#include "jd/surgery.hpp"

namespace jd {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int circle_degree = 4;   // two-oracle budget on the circle
  int empty_degree = 3;    // two-oracle budget on empty support
  int product_degree = 3;  // product checks bound (circle)
  int telescope_oracles = 100;
  int jobs = 1;
};

// Runs the full verification bundle: the two tabulated-dimension
// anchors, two-oracle rank agreement, STU-toggle redundancy, product
// structure checks, the surgery bracket laws, the leg-filtration
// criterion plumbing, and the AS fold tripwire.
VerifyReport run_verify(const VerifyOptions& options = {});

std::string format_report(const VerifyReport& report);

}  // namespace jd

#endif
