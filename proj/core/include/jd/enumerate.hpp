#ifndef JD_ENUMERATE_HPP
#define JD_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "jd/canonical.hpp"

namespace jd {

struct EnumerateOptions {
  std::optional<int> max_legs;
  bool exclude_zero_sign = true;
  int jobs = 1;
  bool memo = true;  // share results process-wide
  EnumerationBudget budget{};
};

// Exhaustive generation of degree-m diagrams on the support, one
// canonical representative per equality class, ordered by canonical
// key. On the circle only diagrams in which every connected component
// of the graph touches the circle are generated (legless components are
// representable but never arise as quotient generators). Classes that
// vanish by antisymmetry are listed with sign 0 unless excluded.
// Throws BudgetExceeded above the configured degree cap.
std::vector<CanonicalDiagram> enumerate_diagrams(
    Support support, int degree, const EnumerateOptions& options = {});

}  // namespace jd

#endif
