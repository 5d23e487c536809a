#ifndef JD_SURGERY_HPP
#define JD_SURGERY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jd/linalg.hpp"

namespace jd {

// Opaque manifold symbol: equality is by identifier only; no attempt is
// made to decide diffeomorphism.
struct ManifoldSymbol {
  std::uint64_t id = 0;
  std::string label;

  friend bool operator==(const ManifoldSymbol& a, const ManifoldSymbol& b) {
    return a.id == b.id;
  }
  friend bool operator<(const ManifoldSymbol& a, const ManifoldSymbol& b) {
    return a.id < b.id;
  }
};

struct LinkComponent {
  std::string name;
  int framing = 1;  // unit framings only
};

struct FramedLink {
  std::vector<LinkComponent> components;

  int size() const { return static_cast<int>(components.size()); }
  FramedLink sublink(unsigned mask) const;
  FramedLink without(int index) const;
};

// Validates distinct component names and unit framings.
FramedLink make_framed_link(std::vector<LinkComponent> components);

// Dehn surgery as an abstract interface: (base, sublink) -> symbol.
// Contract: deterministic, oracle(M, empty) = M, and surgery on a
// sublink must not depend on the ambient link it was drawn from
// (performing surgery component by component commutes). The linking-
// number condition of admissibility lives in geometry this model does
// not see; it is the oracle's responsibility.
using SurgeryOracle =
    std::function<ManifoldSymbol(const ManifoldSymbol&, const FramedLink&)>;

// A finite integer combination of manifold symbols.
struct BracketExpression {
  std::map<ManifoldSymbol, long long> terms;

  void add(const ManifoldSymbol& sym, long long coeff);
  BracketExpression& operator-=(const BracketExpression& other);
  friend bool operator==(const BracketExpression& a,
                         const BracketExpression& b) {
    return a.terms == b.terms;
  }
};

// The alternating sum over all sublinks (including the empty one),
// signed by component count. Throws BudgetExceeded past the hard cap.
BracketExpression bracket(const ManifoldSymbol& base, const FramedLink& link,
                          const SurgeryOracle& oracle);

// Checks [M, L] = [M, L\K] - [M_K, L\K] as formal sums, where the right
// bracket performs its surgeries inside M_K.
bool telescope_check(const ManifoldSymbol& base, const FramedLink& link,
                     int component_index, const SurgeryOracle& oracle);

// Brackets of the listed links as formal generators of a subspace of
// the free span of symbols, with exact membership testing.
struct FiltrationSpan {
  std::vector<BracketExpression> generators;
  std::vector<ManifoldSymbol> symbols;  // column order
  SparseMatrix rref;

  bool contains(const BracketExpression& expr) const;
};

FiltrationSpan filtration_span(const ManifoldSymbol& base,
                               const std::vector<FramedLink>& links,
                               int min_components, const SurgeryOracle& oracle);

// Deterministic synthetic oracles for verification: ids combine through
// a commutative per-component hash, so restriction-consistency holds by
// construction. collision_classes > 0 shrinks the hash range to force
// coincidences between different surgery results.
SurgeryOracle make_synthetic_oracle(std::uint64_t seed,
                                    int collision_classes = 0);

}  // namespace jd

#endif
