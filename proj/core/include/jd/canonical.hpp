#ifndef JD_CANONICAL_HPP
#define JD_CANONICAL_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "jd/diagram.hpp"

namespace jd {

// Canonical form of a diagram. Legs take labels 0..legs-1 in cyclic
// order (minimised over all rotations of the basepoint), trivalent
// vertices take labels legs..n-1 minimised over all colour-preserving
// assignments, and the edge list is stored sorted. Orientations are
// folded away: the canonical representative has every trivalent cyclic
// order ascending in dart ids, and the sign of a concrete diagram
// records the transposition parity needed to reach it.
struct CanonKey {
  Support support = Support::Empty;
  int legs = 0;
  int tri = 0;
  std::vector<std::pair<int, int>> edges;

  auto operator<=>(const CanonKey&) const = default;
  int degree() const { return (legs + tri) / 2; }
};

struct CanonicalDiagram {
  CanonKey key;
  Sign sign = Sign::Plus;
};

CanonicalDiagram canonicalize(const ChordDiagram& d);

// Rebuilds the canonical representative: ascending orientations, legs
// 0..legs-1 in cyclic order.
ChordDiagram to_diagram(const CanonKey& key);

struct IsoResult {
  bool equal = false;
  Sign sign = Sign::Plus;  // meaningful only when equal
};

// Equality of diagrams up to orientation-preserving diffeomorphism,
// with the relative AS sign. Throws SupportMismatch.
IsoResult is_isomorphic(const ChordDiagram& a, const ChordDiagram& b);

// Versioned one-line serialization (format tag jd1), stable across
// releases; also used by the on-disk cache.
std::string to_record(const CanonicalDiagram& cd);
CanonicalDiagram parse_record(const std::string& line);

}  // namespace jd

#endif
