#ifndef JD_DIAGRAM_VECTOR_HPP
#define JD_DIAGRAM_VECTOR_HPP

#include <map>

#include "jd/canonical.hpp"

namespace jd {

// A homogeneous rational combination of canonical diagrams: an element
// of the free span before quotienting. Sign-zero classes never appear;
// stored coefficients are nonzero.
struct DiagramVector {
  Support support = Support::Empty;
  int degree = 0;
  std::map<CanonKey, Rat> terms;

  DiagramVector() = default;
  DiagramVector(Support s, int deg) : support(s), degree(deg) {}

  bool is_zero() const { return terms.empty(); }

  void add(const CanonKey& key, const Rat& coeff);
  void add(const CanonicalDiagram& cd, const Rat& coeff);
  // Canonicalizes and folds the AS sign into the coefficient.
  void add(const ChordDiagram& d, const Rat& coeff);

  DiagramVector& operator+=(const DiagramVector& other);
  friend DiagramVector operator+(DiagramVector a, const DiagramVector& b) {
    a += b;
    return a;
  }
  bool operator==(const DiagramVector& other) const {
    return support == other.support && degree == other.degree &&
           terms == other.terms;
  }
};

}  // namespace jd

#endif
