#ifndef JD_RELATIONS_HPP
#define JD_RELATIONS_HPP

#include "jd/diagram_vector.hpp"
#include "jd/enumerate.hpp"

namespace jd {

enum class RelationKind : std::uint8_t { AS, IHX, STU, FI };

inline const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::AS: return "AS";
    case RelationKind::IHX: return "IHX";
    case RelationKind::STU: return "STU";
    default: return "FI";
  }
}

struct Relation {
  DiagramVector vec;
  RelationKind kind;
};

struct RelationSet {
  Support support = Support::Empty;
  int degree = 0;
  std::vector<Relation> relations;
};

// Antisymmetry: one vector per (diagram, trivalent vertex). Because the
// canonical form already folds orientation parity into the sign, these
// vectors cancel identically and the returned set is empty unless the
// sign bookkeeping is broken; the family is kept as a tripwire.
RelationSet as_relations(Support support, int degree,
                         const EnumerateOptions& options = {});

// The three-term local relation at every edge of the graph incident to
// at least one trivalent vertex. Edges between two trivalent vertices
// give the internal Jacobi rewrite; on the circle, an edge from a
// trivalent vertex to a leg gives the rewrite that trades the vertex
// for two adjacent legs, so this family subsumes STU.
RelationSet ihx_relations(Support support, int degree,
                          const EnumerateOptions& options = {});

// S - T + U = 0 for every pair of cyclically adjacent legs (circle
// only). Redundant alongside ihx_relations by construction.
RelationSet stu_relations(int degree, const EnumerateOptions& options = {});

// Framing independence: kills every diagram containing an isolated
// chord (an edge joining two cyclically adjacent legs). Generated only
// on request, never implied.
RelationSet fi_relations(int degree, const EnumerateOptions& options = {});

// Same families over a precomputed generator list (avoids re-running
// enumeration when several families are assembled at once).
RelationSet as_relations(Support support, int degree,
                         const std::vector<CanonicalDiagram>& generators);
RelationSet ihx_relations(Support support, int degree,
                          const std::vector<CanonicalDiagram>& generators);
RelationSet stu_relations(int degree,
                          const std::vector<CanonicalDiagram>& generators);
RelationSet fi_relations(int degree,
                         const std::vector<CanonicalDiagram>& generators);

}  // namespace jd

#endif
