#ifndef JD_DIAGRAM_HPP
#define JD_DIAGRAM_HPP

#include <array>
#include <vector>

#include "jd/types.hpp"

namespace jd {

enum class Valence : std::uint8_t { Univalent = 1, Trivalent = 3 };

// An edge is an unordered pair of distinct vertices; parallel edges are
// allowed, self-loops are not (AS forces them to zero, so they are
// excluded at the representation level).
struct Edge {
  int a = 0;
  int b = 0;
};

// Darts (edge-ends): edge e owns darts 2e (the `a` side) and 2e+1.
inline int dart_of(int edge, int side) { return 2 * edge + side; }
inline int edge_of(int dart) { return dart >> 1; }
inline int side_of(int dart) { return dart & 1; }
inline int mate(int dart) { return dart ^ 1; }

// A uni-trivalent graph attached to its support. Legs (univalent
// vertices) sit on the circle in a cyclic order defined up to rotation
// only; each trivalent vertex carries a cyclic order of its three darts.
struct ChordDiagram {
  Support support = Support::Empty;
  std::vector<Valence> valence;                 // vertex id -> valence
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> orientation;  // trivalent: dart triple, cyclic
  std::vector<int> leg_order;                   // circle: legs in cyclic order

  int num_vertices() const { return static_cast<int>(valence.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_darts() const { return 2 * num_edges(); }

  int vertex_of(int dart) const {
    const Edge& e = edges[edge_of(dart)];
    return side_of(dart) == 0 ? e.a : e.b;
  }

  std::vector<int> darts_at(int vertex) const;

  // The AS move: transposes two entries of one cyclic order.
  void flip_orientation(int vertex);

  // Same diagram with the stored cyclic basepoint rotated.
  ChordDiagram with_rotated_legs(int offset) const;
};

// Validates and completes a raw diagram. Pass an empty `orientation` to
// give every trivalent vertex its darts in ascending order. Throws
// ValidationError on valence violations, self-loops, a leg_order that
// does not match the univalent vertex set, or univalent vertices on
// empty support.
ChordDiagram make_diagram(Support support, std::vector<Valence> valence,
                          std::vector<Edge> edges,
                          std::vector<std::array<int, 3>> orientation = {},
                          std::vector<int> leg_order = {});

// Half the vertex count.
int degree(const ChordDiagram& d);

// Number of univalent vertices.
int leg_count(const ChordDiagram& d);

// True when every connected component of the graph contains a leg.
bool every_component_has_leg(const ChordDiagram& d);

// Stock diagrams.
ChordDiagram empty_diagram(Support support);
ChordDiagram single_chord();
ChordDiagram theta();

}  // namespace jd

#endif
