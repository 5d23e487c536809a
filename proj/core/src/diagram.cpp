#include "jd/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace jd {

std::vector<int> ChordDiagram::darts_at(int vertex) const {
  std::vector<int> out;
  for (int e = 0; e < num_edges(); ++e) {
    if (edges[e].a == vertex) out.push_back(dart_of(e, 0));
    if (edges[e].b == vertex) out.push_back(dart_of(e, 1));
  }
  return out;
}

void ChordDiagram::flip_orientation(int vertex) {
  std::swap(orientation[vertex][1], orientation[vertex][2]);
}

ChordDiagram ChordDiagram::with_rotated_legs(int offset) const {
  ChordDiagram d = *this;
  const int k = static_cast<int>(d.leg_order.size());
  if (k > 1) {
    std::rotate(d.leg_order.begin(),
                d.leg_order.begin() + ((offset % k + k) % k), d.leg_order.end());
  }
  return d;
}

ChordDiagram make_diagram(Support support, std::vector<Valence> valence,
                          std::vector<Edge> edges,
                          std::vector<std::array<int, 3>> orientation,
                          std::vector<int> leg_order) {
  ChordDiagram d;
  d.support = support;
  d.valence = std::move(valence);
  d.edges = std::move(edges);
  const int n = d.num_vertices();

  std::vector<int> ends(n, 0);
  for (const Edge& e : d.edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw ValidationError("edge endpoint out of range");
    if (e.a == e.b) throw ValidationError("self-loop edge");
    ++ends[e.a];
    ++ends[e.b];
  }
  for (int v = 0; v < n; ++v) {
    const int want = d.valence[v] == Valence::Univalent ? 1 : 3;
    if (ends[v] != want) throw ValidationError("vertex valence mismatch");
  }

  std::set<int> legs;
  for (int v = 0; v < n; ++v)
    if (d.valence[v] == Valence::Univalent) legs.insert(v);

  if (support == Support::Empty) {
    if (!legs.empty())
      throw ValidationError("univalent vertices on empty support");
    if (!leg_order.empty())
      throw ValidationError("leg order given for empty support");
  } else {
    if (leg_order.size() != legs.size() ||
        std::set<int>(leg_order.begin(), leg_order.end()) != legs)
      throw ValidationError("leg_order does not match the univalent vertex set");
  }
  d.leg_order = std::move(leg_order);

  if (orientation.empty()) {
    d.orientation.assign(n, {-1, -1, -1});
    for (int v = 0; v < n; ++v) {
      if (d.valence[v] != Valence::Trivalent) continue;
      const auto darts = d.darts_at(v);  // ascending by construction
      d.orientation[v] = {darts[0], darts[1], darts[2]};
    }
  } else {
    if (static_cast<int>(orientation.size()) != n)
      throw ValidationError("orientation table size mismatch");
    for (int v = 0; v < n; ++v) {
      if (d.valence[v] != Valence::Trivalent) continue;
      const auto darts = d.darts_at(v);
      std::array<int, 3> got = orientation[v];
      std::array<int, 3> sorted_got = got;
      std::sort(sorted_got.begin(), sorted_got.end());
      if (sorted_got[0] != darts[0] || sorted_got[1] != darts[1] ||
          sorted_got[2] != darts[2])
        throw ValidationError("orientation triple does not list the vertex darts");
    }
    d.orientation = std::move(orientation);
    for (int v = 0; v < n; ++v)
      if (d.valence[v] == Valence::Univalent) d.orientation[v] = {-1, -1, -1};
  }
  return d;
}

int degree(const ChordDiagram& d) { return d.num_vertices() / 2; }

int leg_count(const ChordDiagram& d) {
  int k = 0;
  for (Valence v : d.valence)
    if (v == Valence::Univalent) ++k;
  return k;
}

bool every_component_has_leg(const ChordDiagram& d) {
  const int n = d.num_vertices();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Edge& e : d.edges) root[find(e.a)] = find(e.b);
  std::vector<char> has_leg(n, 0);
  for (int v = 0; v < n; ++v)
    if (d.valence[v] == Valence::Univalent) has_leg[find(v)] = 1;
  for (int v = 0; v < n; ++v)
    if (!has_leg[find(v)]) return false;
  return true;
}

ChordDiagram empty_diagram(Support support) {
  return make_diagram(support, {}, {});
}

ChordDiagram single_chord() {
  return make_diagram(Support::Circle,
                      {Valence::Univalent, Valence::Univalent}, {{0, 1}}, {},
                      {0, 1});
}

ChordDiagram theta() {
  return make_diagram(Support::Empty, {Valence::Trivalent, Valence::Trivalent},
                      {{0, 1}, {0, 1}, {0, 1}});
}

}  // namespace jd
