#include "jd/relations.hpp"

#include <algorithm>
#include <set>

namespace jd {

void DiagramVector::add(const CanonKey& key, const Rat& coeff) {
  if (coeff == 0) return;
  if (key.support != support || key.degree() != degree)
    throw ValidationError("inhomogeneous term added to a DiagramVector");
  Rat& c = terms[key];
  c += coeff;
  if (c == 0) terms.erase(key);
}

void DiagramVector::add(const CanonicalDiagram& cd, const Rat& coeff) {
  if (cd.sign == Sign::Zero) return;
  add(cd.key, coeff * to_int(cd.sign));
}

void DiagramVector::add(const ChordDiagram& d, const Rat& coeff) {
  // Rebuild through make_diagram so rewritten diagrams are revalidated.
  add(canonicalize(make_diagram(d.support, d.valence, d.edges, d.orientation,
                                d.leg_order)),
      coeff);
}

DiagramVector& DiagramVector::operator+=(const DiagramVector& other) {
  if (other.support != support || other.degree != degree)
    throw ValidationError("DiagramVector grade mismatch");
  for (const auto& [key, c] : other.terms) add(key, c);
  return *this;
}

namespace {

// Rotates a cyclic triple so that `first` leads.
std::array<int, 3> rotate_to(const std::array<int, 3>& t, int first) {
  if (t[0] == first) return t;
  if (t[1] == first) return {t[1], t[2], t[0]};
  return {t[2], t[0], t[1]};
}

int dart_at(const ChordDiagram& d, int edge, int vertex) {
  return d.edges[edge].a == vertex ? dart_of(edge, 0) : dart_of(edge, 1);
}

bool has_self_loop(const ChordDiagram& d) {
  for (const Edge& e : d.edges)
    if (e.a == e.b) return true;
  return false;
}

void set_dart_vertex(ChordDiagram& d, int dart, int vertex) {
  Edge& e = d.edges[edge_of(dart)];
  (side_of(dart) == 0 ? e.a : e.b) = vertex;
}

// Internal Jacobi rewrite at an edge joining two trivalent vertices:
// with the cyclic orders written (e,p,q) at one end and (e,r,s) at the
// other, the three diagrams
//   (e,p,q)|(e,r,s)   (e,q,r)|(e,p,s)   (e,r,p)|(e,q,s)
// sum to zero. Terms whose rewiring would need a self-loop vanish.
DiagramVector internal_ihx_vector(const ChordDiagram& d, int edge) {
  const int u = d.edges[edge].a;
  const int w = d.edges[edge].b;
  const int eu = dart_of(edge, 0);
  const int ew = dart_of(edge, 1);
  const auto tu = rotate_to(d.orientation[u], eu);
  const auto tw = rotate_to(d.orientation[w], ew);
  const int p = tu[1], q = tu[2];
  const int r = tw[1], s = tw[2];

  DiagramVector vec(d.support, degree(d));
  vec.add(d, 1);

  auto term = [&](int to_w, int to_u, std::array<int, 3> ou,
                  std::array<int, 3> ow) {
    ChordDiagram t = d;
    set_dart_vertex(t, to_w, w);
    set_dart_vertex(t, to_u, u);
    if (has_self_loop(t)) return;
    t.orientation[u] = ou;
    t.orientation[w] = ow;
    vec.add(t, 1);
  };
  term(p, r, {eu, q, r}, {ew, p, s});
  term(q, r, {eu, r, p}, {ew, q, s});
  return vec;
}

// Rewrite at an edge from a trivalent vertex z to a leg g: trades z for
// two adjacent legs carrying z's other two edges, in both orders. This
// is the STU relation seen from its one-vertex side.
DiagramVector leg_edge_ihx_vector(const ChordDiagram& d, int edge) {
  const int g = d.valence[d.edges[edge].a] == Valence::Univalent
                    ? d.edges[edge].a
                    : d.edges[edge].b;
  const int z = d.edges[edge].a == g ? d.edges[edge].b : d.edges[edge].a;
  const int ez = dart_at(d, edge, z);
  const auto tz = rotate_to(d.orientation[z], ez);
  const int a = tz[1], b = tz[2];

  DiagramVector vec(d.support, degree(d));
  vec.add(d, 1);

  // Both T-terms share one graph: g keeps edge_of(a), z turns into a leg
  // carrying edge_of(b); only the cyclic order of the two new legs
  // differs.
  ChordDiagram t;
  t.support = d.support;
  t.valence = d.valence;
  t.valence[z] = Valence::Univalent;

  std::vector<int> edge_map(d.num_edges(), -1);
  for (int e = 0, ne = 0; e < d.num_edges(); ++e) {
    if (e == edge) continue;
    t.edges.push_back(d.edges[e]);
    edge_map[e] = ne++;
  }
  auto map_dart = [&](int dart) {
    return dart_of(edge_map[edge_of(dart)], side_of(dart));
  };
  set_dart_vertex(t, map_dart(a), g);
  set_dart_vertex(t, map_dart(b), z);

  t.orientation.assign(t.valence.size(), {-1, -1, -1});
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (t.valence[v] != Valence::Trivalent) continue;
    const auto& o = d.orientation[v];
    t.orientation[v] = {map_dart(o[0]), map_dart(o[1]), map_dart(o[2])};
  }

  std::vector<int> legs_ab;
  for (int leg : d.leg_order) {
    legs_ab.push_back(leg);
    if (leg == g) legs_ab.push_back(z);
  }
  std::vector<int> legs_ba;
  for (int leg : d.leg_order) {
    if (leg == g) legs_ba.push_back(z);
    legs_ba.push_back(leg);
  }

  ChordDiagram t_ab = t;
  t_ab.leg_order = legs_ab;
  ChordDiagram t_ba = t;
  t_ba.leg_order = legs_ba;
  vec.add(t_ab, -1);
  vec.add(t_ba, 1);
  return vec;
}

// S - T + U at one adjacent leg pair (l1 immediately before l2). The S
// term merges the legs into a trivalent vertex oriented (circle edge,
// first leg's edge, second leg's edge); it vanishes when the two legs
// are joined to each other (the merge would need a self-loop).
DiagramVector stu_vector(const ChordDiagram& d, int pos) {
  const int k = static_cast<int>(d.leg_order.size());
  const int l1 = d.leg_order[pos];
  const int l2 = d.leg_order[(pos + 1) % k];

  int d1 = -1, d2 = -1;
  for (int e = 0; e < d.num_edges(); ++e) {
    if (d.edges[e].a == l1) d1 = dart_of(e, 0);
    if (d.edges[e].b == l1) d1 = dart_of(e, 1);
    if (d.edges[e].a == l2) d2 = dart_of(e, 0);
    if (d.edges[e].b == l2) d2 = dart_of(e, 1);
  }

  DiagramVector vec(d.support, degree(d));

  if (mate(d1) != d2) {
    ChordDiagram s = d;
    s.valence[l2] = Valence::Trivalent;
    set_dart_vertex(s, d1, l2);
    const int enew = s.num_edges();
    s.edges.push_back({l1, l2});
    s.orientation[l2] = {dart_of(enew, 1), d1, d2};
    s.leg_order.erase(std::find(s.leg_order.begin(), s.leg_order.end(), l2));
    vec.add(s, 1);
  }

  vec.add(d, -1);

  ChordDiagram u = d;
  std::swap(u.leg_order[pos], u.leg_order[(pos + 1) % k]);
  vec.add(u, 1);
  return vec;
}

bool has_isolated_chord(const ChordDiagram& d) {
  const int k = static_cast<int>(d.leg_order.size());
  if (k < 2) return false;
  std::vector<int> pos(d.num_vertices(), -1);
  for (int i = 0; i < k; ++i) pos[d.leg_order[i]] = i;
  for (const Edge& e : d.edges) {
    if (d.valence[e.a] != Valence::Univalent ||
        d.valence[e.b] != Valence::Univalent)
      continue;
    const int pa = pos[e.a], pb = pos[e.b];
    if ((pa + 1) % k == pb || (pb + 1) % k == pa) return true;
  }
  return false;
}

struct FamilyBuilder {
  RelationSet set;
  std::set<std::map<CanonKey, Rat>> seen;

  FamilyBuilder(Support s, int degree) {
    set.support = s;
    set.degree = degree;
  }
  void push(DiagramVector vec, RelationKind kind) {
    if (vec.is_zero()) return;
    if (!seen.insert(vec.terms).second) return;
    set.relations.push_back({std::move(vec), kind});
  }
};

}  // namespace

RelationSet as_relations(Support support, int degree,
                         const std::vector<CanonicalDiagram>& generators) {
  FamilyBuilder fam(support, degree);
  for (const CanonicalDiagram& cd : generators) {
    const ChordDiagram d = to_diagram(cd.key);
    for (int v = 0; v < d.num_vertices(); ++v) {
      if (d.valence[v] != Valence::Trivalent) continue;
      ChordDiagram flipped = d;
      flipped.flip_orientation(v);
      DiagramVector vec(support, degree);
      vec.add(d, 1);
      vec.add(flipped, 1);
      fam.push(std::move(vec), RelationKind::AS);
    }
  }
  return fam.set;
}

RelationSet ihx_relations(Support support, int degree,
                          const std::vector<CanonicalDiagram>& generators) {
  FamilyBuilder fam(support, degree);
  for (const CanonicalDiagram& cd : generators) {
    const ChordDiagram d = to_diagram(cd.key);
    for (int e = 0; e < d.num_edges(); ++e) {
      const Valence va = d.valence[d.edges[e].a];
      const Valence vb = d.valence[d.edges[e].b];
      if (va == Valence::Trivalent && vb == Valence::Trivalent)
        fam.push(internal_ihx_vector(d, e), RelationKind::IHX);
      else if (support == Support::Circle &&
               (va == Valence::Trivalent || vb == Valence::Trivalent))
        fam.push(leg_edge_ihx_vector(d, e), RelationKind::IHX);
    }
  }
  return fam.set;
}

RelationSet stu_relations(int degree,
                          const std::vector<CanonicalDiagram>& generators) {
  FamilyBuilder fam(Support::Circle, degree);
  for (const CanonicalDiagram& cd : generators) {
    const ChordDiagram d = to_diagram(cd.key);
    const int k = static_cast<int>(d.leg_order.size());
    if (k < 2) continue;
    for (int pos = 0; pos < k; ++pos)
      fam.push(stu_vector(d, pos), RelationKind::STU);
  }
  return fam.set;
}

RelationSet fi_relations(int degree,
                         const std::vector<CanonicalDiagram>& generators) {
  FamilyBuilder fam(Support::Circle, degree);
  for (const CanonicalDiagram& cd : generators) {
    const ChordDiagram d = to_diagram(cd.key);
    if (!has_isolated_chord(d)) continue;
    DiagramVector vec(Support::Circle, degree);
    vec.add(cd, 1);
    fam.push(std::move(vec), RelationKind::FI);
  }
  return fam.set;
}

RelationSet as_relations(Support support, int degree,
                         const EnumerateOptions& options) {
  return as_relations(support, degree, enumerate_diagrams(support, degree, options));
}
RelationSet ihx_relations(Support support, int degree,
                          const EnumerateOptions& options) {
  return ihx_relations(support, degree, enumerate_diagrams(support, degree, options));
}
RelationSet stu_relations(int degree, const EnumerateOptions& options) {
  return stu_relations(degree,
                       enumerate_diagrams(Support::Circle, degree, options));
}
RelationSet fi_relations(int degree, const EnumerateOptions& options) {
  return fi_relations(degree,
                      enumerate_diagrams(Support::Circle, degree, options));
}

}  // namespace jd
