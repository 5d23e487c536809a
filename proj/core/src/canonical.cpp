#include "jd/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace jd {
namespace {

// Parity of a 3-element listing against its sorted order: cyclic
// rotations are even, a transposition is odd. Well defined on the
// cyclic class.
int triple_parity(int x, int y, int z) {
  return ((x > y) + (x > z) + (y > z)) & 1;
}

struct Labeling {
  std::vector<int> label;  // vertex id -> label
};

// Relabels the edge list and accumulates the orientation parity of one
// full labeling. Returns the sorted edge list through `out`.
int evaluate(const ChordDiagram& d, const std::vector<int>& label,
             std::vector<std::pair<int, int>>& out) {
  const int m = d.num_edges();
  // (relabeled pair, original edge index); the index tiebreak keeps the
  // permutation of parallel edges deterministic, which leaves the total
  // parity well defined (swapping a parallel pair flips both endpoints).
  static thread_local std::vector<std::pair<std::pair<int, int>, int>> rel;
  rel.clear();
  rel.reserve(m);
  for (int e = 0; e < m; ++e) {
    const int la = label[d.edges[e].a];
    const int lb = label[d.edges[e].b];
    rel.push_back({{std::min(la, lb), std::max(la, lb)}, e});
  }
  std::sort(rel.begin(), rel.end());

  static thread_local std::vector<int> pos;  // original edge -> new index
  pos.assign(m, 0);
  for (int i = 0; i < m; ++i) pos[rel[i].second] = i;

  auto map_dart = [&](int dart) {
    const int e = edge_of(dart);
    const int v = d.vertex_of(dart);
    const int lv = label[v];
    const int side = lv == rel[pos[e]].first.first ? 0 : 1;
    return 2 * pos[e] + side;
  };

  int parity = 0;
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (d.valence[v] != Valence::Trivalent) continue;
    const auto& tr = d.orientation[v];
    parity ^= triple_parity(map_dart(tr[0]), map_dart(tr[1]), map_dart(tr[2]));
  }

  out.clear();
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(rel[i].first);
  return parity;
}

// Iterated colour refinement of the trivalent vertices; legs are already
// individualised by their labels. Returns the trivalent vertices grouped
// into classes ordered by colour signature (an isomorphism invariant).
std::vector<std::vector<int>> refine_classes(const ChordDiagram& d,
                                             const std::vector<int>& leg_label,
                                             const std::vector<int>& tri_ids) {
  const int t = static_cast<int>(tri_ids.size());
  std::vector<std::vector<int>> darts(t);
  std::map<int, int> tri_index;
  for (int i = 0; i < t; ++i) tri_index[tri_ids[i]] = i;
  for (int i = 0; i < t; ++i) darts[i] = d.darts_at(tri_ids[i]);

  std::vector<int> rank(t, 0);
  for (int round = 0; round <= t; ++round) {
    // signature: own rank plus sorted neighbour descriptors
    std::vector<std::pair<std::vector<int>, int>> sig(t);
    for (int i = 0; i < t; ++i) {
      std::vector<int> s;
      s.push_back(rank[i]);
      std::vector<int> nb;
      for (int dart : darts[i]) {
        const int w = d.vertex_of(mate(dart));
        if (d.valence[w] == Valence::Univalent)
          nb.push_back(leg_label[w]);
        else
          nb.push_back(1 << 20 | rank[tri_index.at(w)]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[i] = {std::move(s), i};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(t);
    int r = -1;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
      if (i == 0 || sorted[i].first != sorted[i - 1].first) ++r;
      next[sorted[i].second] = r;
    }
    if (next == rank) break;
    rank = std::move(next);
  }

  std::map<int, std::vector<int>> by_rank;
  for (int i = 0; i < t; ++i) by_rank[rank[i]].push_back(tri_ids[i]);
  std::vector<std::vector<int>> classes;
  for (auto& [r, vs] : by_rank) {
    std::sort(vs.begin(), vs.end());
    classes.push_back(vs);
  }
  return classes;
}

}  // namespace

CanonicalDiagram canonicalize(const ChordDiagram& d) {
  const int n = d.num_vertices();
  std::vector<int> tri_ids;
  for (int v = 0; v < n; ++v)
    if (d.valence[v] == Valence::Trivalent) tri_ids.push_back(v);
  const int L = static_cast<int>(d.leg_order.size());
  const int T = static_cast<int>(tri_ids.size());

  std::vector<std::pair<int, int>> best;
  bool have_best = false;
  bool seen_even = false, seen_odd = false;

  std::vector<int> label(n, -1);
  std::vector<int> leg_label(n, -1);
  std::vector<std::pair<int, int>> cur;

  const int rotations = d.support == Support::Circle ? std::max(L, 1) : 1;
  for (int r = 0; r < rotations; ++r) {
    for (int i = 0; i < L; ++i) {
      const int leg = d.leg_order[(r + i) % L];
      label[leg] = i;
      leg_label[leg] = i;
    }

    auto classes = refine_classes(d, leg_label, tri_ids);

    // enumerate class-respecting assignments of labels L..n-1
    std::vector<std::vector<int>> perm = classes;
    int base = L;
    std::vector<int> class_base(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
      class_base[c] = base;
      base += static_cast<int>(classes[c].size());
    }

    auto consider = [&]() {
      const int parity = evaluate(d, label, cur);
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
        seen_even = parity == 0;
        seen_odd = parity == 1;
      } else if (cur == best) {
        seen_even = seen_even || parity == 0;
        seen_odd = seen_odd || parity == 1;
      }
    };

    auto rec = [&](auto&& self, size_t c) -> void {
      if (c == perm.size()) {
        consider();
        return;
      }
      auto& vs = perm[c];
      std::sort(vs.begin(), vs.end());
      do {
        for (size_t i = 0; i < vs.size(); ++i)
          label[vs[i]] = class_base[c] + static_cast<int>(i);
        self(self, c + 1);
      } while (std::next_permutation(vs.begin(), vs.end()));
    };
    if (T == 0)
      consider();
    else
      rec(rec, 0);
  }

  CanonicalDiagram out;
  out.key.support = d.support;
  out.key.legs = L;
  out.key.tri = T;
  out.key.edges = std::move(best);
  out.sign = (seen_even && seen_odd) ? Sign::Zero
             : seen_odd              ? Sign::Minus
                                     : Sign::Plus;
  return out;
}

ChordDiagram to_diagram(const CanonKey& key) {
  const int n = key.legs + key.tri;
  std::vector<Valence> val(n, Valence::Trivalent);
  for (int v = 0; v < key.legs; ++v) val[v] = Valence::Univalent;
  std::vector<Edge> edges;
  edges.reserve(key.edges.size());
  for (const auto& [a, b] : key.edges) edges.push_back({a, b});
  std::vector<int> legs(key.legs);
  std::iota(legs.begin(), legs.end(), 0);
  if (key.support == Support::Empty) legs.clear();
  return make_diagram(key.support, std::move(val), std::move(edges), {},
                      std::move(legs));
}

IsoResult is_isomorphic(const ChordDiagram& a, const ChordDiagram& b) {
  if (a.support != b.support)
    throw SupportMismatch("is_isomorphic: supports differ");
  const CanonicalDiagram ca = canonicalize(a);
  const CanonicalDiagram cb = canonicalize(b);
  if (ca.key != cb.key) return {false, Sign::Plus};
  return {true, ca.sign * cb.sign};
}

std::string to_record(const CanonicalDiagram& cd) {
  const ChordDiagram rep = to_diagram(cd.key);
  std::ostringstream os;
  os << "jd1;support=" << to_string(cd.key.support);
  os << ";n=" << rep.num_vertices();
  os << ";val=";
  for (Valence v : rep.valence) os << (v == Valence::Univalent ? 'u' : 't');
  os << ";edges=";
  for (size_t i = 0; i < cd.key.edges.size(); ++i) {
    if (i) os << ',';
    os << cd.key.edges[i].first << '-' << cd.key.edges[i].second;
  }
  os << ";orient=";
  bool first = true;
  for (int v = 0; v < rep.num_vertices(); ++v) {
    if (rep.valence[v] != Valence::Trivalent) continue;
    if (!first) os << '|';
    first = false;
    os << v << ':' << rep.orientation[v][0] << ',' << rep.orientation[v][1]
       << ',' << rep.orientation[v][2];
  }
  os << ";legs=";
  for (size_t i = 0; i < rep.leg_order.size(); ++i) {
    if (i) os << ',';
    os << rep.leg_order[i];
  }
  os << ";sign=" << to_string(cd.sign);
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

std::string field(const std::string& part, const std::string& name) {
  const std::string prefix = name + "=";
  if (part.rfind(prefix, 0) != 0)
    throw ParseError("record field out of order: expected " + name);
  return part.substr(prefix.size());
}

int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer in record");
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer in record: " + s);
  }
  if (used != s.size()) throw ParseError("bad integer in record: " + s);
  return v;
}

}  // namespace

CanonicalDiagram parse_record(const std::string& line) {
  const auto parts = split(line, ';');
  if (parts.size() != 8 || parts[0] != "jd1")
    throw ParseError("not a jd1 record");

  CanonicalDiagram cd;
  const std::string sup = field(parts[1], "support");
  if (sup == "circle")
    cd.key.support = Support::Circle;
  else if (sup == "empty")
    cd.key.support = Support::Empty;
  else
    throw ParseError("bad support: " + sup);

  const int n = parse_int(field(parts[2], "n"));
  const std::string val = field(parts[3], "val");
  if (static_cast<int>(val.size()) != n) throw ParseError("val length mismatch");
  cd.key.legs = 0;
  cd.key.tri = 0;
  for (char c : val) {
    if (c == 'u')
      ++cd.key.legs;
    else if (c == 't')
      ++cd.key.tri;
    else
      throw ParseError("bad valence tag");
  }

  const std::string edges = field(parts[4], "edges");
  if (!edges.empty()) {
    for (const std::string& tok : split(edges, ',')) {
      const auto ends = split(tok, '-');
      if (ends.size() != 2) throw ParseError("bad edge token: " + tok);
      cd.key.edges.push_back({parse_int(ends[0]), parse_int(ends[1])});
    }
  }

  const std::string sign = field(parts[7], "sign");
  if (sign == "+1")
    cd.sign = Sign::Plus;
  else if (sign == "-1")
    cd.sign = Sign::Minus;
  else if (sign == "0")
    cd.sign = Sign::Zero;
  else
    throw ParseError("bad sign: " + sign);

  // Round-trip integrity: the reconstructed record must match byte for
  // byte (this also validates the orient/legs fields and rejects
  // corrupted cache entries).
  std::string back;
  try {
    back = to_record(cd);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("record does not describe a diagram: ") +
                     e.what());
  }
  if (back != line) throw ParseError("record fails round-trip check");
  return cd;
}

}  // namespace jd
