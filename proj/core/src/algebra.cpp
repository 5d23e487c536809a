#include "jd/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace jd {

ChordDiagram disjoint_union(const ChordDiagram& a, const ChordDiagram& b) {
  const int na = a.num_vertices();
  const int dart_shift = a.num_darts();

  ChordDiagram out = a;
  for (const Edge& e : b.edges) out.edges.push_back({e.a + na, e.b + na});
  out.valence.insert(out.valence.end(), b.valence.begin(), b.valence.end());
  for (int v = 0; v < b.num_vertices(); ++v) {
    std::array<int, 3> tr = b.orientation[v];
    if (b.valence[v] == Valence::Trivalent)
      for (int& dart : tr) dart += dart_shift;
    out.orientation.push_back(tr);
  }
  for (int leg : b.leg_order) out.leg_order.push_back(leg + na);
  return out;
}

DiagramVector multiply(const ChordDiagram& a, const ChordDiagram& b) {
  if (a.support != b.support) throw SupportMismatch("multiply: supports differ");
  DiagramVector out(a.support, degree(a) + degree(b));
  out.add(disjoint_union(a, b), 1);
  return out;
}

GradedAlgebra GradedAlgebra::build(Support support, int bound,
                                   QuotientFlags flags,
                                   const EnumerateOptions& options) {
  return build_variants(support, bound, {flags}, options).front();
}

std::vector<GradedAlgebra> GradedAlgebra::build_variants(
    Support support, int bound, const std::vector<QuotientFlags>& variants,
    const EnumerateOptions& options) {
  std::vector<GradedAlgebra> out(variants.size());
  for (size_t i = 0; i < variants.size(); ++i) {
    out[i].support = support;
    out[i].flags = variants[i];
  }
  for (int m = 0; m <= bound; ++m) {
    const auto gens = enumerate_diagrams(support, m, options);
    for (size_t i = 0; i < variants.size(); ++i)
      out[i].quotients.push_back(build_quotient(support, m, variants[i], gens));
  }
  for (const GradedAlgebra& alg : out)
    if (alg.quotients[0].dim() != 1)
      throw Error("degree-0 space is not 1-dimensional");
  return out;
}

const QuotientSpace& GradedAlgebra::at(int degree) const {
  if (degree < 0 || degree > bound())
    throw Error("degree outside the built range");
  return quotients[degree];
}

int GradedAlgebra::weight_space_dim(int m) const {
  int total = 0;
  for (int k = 0; k <= m; ++k) total += at(k).dim();
  return total;
}

namespace {

std::string describe(const CanonKey& key) {
  return to_record({key, Sign::Plus});
}

}  // namespace

ProductCheckReport product_welldefined_check(const GradedAlgebra& alg,
                                             int degree_bound) {
  ProductCheckReport report;
  if (degree_bound > alg.bound())
    throw Error("product check bound exceeds the built algebra");

  for (int k1 = 0; k1 <= degree_bound; ++k1) {
    for (int k2 = 0; k2 + k1 <= degree_bound; ++k2) {
      const QuotientSpace& target = alg.at(k1 + k2);
      for (const CanonKey& key1 : alg.at(k1).generators) {
        const ChordDiagram d1 = to_diagram(key1);
        for (const CanonKey& key2 : alg.at(k2).generators) {
          const ChordDiagram d2 = to_diagram(key2);
          ++report.pairs_checked;

          const DiagramVector prod = multiply(d1, d2);
          if (prod.degree != k1 + k2) {
            report.pass = false;
            report.failures.push_back("grading: " + describe(key1) + " * " +
                                      describe(key2));
            continue;
          }
          const std::vector<Rat> base = target.reduce(prod);

          bool ok = true;
          const int r1 = std::max<int>(1, d1.leg_order.size());
          const int r2 = std::max<int>(1, d2.leg_order.size());
          for (int i = 0; i < r1 && ok; ++i) {
            const ChordDiagram d1r = d1.with_rotated_legs(i);
            for (int j = 0; j < r2 && ok; ++j) {
              const ChordDiagram d2r = d2.with_rotated_legs(j);
              if (target.reduce(multiply(d1r, d2r)) != base) ok = false;
            }
          }
          if (target.reduce(multiply(d2, d1)) != base) ok = false;

          if (!ok) {
            report.pass = false;
            report.failures.push_back(describe(key1) + " * " + describe(key2));
          }
        }
      }
    }
  }
  return report;
}

WeightSystem WeightSystem::zero(const GradedAlgebra& alg) {
  WeightSystem w;
  w.support = alg.support;
  w.bound = alg.bound();
  for (int k = 0; k <= alg.bound(); ++k)
    w.values.emplace_back(alg.at(k).dim(), Rat(0));
  return w;
}

WeightSystem WeightSystem::basis_dual(const GradedAlgebra& alg, int degree,
                                      int index) {
  WeightSystem w = zero(alg);
  w.values.at(degree).at(index) = 1;
  return w;
}

Rat pairing(const WeightSystem& w, const DiagramVector& v,
            const GradedAlgebra& alg) {
  if (w.support != v.support || v.degree > w.bound)
    throw SupportMismatch("pairing: functional and vector grades differ");
  const std::vector<Rat> coords = alg.at(v.degree).reduce(v);
  Rat out(0);
  for (size_t i = 0; i < coords.size(); ++i)
    out += w.values[v.degree][i] * coords[i];
  return out;
}

bool LegFiltrationSubspace::contains(const std::vector<Rat>& coords) const {
  std::vector<Rat> residual = coords;
  for (const auto& row : span_rref.rows) {
    const int pivot = row.begin()->first;
    if (residual[pivot] == 0) continue;
    const Rat factor = residual[pivot] / row.begin()->second;
    for (const auto& [c, v] : row) residual[c] -= factor * v;
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](const Rat& x) { return x == 0; });
}

LegFiltrationSubspace leg_deficient_span(const GradedAlgebra& alg, int m) {
  if (alg.support != Support::Circle)
    throw SupportMismatch("leg filtration lives on circle support");
  const QuotientSpace& q = alg.at(2 * m);

  SparseMatrix rows;
  rows.cols = q.dim();
  for (size_t g = 0; g < q.generators.size(); ++g) {
    if (q.generators[g].legs >= 2 * m) continue;
    std::map<int, Rat> row;
    for (int j = 0; j < q.dim(); ++j)
      if (q.reduce_table[g][j] != 0) row[j] = q.reduce_table[g][j];
    if (!row.empty()) rows.rows.push_back(std::move(row));
  }

  LegFiltrationSubspace out;
  out.m = m;
  out.ambient_dim = q.dim();
  out.span_rref = row_reduce(rows).rref;
  return out;
}

bool conway_criterion_check(const GradedAlgebra& alg, const WeightSystem& w,
                            int m) {
  if (w.support != Support::Circle || 2 * m > w.bound)
    throw SupportMismatch("conway check: functional does not cover degree 2m");
  const LegFiltrationSubspace span = leg_deficient_span(alg, m);
  const auto& values = w.values.at(2 * m);
  for (const auto& row : span.span_rref.rows) {
    Rat dot(0);
    for (const auto& [c, v] : row) dot += v * values.at(c);
    if (dot != 0) return false;
  }
  return true;
}

int conway_space_dim(const GradedAlgebra& alg, int m) {
  const LegFiltrationSubspace span = leg_deficient_span(alg, m);
  return span.ambient_dim - span.dim();
}

std::vector<WeightSystem> conway_annihilator_basis(const GradedAlgebra& alg,
                                                   int m) {
  const LegFiltrationSubspace span = leg_deficient_span(alg, m);
  const auto kernel = nullspace_basis(span.span_rref);
  std::vector<WeightSystem> out;
  for (const auto& x : kernel) {
    WeightSystem w = WeightSystem::zero(alg);
    w.values.at(2 * m) = x;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace jd
