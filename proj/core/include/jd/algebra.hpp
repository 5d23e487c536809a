#ifndef JD_ALGEBRA_HPP
#define JD_ALGEBRA_HPP

#include <string>
#include <vector>

#include "jd/linalg.hpp"

namespace jd {

// Disjoint union of the graphs; on the circle the leg sequences are
// concatenated at the fixed cut point (immediately before the first leg
// of each stored cyclic order), which is the connected sum.
ChordDiagram disjoint_union(const ChordDiagram& a, const ChordDiagram& b);

// Graded product: disjoint union on empty support, connected sum on the
// circle. Result degree is the sum; returned canonicalized. Throws
// SupportMismatch.
DiagramVector multiply(const ChordDiagram& a, const ChordDiagram& b);

// Quotients of one support for all degrees 0..bound, sharing flags.
struct GradedAlgebra {
  Support support = Support::Empty;
  QuotientFlags flags;
  std::vector<QuotientSpace> quotients;  // index = degree

  static GradedAlgebra build(Support support, int bound, QuotientFlags flags,
                             const EnumerateOptions& options = {});
  // Builds several flag variants over one shared enumeration run.
  static std::vector<GradedAlgebra> build_variants(
      Support support, int bound, const std::vector<QuotientFlags>& variants,
      const EnumerateOptions& options = {});

  int bound() const { return static_cast<int>(quotients.size()) - 1; }
  const QuotientSpace& at(int degree) const;

  // dim Hom of the degree-<=m part: the sum of the quotient dimensions.
  int weight_space_dim(int m) const;
};

struct ProductCheckReport {
  bool pass = true;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

// Empirical surrogate for the product being well defined on the
// quotient: for every generator pair of total degree within the bound,
// the reduced product must be independent of both cut points and of the
// factor order, and degrees must add.
ProductCheckReport product_welldefined_check(const GradedAlgebra& alg,
                                             int degree_bound);

// A rational functional on the degree-<=bound part, stored on the
// quotient bases.
struct WeightSystem {
  Support support = Support::Empty;
  int bound = 0;
  std::vector<std::vector<Rat>> values;  // per degree: one value per basis element

  static WeightSystem zero(const GradedAlgebra& alg);
  static WeightSystem basis_dual(const GradedAlgebra& alg, int degree, int index);
};

// <w, v> = w applied to the reduction of v. Throws on grade mismatch.
Rat pairing(const WeightSystem& w, const DiagramVector& v,
            const GradedAlgebra& alg);

// Reduced span of the degree-2m generators with fewer than 2m legs.
struct LegFiltrationSubspace {
  int m = 0;
  int ambient_dim = 0;
  SparseMatrix span_rref;  // rows: a reduced echelon basis of the span

  int dim() const { return static_cast<int>(span_rref.rows.size()); }
  bool contains(const std::vector<Rat>& coords) const;
};

LegFiltrationSubspace leg_deficient_span(const GradedAlgebra& alg, int m);

// True iff w annihilates the leg-deficient span of degree 2m; this is
// the diagram-level characterization of the weight systems built from
// products of Conway coefficients.
bool conway_criterion_check(const GradedAlgebra& alg, const WeightSystem& w,
                            int m);

// dim A_2m minus the span dimension.
int conway_space_dim(const GradedAlgebra& alg, int m);

// A basis of functionals on A_2m annihilating the span (each extended
// by zero in the other degrees).
std::vector<WeightSystem> conway_annihilator_basis(const GradedAlgebra& alg,
                                                   int m);

}  // namespace jd

#endif
