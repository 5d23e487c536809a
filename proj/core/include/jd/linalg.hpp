#ifndef JD_LINALG_HPP
#define JD_LINALG_HPP

#include <map>
#include <vector>

#include "jd/relations.hpp"

namespace jd {

// Rows are sparse rational vectors over a fixed column count; columns of
// quotient matrices follow the total order on canonical keys.
struct SparseMatrix {
  int cols = 0;
  std::vector<std::map<int, Rat>> rows;
};

struct RowReduceResult {
  SparseMatrix rref;
  int rank = 0;
  std::vector<int> pivot_cols;  // ascending
};

// Exact reduced row echelon form. Pivot choice is deterministic: lowest
// column index first, then the first remaining row.
RowReduceResult row_reduce(const SparseMatrix& m);

// Independent elimination route with the opposite pivot rule (highest
// column first, last row). Used to cross-check ranks; shares no code
// with row_reduce.
int dense_rank_reverse_pivot(std::vector<std::vector<Rat>> m);

// Basis of the right nullspace {x : M x = 0}.
std::vector<std::vector<Rat>> nullspace_basis(const SparseMatrix& m);

struct QuotientFlags {
  bool fi = false;
  bool stu = true;

  std::string tag() const {
    return std::string(fi ? "fi" : "nofi") + "," + (stu ? "stu" : "nostu");
  }
};

// A computed degree-m quotient: generators (all enumerated canonical
// diagrams), the surviving basis, and the reduction expressing every
// generator over the basis.
struct QuotientSpace {
  Support support = Support::Empty;
  int degree = 0;
  QuotientFlags flags;
  std::vector<CanonKey> generators;            // sorted by canonical key
  std::vector<CanonKey> basis;                 // subset of generators
  std::vector<std::vector<Rat>> reduce_table;  // per generator: coords over basis

  int dim() const { return static_cast<int>(basis.size()); }
  int generator_index(const CanonKey& key) const;  // -1 when absent

  // Linear reduction map; annihilates relation vectors, identity on
  // basis elements. Throws on support/degree mismatch or on a key
  // outside the generator set.
  std::vector<Rat> reduce(const DiagramVector& v) const;
};

// Assembles generators and the requested relation families, reduces,
// and returns the quotient. AS and IHX are always generated; STU and FI
// follow the flags (both circle-only).
QuotientSpace build_quotient(Support support, int degree, QuotientFlags flags,
                             const EnumerateOptions& options = {});
QuotientSpace build_quotient(Support support, int degree, QuotientFlags flags,
                             const std::vector<CanonicalDiagram>& generators);

// Same dimension through the reverse-pivot dense eliminator.
int quotient_dim_dense_oracle(Support support, int degree, QuotientFlags flags,
                              const std::vector<CanonicalDiagram>& generators);

inline std::vector<Rat> reduce_vector(const DiagramVector& v,
                                      const QuotientSpace& q) {
  return q.reduce(v);
}

}  // namespace jd

#endif
