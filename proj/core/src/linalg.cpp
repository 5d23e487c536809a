#include "jd/linalg.hpp"

#include <algorithm>

namespace jd {

RowReduceResult row_reduce(const SparseMatrix& m) {
  RowReduceResult out;
  out.rref.cols = m.cols;
  std::vector<std::map<int, Rat>> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows)
    if (!r.empty()) rows.push_back(r);

  std::vector<std::map<int, Rat>> done;
  for (int col = 0; col < m.cols && !rows.empty(); ++col) {
    // first remaining row with a nonzero entry in this column
    size_t pivot = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].count(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;

    std::map<int, Rat> prow = std::move(rows[pivot]);
    rows.erase(rows.begin() + static_cast<long>(pivot));
    const Rat inv = Rat(1) / prow.at(col);
    for (auto& [c, v] : prow) v *= inv;

    auto eliminate = [&](std::map<int, Rat>& row) {
      auto it = row.find(col);
      if (it == row.end()) return;
      const Rat factor = it->second;
      for (const auto& [c, v] : prow) {
        Rat& cell = row[c];
        cell -= factor * v;
        if (cell == 0) row.erase(c);
      }
    };
    for (auto& row : rows) eliminate(row);
    for (auto& row : done) eliminate(row);
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const auto& r) { return r.empty(); }),
               rows.end());

    out.pivot_cols.push_back(col);
    done.push_back(std::move(prow));
  }
  out.rank = static_cast<int>(done.size());
  out.rref.rows = std::move(done);
  return out;
}

int dense_rank_reverse_pivot(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const int cols = static_cast<int>(m[0].size());
  std::vector<char> used(m.size(), 0);
  int rank = 0;
  for (int col = cols - 1; col >= 0; --col) {
    int pivot = -1;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
      if (!used[i] && m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    used[pivot] = 1;
    ++rank;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == pivot || m[i][col] == 0) continue;
      const Rat factor = m[i][col] / m[pivot][col];
      for (int c = 0; c < cols; ++c) m[i][c] -= factor * m[pivot][c];
    }
  }
  return rank;
}

std::vector<std::vector<Rat>> nullspace_basis(const SparseMatrix& m) {
  const RowReduceResult rr = row_reduce(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : rr.pivot_cols) is_pivot[c] = 1;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(m.cols, Rat(0));
    x[free] = 1;
    for (size_t r = 0; r < rr.rref.rows.size(); ++r) {
      const auto& row = rr.rref.rows[r];
      auto it = row.find(free);
      if (it != row.end()) x[rr.pivot_cols[r]] = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int QuotientSpace::generator_index(const CanonKey& key) const {
  const auto it = std::lower_bound(generators.begin(), generators.end(), key);
  if (it == generators.end() || *it != key) return -1;
  return static_cast<int>(it - generators.begin());
}

std::vector<Rat> QuotientSpace::reduce(const DiagramVector& v) const {
  if (v.support != support || v.degree != degree)
    throw SupportMismatch("reduce: vector grade does not match the quotient");
  std::vector<Rat> out(basis.size(), Rat(0));
  for (const auto& [key, coeff] : v.terms) {
    const int g = generator_index(key);
    if (g < 0)
      throw Error("reduce: diagram outside the quotient generator set: " +
                  to_record({key, Sign::Plus}));
    for (size_t j = 0; j < out.size(); ++j)
      out[j] += coeff * reduce_table[g][j];
  }
  return out;
}

namespace {

std::vector<Relation> all_relations(Support support, int degree,
                                    QuotientFlags flags,
                                    const std::vector<CanonicalDiagram>& gens) {
  std::vector<Relation> rels;
  auto take = [&rels](RelationSet set) {
    for (auto& r : set.relations) rels.push_back(std::move(r));
  };
  take(as_relations(support, degree, gens));
  take(ihx_relations(support, degree, gens));
  if (support == Support::Circle && flags.stu) take(stu_relations(degree, gens));
  if (support == Support::Circle && flags.fi) take(fi_relations(degree, gens));
  return rels;
}

}  // namespace

QuotientSpace build_quotient(Support support, int degree, QuotientFlags flags,
                             const std::vector<CanonicalDiagram>& generators) {
  QuotientSpace q;
  q.support = support;
  q.degree = degree;
  q.flags = flags;
  for (const CanonicalDiagram& cd : generators) q.generators.push_back(cd.key);
  std::sort(q.generators.begin(), q.generators.end());

  const auto rels = all_relations(support, degree, flags, generators);
  SparseMatrix m;
  m.cols = static_cast<int>(q.generators.size());
  for (const Relation& rel : rels) {
    std::map<int, Rat> row;
    for (const auto& [key, coeff] : rel.vec.terms) {
      const int g = q.generator_index(key);
      if (g < 0)
        throw Error("relation term outside the generator set: " +
                    to_record({key, Sign::Plus}));
      row[g] = coeff;
    }
    m.rows.push_back(std::move(row));
  }

  const RowReduceResult rr = row_reduce(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : rr.pivot_cols) is_pivot[c] = 1;

  std::vector<int> basis_pos(m.cols, -1);
  for (int g = 0; g < m.cols; ++g) {
    if (is_pivot[g]) continue;
    basis_pos[g] = static_cast<int>(q.basis.size());
    q.basis.push_back(q.generators[g]);
  }

  q.reduce_table.assign(m.cols, std::vector<Rat>(q.basis.size(), Rat(0)));
  for (int g = 0; g < m.cols; ++g)
    if (basis_pos[g] >= 0) q.reduce_table[g][basis_pos[g]] = 1;
  for (size_t r = 0; r < rr.rref.rows.size(); ++r) {
    const int p = rr.pivot_cols[r];
    for (const auto& [c, v] : rr.rref.rows[r]) {
      if (c == p) continue;
      q.reduce_table[p][basis_pos[c]] = -v;
    }
  }
  return q;
}

QuotientSpace build_quotient(Support support, int degree, QuotientFlags flags,
                             const EnumerateOptions& options) {
  return build_quotient(support, degree, flags,
                        enumerate_diagrams(support, degree, options));
}

int quotient_dim_dense_oracle(Support support, int degree, QuotientFlags flags,
                              const std::vector<CanonicalDiagram>& generators) {
  std::vector<CanonKey> cols;
  for (const CanonicalDiagram& cd : generators) cols.push_back(cd.key);
  std::sort(cols.begin(), cols.end());

  const auto rels = all_relations(support, degree, flags, generators);
  std::vector<std::vector<Rat>> m;
  for (const Relation& rel : rels) {
    std::vector<Rat> row(cols.size(), Rat(0));
    for (const auto& [key, coeff] : rel.vec.terms) {
      const auto it = std::lower_bound(cols.begin(), cols.end(), key);
      row[static_cast<size_t>(it - cols.begin())] = coeff;
    }
    m.push_back(std::move(row));
  }
  if (m.empty()) return static_cast<int>(cols.size());
  return static_cast<int>(cols.size()) - dense_rank_reverse_pivot(std::move(m));
}

}  // namespace jd
