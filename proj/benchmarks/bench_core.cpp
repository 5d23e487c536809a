#include <benchmark/benchmark.h>

#include "jd/algebra.hpp"

namespace {

jd::ChordDiagram sample_diagram(jd::Support support, int degree) {
  const auto gens = jd::enumerate_diagrams(support, degree);
  return jd::to_diagram(gens.back().key);
}

void BM_canonicalize_circle3(benchmark::State& state) {
  const jd::ChordDiagram d = sample_diagram(jd::Support::Circle, 3);
  for (auto _ : state) benchmark::DoNotOptimize(jd::canonicalize(d));
}
BENCHMARK(BM_canonicalize_circle3);

void BM_canonicalize_empty3(benchmark::State& state) {
  const jd::ChordDiagram d = sample_diagram(jd::Support::Empty, 3);
  for (auto _ : state) benchmark::DoNotOptimize(jd::canonicalize(d));
}
BENCHMARK(BM_canonicalize_empty3);

void BM_enumerate_circle(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  jd::EnumerateOptions options;
  options.memo = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        jd::enumerate_diagrams(jd::Support::Circle, degree, options));
}
BENCHMARK(BM_enumerate_circle)->Arg(2)->Arg(3);

void BM_build_quotient_circle3(benchmark::State& state) {
  const auto gens = jd::enumerate_diagrams(jd::Support::Circle, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(jd::build_quotient(
        jd::Support::Circle, 3, {.fi = true, .stu = true}, gens));
}
BENCHMARK(BM_build_quotient_circle3);

void BM_row_reduce_relations(benchmark::State& state) {
  const auto gens = jd::enumerate_diagrams(jd::Support::Circle, 3);
  const auto rels = jd::ihx_relations(jd::Support::Circle, 3, gens);
  std::vector<jd::CanonKey> cols;
  for (const auto& cd : gens) cols.push_back(cd.key);
  jd::SparseMatrix m;
  m.cols = static_cast<int>(cols.size());
  for (const auto& rel : rels.relations) {
    std::map<int, jd::Rat> row;
    for (const auto& [key, coeff] : rel.vec.terms) {
      const auto it = std::lower_bound(cols.begin(), cols.end(), key);
      row[static_cast<int>(it - cols.begin())] = coeff;
    }
    m.rows.push_back(std::move(row));
  }
  for (auto _ : state) benchmark::DoNotOptimize(jd::row_reduce(m));
}
BENCHMARK(BM_row_reduce_relations);

}  // namespace

BENCHMARK_MAIN();
