#include "jd/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace jd {
namespace {

// Dart layout for generation: legs 0..L-1 contribute one dart each
// (dart i belongs to leg i), trivalent vertex j contributes darts
// L+3j .. L+3j+2. Matchings are grown lowest-unmatched-dart first with
// two symmetry prunes: darts of one vertex are used in order, and a
// fresh trivalent vertex (no matched dart yet) may be entered only at
// the lowest-numbered fresh vertex. Every isomorphism class is still
// reached; canonicalization removes the remaining duplicates.
struct Generator {
  int L = 0;
  int T = 0;
  Support support = Support::Empty;
  int total = 0;
  std::vector<int> partner;

  int vertex_of(int dart) const {
    return dart < L ? dart : L + (dart - L) / 3;
  }
  bool is_tri_dart(int dart) const { return dart >= L; }
  int sub_index(int dart) const { return (dart - L) % 3; }

  template <typename Emit>
  void run(Emit&& emit, int fixed_first_partner = -1) {
    partner.assign(total, -1);
    if (total == 0) {
      emit(*this);
      return;
    }
    if (fixed_first_partner >= 0) {
      if (!candidate_ok(0, fixed_first_partner)) return;
      partner[0] = fixed_first_partner;
      partner[fixed_first_partner] = 0;
      rec(emit);
      return;
    }
    rec(emit);
  }

  bool candidate_ok(int d, int d2) const {
    if (partner[d2] != -1 || d2 <= d) return false;
    if (vertex_of(d2) == vertex_of(d)) return false;
    if (is_tri_dart(d2)) {
      if (sub_index(d2) > 0 && partner[d2 - 1] == -1) return false;
      if (sub_index(d2) == 0) {
        // fresh-vertex prune
        for (int d3 = L; d3 < d2; d3 += 3)
          if (partner[d3] == -1 && d3 != d && vertex_of(d3) != vertex_of(d))
            return false;
      }
    }
    return true;
  }

  template <typename Emit>
  void rec(Emit&& emit) {
    int d = 0;
    while (d < total && partner[d] != -1) ++d;
    if (d == total) {
      emit(*this);
      return;
    }
    for (int d2 = d + 1; d2 < total; ++d2) {
      if (!candidate_ok(d, d2)) continue;
      partner[d] = d2;
      partner[d2] = d;
      rec(emit);
      partner[d] = -1;
      partner[d2] = -1;
    }
  }

  ChordDiagram to_chord_diagram() const {
    std::vector<Valence> val(L + T, Valence::Trivalent);
    for (int v = 0; v < L; ++v) val[v] = Valence::Univalent;
    std::vector<Edge> edges;
    for (int d = 0; d < total; ++d)
      if (partner[d] > d) edges.push_back({vertex_of(d), vertex_of(partner[d])});
    std::vector<int> legs(L);
    std::iota(legs.begin(), legs.end(), 0);
    if (support == Support::Empty) legs.clear();
    return make_diagram(support, std::move(val), std::move(edges), {},
                        std::move(legs));
  }
};

using ClassMap = std::map<CanonKey, Sign>;

void collect(Generator& g, ClassMap& into) {
  g.run([&into](const Generator& done) {
    const ChordDiagram d = done.to_chord_diagram();
    if (d.support == Support::Circle && !every_component_has_leg(d)) return;
    const CanonicalDiagram cd = canonicalize(d);
    into.emplace(cd.key, cd.sign);
  });
}

void collect_fixed(Generator& g, int first_partner, ClassMap& into) {
  g.run(
      [&into](const Generator& done) {
        const ChordDiagram d = done.to_chord_diagram();
        if (d.support == Support::Circle && !every_component_has_leg(d)) return;
        const CanonicalDiagram cd = canonicalize(d);
        into.emplace(cd.key, cd.sign);
      },
      first_partner);
}

}  // namespace

namespace {

// Enumeration is pure in (support, degree, max_legs, exclude_zero_sign);
// repeated quotient builds share one run per process.
using MemoKey = std::tuple<Support, int, int, bool>;
std::map<MemoKey, std::shared_ptr<const std::vector<CanonicalDiagram>>>&
memo_table() {
  static std::map<MemoKey, std::shared_ptr<const std::vector<CanonicalDiagram>>>
      table;
  return table;
}
std::mutex memo_mutex;

std::vector<CanonicalDiagram> enumerate_uncached(Support support, int degree,
                                                 const EnumerateOptions& options);

}  // namespace

std::vector<CanonicalDiagram> enumerate_diagrams(Support support, int degree,
                                                 const EnumerateOptions& options) {
  if (degree < 0) throw ValidationError("negative degree");
  if (degree > options.budget.max_degree(support))
    throw BudgetExceeded("enumeration degree " + std::to_string(degree) +
                         " exceeds the configured budget for " +
                         to_string(support) + " support");

  if (!options.memo) return enumerate_uncached(support, degree, options);

  const MemoKey key{support, degree, options.max_legs.value_or(-1),
                    options.exclude_zero_sign};
  {
    std::lock_guard<std::mutex> guard(memo_mutex);
    const auto it = memo_table().find(key);
    if (it != memo_table().end()) return *it->second;
  }
  auto result = std::make_shared<const std::vector<CanonicalDiagram>>(
      enumerate_uncached(support, degree, options));
  std::lock_guard<std::mutex> guard(memo_mutex);
  memo_table().emplace(key, result);
  return *result;
}

namespace {

std::vector<CanonicalDiagram> enumerate_uncached(Support support, int degree,
                                                 const EnumerateOptions& options) {
  const int n = 2 * degree;
  std::vector<int> leg_counts;
  if (support == Support::Empty) {
    leg_counts.push_back(0);
  } else if (n == 0) {
    leg_counts.push_back(0);
  } else {
    const int cap = std::min(n, options.max_legs.value_or(n));
    for (int L = 1; L <= cap; ++L) leg_counts.push_back(L);
  }

  // Work items: one per (leg count, partner of dart 0), so the result
  // merge is independent of the thread schedule.
  struct Task {
    int L;
    int first_partner;  // -1 = unconstrained (empty dart set)
  };
  std::vector<Task> tasks;
  for (int L : leg_counts) {
    const int T = n - L;
    const int total = L + 3 * T;
    if (total == 0) {
      tasks.push_back({L, -1});
      continue;
    }
    for (int d2 = 1; d2 < total; ++d2) tasks.push_back({L, d2});
  }

  std::vector<ClassMap> results(tasks.size());
  auto run_task = [&](size_t i) {
    Generator g;
    g.L = tasks[i].L;
    g.T = n - tasks[i].L;
    g.support = support;
    g.total = g.L + 3 * g.T;
    if (tasks[i].first_partner < 0)
      collect(g, results[i]);
    else
      collect_fixed(g, tasks[i].first_partner, results[i]);
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    const int workers = std::min<size_t>(jobs, tasks.size());
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        while (true) {
          const size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  ClassMap merged;
  for (const ClassMap& part : results) merged.insert(part.begin(), part.end());

  std::vector<CanonicalDiagram> out;
  out.reserve(merged.size());
  for (const auto& [key, sign] : merged) {
    if (sign == Sign::Zero && options.exclude_zero_sign) continue;
    out.push_back({key, sign == Sign::Zero ? Sign::Zero : Sign::Plus});
  }
  return out;
}

}  // namespace

}  // namespace jd
