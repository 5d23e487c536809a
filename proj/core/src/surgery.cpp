#include "jd/surgery.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jd {

FramedLink FramedLink::sublink(unsigned mask) const {
  FramedLink out;
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) out.components.push_back(components[i]);
  return out;
}

FramedLink FramedLink::without(int index) const {
  FramedLink out;
  for (int i = 0; i < size(); ++i)
    if (i != index) out.components.push_back(components[i]);
  return out;
}

FramedLink make_framed_link(std::vector<LinkComponent> components) {
  std::set<std::string> names;
  for (const LinkComponent& c : components) {
    if (c.framing != 1 && c.framing != -1)
      throw ValidationError("framings must be +1 or -1");
    if (!names.insert(c.name).second)
      throw ValidationError("duplicate link component name: " + c.name);
  }
  FramedLink link;
  link.components = std::move(components);
  return link;
}

void BracketExpression::add(const ManifoldSymbol& sym, long long coeff) {
  if (coeff == 0) return;
  long long& c = terms[sym];
  c += coeff;
  if (c == 0) terms.erase(sym);
}

BracketExpression& BracketExpression::operator-=(const BracketExpression& other) {
  for (const auto& [sym, c] : other.terms) add(sym, -c);
  return *this;
}

BracketExpression bracket(const ManifoldSymbol& base, const FramedLink& link,
                          const SurgeryOracle& oracle) {
  const int n = link.size();
  if (n > kMaxBracketComponents)
    throw BudgetExceeded("bracket: link has more than " +
                         std::to_string(kMaxBracketComponents) + " components");
  BracketExpression out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int parity = __builtin_popcount(mask) & 1;
    out.add(oracle(base, link.sublink(mask)), parity ? -1 : 1);
  }
  return out;
}

bool telescope_check(const ManifoldSymbol& base, const FramedLink& link,
                     int component_index, const SurgeryOracle& oracle) {
  const FramedLink rest = link.without(component_index);
  FramedLink just_k;
  just_k.components.push_back(link.components[component_index]);
  const ManifoldSymbol after_k = oracle(base, just_k);

  BracketExpression rhs = bracket(base, rest, oracle);
  rhs -= bracket(after_k, rest, oracle);
  return bracket(base, link, oracle) == rhs;
}

bool FiltrationSpan::contains(const BracketExpression& expr) const {
  std::vector<Rat> residual(symbols.size(), Rat(0));
  for (const auto& [sym, c] : expr.terms) {
    const auto it = std::lower_bound(symbols.begin(), symbols.end(), sym);
    if (it == symbols.end() || !(*it == sym)) return false;
    residual[static_cast<size_t>(it - symbols.begin())] = c;
  }
  for (const auto& row : rref.rows) {
    const int pivot = row.begin()->first;
    if (residual[pivot] == 0) continue;
    const Rat factor = residual[pivot] / row.begin()->second;
    for (const auto& [c, v] : row) residual[c] -= factor * v;
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](const Rat& x) { return x == 0; });
}

FiltrationSpan filtration_span(const ManifoldSymbol& base,
                               const std::vector<FramedLink>& links,
                               int min_components,
                               const SurgeryOracle& oracle) {
  FiltrationSpan span;
  for (const FramedLink& link : links) {
    if (link.size() < min_components)
      throw ValidationError("filtration_span: link below the component bound");
    span.generators.push_back(bracket(base, link, oracle));
  }

  std::set<ManifoldSymbol> universe;
  for (const BracketExpression& g : span.generators)
    for (const auto& [sym, c] : g.terms) universe.insert(sym);
  span.symbols.assign(universe.begin(), universe.end());

  SparseMatrix m;
  m.cols = static_cast<int>(span.symbols.size());
  for (const BracketExpression& g : span.generators) {
    std::map<int, Rat> row;
    for (const auto& [sym, c] : g.terms) {
      const auto it =
          std::lower_bound(span.symbols.begin(), span.symbols.end(), sym);
      row[static_cast<int>(it - span.symbols.begin())] = c;
    }
    m.rows.push_back(std::move(row));
  }
  span.rref = row_reduce(m).rref;
  return span;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_label(std::uint64_t id) {
  std::ostringstream os;
  os << "M" << std::hex << id;
  return os.str();
}

}  // namespace

SurgeryOracle make_synthetic_oracle(std::uint64_t seed, int collision_classes) {
  return [seed, collision_classes](const ManifoldSymbol& base,
                                   const FramedLink& sublink) {
    if (sublink.components.empty()) return base;
    std::uint64_t id = base.id;
    for (const LinkComponent& c : sublink.components) {
      std::uint64_t h =
          splitmix64(fnv1a(c.name) ^ seed ^ (c.framing > 0 ? 0x5aULL : 0xa5ULL));
      if (collision_classes > 0)
        h = (h % static_cast<std::uint64_t>(collision_classes)) *
            0x9e3779b97f4a7c15ULL;
      id += h;
    }
    return ManifoldSymbol{id, hex_label(id)};
  };
}

}  // namespace jd
