#include "coxjsj/separators.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxjsj/error.hpp"

namespace coxjsj {

namespace {

GeneratorSubset component_of(const CoxeterSystem& sys, std::size_t v, GeneratorSubset allowed) {
  GeneratorSubset comp = GeneratorSubset::single(v);
  GeneratorSubset frontier = comp;
  while (!frontier.empty()) {
    GeneratorSubset next;
    for (std::size_t u : frontier) next |= sys.neighbors(u);
    next = (next & allowed) - comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

GeneratorSubset neighbourhood(const CoxeterSystem& sys, GeneratorSubset set, GeneratorSubset universe) {
  GeneratorSubset out;
  for (std::size_t v : set) out |= sys.neighbors(v);
  return (out & universe) - set;
}

void require_universe(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe) {
  sys.require_subset(universe);
  if (!cut.subset_of(universe)) throw Error("separator candidate is not contained in the generating set");
}

}  // namespace

bool is_separation(const CoxeterSystem& sys, const Separation& sep, GeneratorSubset universe) {
  sys.require_subset(universe);
  if ((sep.left | sep.right) != universe) return false;
  if ((sep.left & sep.right) != sep.cut) return false;
  GeneratorSubset a = sep.left - sep.cut;
  GeneratorSubset b = sep.right - sep.cut;
  if (a.empty() || b.empty()) return false;
  for (std::size_t v : a)
    if (sys.neighbors(v).intersects(b)) return false;
  return true;
}

bool is_separation(const CoxeterSystem& sys, const Separation& sep) { return is_separation(sys, sep, sys.all()); }

bool separates_pair(const CoxeterSystem& sys, GeneratorSubset cut, std::size_t a, std::size_t b) {
  return separates_pair(sys, cut, a, b, sys.all());
}

bool separates_pair(const CoxeterSystem& sys, GeneratorSubset cut, std::size_t a, std::size_t b,
                    GeneratorSubset universe) {
  require_universe(sys, cut, universe);
  GeneratorSubset rest = universe - cut;
  if (!rest.contains(a) || !rest.contains(b)) throw Error("pair must lie outside the separator");
  if (a == b) throw Error("pair must consist of distinct generators");
  return !component_of(sys, a, rest).contains(b);
}

bool is_separator(const CoxeterSystem& sys, GeneratorSubset cut) { return is_separator(sys, cut, sys.all()); }

bool is_separator(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe) {
  require_universe(sys, cut, universe);
  GeneratorSubset rest = universe - cut;
  if (rest.empty()) return false;
  return component_of(sys, rest.least(), rest) != rest;
}

Separation make_separation(const CoxeterSystem& sys, GeneratorSubset cut) {
  return make_separation(sys, cut, sys.all());
}

Separation make_separation(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe) {
  if (!is_separator(sys, cut, universe)) throw Error("subset does not separate");
  GeneratorSubset rest = universe - cut;
  GeneratorSubset first = component_of(sys, rest.least(), rest);
  return {cut | first, cut, universe - first};
}

bool is_minimal_separator(const CoxeterSystem& sys, GeneratorSubset cut) {
  return is_minimal_separator(sys, cut, sys.all());
}

bool is_minimal_separator(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe) {
  if (!is_separator(sys, cut, universe)) return false;
  // Any separating proper subset contains a relative minimal separator.
  for (GeneratorSubset s : relative_minimal_separators(sys, universe))
    if (s.proper_subset_of(cut)) return false;
  return true;
}

std::vector<GeneratorSubset> minimal_ab_separators(const CoxeterSystem& sys, std::size_t a, std::size_t b) {
  return minimal_ab_separators(sys, a, b, sys.all());
}

std::vector<GeneratorSubset> minimal_ab_separators(const CoxeterSystem& sys, std::size_t a, std::size_t b,
                                                   GeneratorSubset universe) {
  sys.require_subset(universe);
  if (!universe.contains(a) || !universe.contains(b) || a == b)
    throw Error("minimal_ab_separators needs two distinct generators of the universe");
  if (sys.adjacent(a, b)) return {};

  // Separator closest to the connected set `side` (which contains a and is
  // not adjacent to b): the neighbourhood of b's component once N[side] is removed.
  auto closest = [&](GeneratorSubset side) {
    GeneratorSubset blocked = side | neighbourhood(sys, side, universe);
    GeneratorSubset cb = component_of(sys, b, universe - blocked);
    return neighbourhood(sys, cb, universe);
  };

  std::set<std::uint64_t> seen;
  std::deque<GeneratorSubset> queue;
  auto push = [&](GeneratorSubset s) {
    if (seen.insert(s.bits()).second) queue.push_back(s);
  };
  push(closest(GeneratorSubset::single(a)));
  while (!queue.empty()) {
    GeneratorSubset s = queue.front();
    queue.pop_front();
    GeneratorSubset ca = component_of(sys, a, universe - s);
    for (std::size_t x : s) {
      if (sys.adjacent(x, b)) continue;
      push(closest(ca.with(x)));
    }
  }

  std::vector<GeneratorSubset> out;
  for (std::uint64_t bits : seen) out.emplace_back(bits);
  sort_unique(out);
  return out;
}

std::vector<GeneratorSubset> relative_minimal_separators(const CoxeterSystem& sys) {
  return relative_minimal_separators(sys, sys.all());
}

std::vector<GeneratorSubset> relative_minimal_separators(const CoxeterSystem& sys, GeneratorSubset universe) {
  sys.require_subset(universe);
  std::vector<GeneratorSubset> out;
  for (std::size_t a : universe)
    for (std::size_t b : universe) {
      if (b <= a || sys.adjacent(a, b)) continue;
      auto seps = minimal_ab_separators(sys, a, b, universe);
      out.insert(out.end(), seps.begin(), seps.end());
    }
  sort_unique(out);
  return out;
}

std::vector<GeneratorSubset> complete_relative_minimal_separators(const CoxeterSystem& sys) {
  return complete_relative_minimal_separators(sys, sys.all());
}

std::vector<GeneratorSubset> complete_relative_minimal_separators(const CoxeterSystem& sys,
                                                                  GeneratorSubset universe) {
  auto all = relative_minimal_separators(sys, universe);
  std::erase_if(all, [&](GeneratorSubset s) { return !is_complete(sys, s); });
  return all;
}

std::optional<GeneratorSubset> least_complete_separator(const CoxeterSystem& sys, GeneratorSubset universe) {
  auto seps = complete_relative_minimal_separators(sys, universe);
  if (seps.empty()) return std::nullopt;
  return *std::min_element(seps.begin(), seps.end(), [](GeneratorSubset x, GeneratorSubset y) {
    return size_lex_less(x, y);
  });
}

}  // namespace coxjsj
