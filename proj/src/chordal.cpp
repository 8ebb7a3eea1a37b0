#include "coxjsj/chordal.hpp"

#include <algorithm>

#include "coxjsj/jsj.hpp"

namespace coxjsj {

std::vector<std::size_t> maximum_cardinality_search(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> order;
  GeneratorSubset open = sys.all();
  while (!open.empty()) {
    std::size_t v = open.least();
    for (std::size_t u : open)
      if (weight[u] > weight[v]) v = u;
    order.push_back(v);
    open.erase(v);
    for (std::size_t u : sys.neighbors(v) & open) ++weight[u];
  }
  return order;
}

bool is_perfect_elimination_ordering(const CoxeterSystem& sys, const std::vector<std::size_t>& elimination) {
  std::vector<std::size_t> position(sys.rank());
  for (std::size_t k = 0; k < elimination.size(); ++k) position[elimination[k]] = k;
  GeneratorSubset later = sys.all();
  for (std::size_t v : elimination) {
    later.erase(v);
    GeneratorSubset nbrs = sys.neighbors(v) & later;
    if (nbrs.empty()) continue;
    std::size_t parent = *std::min_element(nbrs.begin(), nbrs.end(),
                                           [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
    if (!nbrs.without(parent).subset_of(sys.neighbors(parent))) return false;
  }
  return true;
}

bool is_chordal(const CoxeterSystem& sys) {
  auto order = maximum_cardinality_search(sys);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(sys, order);
}

std::optional<std::vector<std::size_t>> chordless_cycle(const CoxeterSystem& sys) {
  // For a chordless cycle through v with cycle-neighbours u, w, the rest of
  // the cycle is an induced u-w path avoiding N[v] - {u, w}. Conversely a
  // shortest such path closes a chordless cycle.
  for (std::size_t v = 0; v < sys.rank(); ++v) {
    GeneratorSubset nv = sys.neighbors(v);
    for (std::size_t u : nv)
      for (std::size_t w : nv) {
        if (w <= u || sys.adjacent(u, w)) continue;
        GeneratorSubset allowed = sys.all() - nv - GeneratorSubset::single(v);
        allowed.insert(u);
        allowed.insert(w);
        std::vector<std::size_t> parent(sys.rank(), sys.rank());
        std::vector<std::size_t> frontier{u};
        GeneratorSubset seen = GeneratorSubset::single(u);
        while (!frontier.empty() && !seen.contains(w)) {
          std::vector<std::size_t> next;
          for (std::size_t x : frontier)
            for (std::size_t y : (sys.neighbors(x) & allowed) - seen) {
              seen.insert(y);
              parent[y] = x;
              next.push_back(y);
            }
          frontier = std::move(next);
        }
        if (!seen.contains(w)) continue;
        std::vector<std::size_t> cycle{v};
        std::vector<std::size_t> path;
        for (std::size_t x = w; x != u; x = parent[x]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
  }
  return std::nullopt;
}

VerificationReport check_chordal_vertex_groups(const CoxeterSystem& sys) {
  VerificationReport report;
  const bool chordal = is_chordal(sys);
  bool all_complete = true;
  std::string incomplete;
  for (GeneratorSubset v : vertex_sets(sys))
    if (!is_complete(sys, v)) {
      all_complete = false;
      if (incomplete.empty()) incomplete = to_string(sys, v);
    }
  std::string witness = std::string("chordal=") + (chordal ? "true" : "false") +
                        ", vertex labels complete=" + (all_complete ? "true" : "false");
  if (!incomplete.empty()) witness += " (incomplete: " + incomplete + ")";
  report.add("chordal_iff_complete_vertex_groups", chordal == all_complete, witness);
  return report;
}

}  // namespace coxjsj
