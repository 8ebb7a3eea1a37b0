#include "coxjsj/jsj.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "coxjsj/error.hpp"
#include "coxjsj/separators.hpp"

namespace coxjsj {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const GraphOfGroups& gog) {
  std::vector<std::vector<std::size_t>> adj(gog.vertices.size());
  for (std::size_t e = 0; e < gog.edges.size(); ++e) {
    adj[gog.edges[e].source].push_back(e);
    adj[gog.edges[e].target].push_back(e);
  }
  return adj;
}

std::size_t other_end(const TreeEdge& e, std::size_t v) { return e.source == v ? e.target : e.source; }

bool is_tree(const GraphOfGroups& gog) {
  const std::size_t n = gog.vertices.size();
  if (n == 0 || gog.edges.size() + 1 != n) return false;
  for (const auto& e : gog.edges)
    if (e.source >= n || e.target >= n || e.source == e.target) return false;
  auto adj = adjacency(gog);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : adj[v]) {
      std::size_t u = other_end(gog.edges[e], v);
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

// Vertices on the side of `e` that contains `start`.
std::vector<bool> side_of(const GraphOfGroups& gog, std::size_t cut_edge, std::size_t start) {
  auto adj = adjacency(gog);
  std::vector<bool> seen(gog.vertices.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : adj[v]) {
      if (e == cut_edge) continue;
      std::size_t u = other_end(gog.edges[e], v);
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

std::string encode(const GraphOfGroups& gog, const std::vector<std::vector<std::size_t>>& adj, std::size_t v,
                   std::optional<std::size_t> parent_edge) {
  std::vector<std::string> children;
  for (std::size_t e : adj[v]) {
    if (parent_edge && e == *parent_edge) continue;
    children.push_back("<" + std::to_string(gog.edges[e].label.bits()) + ">" +
                       encode(gog, adj, other_end(gog.edges[e], v), e));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(" + std::to_string(gog.vertices[v].bits());
  for (const auto& c : children) out += c;
  return out + ")";
}

std::size_t least_containing(const std::vector<GeneratorSubset>& labels, GeneratorSubset s) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (s.subset_of(labels[i]) && (!best || lex_less(labels[i], labels[*best]))) best = i;
  if (!best) throw Error("no vertex label contains the separator");
  return *best;
}

struct Tree {
  std::vector<GeneratorSubset> vertices;
  std::vector<TreeEdge> edges;
};

Tree build(const CoxeterSystem& sys, GeneratorSubset universe) {
  auto cut = least_complete_separator(sys, universe);
  if (!cut) return {{universe}, {}};
  Separation sep = make_separation(sys, *cut, universe);
  Tree left = build(sys, sep.left);
  Tree right = build(sys, sep.right);
  std::size_t u = least_containing(left.vertices, *cut);
  std::size_t v = least_containing(right.vertices, *cut) + left.vertices.size();
  Tree out = std::move(left);
  const std::size_t shift = out.vertices.size();
  out.vertices.insert(out.vertices.end(), right.vertices.begin(), right.vertices.end());
  for (const auto& e : right.edges) out.edges.push_back({e.source + shift, e.target + shift, e.label});
  out.edges.push_back({u, v, *cut});
  return out;
}

std::string join(const CoxeterSystem& sys, const std::vector<GeneratorSubset>& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + to_string(sys, family[i]);
  return out + "]";
}

}  // namespace

GraphOfGroups normalized(GraphOfGroups gog) {
  const std::size_t n = gog.vertices.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(gog.vertices[a], gog.vertices[b]); });
  std::vector<std::size_t> where(n);
  std::vector<GeneratorSubset> vertices(n);
  for (std::size_t k = 0; k < n; ++k) {
    where[perm[k]] = k;
    vertices[k] = gog.vertices[perm[k]];
  }
  for (auto& e : gog.edges) {
    std::size_t a = where.at(e.source);
    std::size_t b = where.at(e.target);
    e.source = std::min(a, b);
    e.target = std::max(a, b);
  }
  std::sort(gog.edges.begin(), gog.edges.end(), [](const TreeEdge& x, const TreeEdge& y) {
    if (x.source != y.source) return x.source < y.source;
    if (x.target != y.target) return x.target < y.target;
    return lex_less(x.label, y.label);
  });
  gog.vertices = std::move(vertices);
  return gog;
}

std::string canonical_key(const GraphOfGroups& gog) {
  if (!is_tree(gog)) {
    GraphOfGroups g = normalized(gog);
    std::ostringstream out;
    out << "!";
    for (auto v : g.vertices) out << v.bits() << ";";
    for (const auto& e : g.edges) out << e.source << "-" << e.target << ":" << e.label.bits() << ";";
    return out.str();
  }
  auto adj = adjacency(gog);
  // Centre(s) by repeated leaf stripping.
  const std::size_t n = gog.vertices.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].size();
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t e : adj[v]) {
        std::size_t u = other_end(gog.edges[e], v);
        if (--degree[u] == 1) next.push_back(u);
      }
    layer = std::move(next);
  }
  std::string best;
  for (std::size_t c : layer) {
    std::string key = encode(gog, adj, c, std::nullopt);
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

GraphOfGroups decompose(const CoxeterSystem& sys) {
  if (sys.rank() == 0) throw Error("cannot decompose the empty system");
  Tree t = build(sys, sys.all());
  return normalized({sys, std::move(t.vertices), std::move(t.edges)});
}

GraphOfGroups decompose_fast(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  if (n == 0) throw Error("cannot decompose the empty system");

  // MCS-M: minimal elimination ordering plus the generator vertices whose
  // higher-numbered fill neighbourhoods are the candidate minimal separators.
  std::vector<std::size_t> weight(n, 0);
  std::vector<GeneratorSubset> madj(n);
  std::vector<bool> generator(n, false);
  std::vector<std::size_t> selected;
  GeneratorSubset numbered;
  long previous = -1;
  for (std::size_t step = 0; step < n; ++step) {
    GeneratorSubset open = sys.all() - numbered;
    std::size_t v = open.least();
    for (std::size_t u : open)
      if (weight[u] > weight[v]) v = u;
    if (static_cast<long>(weight[v]) <= previous) generator[v] = true;
    previous = static_cast<long>(weight[v]);

    open.erase(v);
    GeneratorSubset reached = GeneratorSubset::single(v);
    GeneratorSubset raise;
    std::vector<std::vector<std::size_t>> bucket(n + 1);
    for (std::size_t u : sys.neighbors(v) & open) {
      reached.insert(u);
      raise.insert(u);
      bucket[weight[u]].push_back(u);
    }
    for (std::size_t level = 0; level <= n; ++level) {
      while (!bucket[level].empty()) {
        std::size_t y = bucket[level].back();
        bucket[level].pop_back();
        for (std::size_t z : (sys.neighbors(y) & open) - reached) {
          reached.insert(z);
          if (weight[z] > level) {
            raise.insert(z);
            bucket[weight[z]].push_back(z);
          } else {
            bucket[level].push_back(z);
          }
        }
      }
    }
    for (std::size_t u : raise) {
      ++weight[u];
      madj[u].insert(v);
    }
    numbered.insert(v);
    selected.push_back(v);
  }

  // Split off atoms in elimination order along clique minimal separators.
  std::vector<GeneratorSubset> atoms;
  std::vector<GeneratorSubset> cuts;
  GeneratorSubset remaining = sys.all();
  for (auto it = selected.rbegin(); it != selected.rend(); ++it) {
    std::size_t x = *it;
    if (!generator[x] || !remaining.contains(x)) continue;
    GeneratorSubset cut = madj[x];
    if (!cut.subset_of(remaining) || !is_complete(sys, cut)) continue;
    GeneratorSubset rest = remaining - cut;
    auto comps = diagram_components(sys, rest);
    GeneratorSubset comp = *std::find_if(comps.begin(), comps.end(), [&](GeneratorSubset c) { return c.contains(x); });
    if ((rest - comp).empty()) continue;
    atoms.push_back(cut | comp);
    cuts.push_back(cut);
    remaining -= comp;
  }
  atoms.push_back(remaining);

  GraphOfGroups gog{sys, atoms, {}};
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    std::vector<GeneratorSubset> later(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1, atoms.end());
    std::size_t j = i + 1 + least_containing(later, cuts[i]);
    gog.edges.push_back({i, j, cuts[i]});
  }
  return normalized(std::move(gog));
}

std::vector<GeneratorSubset> vertex_sets(const CoxeterSystem& sys) {
  if (sys.rank() == 0) return {};
  auto out = decompose(sys).vertices;
  sort_unique(out);
  return out;
}

VerificationReport validate(const GraphOfGroups& gog, const CoxeterSystem& sys) {
  if (!(gog.ambient == sys)) throw Error("decomposition belongs to a different system");
  VerificationReport report;
  const bool tree = is_tree(gog);
  report.add("tree", tree,
             tree ? "" : std::to_string(gog.vertices.size()) + " vertices, " + std::to_string(gog.edges.size()) +
                             " edges, or not connected");

  // Visual amalgam structure.
  {
    std::string witness;
    GeneratorSubset cover;
    for (auto v : gog.vertices) cover |= v;
    if (cover != sys.all()) witness = "vertex labels do not cover the generating set";
    for (const auto& e : gog.edges) {
      if (!witness.empty()) break;
      if (e.source >= gog.vertices.size() || e.target >= gog.vertices.size()) {
        witness = "edge endpoint out of range";
      } else if (!e.label.subset_of(gog.vertices[e.source]) || !e.label.subset_of(gog.vertices[e.target])) {
        witness = "edge label " + to_string(sys, e.label) + " not contained in an endpoint";
      }
    }
    for (const auto& edge : sys.edges()) {
      if (!witness.empty()) break;
      GeneratorSubset pair{edge.first, edge.second};
      bool covered = std::any_of(gog.vertices.begin(), gog.vertices.end(),
                                 [&](GeneratorSubset v) { return pair.subset_of(v); });
      if (!covered) witness = "finite pair " + to_string(sys, pair) + " in no vertex label";
    }
    if (tree) {
      for (std::size_t e = 0; e < gog.edges.size() && witness.empty(); ++e) {
        auto side = side_of(gog, e, gog.edges[e].source);
        GeneratorSubset a, b;
        for (std::size_t v = 0; v < gog.vertices.size(); ++v) (side[v] ? a : b) |= gog.vertices[v];
        Separation sep{a, gog.edges[e].label, b};
        if ((a & b) != gog.edges[e].label || !is_separation(sys, sep))
          witness = "edge " + to_string(sys, gog.edges[e].label) + " does not induce a separation";
      }
    } else if (witness.empty()) {
      witness = "not a tree";
    }
    report.add("visual_amalgam", witness.empty(), witness);
  }

  {
    std::string witness;
    for (const auto& e : gog.edges)
      if (e.source < gog.vertices.size() && e.target < gog.vertices.size() &&
          (e.label == gog.vertices[e.source] || e.label == gog.vertices[e.target]))
        witness = "edge label " + to_string(sys, e.label) + " equals a vertex label";
    report.add("reduced", witness.empty(), witness);
  }

  {
    std::string witness;
    for (auto v : gog.vertices)
      if (auto c = least_complete_separator(sys, v)) {
        witness = to_string(sys, v) + " separated by complete " + to_string(sys, *c);
        break;
      }
    report.add("vertex_labels_unseparated", witness.empty(), witness);
  }

  {
    std::string witness;
    for (const auto& e : gog.edges)
      if (!is_complete(sys, e.label)) witness = "edge label " + to_string(sys, e.label) + " incomplete";
    report.add("edge_labels_complete", witness.empty(), witness);
  }

  {
    std::vector<GeneratorSubset> got_v = gog.vertices;
    sort_unique(got_v);
    std::vector<GeneratorSubset> got_e;
    for (const auto& e : gog.edges) got_e.push_back(e.label);
    sort_unique(got_e);
    auto want_v = vertex_sets(sys);
    auto want_e = complete_relative_minimal_separators(sys);
    report.add("vertex_labels_match_maximal_unseparated_sets", got_v == want_v && got_v.size() == gog.vertices.size(),
               got_v == want_v ? "" : "got " + join(sys, got_v) + ", expected " + join(sys, want_v));
    report.add("edge_labels_match_complete_relative_minimal_separators", got_e == want_e,
               got_e == want_e ? "" : "got " + join(sys, got_e) + ", expected " + join(sys, want_e));
  }

  {
    std::string witness;
    for (const auto& e : gog.edges)
      if (e.source < gog.vertices.size() && e.target < gog.vertices.size() &&
          (gog.vertices[e.source] & gog.vertices[e.target]) != e.label)
        witness = to_string(sys, gog.vertices[e.source]) + " and " + to_string(sys, gog.vertices[e.target]) +
                  " do not meet in " + to_string(sys, e.label);
    report.add("adjacent_labels_meet_in_edge_label", witness.empty(), witness);
  }
  return report;
}

std::vector<GraphOfGroups> slide_moves(const GraphOfGroups& gog) {
  auto adj = adjacency(gog);
  std::set<std::string> seen;
  std::vector<std::pair<std::string, GraphOfGroups>> found;
  for (std::size_t e = 0; e < gog.edges.size(); ++e) {
    for (std::size_t v : {gog.edges[e].source, gog.edges[e].target}) {
      std::size_t u = other_end(gog.edges[e], v);
      for (std::size_t f : adj[v]) {
        if (f == e || !gog.edges[e].label.subset_of(gog.edges[f].label)) continue;
        std::size_t w = other_end(gog.edges[f], v);
        GraphOfGroups moved = gog;
        moved.edges[e] = {u, w, gog.edges[e].label};
        moved = normalized(std::move(moved));
        std::string key = canonical_key(moved);
        if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(moved));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GraphOfGroups> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<GraphOfGroups> jsj_orbit(const CoxeterSystem& sys, std::size_t budget) {
  std::vector<std::pair<std::string, GraphOfGroups>> members;
  std::set<std::string> seen;
  std::deque<GraphOfGroups> queue;
  auto visit = [&](GraphOfGroups g) {
    std::string key = canonical_key(g);
    if (!seen.insert(key).second) return;
    if (members.size() >= budget)
      throw BudgetExceeded("slide-move orbit exceeds the budget of " + std::to_string(budget) + " trees");
    members.emplace_back(key, g);
    queue.push_back(std::move(g));
  };
  visit(decompose(sys));
  while (!queue.empty()) {
    GraphOfGroups g = std::move(queue.front());
    queue.pop_front();
    for (auto& next : slide_moves(g)) visit(std::move(next));
  }
  std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GraphOfGroups> out;
  for (auto& [key, g] : members) out.push_back(std::move(g));
  return out;
}

}  // namespace coxjsj
