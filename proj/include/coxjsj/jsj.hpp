#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxjsj/coxeter_system.hpp"
#include "coxjsj/report.hpp"

namespace coxjsj {

struct TreeEdge {
  std::size_t source;
  std::size_t target;
  GeneratorSubset label;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// A visual graph of groups decomposition: a tree whose vertices are labelled
/// by the generating sets of the vertex groups and whose edges are labelled
/// by the generating sets of the edge groups.
struct GraphOfGroups {
  CoxeterSystem ambient;
  std::vector<GeneratorSubset> vertices;
  std::vector<TreeEdge> edges;

  friend bool operator==(const GraphOfGroups&, const GraphOfGroups&) = default;
};

/// Vertices sorted by label, edges oriented source < target and sorted.
GraphOfGroups normalized(GraphOfGroups gog);

/// Label-aware AHU encoding of the unrooted tree. Equal keys iff the trees
/// are isomorphic by a map preserving vertex and edge labels.
std::string canonical_key(const GraphOfGroups& gog);

/// Recursive decomposition along least complete separators. Every vertex
/// label is unseparated by complete subsets and every edge label is
/// complete; the result is reduced. Throws Error on the empty system.
GraphOfGroups decompose(const CoxeterSystem& sys);

/// Same vertex and edge label multisets as decompose(), computed by clique
/// minimal separator decomposition from an MCS-M minimal elimination
/// ordering. The tree may differ from decompose() by slide moves.
GraphOfGroups decompose_fast(const CoxeterSystem& sys);

/// Maximal subsets not separated by a complete subset, sorted.
std::vector<GeneratorSubset> vertex_sets(const CoxeterSystem& sys);

/// Checks that `gog` is a visual reduced JSJ decomposition of `sys` over
/// subgroups with property FA. Throws Error if gog.ambient != sys.
VerificationReport validate(const GraphOfGroups& gog, const CoxeterSystem& sys);

/// Every tree reachable by one slide: for edges e = (u,v), f = (v,w) with
/// label(e) a subset of label(f), reattach e as (u,w). Deduplicated up to
/// labelled isomorphism, sorted by canonical key.
std::vector<GraphOfGroups> slide_moves(const GraphOfGroups& gog);

inline constexpr std::size_t kDefaultJsjOrbitBudget = 10000;

/// Closure of decompose(sys) under slide moves, deduplicated by
/// canonical_key and sorted by it. Throws BudgetExceeded past `budget` trees.
std::vector<GraphOfGroups> jsj_orbit(const CoxeterSystem& sys, std::size_t budget = kDefaultJsjOrbitBudget);

}  // namespace coxjsj
