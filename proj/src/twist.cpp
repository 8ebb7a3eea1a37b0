#include "coxjsj/twist.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coxjsj/error.hpp"
#include "coxjsj/finite_type.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"

namespace coxjsj {

namespace {

GeneratorPermutation identity(std::size_t n) {
  GeneratorPermutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_identity(const GeneratorPermutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

void for_each_clique(const CoxeterSystem& sys, const std::function<void(GeneratorSubset)>& visit) {
  std::function<void(GeneratorSubset, GeneratorSubset)> grow = [&](GeneratorSubset clique, GeneratorSubset candidates) {
    visit(clique);
    for (std::size_t v : candidates) {
      GeneratorSubset later = candidates;
      for (std::size_t u : candidates)
        if (u <= v) later.erase(u);
      grow(clique.with(v), later & sys.neighbors(v));
    }
  };
  grow(GeneratorSubset{}, sys.all());
}

}  // namespace

GeneratorPermutation w0_automorphism(const CoxeterSystem& sys, GeneratorSubset subset) {
  auto factors = match_finite_type(sys, subset);
  if (!factors) throw Error("subgroup " + to_string(sys, subset) + " is not of finite type");
  GeneratorPermutation sigma = identity(sys.rank());
  for (const FactorMatch& f : *factors)
    for (std::size_t k = 0; k < f.generator_of.size(); ++k)
      sigma[f.generator_of[k]] = f.generator_of[f.w0_template_permutation[k]];
  return sigma;
}

bool is_diagram_automorphism(const CoxeterSystem& sys, GeneratorSubset subset, const GeneratorPermutation& sigma) {
  if (sigma.size() != sys.rank()) return false;
  GeneratorSubset image;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= sys.rank()) return false;
    if (!subset.contains(i) && sigma[i] != i) return false;
    image.insert(sigma[i]);
  }
  if (image != sys.all()) return false;
  for (std::size_t s : subset)
    for (std::size_t t : subset)
      if (sys.order(sigma[s], sigma[t]) != sys.order(s, t)) return false;
  return true;
}

ElementaryTwist make_twist(const CoxeterSystem& sys, GeneratorSubset left, GeneratorSubset cut,
                           const std::optional<GeneratorPermutation>& sigma) {
  sys.require_subset(left);
  sys.require_subset(cut);
  Separation sep{left, cut, (sys.all() - left) | cut};
  if (!is_separation(sys, sep))
    throw Error("(" + to_string(sys, sep.left) + ", " + to_string(sys, cut) + ", " + to_string(sys, sep.right) +
                ") is not a separation");
  if (!finite_type(sys, cut)) throw Error("subgroup " + to_string(sys, cut) + " is not of finite type");
  if (!sigma) return {sep, w0_automorphism(sys, cut)};

  if (!is_diagram_automorphism(sys, cut, *sigma))
    throw Error("sigma is not a diagram automorphism of " + to_string(sys, cut));
  auto table = oracle::coset_enumerate(sys, cut);
  if (!oracle::realizing_element(table, *sigma))
    throw Error("no element of the subgroup on " + to_string(sys, cut) + " induces sigma by conjugation");
  return {sep, *sigma};
}

std::vector<ElementaryTwist> admissible_twists(const CoxeterSystem& sys) {
  std::vector<ElementaryTwist> out;
  for_each_clique(sys, [&](GeneratorSubset cut) {
    auto components = diagram_components(sys, sys.all() - cut);
    if (components.size() < 2 || components.size() > 20) return;
    if (!finite_type(sys, cut)) return;
    GeneratorPermutation sigma = w0_automorphism(sys, cut);
    const std::size_t k = components.size();
    // bit i of `mask` puts component i + 1 on the left; component 0 always is
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << (k - 1)); ++mask) {
      GeneratorSubset left = cut | components[0];
      for (std::size_t i = 1; i < k; ++i)
        if (mask >> (i - 1) & 1) left |= components[i];
      out.push_back({Separation{left, cut, (sys.all() - left) | cut}, sigma});
    }
  });
  std::sort(out.begin(), out.end(), [](const ElementaryTwist& a, const ElementaryTwist& b) {
    if (a.separation.cut != b.separation.cut) return size_lex_less(a.separation.cut, b.separation.cut);
    return lex_less(a.separation.left, b.separation.left);
  });
  return out;
}

TwistResult apply_twist(const CoxeterSystem& sys, const ElementaryTwist& twist) {
  const Separation& sep = twist.separation;
  if (!is_separation(sys, sep)) throw Error("twist does not come from a separation of this system");
  if (!is_diagram_automorphism(sys, sep.cut, twist.sigma))
    throw Error("twist permutation is not a diagram automorphism of " + to_string(sys, sep.cut));

  GeneratorPermutation inverse(sys.rank());
  for (std::size_t i = 0; i < sys.rank(); ++i) inverse[twist.sigma[i]] = i;

  const GeneratorSubset moved = sep.right - sep.cut;
  std::set<std::string> taken(sys.names().begin(), sys.names().end());
  std::vector<std::string> new_name(sys.names());
  TwistResult result;
  for (std::size_t t : moved) {
    std::string name = sys.name(t) + "'";
    while (taken.count(name)) name += "'";
    taken.insert(name);
    new_name[t] = name;
    result.renamed[sys.name(t)] = name;
  }

  std::vector<std::string> generators;
  for (std::size_t i = 0; i < sys.rank(); ++i) generators.push_back(new_name[i]);
  std::vector<OrderSpec> orders;
  for (std::size_t i = 0; i < sys.rank(); ++i)
    for (std::size_t j = i + 1; j < sys.rank(); ++j) {
      OrderLabel m = OrderLabel::infinity();
      const bool i_moved = moved.contains(i), j_moved = moved.contains(j);
      if (!i_moved && !j_moved) {
        m = sys.order(i, j);
      } else if (i_moved && j_moved) {
        m = sys.order(i, j);
      } else {
        std::size_t s = i_moved ? j : i;
        std::size_t t = i_moved ? i : j;
        if (sep.cut.contains(s)) m = sys.order(inverse[s], t);
      }
      if (m.is_finite()) orders.push_back({new_name[i], new_name[j], m});
    }
  result.system = new_system(std::move(generators), orders);
  return result;
}

TwistOrbit twist_orbit(const CoxeterSystem& sys, std::size_t budget) {
  if (budget == 0) throw Error("orbit budget must be at least 1");
  TwistOrbit orbit;
  std::set<DiagramKey> seen;
  orbit.members.push_back(sys);
  orbit.keys.push_back(canonical_form(sys));
  seen.insert(orbit.keys.front());
  for (std::size_t next = 0; next < orbit.members.size(); ++next) {
    const CoxeterSystem current = orbit.members[next];
    for (const ElementaryTwist& tw : admissible_twists(current)) {
      if (is_identity(tw.sigma)) continue;
      CoxeterSystem image = apply_twist(current, tw).system;
      DiagramKey key = canonical_form(image);
      if (!seen.insert(key).second) continue;
      if (orbit.members.size() == budget) {
        orbit.overflow = true;
        return orbit;
      }
      orbit.members.push_back(std::move(image));
      orbit.keys.push_back(std::move(key));
    }
  }
  return orbit;
}

VerificationReport check_orbit_invariants(const TwistOrbit& orbit) {
  struct Summary {
    std::size_t vertex_count;
    std::vector<DiagramKey> vertex_types;
    std::vector<DiagramKey> edge_types;
  };
  std::vector<Summary> summaries;
  for (const CoxeterSystem& member : orbit.members) {
    GraphOfGroups gog = decompose(member);
    Summary s{gog.vertices.size(), {}, {}};
    for (GeneratorSubset v : gog.vertices) s.vertex_types.push_back(canonical_form(member, v));
    for (const TreeEdge& e : gog.edges) s.edge_types.push_back(canonical_form(member, e.label));
    std::sort(s.vertex_types.begin(), s.vertex_types.end());
    summaries.push_back(std::move(s));
  }

  VerificationReport report;
  std::string count_witness, type_witness, edge_witness;
  for (std::size_t i = 1; i < summaries.size(); ++i) {
    if (count_witness.empty() && summaries[i].vertex_count != summaries[0].vertex_count)
      count_witness = "member " + std::to_string(i) + " has " + std::to_string(summaries[i].vertex_count) +
                      " vertices, member 0 has " + std::to_string(summaries[0].vertex_count);
    if (type_witness.empty() && summaries[i].vertex_types != summaries[0].vertex_types)
      type_witness = "member " + std::to_string(i) + " differs from member 0";
  }
  for (std::size_t i = 0; i < summaries.size() && edge_witness.empty(); ++i)
    for (std::size_t j = 0; j < summaries.size() && edge_witness.empty(); ++j) {
      if (i == j) continue;
      for (std::size_t e = 0; e < summaries[i].edge_types.size(); ++e) {
        const auto& theirs = summaries[j].edge_types;
        if (std::find(theirs.begin(), theirs.end(), summaries[i].edge_types[e]) == theirs.end()) {
          edge_witness = "edge " + std::to_string(e) + " of member " + std::to_string(i) +
                         " has no counterpart in member " + std::to_string(j);
          break;
        }
      }
    }
  report.add("orbit_vertex_count_constant", count_witness.empty(), count_witness);
  report.add("orbit_vertex_types_constant", type_witness.empty(), type_witness);
  report.add("orbit_edge_types_have_counterparts", edge_witness.empty(), edge_witness);
  return report;
}

}  // namespace coxjsj
