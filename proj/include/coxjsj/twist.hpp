#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxjsj/coxeter_system.hpp"
#include "coxjsj/diagram.hpp"
#include "coxjsj/report.hpp"
#include "coxjsj/separators.hpp"

namespace coxjsj {

/// A permutation of the generator indices of one system, identity outside
/// the set it is meant to act on.
using GeneratorPermutation = std::vector<std::size_t>;

/// A separation (S1, S0, S2) together with the permutation of S0 induced by
/// conjugation with an element normalizing <S0>.
struct ElementaryTwist {
  Separation separation;
  GeneratorPermutation sigma;

  friend bool operator==(const ElementaryTwist&, const ElementaryTwist&) = default;
};

/// Conjugation by the longest element of the finite group <subset>, read off
/// the classification tables factor by factor. Throws Error if <subset> is
/// not of finite type.
GeneratorPermutation w0_automorphism(const CoxeterSystem& sys, GeneratorSubset subset);

/// sigma permutes `subset`, fixes everything else and preserves every label
/// m(s,t) inside `subset`.
bool is_diagram_automorphism(const CoxeterSystem& sys, GeneratorSubset subset, const GeneratorPermutation& sigma);

/// Builds the twist with sides S1 = left and S2 = (S - left) + cut. Without
/// `sigma` the longest element of <cut> is used. A supplied sigma must be a
/// diagram automorphism of cut that some element of <cut> realizes by
/// conjugation, as found by coset enumeration. Throws Error when the sides
/// do not form a separation, <cut> is not of finite type, or sigma is rejected.
ElementaryTwist make_twist(const CoxeterSystem& sys, GeneratorSubset left, GeneratorSubset cut,
                           const std::optional<GeneratorPermutation>& sigma = std::nullopt);

/// Every separation over a finite-type cut, one per split of the components
/// of S - cut into two nonempty groups (the group holding the least
/// component goes left), paired with its longest-element sigma. Sorted by
/// cut size, then cut, then left side.
std::vector<ElementaryTwist> admissible_twists(const CoxeterSystem& sys);

struct TwistResult {
  CoxeterSystem system;
  /// Old name -> new name for each generator of S2 - S0.
  std::map<std::string, std::string> renamed;
};

/// Replaces S2 by its conjugate. Generators of S1 keep their names; each t in
/// S2 - S0 becomes t followed by enough primes to be fresh. Throws Error if
/// the twist is not valid for `sys`.
TwistResult apply_twist(const CoxeterSystem& sys, const ElementaryTwist& twist);

inline constexpr std::size_t kDefaultTwistOrbitBudget = 500;

struct TwistOrbit {
  /// Pairwise non-isomorphic members in discovery order; the input comes first.
  std::vector<CoxeterSystem> members;
  std::vector<DiagramKey> keys;
  /// The search stopped at the budget before closing the orbit.
  bool overflow = false;
};

/// Breadth-first closure of {sys} under admissible twists, deduplicated by
/// canonical diagram form. Twists whose sigma is trivial only rename
/// generators and are skipped.
TwistOrbit twist_orbit(const CoxeterSystem& sys, std::size_t budget = kDefaultTwistOrbitBudget);

/// Checks that all members agree on the number of decomposition vertices and
/// on the multiset of vertex-label diagram types, and that every edge label
/// of each member has a diagram-isomorphic edge label in every other member.
VerificationReport check_orbit_invariants(const TwistOrbit& orbit);

}  // namespace coxjsj
