#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxjsj/coxeter_system.hpp"

namespace coxjsj {

/// A separation (S1, S0, S2): S1 u S2 = universe, S1 n S2 = S0, every pair
/// across the two sides has infinite order, and both sides stick out of S0.
/// Realizes the visual amalgam <S1> *_<S0> <S2>.
struct Separation {
  GeneratorSubset left;
  GeneratorSubset cut;
  GeneratorSubset right;

  friend bool operator==(const Separation&, const Separation&) = default;
};

/// Whether `sep` satisfies the separation invariants over `universe`.
bool is_separation(const CoxeterSystem& sys, const Separation& sep, GeneratorSubset universe);
bool is_separation(const CoxeterSystem& sys, const Separation& sep);

// Every function below works on the diagram induced on `universe` (the whole
// generating set when omitted), so the same code serves vertex labels of a
// decomposition and their induced subsystems.

/// a and b lie in different components of the diagram on universe - cut.
/// Throws Error if a or b is in cut or outside universe, or a == b.
bool separates_pair(const CoxeterSystem& sys, GeneratorSubset cut, std::size_t a, std::size_t b);
bool separates_pair(const CoxeterSystem& sys, GeneratorSubset cut, std::size_t a, std::size_t b,
                    GeneratorSubset universe);

/// The diagram on universe - cut has at least two components.
bool is_separator(const CoxeterSystem& sys, GeneratorSubset cut);
bool is_separator(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe);

/// Binary separation over `cut`: the left side is cut plus the component of
/// universe - cut with the least member, the right side is cut plus all other
/// components. Throws Error if cut does not separate.
Separation make_separation(const CoxeterSystem& sys, GeneratorSubset cut);
Separation make_separation(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe);

/// cut separates and no proper subset of it does.
bool is_minimal_separator(const CoxeterSystem& sys, GeneratorSubset cut);
bool is_minimal_separator(const CoxeterSystem& sys, GeneratorSubset cut, GeneratorSubset universe);

/// All minimal (a,b)-separators, sorted. Empty when a and b are adjacent.
///
/// A set S is a minimal (a,b)-separator iff the components Ca, Cb of a and b
/// in the diagram minus S both have neighbourhood exactly S. Enumeration
/// starts at the separator closest to a and repeatedly moves one member x of
/// the current separator onto a's side, recomputing the separator closest
/// to that enlarged side.
std::vector<GeneratorSubset> minimal_ab_separators(const CoxeterSystem& sys, std::size_t a, std::size_t b);
std::vector<GeneratorSubset> minimal_ab_separators(const CoxeterSystem& sys, std::size_t a, std::size_t b,
                                                   GeneratorSubset universe);

/// Union of minimal (a,b)-separators over all non-adjacent pairs, sorted.
std::vector<GeneratorSubset> relative_minimal_separators(const CoxeterSystem& sys);
std::vector<GeneratorSubset> relative_minimal_separators(const CoxeterSystem& sys, GeneratorSubset universe);

/// The complete members of relative_minimal_separators.
std::vector<GeneratorSubset> complete_relative_minimal_separators(const CoxeterSystem& sys);
std::vector<GeneratorSubset> complete_relative_minimal_separators(const CoxeterSystem& sys,
                                                                  GeneratorSubset universe);

/// Smallest complete separator of the diagram on `universe` (fewest members,
/// then lexicographic), if any. Such a separator is always minimal.
std::optional<GeneratorSubset> least_complete_separator(const CoxeterSystem& sys, GeneratorSubset universe);

}  // namespace coxjsj
