#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxjsj/coxeter_system.hpp"

// Exhaustive ground truth. Nothing in here calls into the separator,
// decomposition or classification code it is used to check.
namespace coxjsj::oracle {

inline constexpr std::size_t kDefaultRankBound = 12;

/// Maximal R such that no complete C inside R separates the diagram on R,
/// by enumeration of all subsets. Throws BoundExceeded above `rank_bound`.
std::vector<GeneratorSubset> brute_vertex_sets(const CoxeterSystem& sys, std::size_t rank_bound = kDefaultRankBound);

/// Minimal (a,b)-separators by enumeration of all subsets of S - {a,b}.
std::vector<GeneratorSubset> brute_minimal_ab_separators(const CoxeterSystem& sys, std::size_t a, std::size_t b,
                                                         std::size_t rank_bound = kDefaultRankBound);

std::vector<GeneratorSubset> brute_relative_minimal_separators(const CoxeterSystem& sys,
                                                               std::size_t rank_bound = kDefaultRankBound);

std::vector<GeneratorSubset> brute_complete_relative_minimal_separators(const CoxeterSystem& sys,
                                                                        std::size_t rank_bound = kDefaultRankBound);

/// Separators no proper subset of which separates, by enumeration.
std::vector<GeneratorSubset> brute_minimal_separators(const CoxeterSystem& sys,
                                                      std::size_t rank_bound = kDefaultRankBound);

/// Chordality by searching every vertex subset of size >= 4 for an induced cycle.
bool brute_is_chordal(const CoxeterSystem& sys, std::size_t rank_bound = kDefaultRankBound);

/// Regular permutation representation of a finite visual subgroup <S0>.
/// Element 0 is the identity; action[k][x] is x * s_k where s_k is the k-th
/// member of `generators`; length[x] is the word length of x.
struct FiniteGroupTable {
  std::size_t ambient_rank = 0;
  std::vector<std::size_t> generators;
  std::size_t order = 0;
  std::vector<std::vector<std::uint32_t>> action;
  std::vector<std::uint32_t> length;
  /// A shortest word (as positions into `generators`) for each element.
  std::vector<std::vector<std::uint32_t>> word;
};

inline constexpr std::size_t kDefaultOrderBound = 10000;

/// Todd-Coxeter coset enumeration (HLT) of <S0> over the trivial subgroup,
/// using the relators s^2 and (st)^m(s,t). Throws BoundExceeded when the
/// group order exceeds `order_bound` or the coset table outgrows its cap;
/// that outcome is inconclusive, not a proof of infiniteness.
FiniteGroupTable coset_enumerate(const CoxeterSystem& sys, GeneratorSubset subset,
                                 std::size_t order_bound = kDefaultOrderBound);

/// Element reached from `element` by right-multiplying a word.
std::uint32_t multiply(const FiniteGroupTable& table, std::uint32_t element, const std::vector<std::uint32_t>& word);

/// The unique element of maximal length. Throws Error if not unique.
std::uint32_t longest_element(const FiniteGroupTable& table);

/// s -> w0 s w0^-1 on the generators of the table, as a permutation of the
/// ambient generator indices (identity elsewhere). Throws Error if w0 is not
/// unique or a conjugate is not a generator of the table.
std::vector<std::size_t> oracle_w0_sigma(const FiniteGroupTable& table);

/// Some element g with g s g^-1 = sigma(s) for every generator s of the
/// table, if one exists.
std::optional<std::uint32_t> realizing_element(const FiniteGroupTable& table, const std::vector<std::size_t>& sigma);

}  // namespace coxjsj::oracle
