#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxjsj/subset.hpp"

namespace coxjsj {

/// The order m(s,t) of a product of two generators: 1 on the diagonal, an
/// integer >= 2 off it, or infinity.
class OrderLabel {
 public:
  constexpr explicit OrderLabel(std::uint32_t m) : m_(m) {}
  static constexpr OrderLabel infinity() { return OrderLabel(); }

  constexpr bool is_finite() const { return m_ != 0; }
  /// Only meaningful when is_finite().
  constexpr std::uint32_t value() const { return m_; }

  /// "inf" or the decimal value.
  std::string to_string() const;

  friend constexpr bool operator==(OrderLabel, OrderLabel) = default;

 private:
  constexpr OrderLabel() = default;
  std::uint32_t m_ = 0;  // 0 encodes infinity
};

/// One entry of the order map handed to new_system().
struct OrderSpec {
  std::string first;
  std::string second;
  OrderLabel order;
};

/// A Coxeter system of finite rank, held as its symmetric order matrix.
/// Generators are sorted lexicographically by name; generator i of the
/// system is the i-th name in that order. Pairs that were never given an
/// order are infinite, so the presentation diagram has an edge (s,t)
/// exactly when 1 < m(s,t) < infinity.
class CoxeterSystem {
 public:
  struct Edge {
    std::size_t first;
    std::size_t second;
    std::uint32_t order;
  };

  /// The empty system (trivial group).
  CoxeterSystem() = default;

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error if the name is unknown.
  std::size_t index_of(std::string_view name) const;

  OrderLabel order(std::size_t i, std::size_t j) const;
  /// Presentation-diagram adjacency: i != j and m(i,j) finite.
  bool adjacent(std::size_t i, std::size_t j) const { return neighbors_[i].contains(j); }
  GeneratorSubset neighbors(std::size_t i) const { return neighbors_.at(i); }

  GeneratorSubset all() const { return GeneratorSubset::first(rank()); }

  /// Subset from generator names; throws Error on unknown names.
  GeneratorSubset subset(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(GeneratorSubset subset) const;
  /// Throws Error unless subset only contains generators of this system.
  void require_subset(GeneratorSubset subset) const;

  /// Finite-order pairs (i < j), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  friend CoxeterSystem new_system(std::vector<std::string>, const std::vector<OrderSpec>&);

  std::vector<std::string> names_;
  std::vector<std::uint32_t> orders_;  // rank x rank, 0 = infinity, 1 on the diagonal
  std::vector<GeneratorSubset> neighbors_;
};

/// "{a,b,c}" using generator names.
std::string to_string(const CoxeterSystem& sys, GeneratorSubset subset);

/// Whether `name` is a valid generator identifier: letters, digits,
/// underscore, and trailing primes (the latter produced by twisting).
bool valid_generator_name(std::string_view name);

/// Builds a system from generator names and the finite (or explicitly
/// infinite) orders. Unlisted pairs are infinite. Throws Error on duplicate
/// generators, duplicate pairs, self-pairs, unknown names and labels < 2.
CoxeterSystem new_system(std::vector<std::string> generators, const std::vector<OrderSpec>& orders);

/// Every pair of members has finite order. True for the empty set and singletons.
bool is_complete(const CoxeterSystem& sys, GeneratorSubset subset);

/// The Coxeter system of the visual subgroup generated by `subset`.
CoxeterSystem induced_subsystem(const CoxeterSystem& sys, GeneratorSubset subset);

/// Connected components of the presentation diagram induced on `subset`,
/// ordered by least member.
std::vector<GeneratorSubset> diagram_components(const CoxeterSystem& sys, GeneratorSubset subset);

/// Connected components of the Coxeter diagram on `subset` (edges where
/// m(s,t) >= 3, including infinity): the irreducible factors of the subgroup.
std::vector<GeneratorSubset> coxeter_diagram_components(const CoxeterSystem& sys, GeneratorSubset subset);

}  // namespace coxjsj
