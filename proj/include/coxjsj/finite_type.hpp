#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxjsj/coxeter_system.hpp"

namespace coxjsj {

enum class Family { A, B, D, E, F, H, I2 };

/// Type of a finite irreducible Coxeter group. `m` is only used for I2.
struct FiniteTypeLabel {
  Family family = Family::A;
  unsigned rank = 1;
  unsigned m = 0;

  /// "A3", "E6", "I2(7)".
  std::string to_string() const;
  friend bool operator==(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
};

/// Whether (family, rank, m) is in the finite classification: A_n n>=1,
/// B_n n>=2, D_n n>=4, E6-E8, F4, H3, H4, I2(m) m>=5.
bool is_classified(const FiniteTypeLabel& label);

/// Group order of the finite irreducible group.
std::uint64_t group_order(const FiniteTypeLabel& label);

/// Number of reflections, which is also the length of the longest element.
std::uint64_t reflection_count(const FiniteTypeLabel& label);

/// An irreducible factor matched against its classification template.
struct FactorMatch {
  FiniteTypeLabel label;
  GeneratorSubset factor;
  /// template vertex k -> ambient generator index
  std::vector<std::size_t> generator_of;
  /// Conjugation by the longest element, as a permutation of template vertices.
  std::vector<std::size_t> w0_template_permutation;
};

/// Classifies each irreducible factor of <subset> by exact labelled-diagram
/// isomorphism with the classification templates. Absent if some factor is
/// not of finite type.
std::optional<std::vector<FactorMatch>> match_finite_type(const CoxeterSystem& sys, GeneratorSubset subset);

/// Per-factor labels of <subset>, factors ordered by least member. The
/// empty subset yields an empty list (trivial group).
std::optional<std::vector<FiniteTypeLabel>> finite_type(const CoxeterSystem& sys, GeneratorSubset subset);

/// Product of factor orders, absent if not of finite type.
std::optional<std::uint64_t> finite_group_order(const CoxeterSystem& sys, GeneratorSubset subset);

}  // namespace coxjsj
