#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxjsj/coxeter_system.hpp"

namespace coxjsj {

/// Dense order matrix of a diagram in a fixed vertex order. Infinity is
/// stored as 0 and the diagonal as 1.
struct LabelMatrix {
  std::size_t size = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// The order matrix of the diagram induced on `subset`, in subset order.
LabelMatrix label_matrix(const CoxeterSystem& sys, GeneratorSubset subset);

/// Canonical code of a labelled diagram: the lexicographically least
/// upper-triangle code over all vertex orders compatible with an
/// iso-invariant colour refinement. `order[k]` is the vertex placed at
/// position k.
struct CanonicalLabeling {
  std::vector<std::uint32_t> code;
  std::vector<std::size_t> order;
};

CanonicalLabeling canonical_labeling(const LabelMatrix& matrix);

/// Equal keys iff the diagrams are isomorphic as labelled graphs.
using DiagramKey = std::vector<std::uint32_t>;

DiagramKey canonical_form(const CoxeterSystem& sys);
DiagramKey canonical_form(const CoxeterSystem& sys, GeneratorSubset subset);

/// A label-preserving bijection from a's vertices to b's, if one exists.
std::optional<std::vector<std::size_t>> matrix_isomorphism(const LabelMatrix& a, const LabelMatrix& b);

/// A label-preserving bijection between generating sets, keyed by name.
std::optional<std::map<std::string, std::string>> diagram_isomorphic(const CoxeterSystem& first,
                                                                     const CoxeterSystem& second);

}  // namespace coxjsj
