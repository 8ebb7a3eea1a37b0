#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxjsj/coxeter_system.hpp"
#include "coxjsj/report.hpp"

namespace coxjsj {

/// Maximum cardinality search order (first visited first). Ties go to the
/// least generator index.
std::vector<std::size_t> maximum_cardinality_search(const CoxeterSystem& sys);

/// Whether `elimination` (first eliminated first) is a perfect elimination
/// ordering of the presentation diagram.
bool is_perfect_elimination_ordering(const CoxeterSystem& sys, const std::vector<std::size_t>& elimination);

/// Every cycle of length >= 4 in the underlying graph of the presentation
/// diagram has a chord. Labels are ignored.
bool is_chordal(const CoxeterSystem& sys);

/// A chordless cycle of length >= 4, in cyclic order, if the diagram is not chordal.
std::optional<std::vector<std::size_t>> chordless_cycle(const CoxeterSystem& sys);

/// Compares chordality with "every vertex label of the JSJ decomposition is
/// complete"; passes iff both predicates agree.
VerificationReport check_chordal_vertex_groups(const CoxeterSystem& sys);

}  // namespace coxjsj
