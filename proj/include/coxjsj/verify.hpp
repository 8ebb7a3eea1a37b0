#pragma once

#include <cstddef>

#include "coxjsj/coxeter_system.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/report.hpp"

namespace coxjsj {

/// Runs every oracle comparison that applies to `sys`: decomposition
/// validity, brute-force separator and vertex-set families, chordality, and
/// longest-element permutations of finite parabolics. Brute-force checks are
/// skipped (and reported as skipped) above `rank_bound`; parabolics larger
/// than `order_bound` are not enumerated.
VerificationReport verify_system(const CoxeterSystem& sys, std::size_t rank_bound = oracle::kDefaultRankBound,
                                 std::size_t order_bound = oracle::kDefaultOrderBound);

}  // namespace coxjsj
