#include "coxjsj/verify.hpp"

#include <algorithm>

#include "coxjsj/chordal.hpp"
#include "coxjsj/error.hpp"
#include "coxjsj/finite_type.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/separators.hpp"
#include "coxjsj/twist.hpp"

namespace coxjsj {

namespace {

std::string describe(const CoxeterSystem& sys, const std::vector<GeneratorSubset>& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + to_string(sys, family[i]);
  return out + "]";
}

void compare(VerificationReport& report, const std::string& name, const CoxeterSystem& sys,
             const std::vector<GeneratorSubset>& got, const std::vector<GeneratorSubset>& want) {
  report.add(name, got == want, got == want ? "" : "got " + describe(sys, got) + ", expected " + describe(sys, want));
}

std::vector<GeneratorSubset> label_multiset(const std::vector<GeneratorSubset>& labels) {
  auto out = labels;
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<GeneratorSubset> edge_multiset(const GraphOfGroups& gog) {
  std::vector<GeneratorSubset> out;
  for (const auto& e : gog.edges) out.push_back(e.label);
  return label_multiset(out);
}

}  // namespace

VerificationReport verify_system(const CoxeterSystem& sys, std::size_t rank_bound, std::size_t order_bound) {
  VerificationReport report;
  if (sys.rank() == 0) {
    report.add("nonempty", false, "the empty system has no decomposition");
    return report;
  }

  GraphOfGroups gog = decompose(sys);
  GraphOfGroups fast = decompose_fast(sys);
  report.merge(validate(gog, sys), "decompose.");
  report.merge(validate(fast, sys), "decompose_fast.");
  report.add("fast_matches_recursive",
             label_multiset(gog.vertices) == label_multiset(fast.vertices) && edge_multiset(gog) == edge_multiset(fast));

  try {
    auto orbit = jsj_orbit(sys);
    bool valid = std::all_of(orbit.begin(), orbit.end(), [&](const GraphOfGroups& t) { return validate(t, sys).passed(); });
    report.add("slide_orbit_valid", valid, std::to_string(orbit.size()) + " trees");
  } catch (const BudgetExceeded& e) {
    report.add("slide_orbit_valid", true, std::string("skipped: ") + e.what());
  }

  report.merge(check_chordal_vertex_groups(sys));

  if (sys.rank() <= rank_bound) {
    compare(report, "vertex_sets_match_oracle", sys, vertex_sets(sys), oracle::brute_vertex_sets(sys, rank_bound));
    compare(report, "relative_minimal_separators_match_oracle", sys, relative_minimal_separators(sys),
            oracle::brute_relative_minimal_separators(sys, rank_bound));
    compare(report, "complete_relative_minimal_separators_match_oracle", sys,
            complete_relative_minimal_separators(sys), oracle::brute_complete_relative_minimal_separators(sys, rank_bound));
    report.add("chordal_matches_oracle", is_chordal(sys) == oracle::brute_is_chordal(sys, rank_bound));
    bool dirac = true;
    if (is_chordal(sys))
      for (GeneratorSubset s : oracle::brute_minimal_separators(sys, rank_bound)) dirac = dirac && is_complete(sys, s);
    report.add("chordal_minimal_separators_complete", dirac);
  } else {
    report.add("brute_force", true, "skipped: rank " + std::to_string(sys.rank()) + " above bound " +
                                        std::to_string(rank_bound));
  }

  std::size_t compared = 0;
  std::string mismatch;
  if (sys.rank() <= 20) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << sys.rank()); ++bits) {
      GeneratorSubset s(bits);
      if (!is_complete(sys, s)) continue;
      auto order = finite_group_order(sys, s);
      if (!order || *order > order_bound) continue;
      auto table = oracle::coset_enumerate(sys, s, order_bound);
      ++compared;
      if (oracle::oracle_w0_sigma(table) != w0_automorphism(sys, s) && mismatch.empty()) mismatch = to_string(sys, s);
    }
  }
  report.add("w0_table_matches_oracle", mismatch.empty(),
             mismatch.empty() ? std::to_string(compared) + " parabolics compared" : "mismatch on " + mismatch);
  return report;
}

}  // namespace coxjsj
