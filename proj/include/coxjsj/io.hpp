#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxjsj/coxeter_system.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/report.hpp"

namespace coxjsj {

/// Reads the ".cox" text format:
///
///     # comment
///     gens a b c d
///     edge a b 3
///     edge b c inf
///
/// The first non-comment line declares the generators. Pairs without an
/// edge line have infinite order. Throws ParseError with a 1-based line.
CoxeterSystem parse_cox(std::string_view text);

/// Canonical ".cox" text: sorted generators, then finite edges in index order.
/// parse_cox(to_cox(sys)) == sys.
std::string to_cox(const CoxeterSystem& sys);

/// {"generators":[...],"edges":[[s,t,m],...]} with finite edges only.
nlohmann::json system_to_json(const CoxeterSystem& sys);
/// Accepts "inf" as an edge label. Throws ParseError.
CoxeterSystem system_from_json(const nlohmann::json& j);

/// A family of subsets as a JSON array of name arrays.
nlohmann::json subsets_to_json(const CoxeterSystem& sys, const std::vector<GeneratorSubset>& family);

/// {"vertices":[[...],...],"edges":[[i,j,[...]],...]}
nlohmann::json gog_to_json(const GraphOfGroups& gog);

/// {"passed":bool,"checks":[{"name":..,"passed":..,"witness":..},...]}
nlohmann::json report_to_json(const VerificationReport& report);

/// Presentation diagram as an undirected DOT graph, edges labelled by m.
std::string to_dot(const CoxeterSystem& sys);
/// Decomposition tree as DOT; vertices and edges labelled by generator lists.
std::string to_dot(const GraphOfGroups& gog);

}  // namespace coxjsj
