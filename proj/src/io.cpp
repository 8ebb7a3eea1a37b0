#include "coxjsj/io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "coxjsj/error.hpp"

namespace coxjsj {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

OrderLabel parse_label(const std::string& token, std::size_t line) {
  if (token == "inf") return OrderLabel::infinity();
  std::uint32_t m = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), m);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw ParseError(line, "edge label '" + token + "' is not an integer or 'inf'");
  if (m < 2) throw ParseError(line, "edge label " + token + " is below 2");
  return OrderLabel(m);
}

std::string join(const std::vector<std::string>& names, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

CoxeterSystem parse_cox(std::string_view text) {
  std::vector<std::string> generators;
  std::set<std::string> declared;
  std::set<std::pair<std::string, std::string>> pairs;
  std::vector<OrderSpec> orders;
  bool have_gens = false;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    if (!have_gens) {
      if (words[0] != "gens") throw ParseError(line_no, "expected 'gens' before anything else");
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!valid_generator_name(words[i])) throw ParseError(line_no, "invalid generator name '" + words[i] + "'");
        if (!declared.insert(words[i]).second) throw ParseError(line_no, "duplicate generator '" + words[i] + "'");
        generators.push_back(words[i]);
      }
      have_gens = true;
      continue;
    }

    if (words[0] == "gens") throw ParseError(line_no, "second 'gens' line");
    if (words[0] != "edge") throw ParseError(line_no, "unknown directive '" + words[0] + "'");
    if (words.size() != 4) throw ParseError(line_no, "expected 'edge s t m'");
    const std::string& s = words[1];
    const std::string& t = words[2];
    for (const auto& name : {s, t})
      if (!declared.count(name)) throw ParseError(line_no, "unknown generator '" + name + "'");
    if (s == t) throw ParseError(line_no, "edge from '" + s + "' to itself");
    OrderLabel m = parse_label(words[3], line_no);
    auto key = s < t ? std::make_pair(s, t) : std::make_pair(t, s);
    if (!pairs.insert(key).second) throw ParseError(line_no, "duplicate edge " + s + " " + t);
    orders.push_back({s, t, m});
  }
  if (!have_gens) throw ParseError(line_no, "missing 'gens' line");
  try {
    return new_system(std::move(generators), orders);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string to_cox(const CoxeterSystem& sys) {
  std::string out = "gens";
  for (const auto& n : sys.names()) out += " " + n;
  out += "\n";
  for (const auto& e : sys.edges())
    out += "edge " + sys.name(e.first) + " " + sys.name(e.second) + " " + std::to_string(e.order) + "\n";
  return out;
}

nlohmann::json system_to_json(const CoxeterSystem& sys) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : sys.edges()) edges.push_back({sys.name(e.first), sys.name(e.second), e.order});
  return {{"generators", sys.names()}, {"edges", edges}};
}

CoxeterSystem system_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> generators = j.at("generators").get<std::vector<std::string>>();
    std::vector<OrderSpec> orders;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError(0, "edge entries must be [s, t, m]");
      OrderLabel m = OrderLabel::infinity();
      if (e[2].is_string()) {
        m = parse_label(e[2].get<std::string>(), 0);
      } else {
        auto v = e[2].get<long long>();
        if (v < 2) throw ParseError(0, "edge label " + std::to_string(v) + " is below 2");
        m = OrderLabel(static_cast<std::uint32_t>(v));
      }
      orders.push_back({e[0].get<std::string>(), e[1].get<std::string>(), m});
    }
    return new_system(std::move(generators), orders);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
}

nlohmann::json subsets_to_json(const CoxeterSystem& sys, const std::vector<GeneratorSubset>& family) {
  nlohmann::json out = nlohmann::json::array();
  for (GeneratorSubset s : family) out.push_back(sys.names_of(s));
  return out;
}

nlohmann::json gog_to_json(const GraphOfGroups& gog) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : gog.edges) edges.push_back({e.source, e.target, gog.ambient.names_of(e.label)});
  return {{"vertices", subsets_to_json(gog.ambient, gog.vertices)}, {"edges", edges}};
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return {{"passed", report.passed()}, {"checks", checks}};
}

std::string to_dot(const CoxeterSystem& sys) {
  std::string out = "graph coxeter {\n";
  for (const auto& n : sys.names()) out += "  " + quoted(n) + ";\n";
  for (const auto& e : sys.edges())
    out += "  " + quoted(sys.name(e.first)) + " -- " + quoted(sys.name(e.second)) + " [label=\"" +
           std::to_string(e.order) + "\"];\n";
  return out + "}\n";
}

std::string to_dot(const GraphOfGroups& gog) {
  std::string out = "graph decomposition {\n";
  for (std::size_t i = 0; i < gog.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=" + quoted(join(gog.ambient.names_of(gog.vertices[i]), ",")) +
           "];\n";
  for (const auto& e : gog.edges)
    out += "  v" + std::to_string(e.source) + " -- v" + std::to_string(e.target) +
           " [label=" + quoted(join(gog.ambient.names_of(e.label), ",")) + "];\n";
  return out + "}\n";
}

}  // namespace coxjsj
