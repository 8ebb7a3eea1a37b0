// Command-line front end. JSON on stdout is the machine interface; DOT is
// for looking at. Exit status: 0 ok, 1 verification failure, 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxjsj/chordal.hpp"
#include "coxjsj/error.hpp"
#include "coxjsj/io.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/random.hpp"
#include "coxjsj/separators.hpp"
#include "coxjsj/twist.hpp"
#include "coxjsj/verify.hpp"

namespace {

using namespace coxjsj;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

CoxeterSystem load(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return parse_cox(buffer.str());
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// "b:d,d:b" -> permutation on the generator indices of sys.
GeneratorPermutation parse_sigma(const CoxeterSystem& sys, const std::string& text) {
  GeneratorPermutation sigma(sys.rank());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  for (const auto& pair : split_names(text)) {
    auto colon = pair.find(':');
    if (colon == std::string::npos) throw Error("sigma entries must look like s:t, got '" + pair + "'");
    sigma[sys.index_of(pair.substr(0, colon))] = sys.index_of(pair.substr(colon + 1));
  }
  return sigma;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("COXJSJ_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(std::string("COXJSJ_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultTwistOrbitBudget;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visual JSJ decompositions of Coxeter systems"};
  app.require_subcommand(1);

  std::string input;
  bool fast = false, orbit = false;
  std::string format = "json";
  auto* decompose_cmd = app.add_subcommand("decompose", "JSJ decomposition tree of a .cox file");
  decompose_cmd->add_option("file", input, "input .cox file, or - for stdin")->required();
  decompose_cmd->add_flag("--fast", fast, "use the clique separator decomposition");
  decompose_cmd->add_flag("--orbit", orbit, "print every tree reachable by slide moves");
  decompose_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* separators_cmd = app.add_subcommand("separators", "relative minimal separators");
  separators_cmd->add_option("file", input)->required();

  auto* chordal_cmd = app.add_subcommand("chordal", "chordality with a chordless cycle witness");
  chordal_cmd->add_option("file", input)->required();

  auto* twist_cmd = app.add_subcommand("twist", "elementary twists");
  twist_cmd->require_subcommand(1);
  std::string s1, s0, sigma_text;
  auto* apply_cmd = twist_cmd->add_subcommand("apply", "apply one elementary twist");
  apply_cmd->add_option("file", input)->required();
  apply_cmd->add_option("--s1", s1, "comma-separated side S1 (contains S0)")->required();
  apply_cmd->add_option("--s0", s0, "comma-separated cut S0 (may be empty)")->required();
  apply_cmd->add_option("--sigma", sigma_text, "permutation of S0 as s:t pairs; default is the longest element");
  apply_cmd->add_option("--format", format, "json or cox")->check(CLI::IsMember({"json", "cox"}));

  std::size_t budget = 0;
  auto* orbit_cmd = twist_cmd->add_subcommand("orbit", "closure under admissible twists");
  orbit_cmd->add_option("file", input)->required();
  orbit_cmd->add_option("--budget", budget, "maximum number of diagrams (default: $COXJSJ_BUDGET or 500)")
      ->check(CLI::PositiveNumber);

  std::size_t bound = oracle::kDefaultRankBound;
  std::size_t order_bound = oracle::kDefaultOrderBound;
  auto* verify_cmd = app.add_subcommand("verify", "compare every result with the brute-force oracles");
  verify_cmd->add_option("file", input)->required();
  verify_cmd->add_option("--bound", bound, "rank bound for exhaustive enumeration");
  verify_cmd->add_option("--order-bound", order_bound, "group order bound for coset enumeration")
      ->check(CLI::PositiveNumber);

  std::size_t rank = 7;
  double probability = 0.5;
  std::uint64_t seed = kDefaultSeed;
  std::vector<double> weights;
  std::string random_format = "cox";
  auto* random_cmd = app.add_subcommand("random", "random system in .cox format");
  random_cmd->add_option("--rank", rank)->check(CLI::Range(1, 64));
  random_cmd->add_option("--prob", probability, "edge probability")->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--labels", weights, "weights of 2,3,4,5,inf")->expected(5)->delimiter(',');
  random_cmd->add_option("--format", random_format, "cox or json")->check(CLI::IsMember({"cox", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decompose_cmd) {
      CoxeterSystem sys = load(input);
      std::vector<GraphOfGroups> trees;
      if (orbit) {
        trees = jsj_orbit(sys);
      } else {
        trees.push_back(normalized(fast ? decompose_fast(sys) : decompose(sys)));
      }
      if (format == "dot") {
        for (const auto& t : trees) std::cout << to_dot(t);
      } else if (orbit) {
        json out = json::array();
        for (const auto& t : trees) out.push_back(gog_to_json(t));
        print(out);
      } else {
        print(gog_to_json(trees.front()));
      }
      return kOk;
    }

    if (*separators_cmd) {
      CoxeterSystem sys = load(input);
      print({{"complete_relative_minimal", subsets_to_json(sys, complete_relative_minimal_separators(sys))},
             {"relative_minimal", subsets_to_json(sys, relative_minimal_separators(sys))}});
      return kOk;
    }

    if (*chordal_cmd) {
      CoxeterSystem sys = load(input);
      json out{{"chordal", is_chordal(sys)}};
      if (auto cycle = chordless_cycle(sys)) {
        std::vector<std::string> names;
        for (std::size_t v : *cycle) names.push_back(sys.name(v));
        out["cycle"] = names;
      }
      print(out);
      return kOk;
    }

    if (*apply_cmd) {
      CoxeterSystem sys = load(input);
      std::optional<GeneratorPermutation> sigma;
      if (!sigma_text.empty()) sigma = parse_sigma(sys, sigma_text);
      auto twist = make_twist(sys, sys.subset(split_names(s1)), sys.subset(split_names(s0)), sigma);
      auto result = apply_twist(sys, twist);
      if (format == "cox") {
        std::cout << to_cox(result.system);
      } else {
        print({{"system", system_to_json(result.system)}, {"renamed", result.renamed}});
      }
      return kOk;
    }

    if (*orbit_cmd) {
      CoxeterSystem sys = load(input);
      auto result = twist_orbit(sys, budget ? budget : default_budget());
      auto report = check_orbit_invariants(result);
      json members = json::array();
      for (const auto& m : result.members) members.push_back(system_to_json(m));
      print({{"members", members}, {"overflow", result.overflow}, {"report", report_to_json(report)}});
      return report.passed() ? kOk : kFailed;
    }

    if (*verify_cmd) {
      CoxeterSystem sys = load(input);
      auto report = verify_system(sys, bound, order_bound);
      print(report_to_json(report));
      return report.passed() ? kOk : kFailed;
    }

    if (*random_cmd) {
      LabelWeights w;
      if (!weights.empty()) w = {weights[0], weights[1], weights[2], weights[3], weights[4]};
      auto sys = random_system(rank, probability, w, seed);
      if (random_format == "json") {
        print(system_to_json(sys));
      } else {
        std::cout << to_cox(sys);
      }
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "coxjsj: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "coxjsj: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
