#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxjsj/error.hpp"
#include "coxjsj/io.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/random.hpp"
#include "support.hpp"

using namespace coxjsj;
using namespace coxjsj::testing;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_cox(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 999;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse_cox") {
  auto sys = parse_cox("gens a b\nedge a b 3\n");
  CHECK(sys.rank() == 2);
  CHECK(sys.order(0, 1) == OrderLabel(3));

  auto commented = parse_cox("# header\n\n  gens b a   # trailing\nedge b a inf\n");
  CHECK(commented.names() == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(commented.order(0, 1).is_finite());

  CHECK(parse_cox("gens\n").rank() == 0);
}

TEST_CASE("parse_cox errors carry line numbers") {
  CHECK(parse_error_line("gens a b\nedge a b 1\n") == 2);
  CHECK(parse_error_line("gens a b\n# c\nedge a c 3\n") == 3);
  CHECK(parse_error_line("gens a b\nedge a b 3\nedge b a 2\n") == 3);
  CHECK(parse_error_line("gens a a\n") == 1);
  CHECK(parse_error_line("edge a b 3\n") == 1);
  CHECK(parse_error_line("gens a b\nedge a b x\n") == 2);
  CHECK(parse_error_line("gens a b\nedge a b\n") == 2);
  CHECK(parse_error_line("gens a b\nvertex a\n") == 2);
  CHECK(parse_error_line("gens a b\nedge a a 3\n") == 2);
  CHECK(parse_error_line("gens a-b\n") == 1);
  CHECK_THROWS_AS(parse_cox("edge a b 1"), ParseError);
  CHECK_THROWS_AS(parse_cox(""), ParseError);
}

TEST_CASE("fixtures parse") {
  auto fig2 = fixture("figure2.cox");
  CHECK(fig2.rank() == 5);
  CHECK(fig2.edges().size() == 6);
  auto fig3 = fixture("figure3.cox");
  CHECK(fig3.names().back() == "e'");
  CHECK(fig3.edges().size() == 6);
}

TEST_CASE("text and JSON round trips") {
  auto fig2 = fixture("figure2.cox");
  CHECK(to_cox(fig2) == "gens a b c d e\nedge a b 3\nedge b c 3\nedge b d 2\nedge c d 3\nedge c e 2\nedge d e 2\n");
  auto j = system_to_json(fig2);
  CHECK(j.dump() ==
        R"({"edges":[["a","b",3],["b","c",3],["b","d",2],["c","d",3],["c","e",2],["d","e",2]],"generators":["a","b","c","d","e"]})");
  CHECK(system_from_json(j) == fig2);
  CHECK(system_from_json(nlohmann::json::parse(R"({"generators":["x","y"],"edges":[["x","y","inf"]]})")).edges().empty());
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"generators":["x","y"],"edges":[["x","y",1]]})")),
                  ParseError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"generators":["x"]})")), ParseError);

  for (const auto& sys : random_corpus(200, 12, kDefaultSeed + 50)) {
    auto text = to_cox(sys);
    auto back = parse_cox(text);
    CHECK(back == sys);
    CHECK(to_cox(back) == text);
    CHECK(system_from_json(system_to_json(sys)) == sys);
  }
}

TEST_CASE("graph of groups JSON and DOT") {
  auto fig1 = fixture("figure1.cox");
  auto gog = normalized(decompose(fig1));
  CHECK(gog_to_json(gog).dump() ==
        R"({"edges":[[0,1,["b"]],[1,2,["b","e"]]],"vertices":[["a","b"],["b","c","e"],["b","d","e"]]})");
  auto dot = to_dot(gog);
  CHECK(count(dot, " -- ") == 2);
  CHECK(count(dot, "[label=") == 5);
  CHECK(dot.find("[label=\"b,e\"]") != std::string::npos);
  CHECK(dot.find("[label=\"b\"]") != std::string::npos);

  auto single = parse_cox("gens s\n");
  auto dot1 = to_dot(single);
  CHECK(count(dot1, "\"s\";") == 1);
  CHECK(count(dot1, " -- ") == 0);

  auto fig3_dot = to_dot(fixture("figure3.cox"));
  CHECK(count(fig3_dot, " -- ") == 6);
  CHECK(count(fig3_dot, ";\n") == 11);
}

TEST_CASE("random systems") {
  auto one = random_system(1, 0.5, LabelWeights{}, 99);
  CHECK(one.rank() == 1);
  auto k = random_system(6, 1.0, LabelWeights{0, 1, 0, 0, 0}, 3);
  CHECK(k.edges().size() == 15);
  for (const auto& e : k.edges()) CHECK(e.order == 3);
  auto a = random_system(7, 0.5, LabelWeights{}, kDefaultSeed);
  auto b = random_system(7, 0.5, LabelWeights{}, kDefaultSeed);
  CHECK(a == b);
  CHECK(to_cox(a) == to_cox(b));
  auto names = random_system(11, 0.0, LabelWeights{}, 1).names();
  CHECK(names.front() == "s00");
  CHECK(names.back() == "s10");
  CHECK_THROWS_AS(random_system(0, 0.5, LabelWeights{}, 1), Error);
  CHECK_THROWS_AS(random_system(3, 1.5, LabelWeights{}, 1), Error);
  CHECK_THROWS_AS(random_system(3, 0.5, LabelWeights{0, 0, 0, 0, 0}, 1), Error);
}
