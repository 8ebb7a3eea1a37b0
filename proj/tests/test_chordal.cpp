#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxjsj/chordal.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/random.hpp"
#include "coxjsj/separators.hpp"
#include "support.hpp"

using namespace coxjsj;
using namespace coxjsj::testing;

namespace {

void check_chordless_cycle(const CoxeterSystem& sys, const std::vector<std::size_t>& cycle) {
  REQUIRE(cycle.size() >= 4);
  GeneratorSubset members;
  for (std::size_t v : cycle) members.insert(v);
  CHECK(members.size() == cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i)
    for (std::size_t j = i + 1; j < cycle.size(); ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j + 1 == cycle.size());
      CHECK(sys.adjacent(cycle[i], cycle[j]) == consecutive);
    }
}

}  // namespace

TEST_CASE("is_chordal examples") {
  CHECK(is_chordal(fixture("figure1.cox")));
  CHECK_FALSE(is_chordal(square()));
  CHECK(is_chordal(complete(6)));
  CHECK(is_chordal(free_product(4)));
  CHECK(is_chordal(CoxeterSystem{}));
}

TEST_CASE("chordless cycle witness") {
  auto sq = square();
  auto cycle = chordless_cycle(sq);
  REQUIRE(cycle);
  check_chordless_cycle(sq, *cycle);
  CHECK_FALSE(chordless_cycle(fixture("figure1.cox")));

  auto hexagon = cox("gens a b c d e f\nedge a b 2\nedge b c 2\nedge c d 2\nedge d e 2\nedge e f 2\nedge f a 2\n"
                     "edge a c 3\n");
  auto hex_cycle = chordless_cycle(hexagon);
  REQUIRE(hex_cycle);
  CHECK(hex_cycle->size() == 5);
  check_chordless_cycle(hexagon, *hex_cycle);
}

TEST_CASE("maximum cardinality search yields a perfect elimination ordering on chordal diagrams") {
  auto fig1 = fixture("figure1.cox");
  auto order = maximum_cardinality_search(fig1);
  CHECK(order.size() == fig1.rank());
  std::reverse(order.begin(), order.end());
  CHECK(is_perfect_elimination_ordering(fig1, order));

  auto sq = square();
  auto sq_order = maximum_cardinality_search(sq);
  std::reverse(sq_order.begin(), sq_order.end());
  CHECK_FALSE(is_perfect_elimination_ordering(sq, sq_order));
}

TEST_CASE("complete vertex groups check") {
  CHECK(check_chordal_vertex_groups(fixture("figure1.cox")).passed());
  CHECK(check_chordal_vertex_groups(square()).passed());
  CHECK(vertex_sets(square()) == std::vector<GeneratorSubset>{square().all()});
  CHECK(check_chordal_vertex_groups(free_product(1)).passed());
}

TEST_CASE("property: chordality agrees with induced cycle search") {
  for (const auto& sys : random_corpus(300, 9, kDefaultSeed + 30)) {
    bool chordal = is_chordal(sys);
    CHECK(chordal == oracle::brute_is_chordal(sys));
    auto cycle = chordless_cycle(sys);
    CHECK(cycle.has_value() == !chordal);
    if (cycle) check_chordless_cycle(sys, *cycle);
  }
}

TEST_CASE("property: chordal iff every vertex label is complete") {
  for (const auto& sys : random_corpus(300, 10, kDefaultSeed + 31)) {
    auto report = check_chordal_vertex_groups(sys);
    CHECK_MESSAGE(report.passed(), report.checks().front().witness);
  }
}

TEST_CASE("property: chordal iff every relative minimal separator is complete") {
  for (const auto& sys : random_corpus(300, 10, kDefaultSeed + 32)) {
    bool all_complete = true;
    for (GeneratorSubset s : relative_minimal_separators(sys)) all_complete = all_complete && is_complete(sys, s);
    CHECK(is_chordal(sys) == all_complete);
    if (is_chordal(sys) && sys.rank() <= 9)
      for (GeneratorSubset s : oracle::brute_minimal_separators(sys)) CHECK(is_complete(sys, s));
  }
}

TEST_CASE("global minimal separators do not characterize chordality") {
  // A square with a pendant generator at each corner: every global minimal
  // separator is a single corner, yet the square is a chordless cycle.
  auto sys = cox("gens a b c d p q r s\nedge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\n"
                 "edge a p 3\nedge b q 3\nedge c r 3\nedge d s 3\n");
  CHECK_FALSE(is_chordal(sys));
  for (GeneratorSubset s : oracle::brute_minimal_separators(sys)) CHECK(is_complete(sys, s));
  bool incomplete = false;
  for (GeneratorSubset s : relative_minimal_separators(sys)) incomplete = incomplete || !is_complete(sys, s);
  CHECK(incomplete);
}
