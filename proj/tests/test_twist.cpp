#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxjsj/diagram.hpp"
#include "coxjsj/error.hpp"
#include "coxjsj/finite_type.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/random.hpp"
#include "coxjsj/twist.hpp"
#include "support.hpp"

using namespace coxjsj;
using namespace coxjsj::testing;

namespace {

bool contains_twist(const std::vector<ElementaryTwist>& twists, const ElementaryTwist& tw) {
  return std::find(twists.begin(), twists.end(), tw) != twists.end();
}

}  // namespace

TEST_CASE("w0_automorphism examples") {
  auto fig2 = fixture("figure2.cox");
  auto sigma = w0_automorphism(fig2, set(fig2, {"b", "c", "d"}));
  std::size_t b = fig2.index_of("b"), c = fig2.index_of("c"), d = fig2.index_of("d");
  CHECK(sigma[b] == d);
  CHECK(sigma[d] == b);
  CHECK(sigma[c] == c);

  auto commuting = cox("gens s t\nedge s t 2\n");
  CHECK(w0_automorphism(commuting, commuting.all()) == GeneratorPermutation{0, 1});
  auto a2 = cox("gens s t\nedge s t 3\n");
  CHECK(w0_automorphism(a2, a2.all()) == GeneratorPermutation{1, 0});
  auto b2 = cox("gens s t\nedge s t 4\n");
  CHECK(w0_automorphism(b2, b2.all()) == GeneratorPermutation{0, 1});
  auto i5 = cox("gens s t\nedge s t 5\n");
  CHECK(w0_automorphism(i5, i5.all()) == GeneratorPermutation{1, 0});

  CHECK_THROWS_AS(w0_automorphism(free_product(2), free_product(2).all()), Error);
}

TEST_CASE("w0_automorphism agrees with the oracle on every small finite parabolic") {
  std::vector<CoxeterSystem> systems = random_corpus(150, 7, kDefaultSeed + 40);
  systems.push_back(fixture("figure1.cox"));
  systems.push_back(fixture("figure2.cox"));
  systems.push_back(fixture("figure3.cox"));
  // D5 and D4, which random corpora rarely produce
  systems.push_back(cox("gens a b c d e\nedge a b 3\nedge b c 3\nedge c d 3\nedge c e 3\nedge a c 2\nedge a d 2\n"
                        "edge a e 2\nedge b d 2\nedge b e 2\nedge d e 2\n"));
  systems.push_back(cox("gens a b c d\nedge a b 3\nedge b c 3\nedge b d 3\nedge a c 2\nedge a d 2\nedge c d 2\n"));
  std::size_t compared = 0;
  for (const auto& sys : systems)
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << sys.rank()); ++bits) {
      GeneratorSubset s(bits);
      auto order = finite_group_order(sys, s);
      if (!order || *order > 10000) continue;
      auto table = oracle::coset_enumerate(sys, s);
      CHECK(oracle::oracle_w0_sigma(table) == w0_automorphism(sys, s));
      ++compared;
    }
  CHECK(compared > 1000);
}

TEST_CASE("admissible twists of figure 2") {
  auto fig2 = fixture("figure2.cox");
  auto twists = admissible_twists(fig2);
  auto a3 = make_twist(fig2, set(fig2, {"a", "b", "c", "d"}), set(fig2, {"b", "c", "d"}));
  CHECK(a3.separation.right == set(fig2, {"b", "c", "d", "e"}));
  CHECK(contains_twist(twists, a3));

  bool over_b = false, over_cd = false;
  for (const auto& tw : twists) {
    CHECK(is_separation(fig2, tw.separation));
    if (tw.separation.cut == set(fig2, {"b"})) {
      over_b = true;
      CHECK(tw.sigma == w0_automorphism(fig2, set(fig2, {"b"})));
    }
    if (tw.separation.cut == set(fig2, {"c", "d"})) {
      over_cd = true;
      // m(c,d) = 3 is odd, so the longest element swaps c and d
      CHECK(tw.sigma[fig2.index_of("c")] == fig2.index_of("d"));
    }
  }
  CHECK(over_b);
  CHECK(over_cd);
  CHECK(admissible_twists(complete(4)).empty());
}

TEST_CASE("make_twist validation") {
  auto fig2 = fixture("figure2.cox");
  CHECK_THROWS_AS(make_twist(fig2, set(fig2, {"a", "b", "c"}), set(fig2, {"c"})), Error);  // b-d crosses
  auto sq = square();
  CHECK_THROWS_AS(make_twist(sq, set(sq, {"a", "b", "c"}), set(sq, {"a", "c"})), Error);  // infinite cut

  // identity is realized by the trivial element
  auto id = make_twist(fig2, set(fig2, {"a", "b", "c", "d"}), set(fig2, {"b", "c", "d"}),
                       GeneratorPermutation{0, 1, 2, 3, 4});
  CHECK(id.sigma == GeneratorPermutation{0, 1, 2, 3, 4});
  // not a diagram automorphism: swaps b and c
  CHECK_THROWS_AS(make_twist(fig2, set(fig2, {"a", "b", "c", "d"}), set(fig2, {"b", "c", "d"}),
                             GeneratorPermutation{0, 2, 1, 3, 4}),
                  Error);
  // s and t of B2 are not conjugate, so their swap is rejected
  auto b2 = cox("gens s t u\nedge s t 4\n");
  CHECK_THROWS_AS(make_twist(b2, set(b2, {"s", "t"}), set(b2, {"s", "t"}), GeneratorPermutation{1, 0, 2}),
                  Error);
}

TEST_CASE("apply_twist reproduces the twisted diagram") {
  auto fig2 = fixture("figure2.cox");
  auto tw = make_twist(fig2, set(fig2, {"a", "b", "c", "d"}), set(fig2, {"b", "c", "d"}));
  auto result = apply_twist(fig2, tw);
  CHECK(result.system == fixture("figure3.cox"));
  CHECK(result.renamed == std::map<std::string, std::string>{{"e", "e'"}});
  CHECK_FALSE(diagram_isomorphic(fig2, result.system));

  auto gog = decompose(result.system);
  auto fig3 = result.system;
  std::vector<GeneratorSubset> edges;
  for (const auto& e : gog.edges) edges.push_back(e.label);
  sort_unique(edges);
  CHECK(edges == family(fig3, {{"b"}, {"b", "c"}}));
  CHECK(canonical_form(fig3, set(fig3, {"b", "c"})) == canonical_form(fig2, set(fig2, {"c", "d"})));
}

TEST_CASE("trivial twists") {
  auto three = free_product(3);
  auto tw = make_twist(three, set(three, {"g0"}), GeneratorSubset{});
  auto out = apply_twist(three, tw);
  CHECK(diagram_isomorphic(three, out.system));
  CHECK(out.renamed.size() == 2);

  auto fig1 = fixture("figure1.cox");
  auto over_b = make_twist(fig1, set(fig1, {"a", "b"}), set(fig1, {"b"}));
  CHECK(diagram_isomorphic(fig1, apply_twist(fig1, over_b).system));
}

TEST_CASE("primed names stay fresh") {
  auto sys = cox("gens a b b' c\nedge a b 3\nedge b c 3\nedge b' c 2\n");
  auto tw = make_twist(sys, set(sys, {"a", "b"}), set(sys, {"b"}));
  auto out = apply_twist(sys, tw);
  CHECK(out.renamed.at("b'") == "b''");
  CHECK(out.renamed.at("c") == "c'");
  CHECK(out.system.rank() == 4);
}

TEST_CASE("twist orbits") {
  auto fig2 = fixture("figure2.cox");
  auto orbit = twist_orbit(fig2);
  CHECK_FALSE(orbit.overflow);
  auto fig3_key = canonical_form(fixture("figure3.cox"));
  CHECK(std::find(orbit.keys.begin(), orbit.keys.end(), fig3_key) != orbit.keys.end());
  CHECK(check_orbit_invariants(orbit).passed());

  auto k4 = complete(4);
  CHECK(twist_orbit(k4).members.size() == 1);

  auto fig1 = fixture("figure1.cox");
  auto orbit1 = twist_orbit(fig1);
  CHECK_FALSE(orbit1.overflow);
  CHECK(check_orbit_invariants(orbit1).passed());

  auto capped = twist_orbit(fig2, 1);
  CHECK(capped.overflow);
  CHECK(capped.members.size() == 1);
  CHECK_THROWS_AS(twist_orbit(fig2, 0), Error);
}

TEST_CASE("property: twisting twice by a longest element is the identity up to renaming") {
  for (const auto& sys : random_corpus(80, 7, kDefaultSeed + 41)) {
    for (const auto& tw : admissible_twists(sys)) {
      // sigma of a longest element is an involution
      for (std::size_t i = 0; i < sys.rank(); ++i) CHECK(tw.sigma[tw.sigma[i]] == i);
      auto once = apply_twist(sys, tw);
      Separation back{tw.separation.left, tw.separation.cut, GeneratorSubset{}};
      std::vector<std::string> right = sys.names_of(tw.separation.cut);
      for (const auto& [from, to] : once.renamed) right.push_back(to);
      back.right = once.system.subset(right);
      // left keeps its names, so indices may have shifted; rebuild by name
      back.left = once.system.subset(sys.names_of(tw.separation.left));
      back.cut = once.system.subset(sys.names_of(tw.separation.cut));
      GeneratorPermutation sigma(once.system.rank());
      for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
      for (std::size_t s : tw.separation.cut)
        sigma[once.system.index_of(sys.name(s))] = once.system.index_of(sys.name(tw.sigma[s]));
      auto twice = apply_twist(once.system, ElementaryTwist{back, sigma});
      CHECK(canonical_form(twice.system) == canonical_form(sys));
    }
  }
}

TEST_CASE("property: orbit invariants on random systems") {
  std::size_t closed = 0;
  for (const auto& sys : random_corpus(40, 6, kDefaultSeed + 42)) {
    auto orbit = twist_orbit(sys, 100);
    if (!orbit.overflow) ++closed;
    auto report = check_orbit_invariants(orbit);
    CHECK_MESSAGE(report.passed(), to_cox(sys));
  }
  CHECK(closed > 0);
}
