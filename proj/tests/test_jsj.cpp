#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxjsj/error.hpp"
#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/random.hpp"
#include "coxjsj/separators.hpp"
#include "support.hpp"

using namespace coxjsj;
using namespace coxjsj::testing;

namespace {

std::vector<GeneratorSubset> edge_labels(const GraphOfGroups& gog) {
  std::vector<GeneratorSubset> out;
  for (const auto& e : gog.edges) out.push_back(e.label);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<GeneratorSubset> vertex_labels(const GraphOfGroups& gog) {
  auto out = gog.vertices;
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// Vertex index holding exactly `label`.
std::size_t vertex(const GraphOfGroups& gog, GeneratorSubset label) {
  auto it = std::find(gog.vertices.begin(), gog.vertices.end(), label);
  REQUIRE(it != gog.vertices.end());
  return static_cast<std::size_t>(it - gog.vertices.begin());
}

bool has_edge(const GraphOfGroups& gog, GeneratorSubset u, GeneratorSubset v, GeneratorSubset label) {
  std::size_t i = vertex(gog, u), j = vertex(gog, v);
  for (const auto& e : gog.edges)
    if (e.label == label && ((e.source == i && e.target == j) || (e.source == j && e.target == i))) return true;
  return false;
}

GraphOfGroups figure1_tree(const CoxeterSystem& fig1, bool second) {
  GraphOfGroups gog{fig1, family(fig1, {{"a", "b"}, {"b", "c", "e"}, {"b", "d", "e"}}), {}};
  std::size_t ab = vertex(gog, set(fig1, {"a", "b"}));
  std::size_t bce = vertex(gog, set(fig1, {"b", "c", "e"}));
  std::size_t bde = vertex(gog, set(fig1, {"b", "d", "e"}));
  gog.edges.push_back({ab, second ? bde : bce, set(fig1, {"b"})});
  gog.edges.push_back({bce, bde, set(fig1, {"b", "e"})});
  return normalized(gog);
}

}  // namespace

TEST_CASE("decompose figure 1") {
  auto fig1 = fixture("figure1.cox");
  auto gog = decompose(fig1);
  CHECK(vertex_labels(gog) == family(fig1, {{"a", "b"}, {"b", "c", "e"}, {"b", "d", "e"}}));
  CHECK(edge_labels(gog) == family(fig1, {{"b"}, {"b", "e"}}));
  CHECK(has_edge(gog, set(fig1, {"a", "b"}), set(fig1, {"b", "c", "e"}), set(fig1, {"b"})));
  CHECK(has_edge(gog, set(fig1, {"b", "c", "e"}), set(fig1, {"b", "d", "e"}), set(fig1, {"b", "e"})));
  CHECK(validate(gog, fig1).passed());
}

TEST_CASE("decompose trivial cases") {
  auto k4 = complete(4);
  auto gog = decompose(k4);
  CHECK(gog.vertices == std::vector<GeneratorSubset>{k4.all()});
  CHECK(gog.edges.empty());
  CHECK(validate(gog, k4).passed());

  auto three = free_product(3);
  auto free = decompose(three);
  CHECK(free.vertices.size() == 3);
  REQUIRE(free.edges.size() == 2);
  for (const auto& e : free.edges) CHECK(e.label.empty());
  CHECK(validate(free, three).passed());

  CHECK_THROWS_AS(decompose(CoxeterSystem{}), Error);
  CHECK_THROWS_AS(decompose_fast(CoxeterSystem{}), Error);
}

TEST_CASE("decompose_fast") {
  auto fig1 = fixture("figure1.cox");
  auto fast = decompose_fast(fig1);
  CHECK(vertex_labels(fast) == vertex_labels(decompose(fig1)));
  CHECK(edge_labels(fast) == edge_labels(decompose(fig1)));

  auto path = cox("gens a b c\nedge a b 3\nedge b c 3\n");
  auto p = decompose_fast(path);
  CHECK(vertex_labels(p) == family(path, {{"a", "b"}, {"b", "c"}}));
  CHECK(edge_labels(p) == family(path, {{"b"}}));

  auto k5 = complete(5);
  CHECK(decompose_fast(k5).vertices.size() == 1);
}

TEST_CASE("vertex_sets") {
  auto fig1 = fixture("figure1.cox");
  CHECK(vertex_sets(fig1) == family(fig1, {{"a", "b"}, {"b", "c", "e"}, {"b", "d", "e"}}));
  auto fig2 = fixture("figure2.cox");
  CHECK(vertex_sets(fig2) == family(fig2, {{"a", "b"}, {"b", "c", "d"}, {"c", "d", "e"}}));
  auto k3 = complete(3);
  CHECK(vertex_sets(k3) == std::vector<GeneratorSubset>{k3.all()});
}

TEST_CASE("validate") {
  auto fig1 = fixture("figure1.cox");
  CHECK(validate(figure1_tree(fig1, false), fig1).passed());
  CHECK(validate(figure1_tree(fig1, true), fig1).passed());

  auto k3 = complete(3);
  CHECK(validate(GraphOfGroups{k3, {k3.all()}, {}}, k3).passed());

  // single vertex on a separable system is not JSJ
  auto bad = GraphOfGroups{fig1, {fig1.all()}, {}};
  CHECK_FALSE(validate(bad, fig1).passed());

  // an edge label equal to a vertex label is not reduced
  auto path = cox("gens a b c\nedge a b 3\nedge b c 3\n");
  GraphOfGroups unreduced{path, family(path, {{"a", "b"}, {"b"}, {"b", "c"}}), {}};
  unreduced.edges = {{0, 1, set(path, {"b"})}, {1, 2, set(path, {"b"})}};
  auto report = validate(unreduced, path);
  CHECK_FALSE(report.passed());
  bool reduced_failed = false;
  for (const auto& c : report.checks())
    if (c.name == "reduced") reduced_failed = !c.passed;
  CHECK(reduced_failed);

  CHECK_THROWS_AS(validate(decompose(path), fig1), Error);
}

TEST_CASE("slide moves and the orbit of figure 1") {
  auto fig1 = fixture("figure1.cox");
  auto first = figure1_tree(fig1, false);
  auto second = figure1_tree(fig1, true);
  CHECK(canonical_key(first) != canonical_key(second));
  CHECK(canonical_key(decompose(fig1)) == canonical_key(first));

  auto moves = slide_moves(first);
  bool found = false;
  for (const auto& m : moves) {
    CHECK(validate(m, fig1).passed());
    if (canonical_key(m) == canonical_key(second)) found = true;
  }
  CHECK(found);

  auto orbit = jsj_orbit(fig1);
  REQUIRE(orbit.size() == 2);
  std::set<std::string> keys{canonical_key(orbit[0]), canonical_key(orbit[1])};
  CHECK(keys == std::set<std::string>{canonical_key(first), canonical_key(second)});
}

TEST_CASE("slide move edge cases") {
  auto path = cox("gens a b\nedge a b 3\n");
  auto single = cox("gens a b c\nedge a b 3\nedge b c 3\n");
  CHECK(slide_moves(decompose(single)).empty());
  CHECK(jsj_orbit(path).size() == 1);

  auto star = free_product(3);
  CHECK(jsj_orbit(star).size() == 3);
  CHECK(jsj_orbit(fixture("figure2.cox")).size() == 1);
  CHECK(jsj_orbit(complete(4)).size() == 1);

  CHECK_THROWS_AS(jsj_orbit(free_product(6), 5), BudgetExceeded);
}

TEST_CASE("canonical_key ignores vertex order") {
  auto fig1 = fixture("figure1.cox");
  auto gog = decompose(fig1);
  GraphOfGroups shuffled = gog;
  std::reverse(shuffled.vertices.begin(), shuffled.vertices.end());
  const std::size_t n = gog.vertices.size();
  for (auto& e : shuffled.edges) {
    e.source = n - 1 - e.source;
    e.target = n - 1 - e.target;
  }
  CHECK(canonical_key(shuffled) == canonical_key(gog));
  CHECK(normalized(shuffled) == normalized(gog));
}

TEST_CASE("property: vertex and edge label families match exhaustive enumeration") {
  for (const auto& sys : random_corpus(150, 9, kDefaultSeed + 20)) {
    auto gog = decompose(sys);
    CHECK(vertex_sets(sys) == oracle::brute_vertex_sets(sys));
    auto edges = edge_labels(gog);
    sort_unique(edges);
    CHECK(edges == oracle::brute_complete_relative_minimal_separators(sys));
  }
}

TEST_CASE("property: decompositions are valid and agree") {
  for (const auto& sys : random_corpus(200, 10, kDefaultSeed + 21)) {
    auto gog = decompose(sys);
    auto fast = decompose_fast(sys);
    auto report = validate(gog, sys);
    CHECK_MESSAGE(report.passed(), to_cox(sys));
    CHECK(validate(fast, sys).passed());
    CHECK(vertex_labels(gog) == vertex_labels(fast));
    CHECK(edge_labels(gog) == edge_labels(fast));

    // each edge label is a minimal (a,b)-separator for some pair
    for (const auto& e : gog.edges) {
      bool witnessed = false;
      for (std::size_t a = 0; a < sys.rank() && !witnessed; ++a)
        for (std::size_t b = a + 1; b < sys.rank() && !witnessed; ++b) {
          auto seps = minimal_ab_separators(sys, a, b);
          witnessed = std::find(seps.begin(), seps.end(), e.label) != seps.end();
        }
      CHECK(witnessed);
    }

    // generators in no common vertex label have infinite order
    for (std::size_t s = 0; s < sys.rank(); ++s)
      for (std::size_t t = s + 1; t < sys.rank(); ++t) {
        bool together = std::any_of(gog.vertices.begin(), gog.vertices.end(),
                                    [&](GeneratorSubset v) { return v.contains(s) && v.contains(t); });
        if (!together) CHECK_FALSE(sys.adjacent(s, t));
      }
  }
}

TEST_CASE("property: invariants across the slide orbit") {
  for (const auto& sys : random_corpus(60, 8, kDefaultSeed + 22)) {
    std::vector<GraphOfGroups> orbit;
    try {
      orbit = jsj_orbit(sys, 2000);
    } catch (const BudgetExceeded&) {
      continue;
    }
    for (const auto& gog : orbit) {
      CHECK(validate(gog, sys).passed());
      CHECK(gog.vertices.size() == orbit.front().vertices.size());
      CHECK(vertex_labels(gog) == vertex_labels(orbit.front()));
      CHECK(edge_labels(gog) == edge_labels(orbit.front()));
    }
  }
}
