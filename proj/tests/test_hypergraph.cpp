#include <doctest.h>

#include "oneshot/bruteforce.hpp"
#include "oneshot/hypergraph.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

namespace {

Hypergraph prevedel_hypergraph() {
  return Hypergraph::make(
      {"00", "01", "10", "11"},
      {{"00", "01"}, {"10", "11"}, {"00", "10"}, {"01", "11"}, {"00", "11"}, {"01", "10"}});
}

}  // namespace

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph::make({"a"}, {{}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make({"a"}, {{"b"}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make({"a", "a"}, {{"a"}}), InputError);
  Hypergraph h = Hypergraph::make({"a", "b", "c"}, {{"a", "b"}});
  CHECK(h.isolated_vertices() == std::vector<VertexId>{"c"});
}

TEST_CASE("orthogonality graph of the two-bit channel hypergraph is K4") {
  SimpleGraph g = orthogonality_graph(prevedel_hypergraph());
  CHECK(g.is_complete());
  CHECK(g.vertex_count() == 4);
}

TEST_CASE("orthogonality graph basics") {
  Hypergraph tri = Hypergraph::make({"a", "b", "c"}, {{"a", "b", "c"}});
  SimpleGraph g = orthogonality_graph(tri);
  CHECK(g.edge_total() == 3);

  Hypergraph pairs = Hypergraph::make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  SimpleGraph g2 = orthogonality_graph(pairs);
  CHECK(g2.edge_total() == 2);
  CHECK(g2.adjacent(0, 1));
  CHECK(g2.adjacent(2, 3));
  CHECK_FALSE(g2.adjacent(0, 2));
}

TEST_CASE("orthogonality graph edge iff shared hyperedge, by direct scan") {
  bruteforce::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 4 + rng.below(10), 2 + rng.below(8), 4);
    SimpleGraph g = orthogonality_graph(h);
    for (int i = 0; i < h.vertex_count(); ++i) {
      for (int j = i + 1; j < h.vertex_count(); ++j) {
        bool together = false;
        for (const Bits& e : h.edges())
          if (e.test(i) && e.test(j)) together = true;
        CHECK(g.adjacent(i, j) == together);
      }
    }
  }
}

TEST_CASE("independence number of K4 is 1 with lex-smallest witness") {
  IndependenceResult r = independence_number(orthogonality_graph(prevedel_hypergraph()));
  CHECK(r.size == 1);
  CHECK(r.witness == std::vector<VertexId>{"00"});
}

TEST_CASE("independence number matches exhaustive scan on random graphs") {
  bruteforce::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + rng.below(13);
    SimpleGraph g = bruteforce::random_graph(rng, n, 0.1 + 0.8 * rng.unit());
    CHECK(independence_number(g).size == bruteforce::independence_number_exhaustive(g));
  }
}

TEST_CASE("independence witness is independent, maximum, and lex-smallest") {
  bruteforce::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 5 + rng.below(8);
    SimpleGraph g = bruteforce::random_graph(rng, n, 0.4);
    IndependenceResult r = independence_number(g);
    REQUIRE(static_cast<int>(r.witness.size()) == r.size);
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      for (std::size_t j = i + 1; j < r.witness.size(); ++j)
        CHECK_FALSE(g.adjacent(g.index_of(r.witness[i]), g.index_of(r.witness[j])));
    // Lex-smallest: enumerate all maximum independent sets and compare.
    MaximumSetFamily all = all_maximum_independent_sets(g, 100000);
    REQUIRE(!all.sets.empty());
    Bits expect = all.sets.front();
    Bits got;
    for (const auto& v : r.witness) got.set(g.index_of(v));
    CHECK(got == expect);
  }
}

TEST_CASE("budget exhaustion raises") {
  bruteforce::Rng rng(5);
  SimpleGraph g = bruteforce::random_graph(rng, 18, 0.3);
  SearchBudget tiny{3, 0};
  CHECK_THROWS_AS(independence_number(g, &tiny), BudgetExceeded);
}

TEST_CASE("single hyperedge colouring has witness {a}") {
  Hypergraph h = Hypergraph::make({"a", "b", "c"}, {{"a", "b", "c"}});
  ColourabilityResult r = ks_colourable(h);
  CHECK(r.colourable);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->assignment == std::vector<bool>{true, false, false});
}

TEST_CASE("two-bit channel hypergraph is KS-uncolourable") {
  ColourabilityResult r = ks_colourable(prevedel_hypergraph());
  CHECK_FALSE(r.colourable);
  // Brute force over all 16 assignments agrees.
  CHECK_FALSE(bruteforce::ks_colourable_exhaustive(prevedel_hypergraph()));
}

TEST_CASE("the 24-ray channel hypergraph is KS-uncolourable") {
  Scenario peres = load_builtin("peres24");
  auto [channel, encoding] = channel_from_scenario(peres.hypergraph, peres.dotted);
  Hypergraph h = channel_hypergraph(channel);
  CHECK_FALSE(ks_colourable(h).colourable);
  CHECK_FALSE(bruteforce::ks_colourable_exhaustive(h));
  // The full 24-basis scenario is uncolourable as well.
  CHECK_FALSE(ks_colourable(peres.hypergraph).colourable);
}

TEST_CASE("colourability matches exhaustive scan on random hypergraphs") {
  bruteforce::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 4 + rng.below(11), 2 + rng.below(10), 4);
    CHECK(ks_colourable(h).colourable == bruteforce::ks_colourable_exhaustive(h));
  }
}

TEST_CASE("colouring witness satisfies every hyperedge") {
  bruteforce::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 5 + rng.below(9), 2 + rng.below(7), 4);
    ColourabilityResult r = ks_colourable(h);
    if (!r.colourable) continue;
    for (const Bits& e : h.edges()) {
      int sum = 0;
      e.for_each([&](int v) { sum += r.witness->assignment[v] ? 1 : 0; });
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("complete orthogonality plus two disjoint hyperedges forces uncolourability") {
  bruteforce::Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    int half = 2 + rng.below(3);
    int n = 2 * half;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<VertexId>> edges;
    std::vector<VertexId> e1(names.begin(), names.begin() + half);
    std::vector<VertexId> e2(names.begin() + half, names.end());
    edges.push_back(e1);
    edges.push_back(e2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((i < half) != (j < half)) edges.push_back({names[i], names[j]});
    Hypergraph h = Hypergraph::make(names, edges);
    CHECK(orthogonality_graph(h).is_complete());
    CHECK_FALSE(ks_colourable(h).colourable);
  }
}

TEST_CASE("regularity") {
  CHECK(regularity(prevedel_hypergraph()) == 3);
  Hypergraph uneven = Hypergraph::make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK_FALSE(regularity(uneven).has_value());

  Scenario peres = load_builtin("peres24");
  auto [channel, encoding] = channel_from_scenario(peres.hypergraph, peres.dotted);
  CHECK(regularity(channel_hypergraph(channel)) == 3);
}
