#include <doctest.h>

#include "oneshot/bounds.hpp"
#include "oneshot/bruteforce.hpp"
#include "oneshot/polytope.hpp"
#include "oneshot/simplex.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("single hyperedge polytope has the two unit vertices") {
  Hypergraph h = Hypergraph::make({"a", "b"}, {{"a", "b"}});
  auto verts = polytope_vertices(h);
  REQUIRE(verts.size() == 2);
  CHECK(verts[0].assignment == RatVec{q(0), q(1)});
  CHECK(verts[1].assignment == RatVec{q(1), q(0)});
}

TEST_CASE("two-bit scenario polytope is the single half-half point") {
  Hypergraph h = channel_hypergraph(prevedel_channel());
  auto verts = polytope_vertices(h);
  REQUIRE(verts.size() == 1);
  for (const auto& x : verts[0].assignment) CHECK(x == q(1, 2));
}

TEST_CASE("every enumerated vertex satisfies all hyperedge equalities exactly") {
  bruteforce::Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 4 + rng.below(6), 2 + rng.below(5), 4);
    if (!h.isolated_vertices().empty()) continue;
    std::vector<ProbabilisticModel> verts;
    try {
      verts = polytope_vertices(h);
    } catch (const InputError&) {
      continue;
    }
    for (const auto& v : verts) {
      for (const Bits& e : h.edges()) {
        Rational sum = 0;
        e.for_each([&](int i) { sum += v.assignment[i]; });
        CHECK(sum == 1);
      }
      for (const auto& x : v.assignment) {
        CHECK(x >= 0);
        CHECK(x <= 1);
      }
    }
    // Vertices are pairwise distinct.
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
      CHECK(verts[i].assignment != verts[i + 1].assignment);
  }
}

TEST_CASE("vertex enumeration agrees with the LP on random objectives") {
  bruteforce::Rng rng(43);
  int compared = 0;
  for (int trial = 0; trial < 30 && compared < 12; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 4 + rng.below(5), 2 + rng.below(4), 3);
    if (!h.isolated_vertices().empty()) continue;
    std::vector<ProbabilisticModel> verts;
    try {
      verts = polytope_vertices(h);
    } catch (const InputError&) {
      continue;
    }
    if (verts.empty()) continue;
    ++compared;
    RatMat a(h.edge_count(), RatVec(h.vertex_count(), q(0)));
    for (int e = 0; e < h.edge_count(); ++e)
      h.edge(e).for_each([&](int v) { a[e][v] = 1; });
    ExactLp lp(a, RatVec(h.edge_count(), q(1)));
    for (int obj = 0; obj < 6; ++obj) {
      RatVec c;
      for (int i = 0; i < h.vertex_count(); ++i) c.push_back(q(rng.below(21) - 10, 1 + rng.below(4)));
      auto r = lp.maximize(c);
      REQUIRE(r.status == ExactLp::Status::Optimal);
      Rational best = verts[0].assignment[0] * 0;
      bool first = true;
      for (const auto& v : verts) {
        Rational val = rat_dot(c, v.assignment);
        if (first || val > best) best = val;
        first = false;
      }
      CHECK(best == r.value);
    }
  }
  CHECK(compared >= 8);
}

TEST_CASE("rational polytope surface") {
  Hypergraph h = channel_hypergraph(prevedel_channel());
  RationalPolytope poly = probabilistic_model_polytope(h);
  CHECK(poly.var_count == 4);
  CHECK(poly.feasible());
  RatVec obj(4, q(1));
  CHECK(poly.maximize(obj) == q(2));  // all coordinates are 1/2
  auto verts = poly.vertices();
  REQUIRE(verts.size() == 1);
  CHECK(is_probabilistic_model(h, verts[0]));
  RatVec bad(4, q(1, 3));
  CHECK_FALSE(is_probabilistic_model(h, bad));
}

TEST_CASE("vertex cap raises instead of truncating") {
  // A product of many independent 2-vertex edges has 2^k vertices.
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> edges;
  for (int k = 0; k < 8; ++k) {
    names.push_back("a" + std::to_string(k));
    names.push_back("b" + std::to_string(k));
    edges.push_back({names[2 * k], names[2 * k + 1]});
  }
  Hypergraph h = Hypergraph::make(names, edges);
  CHECK_THROWS_AS(polytope_vertices(h, 100), CapExceeded);
  CHECK(polytope_vertices(h, 300).size() == 256);
}

TEST_CASE("peres scenarios have vertex counts the bounds can enumerate") {
  Scenario s = load_builtin("peres24");
  auto full = polytope_vertices(s.hypergraph);
  CHECK(full.size() > 0);
  auto [channel, encoding] = channel_from_scenario(s.hypergraph, s.dotted);
  auto chan = polytope_vertices(channel_hypergraph(channel));
  CHECK(chan.size() >= full.size());
  // KS-uncolourability: no 0/1 vertex in the channel polytope.
  for (const auto& v : chan) {
    bool integral = true;
    for (const auto& x : v.assignment)
      if (x != 0 && x != 1) integral = false;
    CHECK_FALSE(integral);
  }
}
