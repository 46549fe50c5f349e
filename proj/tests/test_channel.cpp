#include <doctest.h>

#include "oneshot/bruteforce.hpp"
#include "oneshot/channel.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ClassicalChannel identity_channel(int symbols) {
  std::vector<std::string> names;
  for (int i = 0; i < symbols; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<Rational>> probs(symbols, std::vector<Rational>(symbols, q(0)));
  for (int i = 0; i < symbols; ++i) probs[i][i] = 1;
  return ClassicalChannel::make(names, names, probs);
}

}  // namespace

TEST_CASE("channel validation") {
  CHECK_THROWS_AS(ClassicalChannel::make({"a"}, {"y"}, {{q(1, 2)}}), InputError);
  CHECK_THROWS_AS(ClassicalChannel::make({"a"}, {"y"}, {{q(-1)}}), InputError);
  CHECK_THROWS_AS(ClassicalChannel::make({"a", "a"}, {"y"}, {{q(1)}, {q(1)}}), InputError);
}

TEST_CASE("two-bit channel hypergraph: 4 vertices, 6 pair hyperedges") {
  ClassicalChannel n = prevedel_channel();
  Hypergraph h = channel_hypergraph(n);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 6);
  for (const Bits& e : h.edges()) CHECK(e.count() == 2);
  CHECK(n.is_output_uniform());
  for (int x = 0; x < 4; ++x)
    n.input_support(x).for_each([&](int y) { CHECK(n.prob(x, y) == q(1, 3)); });
}

TEST_CASE("identity channel hypergraph is singletons") {
  Hypergraph h = channel_hypergraph(identity_channel(2));
  CHECK(h.edge_count() == 2);
  for (const Bits& e : h.edges()) CHECK(e.count() == 1);
}

TEST_CASE("a singleton hyperedge maps to a certain output") {
  Hypergraph h = Hypergraph::make({"a"}, {{"a"}});
  ClassicalChannel n = output_uniform_channel(h);
  CHECK(n.output_count() == 1);
  CHECK(n.prob(0, 0) == 1);
}

TEST_CASE("KS channel from the 24-ray scenario: 24 inputs, 18 outputs") {
  Scenario s = load_builtin("peres24");
  auto [n, e] = channel_from_scenario(s.hypergraph, s.dotted);
  CHECK(n.input_count() == 24);
  CHECK(n.output_count() == 18);
  CHECK(n.is_output_uniform());
  for (int x = 0; x < 24; ++x)
    n.input_support(x).for_each([&](int y) { CHECK(n.prob(x, y) == q(1, 3)); });
  CHECK(e.message_count() == 6);
  for (const auto& cls : e.classes) CHECK(cls.size() == 4);
}

TEST_CASE("round trip: hypergraph of the output-uniform channel is the hypergraph") {
  bruteforce::Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 4 + rng.below(8), 2 + rng.below(6), 4);
    if (!h.isolated_vertices().empty()) continue;
    bool distinct_supports = true;
    for (std::size_t i = 0; i < h.edges().size() && distinct_supports; ++i)
      for (std::size_t j = i + 1; j < h.edges().size(); ++j)
        if (h.edges()[i] == h.edges()[j]) distinct_supports = false;
    if (!distinct_supports) continue;
    ClassicalChannel n = output_uniform_channel(h);
    Hypergraph round = channel_hypergraph(n);
    CHECK(round.vertices() == h.vertices());
    CHECK(round.edges() == h.edges());
  }
}

TEST_CASE("eta values") {
  ClassicalChannel n = prevedel_channel();
  CHECK(eta(n, "00", "00") == 1);
  CHECK(eta(n, "00", "01") == q(1, 3));
  CHECK_THROWS_AS(eta(n, "00", "77"), InputError);

  Scenario s = load_builtin("peres24");
  auto [cubitt, enc] = channel_from_scenario(s.hypergraph, s.dotted);
  for (int x = 0; x < cubitt.input_count(); ++x) CHECK(eta_by_index(cubitt, x, x) == 1);
  // Confusable distinct pairs share exactly one hyperedge: eta = 1/3;
  // non-confusable pairs have eta = 0.
  SimpleGraph g = confusability_graph(cubitt);
  for (int x = 0; x < 24; ++x) {
    for (int x2 = 0; x2 < 24; ++x2) {
      if (x == x2) continue;
      Rational v = eta_by_index(cubitt, x, x2);
      if (g.adjacent(x, x2))
        CHECK(v == q(1, 3));
      else
        CHECK(v == 0);
    }
  }
  auto [lo, hi] = eta_range(cubitt, enc);
  CHECK(lo == q(1, 3));
  CHECK(hi == q(1, 3));
}

TEST_CASE("output-uniform k-regular channels: eta is the support overlap over k") {
  // The full 24-basis scenario as a channel is 4-regular; overlaps reach 2.
  Scenario s = load_builtin("peres24");
  ClassicalChannel n = output_uniform_channel(s.hypergraph);
  REQUIRE(regularity(channel_hypergraph(n)) == 4);
  bool saw_two = false;
  for (int x = 0; x < n.input_count(); ++x) {
    for (int x2 = 0; x2 < n.input_count(); ++x2) {
      int overlap = (n.input_support(x) & n.input_support(x2)).count();
      CHECK(eta_by_index(n, x, x2) == make_rational(overlap, 4));
      if (x != x2 && overlap == 2) saw_two = true;
    }
  }
  CHECK(saw_two);
}

TEST_CASE("eta positive iff confusable or equal, on random channels") {
  bruteforce::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = bruteforce::random_hypergraph(rng, 4 + rng.below(8), 2 + rng.below(6), 4);
    if (!h.isolated_vertices().empty()) continue;
    bool dup = false;
    for (std::size_t i = 0; i < h.edges().size() && !dup; ++i)
      for (std::size_t j = i + 1; j < h.edges().size(); ++j)
        if (h.edges()[i] == h.edges()[j]) dup = true;
    if (dup) continue;
    ClassicalChannel n = output_uniform_channel(h);
    SimpleGraph g = confusability_graph(n);
    for (int x = 0; x < n.input_count(); ++x)
      for (int x2 = 0; x2 < n.input_count(); ++x2) {
        bool positive = eta_by_index(n, x, x2) > 0;
        CHECK(positive == (x == x2 || g.adjacent(x, x2)));
      }
  }
}

TEST_CASE("zero-error capacity") {
  CHECK(zero_error_capacity(prevedel_channel()) == 1);
  CHECK(zero_error_capacity(identity_channel(5)) == 5);
  CHECK(confusability_graph(prevedel_channel()).is_complete());
}

TEST_CASE("encoding validation reports violations as data") {
  ClassicalChannel n = prevedel_channel();
  Encoding good = prevedel_encoding();
  CHECK(validate_encoding(n, good).empty());

  Encoding overlap;
  overlap.messages = {"0", "1"};
  overlap.classes = {{"00", "01"}, {"01", "11"}};
  auto v = validate_encoding(n, overlap);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == EncodingViolation::Kind::Overlap);

  Scenario s = load_builtin("peres24");
  auto [cubitt, enc] = channel_from_scenario(s.hypergraph, s.dotted);
  CHECK(validate_encoding(cubitt, enc).empty());
}

TEST_CASE("non-confusable pair inside a class is reported") {
  ClassicalChannel n = identity_channel(3);
  Encoding e;
  e.messages = {"m"};
  e.classes = {{"0", "1"}};
  auto v = validate_encoding(n, e);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == EncodingViolation::Kind::NotConfusable);
}

TEST_CASE("zero-error codes over encodings") {
  CHECK_FALSE(admits_zero_error_code(prevedel_channel(), prevedel_encoding()).admits);

  Scenario s = load_builtin("peres24");
  auto [cubitt, enc] = channel_from_scenario(s.hypergraph, s.dotted);
  CHECK_FALSE(admits_zero_error_code(cubitt, enc).admits);  // q = 6 > alpha = 5

  ClassicalChannel id = identity_channel(3);
  Encoding singles;
  singles.messages = {"a", "b", "c"};
  singles.classes = {{"0"}, {"1"}, {"2"}};
  ZeroErrorCodeResult r = admits_zero_error_code(id, singles);
  CHECK(r.admits);
  CHECK(r.witness == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("scenario coverage violations") {
  Hypergraph two = Hypergraph::make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_THROWS_AS(channel_from_scenario(two, {0}), InputError);
  CHECK_THROWS_AS(channel_from_scenario(two, {0, 0}), InputError);

  // A 13-family of disjoint bases in the completed 55-ray scenario leaves
  // 55 - 39 = 16 rays; coverage of all 55 by the remaining 28 bases decides.
  ClosureResult closed = completion_closure(builtin_vectors("ck31"));
  DisjointBasesResult disj = max_disjoint_complete_bases(closed.scenario, 4);
  REQUIRE(disj.size == 13);
  REQUIRE(!disj.witnesses.empty());
  std::vector<int> dotted;
  for (const auto& u : disj.witnesses.front()) dotted.push_back(u.index);
  try {
    auto [n, e] = channel_from_scenario(closed.scenario.hypergraph, dotted);
    CHECK(n.input_count() == 55);
    CHECK(e.message_count() == 13);
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("coverage") != std::string::npos);
  }
}
