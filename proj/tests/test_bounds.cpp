#include <doctest.h>

#include <algorithm>

#include "oneshot/bounds.hpp"
#include "oneshot/bruteforce.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

struct CubittFixture {
  Scenario scenario = load_builtin("peres24");
  ClassicalChannel channel;
  Encoding encoding;
  MessageEnsemble prior;

  CubittFixture() {
    auto [n, e] = channel_from_scenario(scenario.hypergraph, scenario.dotted);
    channel = std::move(n);
    encoding = std::move(e);
    prior = MessageEnsemble::uniform(encoding.message_count());
  }

  Encoding dotted_classes() const {
    Encoding enc;
    for (std::size_t i = 0; i < scenario.dotted.size(); ++i) {
      enc.messages.push_back("m" + std::to_string(i));
      enc.classes.push_back(scenario.hypergraph.names(scenario.hypergraph.edge(scenario.dotted[i])));
    }
    return enc;
  }
};

}  // namespace

TEST_CASE("classical bound on the two-bit channel is exactly 5/6") {
  ClassicalChannel n = prevedel_channel();
  Encoding e = prevedel_encoding();
  MessageEnsemble p = MessageEnsemble::uniform(2);
  ClassicalBound b = classical_max(n, e.messages, p);
  CHECK(b.value == q(5, 6));
  CHECK(evaluate_classical_strategy(n, p, b.witness, e.messages) == b.value);
  CHECK(b.value == bruteforce::classical_max_exhaustive(n, p));
}

TEST_CASE("a zero-error code forces value 1") {
  std::vector<std::string> syms = {"0", "1", "2"};
  std::vector<std::vector<Rational>> probs(3, std::vector<Rational>(3, q(0)));
  for (int i = 0; i < 3; ++i) probs[i][i] = 1;
  ClassicalChannel id = ClassicalChannel::make(syms, syms, probs);
  ClassicalBound b = classical_max(id, {"a", "b"}, MessageEnsemble::uniform(2));
  CHECK(b.value == 1);
}

TEST_CASE("classical bound on the KS channel matches the exhaustive oracle") {
  CubittFixture f;
  ClassicalBound b = classical_max(f.channel, f.encoding.messages, f.prior);
  int best_union = bruteforce::max_support_union_exhaustive(f.channel, 6);
  CHECK(b.value == Rational(best_union) / Rational(18));
  CHECK(b.value == q(17, 18));
  CHECK(evaluate_classical_strategy(f.channel, f.prior, b.witness, f.encoding.messages) == b.value);
}

TEST_CASE("classical bound is invariant under relabeling") {
  ClassicalChannel n = prevedel_channel();
  MessageEnsemble p = MessageEnsemble::uniform(2);
  Rational base = classical_max(n, {"0", "1"}, p).value;

  // Permute inputs and outputs.
  std::vector<std::string> inputs = {"11", "00", "10", "01"};
  std::vector<std::string> outputs = {"P:1", "1:0", "2:1", "1:1", "P:0", "2:0"};
  std::vector<std::vector<Rational>> probs(4, std::vector<Rational>(6, q(0)));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 6; ++y)
      probs[x][y] = n.prob(n.input_index(inputs[x]), n.output_index(outputs[y]));
  ClassicalChannel perm = ClassicalChannel::make(inputs, outputs, probs);
  CHECK(classical_max(perm, {"b", "a"}, p).value == base);
}

TEST_CASE("random stochastic strategies never beat the deterministic optimum") {
  bruteforce::Rng rng(83);
  ClassicalChannel n = prevedel_channel();
  MessageEnsemble p = MessageEnsemble::uniform(2);
  double best = to_double(classical_max(n, {"0", "1"}, p).value);
  for (int trial = 0; trial < 200; ++trial) {
    // Random stochastic encoder p(x|m) and decoder p(m'|y).
    std::vector<std::vector<double>> enc(2, std::vector<double>(4));
    std::vector<std::vector<double>> dec(6, std::vector<double>(2));
    for (auto& row : enc) {
      double t = 0;
      for (auto& v : row) {
        v = rng.unit();
        t += v;
      }
      for (auto& v : row) v /= t;
    }
    for (auto& row : dec) {
      double t = 0;
      for (auto& v : row) {
        v = rng.unit();
        t += v;
      }
      for (auto& v : row) v /= t;
    }
    double s = 0;
    for (int m = 0; m < 2; ++m)
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 6; ++y)
          s += 0.5 * enc[m][x] * to_double(n.prob(x, y)) * dec[y][m];
    CHECK(s <= best + 1e-12);
  }
}

TEST_CASE("budget exhaustion carries a partial lower bound") {
  CubittFixture f;
  // Non-uniform prior forces the general enumeration path.
  MessageEnsemble p;
  p.p = {q(1, 4), q(1, 4), q(1, 8), q(1, 8), q(1, 8), q(1, 8)};
  SearchBudget tiny{50, 0};
  try {
    classical_max(f.channel, f.encoding.messages, p, &tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.partial_lower_bound.has_value());
    CHECK(*e.partial_lower_bound > 0);
  }
}

TEST_CASE("beta of a single covered hyperedge is 1") {
  Hypergraph h = Hypergraph::make({"a", "b"}, {{"a", "b"}});
  Encoding e;
  e.messages = {"m"};
  e.classes = {{"a", "b"}};
  BetaBound b = beta(h, e, MessageEnsemble::uniform(1));
  CHECK(b.value == 1);
}

TEST_CASE("beta of the two-bit scenario is exactly 1/2 via both routes") {
  ClassicalChannel n = prevedel_channel();
  Hypergraph gamma = channel_hypergraph(n);
  Encoding e = prevedel_encoding();
  MessageEnsemble p = MessageEnsemble::uniform(2);
  BetaBound v = beta(gamma, e, p, BoundMethod::VertexEnum);
  BetaBound l = beta(gamma, e, p, BoundMethod::LinearizedLp);
  CHECK(v.value == q(1, 2));
  CHECK(l.value == q(1, 2));
}

TEST_CASE("beta requires classes to be hyperedges") {
  Hypergraph h = Hypergraph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Encoding e;
  e.messages = {"m"};
  e.classes = {{"a", "c"}};
  CHECK_THROWS_AS(beta(h, e, MessageEnsemble::uniform(1)), InputError);
}

TEST_CASE("beta of the 24-ray scenario: both routes give the same rational < 1") {
  CubittFixture f;
  Encoding enc = f.dotted_classes();
  BetaBound v = beta(f.scenario.hypergraph, enc, f.prior, BoundMethod::VertexEnum);
  BetaBound l = beta(f.scenario.hypergraph, enc, f.prior, BoundMethod::LinearizedLp, 1'000'000, 2);
  CHECK(v.value == l.value);
  CHECK(v.value < 1);
  CHECK(v.value == q(2, 3));  // computed by both independent routes
  // The witness model re-evaluates to the value.
  Rational recomputed = 0;
  for (int m = 0; m < enc.message_count(); ++m) {
    Rational best = 0;
    for (const auto& x : enc.classes[m]) {
      int i = f.scenario.hypergraph.index_of(x);
      best = std::max(best, v.model.assignment[i]);
    }
    recomputed += f.prior.p[m] * best;
  }
  CHECK(recomputed == v.value);
}

TEST_CASE("cig bound of the two-bit channel is the single-model value 2/3") {
  ClassicalChannel n = prevedel_channel();
  CigBound b = cig_classical_max(n, prevedel_encoding(), MessageEnsemble::uniform(2));
  CHECK(b.value == q(2, 3));
  // Unique model: everything 1/2. The chain bound is tight here:
  // eta + (1-eta) beta = 1/3 + (2/3)(1/2) = 2/3.
  for (const auto& x : b.model.assignment) CHECK(x == q(1, 2));
}

TEST_CASE("cig bound of the KS channel is strictly below 1 and respects the chain") {
  CubittFixture f;
  CigBound b = cig_classical_max(f.channel, f.encoding, f.prior);
  CHECK(b.value < 1);
  CHECK(b.value == q(7, 9));  // frozen from the vertex-enumeration oracle
  BetaBound bb = beta(f.scenario.hypergraph, f.dotted_classes(), f.prior,
                      BoundMethod::LinearizedLp, 1'000'000, 2);
  auto [lo, hi] = eta_range(f.channel, f.encoding);
  Rational chain = hi + (Rational(1) - hi) * bb.value;
  CHECK(b.value <= chain);
}

TEST_CASE("degenerate channel with enough capacity reaches cig bound 1") {
  std::vector<std::string> syms = {"0", "1"};
  std::vector<std::vector<Rational>> probs(2, std::vector<Rational>(2, q(0)));
  probs[0][0] = 1;
  probs[1][1] = 1;
  ClassicalChannel id = ClassicalChannel::make(syms, syms, probs);
  Encoding e;
  e.messages = {"a", "b"};
  e.classes = {{"0"}, {"1"}};
  CigBound b = cig_classical_max(id, e, MessageEnsemble::uniform(2));
  CHECK(b.value == 1);
}

TEST_CASE("noncontextual verdicts") {
  SUBCASE("ideal strategy violates both inequalities") {
    NoncontextualVerdict v = check_noncontextual_bounds(1.0, q(2, 3), q(1, 3), q(1, 3), 1.0,
                                                        q(7, 9));
    CHECK(v.eta_uniform);
    CHECK(v.corr_violation);
    CHECK(v.s_above_eta_beta);
    REQUIRE(v.s_above_cig.has_value());
    CHECK(*v.s_above_cig);
  }
  SUBCASE("maximally mixed state shows no violation") {
    NoncontextualVerdict v = check_noncontextual_bounds(0.25, q(2, 3), q(1, 3), q(1, 3), 0.5);
    CHECK_FALSE(v.corr_violation);
    CHECK_FALSE(v.s_above_eta_beta);
  }
  SUBCASE("beta = 1 is a trivial bound") {
    NoncontextualVerdict v = check_noncontextual_bounds(0.9, q(1), q(1, 3), q(1, 3), 0.95);
    CHECK(v.trivial_bound);
    CHECK_FALSE(v.corr_violation);
  }
  SUBCASE("non-uniform eta still yields verdicts") {
    NoncontextualVerdict v = check_noncontextual_bounds(0.9, q(1, 2), q(1, 4), q(1, 3), 0.99);
    CHECK_FALSE(v.eta_uniform);
    CHECK(v.corr_violation);
  }
}
