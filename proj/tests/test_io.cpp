#include <doctest.h>

#include "oneshot/bounds.hpp"
#include "oneshot/bruteforce.hpp"
#include "oneshot/io.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

TEST_CASE("hypergraph json round trip") {
  Hypergraph h = channel_hypergraph(prevedel_channel());
  Hypergraph back = hypergraph_from_json(hypergraph_to_json(h));
  CHECK(back.vertices() == h.vertices());
  CHECK(back.edges() == h.edges());
  CHECK_THROWS_AS(hypergraph_from_json("{oops"), InputError);
}

TEST_CASE("channel json round trip keeps rationals exact") {
  ClassicalChannel n = prevedel_channel();
  std::string text = channel_to_json(n);
  CHECK(text.find("1/3") != std::string::npos);
  CHECK(text.find("0.3") == std::string::npos);
  ClassicalChannel back = channel_from_json(text);
  CHECK(back.inputs() == n.inputs());
  CHECK(back.outputs() == n.outputs());
  for (int x = 0; x < n.input_count(); ++x)
    for (int y = 0; y < n.output_count(); ++y) CHECK(back.prob(x, y) == n.prob(x, y));
}

TEST_CASE("hypergraph-form channel file") {
  Hypergraph h = channel_hypergraph(prevedel_channel());
  std::string text = std::string("{\"hypergraph\":") + hypergraph_to_json(h) +
                     ",\"output_uniform\":true}";
  ClassicalChannel n = channel_from_json(text);
  CHECK(n.is_output_uniform());
  CHECK(n.input_count() == 4);
  CHECK_THROWS_AS(channel_from_json(std::string("{\"hypergraph\":") + hypergraph_to_json(h) + "}"),
                  InputError);
}

TEST_CASE("encoding and ensemble round trips") {
  Encoding e = prevedel_encoding();
  Encoding back = encoding_from_json(encoding_to_json(e));
  CHECK(back.messages == e.messages);
  CHECK(back.classes == e.classes);

  MessageEnsemble p;
  p.p = {make_rational(1, 3), make_rational(2, 3)};
  MessageEnsemble back_p = ensemble_from_json(ensemble_to_json(p, e), e);
  CHECK(back_p.p == p.p);
  CHECK_THROWS_AS(ensemble_from_json("{\"probs\":{\"0\":\"1/3\"}}", e), InputError);
}

TEST_CASE("box json round trip") {
  CorrelationBox box = pr_box();
  CorrelationBox back = box_from_json(box_to_json(box));
  CHECK(back.alice_inputs == box.alice_inputs);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(back.at(s, t, a, b) == box.at(s, t, a, b));
}

TEST_CASE("ray set json round trip with numeric label ordering") {
  VectorSet v = builtin_vectors("ck31");
  VectorSet back = rayset_from_json(rayset_to_json(v));
  CHECK(back.labels == v.labels);
  for (int i = 0; i < v.size(); ++i) CHECK(back.rays[i] == v.rays[i]);
  // Rational coordinates are accepted.
  VectorSet frac = rayset_from_json("{\"dim\":2,\"rays\":{\"a\":[\"1/2\",0],\"b\":[0,1]}}");
  CHECK(frac.rays[0][0] == make_rational(1, 2));
}

TEST_CASE("game json round trip") {
  ClassicalChannel n = prevedel_channel();
  GameSpec g = build_game(n, {"0", "1"}, MessageEnsemble::uniform(2));
  GameSpec back = game_from_json(game_to_json(g));
  CHECK(back.alice_questions == g.alice_questions);
  CHECK(back.predicate == g.predicate);
  CHECK(back.message_weights == g.message_weights);
  CHECK(back.message_symmetric);
}

TEST_CASE("certificates serialize rationals as fraction strings") {
  ClassicalChannel n = prevedel_channel();
  Encoding e = prevedel_encoding();
  MessageEnsemble p = MessageEnsemble::uniform(2);
  ClassicalBound b = classical_max(n, e.messages, p);
  std::string text = classical_bound_to_json(b, e.messages, n.outputs());
  CHECK(text.find("\"5/6\"") != std::string::npos);
  CHECK(text.find("0.8") == std::string::npos);

  BetaBound bb = beta(channel_hypergraph(n), e, p);
  std::string beta_text = beta_bound_to_json(bb, e, channel_hypergraph(n).vertices());
  CHECK(beta_text.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("shipped data files match the builtins") {
  // Guards against drift between data/ and the embedded sets.
  VectorSet ck = rayset_from_json(read_file(std::string(ONESHOT_SOURCE_DIR) + "/data/ck31.json"));
  VectorSet builtin_ck = builtin_vectors("ck31");
  CHECK(ck.labels == builtin_ck.labels);
  for (int i = 0; i < ck.size(); ++i) CHECK(ck.rays[i] == builtin_ck.rays[i]);

  VectorSet peres =
      rayset_from_json(read_file(std::string(ONESHOT_SOURCE_DIR) + "/data/peres24.json"));
  VectorSet builtin_peres = builtin_vectors("peres24");
  CHECK(peres.labels == builtin_peres.labels);
  for (int i = 0; i < peres.size(); ++i) CHECK(peres.rays[i] == builtin_peres.rays[i]);

  ClassicalChannel chan = channel_from_json(
      read_file(std::string(ONESHOT_SOURCE_DIR) + "/data/prevedel_channel.json"));
  ClassicalChannel builtin_chan = prevedel_channel();
  CHECK(chan.inputs() == builtin_chan.inputs());
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 6; ++y) CHECK(chan.prob(x, y) == builtin_chan.prob(x, y));
}
