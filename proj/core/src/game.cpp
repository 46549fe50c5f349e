#include "oneshot/game.hpp"

#include <algorithm>

namespace oneshot {

GameSpec build_game(const ClassicalChannel& n, const std::vector<std::string>& messages,
                    const MessageEnsemble& p) {
  p.validate();
  if (messages.size() != p.p.size()) throw InputError("ensemble size mismatch");
  Hypergraph h = channel_hypergraph(n);
  auto k = regularity(h);
  if (!k) throw InputError("game construction needs a k-regular channel");
  if (!n.is_output_uniform()) throw InputError("game construction needs an output-uniform channel");

  GameSpec g;
  g.alice_questions = messages;
  g.alice_answers = n.inputs();
  g.bob_questions = n.outputs();
  g.bob_answers = messages;
  g.message_weights = p.p;
  int nm = static_cast<int>(messages.size());
  int nx = n.input_count();
  int ny = n.output_count();
  g.predicate.assign(static_cast<std::size_t>(nm) * ny * nx * nm, 0);
  for (int m = 0; m < nm; ++m)
    for (int y = 0; y < ny; ++y)
      for (int x = 0; x < nx; ++x) {
        bool in_support = n.input_support(x).test(y);
        for (int mp = 0; mp < nm; ++mp)
          g.v(m, y, x, mp) = in_support ? (m == mp ? 1 : 0) : 1;
      }
  g.message_symmetric = true;
  return g;
}

double s_bell(const GameSpec& g, const CorrelationBox& box) {
  if (box.alice_inputs != g.alice_questions || box.alice_outputs != g.alice_answers ||
      box.bob_inputs != g.bob_questions || box.bob_outputs != g.bob_answers)
    throw InputError("box alphabets do not match the game");
  int nm = static_cast<int>(g.alice_questions.size());
  int nx = static_cast<int>(g.alice_answers.size());
  int ny = static_cast<int>(g.bob_questions.size());
  int nq = static_cast<int>(g.bob_answers.size());
  double total = 0.0;
  for (int m = 0; m < nm; ++m) {
    double pm = to_double(g.message_weights[m]) / ny;
    for (int y = 0; y < ny; ++y)
      for (int x = 0; x < nx; ++x)
        for (int mp = 0; mp < nq; ++mp)
          if (g.v(m, y, x, mp)) total += pm * box.at(m, y, x, mp);
  }
  return total;
}

LocalBound local_max(const GameSpec& g, SearchBudget* budget) {
  SearchBudget local;
  if (!budget) budget = &local;
  int nm = static_cast<int>(g.alice_questions.size());
  int nx = static_cast<int>(g.alice_answers.size());
  int ny = static_cast<int>(g.bob_questions.size());
  int nq = static_cast<int>(g.bob_answers.size());

  // Integer weights over a common denominator keep the scan exact and fast.
  mpz_class den = 1;
  for (const auto& w : g.message_weights) den = lcm(den, w.get_den());
  std::vector<long> weight(nm);
  bool uniform = true;
  for (int m = 0; m < nm; ++m) {
    mpz_class num = g.message_weights[m].get_num() * (den / g.message_weights[m].get_den());
    if (!num.fits_slong_p()) throw InputError("message weights too large");
    weight[m] = num.get_si();
    if (weight[m] != weight[0]) uniform = false;
  }

  bool sorted_only = uniform && g.message_symmetric;

  long best = -1;
  std::vector<int> best_alice;
  std::vector<int> best_bob;

  std::vector<int> tuple(nm, 0);
  std::vector<int> bob(ny, 0);
  while (true) {
    budget->charge();
    long total = 0;
    for (int y = 0; y < ny; ++y) {
      long y_best = -1;
      int arg = 0;
      for (int mp = 0; mp < nq; ++mp) {
        long s = 0;
        for (int m = 0; m < nm; ++m)
          if (g.v(m, y, tuple[m], mp)) s += weight[m];
        if (s > y_best) {
          y_best = s;
          arg = mp;
        }
      }
      bob[y] = arg;
      total += y_best;
    }
    if (total > best) {
      best = total;
      best_alice = tuple;
      best_bob = bob;
    }
    int pos = nm - 1;
    while (pos >= 0 && tuple[pos] == nx - 1) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    int reset_to = sorted_only ? tuple[pos] : 0;
    for (int i = pos + 1; i < nm; ++i) tuple[i] = reset_to;
  }

  LocalBound out;
  out.value = Rational(best) / (Rational(den) * Rational(ny));
  for (int m = 0; m < nm; ++m) out.alice_strategy.push_back(g.alice_answers[best_alice[m]]);
  for (int y = 0; y < ny; ++y) out.bob_strategy.push_back(g.bob_answers[best_bob[y]]);
  return out;
}

double affine_check(const ClassicalChannel& n, const MessageEnsemble& p,
                    const CorrelationBox& box) {
  Hypergraph h = channel_hypergraph(n);
  auto k = regularity(h);
  if (!k) throw InputError("affine identity needs a k-regular channel");
  if (!n.is_output_uniform()) throw InputError("affine identity needs an output-uniform channel");
  GameSpec g = build_game(n, box.alice_inputs, p);
  double lhs = s_bell(g, box);
  double frac = static_cast<double>(*k) / n.output_count();
  double rhs = 1.0 - frac + frac * success_probability(n, p, box);
  return std::abs(lhs - rhs);
}

double chsh_value(const CorrelationBox& box) {
  if (box.alice_inputs.size() != 2 || box.bob_inputs.size() != 2 ||
      box.alice_outputs.size() != 2 || box.bob_outputs.size() != 2)
    throw InputError("CHSH value needs a 2x2x2x2 box");
  double sum = 0.0;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if ((a ^ b) == (s & t)) sum += box.at(s, t, a, b);
  return sum / 4.0;
}

}  // namespace oneshot
