#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oneshot/bounds.hpp"
#include "oneshot/channel.hpp"
#include "oneshot/strategy.hpp"

namespace oneshot {

// Two-player game: Alice answers channel inputs to message questions, Bob
// answers messages to output questions. Question distribution is the product
// p(m) * 1/|Y|.
struct GameSpec {
  std::vector<std::string> alice_questions;  // messages
  std::vector<std::string> alice_answers;    // channel inputs X
  std::vector<std::string> bob_questions;    // channel outputs Y
  std::vector<std::string> bob_answers;      // messages
  std::vector<Rational> message_weights;     // p(m), sums to 1
  std::vector<std::uint8_t> predicate;       // V[m][y][x][m'] flattened
  bool message_symmetric = false;            // predicate invariant under message relabeling

  std::uint8_t v(int m, int y, int x, int mp) const {
    std::size_t ny = bob_questions.size(), nx = alice_answers.size(), nq = bob_answers.size();
    return predicate[((static_cast<std::size_t>(m) * ny + y) * nx + x) * nq + mp];
  }
  std::uint8_t& v(int m, int y, int x, int mp) {
    std::size_t ny = bob_questions.size(), nx = alice_answers.size(), nq = bob_answers.size();
    return predicate[((static_cast<std::size_t>(m) * ny + y) * nx + x) * nq + mp];
  }
};

// V = 1 when N(y|x) = 0, delta_{m,m'} when N(y|x) > 0. The channel must be
// k-regular and output-uniform; anything else is refused.
GameSpec build_game(const ClassicalChannel& n, const std::vector<std::string>& messages,
                    const MessageEnsemble& p);

// Winning probability of a box whose alphabets match the game.
double s_bell(const GameSpec& g, const CorrelationBox& box);

struct LocalBound {
  Rational value;
  std::vector<std::string> alice_strategy;  // answer per question
  std::vector<std::string> bob_strategy;    // answer per question
};

// Exact Bell-local bound: enumerate Alice's deterministic functions with the
// pointwise-optimal Bob response per question.
LocalBound local_max(const GameSpec& g, SearchBudget* budget = nullptr);

// |s_bell(build_game(n), box) - (1 - k/|Y| + (k/|Y|) S(n, box))|.
double affine_check(const ClassicalChannel& n, const MessageEnsemble& p,
                    const CorrelationBox& box);

// (1/4) sum p(a,b|s,t) [a xor b = s and t] for a binary box.
double chsh_value(const CorrelationBox& box);

}  // namespace oneshot
