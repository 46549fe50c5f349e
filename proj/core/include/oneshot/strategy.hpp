#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oneshot/channel.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/quantum.hpp"

namespace oneshot {

inline constexpr double kBoxTol = 1e-9;

// Finite bipartite conditional distribution p(a,b|s,t), double precision.
struct CorrelationBox {
  std::vector<std::string> alice_inputs, alice_outputs;
  std::vector<std::string> bob_inputs, bob_outputs;
  // p[s][t][a][b]
  std::vector<std::vector<std::vector<std::vector<double>>>> p;

  static CorrelationBox zeros(std::vector<std::string> s, std::vector<std::string> a,
                              std::vector<std::string> t, std::vector<std::string> b);
  double& at(int s, int t, int a, int b) { return p[s][t][a][b]; }
  double at(int s, int t, int a, int b) const { return p[s][t][a][b]; }
  int s_index(const std::string& v) const;
  int t_index(const std::string& v) const;
  int a_index(const std::string& v) const;
  int b_index(const std::string& v) const;
};

struct BoxViolation {
  std::string what;
  double magnitude = 0.0;
};

// Nonnegativity, normalization per setting pair, and no-signalling both ways.
std::vector<BoxViolation> validate_box(const CorrelationBox& box, double tol = kBoxTol);
double no_signalling_defect(const CorrelationBox& box);

// Classical pre/post-processing around a raw box:
//   encoder   (message m, alice outcome a) -> channel input
//   bob map   p(v|y): channel output -> distribution over box settings
//   guess     g(z,y): (bob outcome, channel output) -> message
struct Wiring {
  std::vector<std::vector<std::string>> encoder;      // [m][a] -> channel input id
  std::vector<std::vector<double>> bob_input_map;     // [y][v], rows sum to 1
  std::vector<std::vector<std::string>> postprocess;  // [y][z] -> message id
};

struct QuantumStrategy {
  DensityMatrix rho_ab;
  int dim_a = 0, dim_b = 0;
  std::vector<Povm> alice;  // one POVM per message, in message order
  std::vector<Povm> bob;    // one POVM per box setting v
};

std::vector<QuantumViolation> validate_strategy(const QuantumStrategy& s,
                                                double tol = kQuantumTol);

// p(a,z|m,v) by the Born rule on the shared state.
CorrelationBox box_from_strategy(const QuantumStrategy& s);

// Box over (m,y) -> (x,m'):
//   p(x,m'|m,y) = sum_{a: enc(m,a)=x} sum_v p(v|y) sum_{z: g(z,y)=m'} p(a,z|m,v)
CorrelationBox effective_box(const CorrelationBox& raw, const Wiring& w,
                             const ClassicalChannel& n,
                             const std::vector<std::string>& messages);

// S = sum_m p(m) sum_{x,y} N(y|x) p(x, m'=m | m, y); the box's alice settings
// are the messages and its outcome alphabets are (X, Msg).
double success_probability(const ClassicalChannel& n, const MessageEnsemble& p,
                           const CorrelationBox& effective);

// Per-message joint guess tables p(x,x'|m) with x over X and x' over X.
// Only columns x' in X_m enter the success probability.
struct CigTables {
  std::vector<std::vector<std::vector<double>>> joint;  // [m][x][x']
  double max_cig_violation = 0.0;  // max spread of p(x'|y,m,x) over y in Y_{x'}
};

// Extracts the guess tables induced by a Cubitt-type raw box
// (alice outcomes = X, bob settings = Y, bob outcomes = X).
CigTables cig_tables_from_box(const ClassicalChannel& n, const CorrelationBox& raw,
                              const std::vector<std::string>& messages);

// Evaluates S = sum_m p(m) sum_{x in X, x' in X_m} p(x,x'|m) eta(x,x').
// Throws InputError when a joint table is not normalized over X x X_m.
double success_probability_cig(const ClassicalChannel& n, const Encoding& e,
                               const MessageEnsemble& p, const CigTables& tables);

// Corr = sum_m p(m) sum_{x in X_m} p(x,x|m).
double corr(const ClassicalChannel& n, const Encoding& e, const MessageEnsemble& p,
            const CigTables& tables);

// The projective-measurement strategy on a scenario with validated rays and a
// dotted 6-basis partition: Alice measures dotted basis m, Bob measures the
// conjugated basis of the channel output, guesses the outcome's class.
std::pair<QuantumStrategy, Wiring> cubitt_strategy(const Scenario& peres);
std::pair<QuantumStrategy, Wiring> cubitt_strategy(const Scenario& peres, double visibility);

// Two-qubit strategy for the complete-confusability channel on two bits:
// Z/X on Alice's side, the rotated pair on Bob's, with the published wiring.
std::pair<QuantumStrategy, Wiring> prevedel_strategy();

ClassicalChannel prevedel_channel();
Encoding prevedel_encoding();

// Binary box with p(a,z|m,v) = 1/2 iff a xor z = m and v.
CorrelationBox pr_box();

// p(b2,z|m,v) winning-term sum of the two-bit protocol: 1/3 + (1/6) * sum.
double prevedel_decomposition(const CorrelationBox& raw);

}  // namespace oneshot
