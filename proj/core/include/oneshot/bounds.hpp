#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oneshot/channel.hpp"
#include "oneshot/polytope.hpp"
#include "oneshot/ratmat.hpp"
#include "oneshot/rational.hpp"

namespace oneshot {

// Assignment over a scenario's vertices with every hyperedge summing to 1.
struct ProbabilisticModel {
  RatVec assignment;  // parallel to the hypergraph's vertex order
};

bool is_probabilistic_model(const Hypergraph& h, const RatVec& assignment);

// The set of probabilistic models on h as an explicit rational polytope.
RationalPolytope probabilistic_model_polytope(const Hypergraph& h);

// All vertices of {p >= 0, sum over each hyperedge = 1}, sorted
// lexicographically. Throws CapExceeded beyond `cap`.
std::vector<ProbabilisticModel> polytope_vertices(const Hypergraph& h,
                                                  std::size_t cap = 1'000'000);

enum class BoundMethod { Enumeration, VertexEnum, LinearizedLp };

std::string method_name(BoundMethod m);

struct ClassicalWitness {
  std::vector<std::string> encoder;  // message index -> channel input
  std::vector<std::string> decoder;  // output index -> message
};

struct ClassicalBound {
  Rational value;
  ClassicalWitness witness;
  BoundMethod method = BoundMethod::Enumeration;
};

// Exact best deterministic strategy: max over encoders of
// sum_y max_m p(m) N(y|e(m)), with the pointwise-optimal decoder.
// Witness is the lexicographically smallest maximizer.
ClassicalBound classical_max(const ClassicalChannel& n, const std::vector<std::string>& messages,
                             const MessageEnsemble& p, SearchBudget* budget = nullptr);

// Re-evaluates a witness; used by certificate checks.
Rational evaluate_classical_strategy(const ClassicalChannel& n, const MessageEnsemble& p,
                                     const ClassicalWitness& w,
                                     const std::vector<std::string>& messages);

struct BetaBound {
  Rational value;
  ProbabilisticModel model;            // maximizing extremal model
  std::vector<std::string> selection;  // argmax vertex per message class
  BoundMethod method = BoundMethod::VertexEnum;
};

// Weighted max-predictability over the scenario gamma: exact max over
// probabilistic models of sum_m p(m) max_{x in X_m} xi(x). Each class must be
// a hyperedge of gamma. Vertex enumeration and the linearized-LP route (one
// LP per selection of x*_m) must agree exactly.
BetaBound beta(const Hypergraph& gamma, const Encoding& e, const MessageEnsemble& p,
               BoundMethod method = BoundMethod::VertexEnum, std::size_t vertex_cap = 1'000'000,
               int threads = 1);

struct CigBound {
  Rational value;
  ProbabilisticModel model;           // on the channel hypergraph + class contexts
  std::vector<std::string> encoder;   // argmax input per message
  BoundMethod method = BoundMethod::VertexEnum;
};

// Noncontextual bound: exact max over vertices of the polytope of
// the channel hypergraph augmented with the encoding classes as hyperedges,
// and over deterministic encoders, of sum_m p(m) max_x sum_{x' in X_m}
// v(x') eta(x,x').
CigBound cig_classical_max(const ClassicalChannel& n, const Encoding& e,
                           const MessageEnsemble& p, std::size_t vertex_cap = 1'000'000);

struct NoncontextualVerdict {
  bool eta_uniform = false;    // eta_min == eta_max (threshold route applies)
  bool trivial_bound = false;  // beta >= 1: the inequality cannot be violated
  bool corr_violation = false; // Corr > beta
  double corr_margin = 0.0;
  bool s_above_eta_beta = false;  // S > eta_max + (1 - eta_max) beta
  double s_margin = 0.0;
  std::optional<bool> s_above_cig;
  double cig_margin = 0.0;
};

NoncontextualVerdict check_noncontextual_bounds(double corr_value, const Rational& beta_value,
                                                const Rational& eta_min, const Rational& eta_max,
                                                double s,
                                                const std::optional<Rational>& cig = std::nullopt);

}  // namespace oneshot
