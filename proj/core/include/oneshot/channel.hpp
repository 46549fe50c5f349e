#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneshot/hypergraph.hpp"
#include "oneshot/rational.hpp"

namespace oneshot {

// Discrete memoryless channel with exact rational probabilities.
// N(y|x) >= 0 and every input row sums to exactly 1.
class ClassicalChannel {
 public:
  static ClassicalChannel make(std::vector<std::string> inputs,
                               std::vector<std::string> outputs,
                               std::vector<std::vector<Rational>> probs);  // probs[x][y]

  int input_count() const { return static_cast<int>(inputs_.size()); }
  int output_count() const { return static_cast<int>(outputs_.size()); }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  const Rational& prob(int x, int y) const { return probs_[x][y]; }
  int input_index(const std::string& x) const;
  int output_index(const std::string& y) const;

  // Y_x over output indices / X_y over input indices.
  Bits input_support(int x) const { return row_support_[x]; }
  Bits output_support(int y) const { return col_support_[y]; }

  bool is_output_uniform() const;

 private:
  std::vector<std::string> inputs_, outputs_;
  std::vector<std::vector<Rational>> probs_;
  std::vector<Bits> row_support_, col_support_;
};

// Disjoint cliques of channel inputs, one per message.
struct Encoding {
  std::vector<std::string> messages;
  std::vector<std::vector<std::string>> classes;  // parallel to messages

  int message_count() const { return static_cast<int>(messages.size()); }
};

struct MessageEnsemble {
  std::vector<Rational> p;  // parallel to the encoding's messages, sums to 1

  static MessageEnsemble uniform(int q);
  void validate() const;  // throws InputError
};

struct EncodingViolation {
  enum class Kind { Overlap, NotConfusable, EmptyClass, UnknownInput };
  Kind kind;
  std::string detail;
};

// Vertices = inputs; one hyperedge per output with nonempty support.
// Outputs with identical supports are rejected (the hypergraph would
// otherwise lose the output <-> hyperedge correspondence).
Hypergraph channel_hypergraph(const ClassicalChannel& n);

SimpleGraph confusability_graph(const ClassicalChannel& n);

// Channel whose hypergraph is exactly h and whose probabilities are
// 1/|Y_x| on supports. Output ids are prefix + edge index.
ClassicalChannel output_uniform_channel(const Hypergraph& h, const std::string& prefix = "y");
ClassicalChannel output_uniform_channel(const Hypergraph& h, std::vector<std::string> output_names);

// Probability that input x yields an output that could also arise from x2.
Rational eta(const ClassicalChannel& n, const std::string& x, const std::string& x2);
Rational eta_by_index(const ClassicalChannel& n, int x, int x2);

// Min/max confusability over distinct pairs within the encoding classes.
std::pair<Rational, Rational> eta_range(const ClassicalChannel& n, const Encoding& e);

int zero_error_capacity(const ClassicalChannel& n, SearchBudget* budget = nullptr);

std::vector<EncodingViolation> validate_encoding(const ClassicalChannel& n, const Encoding& e);

struct ZeroErrorCodeResult {
  bool admits = false;
  std::vector<std::string> witness;  // one mutually non-confusable input per message
};

// True iff one symbol per message class can be picked with all picks
// pairwise non-confusable.
ZeroErrorCodeResult admits_zero_error_code(const ClassicalChannel& n, const Encoding& e,
                                           SearchBudget* budget = nullptr);

// Builds the output-uniform channel over a scenario's non-dotted hyperedges;
// the dotted hyperedges become the encoding classes. Throws InputError when
// dotted bases overlap or some vertex lies only in dotted hyperedges.
std::pair<ClassicalChannel, Encoding> channel_from_scenario(const Hypergraph& scenario,
                                                            const std::vector<int>& dotted_edges);

}  // namespace oneshot
