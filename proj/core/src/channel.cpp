#include "oneshot/channel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace oneshot {

ClassicalChannel ClassicalChannel::make(std::vector<std::string> inputs,
                                        std::vector<std::string> outputs,
                                        std::vector<std::vector<Rational>> probs) {
  if (inputs.size() > 128 || outputs.size() > 128)
    throw InputError("channel exceeds 128 symbols on one side");
  ClassicalChannel n;
  n.inputs_ = std::move(inputs);
  n.outputs_ = std::move(outputs);
  n.probs_ = std::move(probs);
  if (n.probs_.size() != n.inputs_.size()) throw InputError("probability table shape mismatch");
  std::set<std::string> in_uniq(n.inputs_.begin(), n.inputs_.end());
  if (in_uniq.size() != n.inputs_.size()) throw InputError("duplicate input symbol");
  std::set<std::string> out_uniq(n.outputs_.begin(), n.outputs_.end());
  if (out_uniq.size() != n.outputs_.size()) throw InputError("duplicate output symbol");

  n.row_support_.assign(n.inputs_.size(), Bits{});
  n.col_support_.assign(n.outputs_.size(), Bits{});
  for (int x = 0; x < n.input_count(); ++x) {
    if (n.probs_[x].size() != n.outputs_.size()) throw InputError("probability table shape mismatch");
    Rational sum = 0;
    for (int y = 0; y < n.output_count(); ++y) {
      const Rational& p = n.probs_[x][y];
      if (p < 0) throw InputError("negative channel probability");
      if (p > 0) {
        n.row_support_[x].set(y);
        n.col_support_[y].set(x);
      }
      sum += p;
    }
    if (sum != 1) throw InputError("channel row for input '" + n.inputs_[x] + "' does not sum to 1");
    if (n.row_support_[x].none()) throw InputError("input with empty support: " + n.inputs_[x]);
  }
  return n;
}

int ClassicalChannel::input_index(const std::string& x) const {
  auto it = std::find(inputs_.begin(), inputs_.end(), x);
  if (it == inputs_.end()) throw InputError("unknown input: " + x);
  return static_cast<int>(it - inputs_.begin());
}

int ClassicalChannel::output_index(const std::string& y) const {
  auto it = std::find(outputs_.begin(), outputs_.end(), y);
  if (it == outputs_.end()) throw InputError("unknown output: " + y);
  return static_cast<int>(it - outputs_.begin());
}

bool ClassicalChannel::is_output_uniform() const {
  for (int x = 0; x < input_count(); ++x) {
    Rational expect = make_rational(1, row_support_[x].count());
    bool ok = true;
    row_support_[x].for_each([&](int y) {
      if (probs_[x][y] != expect) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

MessageEnsemble MessageEnsemble::uniform(int q) {
  MessageEnsemble m;
  m.p.assign(q, make_rational(1, q));
  return m;
}

void MessageEnsemble::validate() const {
  Rational sum = 0;
  for (const auto& q : p) {
    if (q < 0) throw InputError("negative message probability");
    sum += q;
  }
  if (sum != 1) throw InputError("message ensemble does not sum to 1");
}

Hypergraph channel_hypergraph(const ClassicalChannel& n) {
  std::vector<std::vector<VertexId>> edges;
  std::unordered_set<Bits> seen;
  for (int y = 0; y < n.output_count(); ++y) {
    Bits sup = n.output_support(y);
    if (sup.none()) continue;  // output never emitted
    if (!seen.insert(sup).second)
      throw InputError("outputs with identical supports; channel hypergraph undefined");
    std::vector<VertexId> edge;
    sup.for_each([&](int x) { edge.push_back(n.inputs()[x]); });
    edges.push_back(std::move(edge));
  }
  return Hypergraph::make(n.inputs(), std::move(edges));
}

SimpleGraph confusability_graph(const ClassicalChannel& n) {
  return orthogonality_graph(channel_hypergraph(n));
}

ClassicalChannel output_uniform_channel(const Hypergraph& h, const std::string& prefix) {
  std::vector<std::string> names;
  for (int e = 0; e < h.edge_count(); ++e) names.push_back(prefix + std::to_string(e));
  return output_uniform_channel(h, std::move(names));
}

ClassicalChannel output_uniform_channel(const Hypergraph& h, std::vector<std::string> output_names) {
  if (static_cast<int>(output_names.size()) != h.edge_count())
    throw InputError("output name count does not match hyperedge count");
  if (!h.isolated_vertices().empty())
    throw InputError("hypergraph has vertices outside every hyperedge");
  int nx = h.vertex_count();
  std::vector<std::vector<Rational>> probs(nx, std::vector<Rational>(h.edge_count(), Rational(0)));
  for (int x = 0; x < nx; ++x) {
    const auto& es = h.edges_containing(x);
    Rational v = make_rational(1, static_cast<long>(es.size()));
    for (int e : es) probs[x][e] = v;
  }
  return ClassicalChannel::make(h.vertices(), std::move(output_names), std::move(probs));
}

Rational eta_by_index(const ClassicalChannel& n, int x, int x2) {
  Rational sum = 0;
  Bits both = n.input_support(x) & n.input_support(x2);
  both.for_each([&](int y) { sum += n.prob(x, y); });
  return sum;
}

Rational eta(const ClassicalChannel& n, const std::string& x, const std::string& x2) {
  return eta_by_index(n, n.input_index(x), n.input_index(x2));
}

std::pair<Rational, Rational> eta_range(const ClassicalChannel& n, const Encoding& e) {
  bool first = true;
  Rational lo = 0, hi = 0;
  for (const auto& cls : e.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = 0; j < cls.size(); ++j) {
        if (i == j) continue;
        Rational v = eta(n, cls[i], cls[j]);
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
      }
    }
  }
  if (first) throw InputError("eta range needs a class with at least two inputs");
  return {lo, hi};
}

int zero_error_capacity(const ClassicalChannel& n, SearchBudget* budget) {
  return independence_number(confusability_graph(n), budget).size;
}

std::vector<EncodingViolation> validate_encoding(const ClassicalChannel& n, const Encoding& e) {
  std::vector<EncodingViolation> out;
  SimpleGraph g = confusability_graph(n);
  std::map<std::string, std::string> owner;
  for (int m = 0; m < e.message_count(); ++m) {
    const auto& cls = e.classes[m];
    if (cls.empty())
      out.push_back({EncodingViolation::Kind::EmptyClass, "message " + e.messages[m]});
    for (const auto& x : cls) {
      bool known = true;
      try {
        n.input_index(x);
      } catch (const InputError&) {
        known = false;
        out.push_back({EncodingViolation::Kind::UnknownInput,
                       "message " + e.messages[m] + " uses unknown input " + x});
      }
      if (!known) continue;
      auto [it, fresh] = owner.emplace(x, e.messages[m]);
      if (!fresh)
        out.push_back({EncodingViolation::Kind::Overlap,
                       "input " + x + " in messages " + it->second + " and " + e.messages[m]});
    }
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        int a, b;
        try {
          a = g.index_of(cls[i]);
          b = g.index_of(cls[j]);
        } catch (const InputError&) {
          continue;  // already reported as unknown
        }
        if (!g.adjacent(a, b))
          out.push_back({EncodingViolation::Kind::NotConfusable,
                         "message " + e.messages[m] + " pair (" + cls[i] + "," + cls[j] +
                             ") not confusable"});
      }
    }
  }
  return out;
}

ZeroErrorCodeResult admits_zero_error_code(const ClassicalChannel& n, const Encoding& e,
                                           SearchBudget* budget) {
  SearchBudget local;
  if (!budget) budget = &local;
  SimpleGraph g = confusability_graph(n);
  int q = e.message_count();
  std::vector<std::vector<int>> classes(q);
  for (int m = 0; m < q; ++m)
    for (const auto& x : e.classes[m]) classes[m].push_back(g.index_of(x));

  // One symbol per class, pairwise non-confusable; classes in order,
  // candidates ascending, so the first hit is the lex-smallest pick.
  std::vector<int> pick;
  Bits blocked;

  auto dfs = [&](auto&& self, int m) -> bool {
    budget->charge();
    if (m == q) return true;
    for (int v : classes[m]) {
      if (blocked.test(v)) continue;
      Bits saved = blocked;
      blocked |= g.neighbours(v);
      blocked.set(v);
      pick.push_back(v);
      if (self(self, m + 1)) return true;
      pick.pop_back();
      blocked = saved;
    }
    return false;
  };

  ZeroErrorCodeResult res;
  res.admits = q > 0 && dfs(dfs, 0);
  for (int v : pick) res.witness.push_back(g.vertex(v));
  return res;
}

std::pair<ClassicalChannel, Encoding> channel_from_scenario(const Hypergraph& scenario,
                                                            const std::vector<int>& dotted_edges) {
  std::set<int> dotted(dotted_edges.begin(), dotted_edges.end());
  for (int e : dotted)
    if (e < 0 || e >= scenario.edge_count()) throw InputError("dotted hyperedge index out of range");

  Bits covered_by_dotted;
  for (int e : dotted) {
    if (covered_by_dotted.intersects(scenario.edge(e)))
      throw InputError("dotted bases are not pairwise disjoint");
    covered_by_dotted |= scenario.edge(e);
  }

  std::vector<std::vector<VertexId>> channel_edges;
  std::vector<std::string> output_names;
  Bits covered_by_channel;
  for (int e = 0; e < scenario.edge_count(); ++e) {
    if (dotted.count(e)) continue;
    channel_edges.push_back(scenario.names(scenario.edge(e)));
    output_names.push_back("B" + std::to_string(e));
    covered_by_channel |= scenario.edge(e);
  }
  for (int i = 0; i < scenario.vertex_count(); ++i) {
    if (!covered_by_channel.test(i))
      throw InputError("coverage violation: vertex " + scenario.vertex(i) +
                       " lies only in dotted hyperedges");
  }

  Hypergraph h = Hypergraph::make(scenario.vertices(), std::move(channel_edges));
  ClassicalChannel n = output_uniform_channel(h, std::move(output_names));

  Encoding enc;
  for (int e : dotted) {
    enc.messages.push_back("m" + std::to_string(enc.messages.size()));
    enc.classes.push_back(scenario.names(scenario.edge(e)));
  }
  return {std::move(n), std::move(enc)};
}

}  // namespace oneshot
