#pragma once

#include <cstdint>
#include <random>

#include "oneshot/channel.hpp"
#include "oneshot/hypergraph.hpp"
#include "oneshot/strategy.hpp"

// Reference implementations and deterministic instance generators. These scan
// the full search space and stay independent of the branch-and-bound and
// reduction paths they are used to check.
namespace oneshot::bruteforce {

// Subset scan; n <= 24.
int independence_number_exhaustive(const SimpleGraph& g);

// All 2^n assignments; n <= 24.
bool ks_colourable_exhaustive(const Hypergraph& h);

// Largest |union of q input supports| over all ordered q-tuples of inputs.
// For an output-uniform channel with constant support size k and a uniform
// prior, the best classical success probability is this value / (q k).
int max_support_union_exhaustive(const ClassicalChannel& n, int q);

// Exhaustive classical bound over all |X|^q ordered encoder tuples with the
// pointwise-optimal decoder. Exact; intended for small instances.
Rational classical_max_exhaustive(const ClassicalChannel& n, const MessageEnsemble& p);

// Deterministic across platforms: raw mt19937_64 draws, modulo reduction.
struct Rng {
  std::mt19937_64 state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() { return state(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

SimpleGraph random_graph(Rng& rng, int n, double edge_prob);

// `edges` hyperedges of size 2..max_edge over n vertices; isolated vertices
// possible and legal.
Hypergraph random_hypergraph(Rng& rng, int n, int edges, int max_edge);

// Convex mixture of `components` local deterministic boxes over the given
// alphabets; no-signalling by construction.
CorrelationBox random_local_box(Rng& rng, const std::vector<std::string>& s,
                                const std::vector<std::string>& a,
                                const std::vector<std::string>& t,
                                const std::vector<std::string>& b, int components);

// Mixture of local deterministic CHSH boxes and the eight PR-type extremal
// boxes; spans the binary no-signalling polytope.
CorrelationBox random_ns_chsh_box(Rng& rng);

}  // namespace oneshot::bruteforce
