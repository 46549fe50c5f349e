#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneshot/bitset128.hpp"
#include "oneshot/errors.hpp"

namespace oneshot {

using VertexId = std::string;

// Vertex ids are opaque strings mapped to dense indices in insertion order.
// Hyperedges are stored as bitmasks over those indices (instances <= 128 vertices).
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws InputError on: empty hyperedge, hyperedge referencing an unknown
  // vertex, duplicate hyperedge, duplicate vertex id, > 128 vertices.
  // A vertex outside every hyperedge is legal but reported by isolated_vertices().
  static Hypergraph make(std::vector<VertexId> vertices,
                         std::vector<std::vector<VertexId>> hyperedges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Bits>& edges() const { return edges_; }
  Bits edge(int e) const { return edges_[e]; }

  int index_of(const VertexId& v) const;  // throws InputError on unknown id
  const VertexId& vertex(int i) const { return vertices_[i]; }
  std::vector<VertexId> names(Bits set) const;
  Bits mask_of(const std::vector<VertexId>& vs) const;

  std::vector<VertexId> isolated_vertices() const;
  // Edge indices containing vertex i.
  const std::vector<int>& edges_containing(int i) const { return vertex_edges_[i]; }

 private:
  std::vector<VertexId> vertices_;
  std::map<VertexId, int> index_;
  std::vector<Bits> edges_;
  std::vector<std::vector<int>> vertex_edges_;
};

// Undirected simple graph over the same kind of vertex ids. No self-loops.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  static SimpleGraph make(std::vector<VertexId> vertices,
                          std::vector<std::pair<VertexId, VertexId>> edges);
  // Internal constructor from adjacency masks (diagonal must be clear).
  static SimpleGraph from_adjacency(std::vector<VertexId> vertices, std::vector<Bits> adj);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  Bits neighbours(int i) const { return adj_[i]; }
  bool adjacent(int i, int j) const { return adj_[i].test(j); }
  int index_of(const VertexId& v) const;
  const VertexId& vertex(int i) const { return vertices_[i]; }
  std::size_t edge_total() const;
  bool is_complete() const;
  SimpleGraph complement() const;

 private:
  std::vector<VertexId> vertices_;
  std::map<VertexId, int> index_;
  std::vector<Bits> adj_;
};

struct Colouring {
  // Parallel to the hypergraph's vertex order; true = value 1.
  std::vector<bool> assignment;
};

struct IndependenceResult {
  int size = 0;
  std::vector<VertexId> witness;  // lexicographically smallest maximum independent set
};

struct ColourabilityResult {
  bool colourable = false;
  std::optional<Colouring> witness;  // lex-smallest by the set of 1-valued vertices
};

// Two vertices adjacent iff they co-occur in at least one hyperedge.
SimpleGraph orthogonality_graph(const Hypergraph& h);

// Exact maximum independent set (branch and bound with greedy colouring bound).
IndependenceResult independence_number(const SimpleGraph& g, SearchBudget* budget = nullptr);

struct MaximumSetFamily {
  int size = 0;
  std::uint64_t count = 0;  // exact even when stored witnesses are capped
  std::vector<Bits> sets;   // lexicographic order
  bool truncated = false;
};

// Every maximum independent set, in lexicographic order of the vertex sets.
MaximumSetFamily all_maximum_independent_sets(const SimpleGraph& g, std::size_t store_cap,
                                              SearchBudget* budget = nullptr);

// True iff some {0,1}-assignment gives every hyperedge sum exactly 1.
ColourabilityResult ks_colourable(const Hypergraph& h, SearchBudget* budget = nullptr);

// k when every vertex lies in exactly k hyperedges, nullopt otherwise.
std::optional<int> regularity(const Hypergraph& h);

}  // namespace oneshot
