#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oneshot/hypergraph.hpp"
#include "oneshot/ratmat.hpp"

namespace oneshot {

// Rays with exact rational coordinates. No zero vectors, no parallel pair.
struct VectorSet {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<RatVec> rays;  // parallel to labels; coordinates kept as given

  static VectorSet make(int dim, std::vector<std::string> labels, std::vector<RatVec> rays);
  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
};

// Content-reduced integer vector, first nonzero coordinate positive.
// Two rays are projectively equal iff their canonical forms coincide.
RatVec projective_canonical(const RatVec& v);
bool rays_parallel(const RatVec& a, const RatVec& b);

// Orthogonality structure of a vector set. Hyperedges of `hypergraph` are the
// complete bases (maximal orthogonal d-sets); `incomplete` holds maximal
// orthogonal (d-1)-sets (the ones completable by a single ray) and
// `small_maximal` any maximal orthogonal set smaller than d-1.
struct Scenario {
  bool has_vectors = false;
  VectorSet vectors;
  Hypergraph hypergraph;
  SimpleGraph orthogonality;
  std::vector<Bits> incomplete;
  std::vector<Bits> small_maximal;
  std::vector<int> dotted;  // hyperedge indices of a disjoint basis partition, when designated
};

Scenario orthogonality_scenario(const VectorSet& v);

// The unique ray orthogonal to d-1 mutually orthogonal independent rays,
// in projective canonical form. Throws InputError otherwise.
RatVec complete_basis(const std::vector<RatVec>& partial);

struct ClosureStage {
  int added_rays = 0;
  int rays_after = 0;
  int complete_after = 0;
  int incomplete_after = 0;
  std::vector<std::string> added_labels;
};

struct ClosureResult {
  Scenario scenario;  // closed scenario (no incomplete bases remain)
  std::vector<ClosureStage> stages;
};

// Repeatedly completes every maximal orthogonal (d-1)-set until none remain.
// Every completion is a genuinely new ray, so each stage strictly grows the
// set; stages beyond `max_stages` raise InputError.
ClosureResult completion_closure(const VectorSet& v, int max_stages = 16);

// A unit is either a complete basis (hyperedge index) or an incomplete basis.
struct BasisUnit {
  bool complete = true;
  int index = 0;  // hyperedge index or position in scenario.incomplete
};

struct DisjointBasesResult {
  int size = 0;
  std::uint64_t witness_count = 0;  // exact count of maximum families
  std::vector<std::vector<BasisUnit>> witnesses;
  bool witnesses_truncated = false;
};

// Maximum family of pairwise vertex-disjoint bases, counting complete and
// incomplete bases alike, the counting used in the Conway-Kochen analysis.
DisjointBasesResult max_disjoint_bases(const Scenario& s, std::size_t witness_cap = 10'000,
                                       SearchBudget* budget = nullptr);

// Same search restricted to complete bases.
DisjointBasesResult max_disjoint_complete_bases(const Scenario& s,
                                                std::size_t witness_cap = 10'000,
                                                SearchBudget* budget = nullptr);

struct TransversalTrace {
  std::uint64_t nodes = 0;
  std::optional<std::vector<int>> pick;  // one vertex index per class, pairwise non-orthogonal
};

// Searches for a pick of one vertex per class with no two picks adjacent.
// An exhausted search (no pick) is the refutation trace.
TransversalTrace independent_transversal(const SimpleGraph& orth, const std::vector<Bits>& classes,
                                         SearchBudget* budget = nullptr);

struct KsBasisSetResult {
  bool found = false;
  std::vector<int> family;  // complete-basis hyperedge indices, ascending
  TransversalTrace refutation;
};

// Largest family of >= q_min pairwise-disjoint complete bases admitting no
// independent transversal; lexicographic tie-break. A KS basis set is made of
// complete bases only; incomplete bases never enter this search.
KsBasisSetResult ks_basis_set_search(const Scenario& s, int q_min, SearchBudget* budget = nullptr);

struct AppendixFClaim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AppendixFReport {
  std::vector<AppendixFClaim> claims;
  // Stage counts: index 0 = input set, then one entry per closure stage.
  struct StageCount {
    int rays = 0, complete = 0, incomplete = 0;
  };
  std::vector<StageCount> stage_counts;
  int alpha_initial = 0;
  int alpha_closed = 0;
  int max_disjoint_initial = 0;
  int max_disjoint_closed = 0;
  int max_disjoint_complete_initial = 0;
  bool ks_basis_set_initial = false;  // any KS basis set of size >= 12
  bool ks_basis_set_closed = false;   // any KS basis set of size > alpha_closed

  bool all_pass() const;
  std::string to_text() const;
  std::string to_json_string() const;
};

// Reproduces every claim of the published Conway-Kochen analysis against a
// 3-dimensional ray set (defaults to the built-in 31-vector data).
AppendixFReport verify_conway_kochen();
AppendixFReport verify_conway_kochen(const VectorSet& input);

// "ck31" (31 rays, d=3, no dotted marking) or "peres24" (24 rays, d=4,
// 24 bases with a validated disjoint 6-basis dotted partition).
Scenario load_builtin(const std::string& name);

// The raw built-in ray sets (label -> integer coordinates, paper order).
VectorSet builtin_vectors(const std::string& name);

}  // namespace oneshot
