#include "oneshot/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace oneshot {

Hypergraph Hypergraph::make(std::vector<VertexId> vertices,
                            std::vector<std::vector<VertexId>> hyperedges) {
  if (vertices.size() > 128) throw InputError("hypergraph exceeds 128 vertices");
  Hypergraph h;
  h.vertices_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(h.vertices_.size()); ++i) {
    if (!h.index_.emplace(h.vertices_[i], i).second)
      throw InputError("duplicate vertex id: " + h.vertices_[i]);
  }
  h.vertex_edges_.resize(h.vertices_.size());
  std::unordered_set<Bits> seen;
  for (const auto& edge : hyperedges) {
    if (edge.empty()) throw InputError("empty hyperedge");
    Bits mask;
    for (const auto& v : edge) {
      auto it = h.index_.find(v);
      if (it == h.index_.end()) throw InputError("hyperedge references unknown vertex: " + v);
      mask.set(it->second);
    }
    if (!seen.insert(mask).second) throw InputError("duplicate hyperedge");
    int e = static_cast<int>(h.edges_.size());
    h.edges_.push_back(mask);
    mask.for_each([&](int i) { h.vertex_edges_[i].push_back(e); });
  }
  return h;
}

int Hypergraph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex: " + v);
  return it->second;
}

std::vector<VertexId> Hypergraph::names(Bits set) const {
  std::vector<VertexId> out;
  set.for_each([&](int i) { out.push_back(vertices_[i]); });
  return out;
}

Bits Hypergraph::mask_of(const std::vector<VertexId>& vs) const {
  Bits m;
  for (const auto& v : vs) m.set(index_of(v));
  return m;
}

std::vector<VertexId> Hypergraph::isolated_vertices() const {
  std::vector<VertexId> out;
  for (int i = 0; i < vertex_count(); ++i)
    if (vertex_edges_[i].empty()) out.push_back(vertices_[i]);
  return out;
}

SimpleGraph SimpleGraph::make(std::vector<VertexId> vertices,
                              std::vector<std::pair<VertexId, VertexId>> edges) {
  SimpleGraph g;
  if (vertices.size() > 128) throw InputError("graph exceeds 128 vertices");
  g.vertices_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g.vertices_.size()); ++i) {
    if (!g.index_.emplace(g.vertices_[i], i).second)
      throw InputError("duplicate vertex id: " + g.vertices_[i]);
  }
  g.adj_.assign(g.vertices_.size(), Bits{});
  for (const auto& [a, b] : edges) {
    int i = g.index_of(a), j = g.index_of(b);
    if (i == j) throw InputError("self-loop on vertex: " + a);
    g.adj_[i].set(j);
    g.adj_[j].set(i);
  }
  return g;
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<VertexId> vertices, std::vector<Bits> adj) {
  SimpleGraph g;
  g.vertices_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g.vertices_.size()); ++i) g.index_.emplace(g.vertices_[i], i);
  g.adj_ = std::move(adj);
  return g;
}

int SimpleGraph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex: " + v);
  return it->second;
}

std::size_t SimpleGraph::edge_total() const {
  std::size_t twice = 0;
  for (const auto& m : adj_) twice += static_cast<std::size_t>(m.count());
  return twice / 2;
}

bool SimpleGraph::is_complete() const {
  int n = vertex_count();
  return edge_total() == static_cast<std::size_t>(n) * (n - 1) / 2;
}

SimpleGraph SimpleGraph::complement() const {
  int n = vertex_count();
  Bits all = Bits::first_n(n);
  std::vector<Bits> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i] = all - adj_[i];
    adj[i].reset(i);
  }
  return from_adjacency(vertices_, std::move(adj));
}

SimpleGraph orthogonality_graph(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<Bits> adj(n);
  for (const Bits& e : h.edges()) {
    e.for_each([&](int i) { adj[i] |= e; });
  }
  for (int i = 0; i < n; ++i) adj[i].reset(i);
  return SimpleGraph::from_adjacency(h.vertices(), std::move(adj));
}

namespace {

// Max-clique search (Tomita-style greedy colouring bound). Independence
// numbers are computed as cliques of the complement.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bits>& adj, SearchBudget* budget)
      : adj_(adj), budget_(budget) {}

  // Size of a maximum clique within `allowed`.
  int maximum(Bits allowed) {
    best_ = 0;
    target_ = -1;
    expand(0, allowed);
    return best_;
  }

  // True iff a clique of size >= target exists within `allowed`.
  bool decide(Bits allowed, int target) {
    if (target <= 0) return true;
    best_ = target - 1;  // prune below target
    target_ = target;
    found_ = false;
    expand(0, allowed);
    return found_;
  }

 private:
  void expand(int depth, Bits cands) {
    if (budget_) budget_->charge();
    if (target_ > 0 && found_) return;
    if (cands.none()) {
      if (depth > best_) best_ = depth;
      if (target_ > 0 && depth >= target_) found_ = true;
      return;
    }
    // Greedy colouring of the candidate set; colour = bound on clique extension.
    std::vector<int> order, colour;
    Bits rest = cands;
    int c = 0;
    while (rest.any()) {
      ++c;
      Bits cls = rest;
      while (cls.any()) {
        int v = cls.lowest();
        cls = cls - adj_[v];
        cls.reset(v);
        rest.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    Bits earlier;
    for (int v : order) earlier.set(v);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (depth + colour[i] <= best_) return;
      int v = order[i];
      earlier.reset(v);  // candidates ordered before v in the colour order
      expand(depth + 1, cands & adj_[v] & earlier);
      if (target_ > 0 && found_) return;
      cands.reset(v);
    }
  }

  const std::vector<Bits>& adj_;
  SearchBudget* budget_;
  int best_ = 0;
  int target_ = -1;
  bool found_ = false;
};

}  // namespace

IndependenceResult independence_number(const SimpleGraph& g, SearchBudget* budget) {
  int n = g.vertex_count();
  SearchBudget local;
  if (!budget) budget = &local;
  SimpleGraph comp = g.complement();
  std::vector<Bits> cadj(n);
  for (int i = 0; i < n; ++i) cadj[i] = comp.neighbours(i);

  CliqueSearch search(cadj, budget);
  Bits all = Bits::first_n(n);
  int alpha = search.maximum(all);

  // Lexicographically smallest witness: grow greedily in vertex-id order,
  // keeping v iff an independent set of size alpha through the prefix exists.
  IndependenceResult res;
  res.size = alpha;
  Bits chosen;
  Bits cands = all;
  int have = 0;
  for (int v = 0; v < n && have < alpha; ++v) {
    if (!cands.test(v)) continue;
    Bits after = cands & cadj[v];
    if (search.decide(after, alpha - have - 1)) {
      chosen.set(v);
      ++have;
      cands = after;
    } else {
      cands.reset(v);
    }
  }
  res.witness = [&] {
    std::vector<VertexId> w;
    chosen.for_each([&](int i) { w.push_back(g.vertex(i)); });
    return w;
  }();
  return res;
}

MaximumSetFamily all_maximum_independent_sets(const SimpleGraph& g, std::size_t store_cap,
                                              SearchBudget* budget) {
  SearchBudget local;
  if (!budget) budget = &local;
  int n = g.vertex_count();
  MaximumSetFamily out;
  out.size = independence_number(g, budget).size;
  if (out.size == 0) {
    out.count = 1;  // the empty set
    out.sets.push_back(Bits{});
    return out;
  }

  // Greedy clique-cover bound on how many independent vertices `cands` can add.
  auto bound = [&](Bits cands) {
    int b = 0;
    while (cands.any()) {
      ++b;
      Bits cls = cands;
      while (cls.any()) {
        int v = cls.lowest();
        cls &= g.neighbours(v);  // extend the clique; all must be pairwise adjacent in g
        cands.reset(v);
      }
    }
    return b;
  };

  auto rec = [&](auto&& self, Bits chosen, int have, Bits cands) -> void {
    budget->charge();
    if (have == out.size) {
      ++out.count;
      if (out.sets.size() < store_cap)
        out.sets.push_back(chosen);
      else
        out.truncated = true;
      return;
    }
    if (cands.none()) return;
    if (have + bound(cands) < out.size) return;
    int v = cands.lowest();
    Bits rest = cands;
    rest.reset(v);
    // Include first: lexicographically smaller sets are found first.
    Bits c2 = rest - g.neighbours(v);
    Bits ch = chosen;
    ch.set(v);
    self(self, ch, have + 1, c2);
    self(self, chosen, have, rest);
  };
  rec(rec, Bits{}, 0, Bits::first_n(n));
  return out;
}

namespace {

// Sum-to-exactly-one propagation for {0,1} hyperedge colourings.
class ColouringSearch {
 public:
  ColouringSearch(const Hypergraph& h, SearchBudget* budget) : h_(h), budget_(budget) {
    int n = h.vertex_count();
    val_.assign(n, -1);
    ones_.assign(h.edge_count(), 0);
    open_.assign(h.edge_count(), 0);
    for (int e = 0; e < h.edge_count(); ++e) open_[e] = h.edge(e).count();
  }

  bool run() { return branch(0); }

  std::vector<bool> assignment() const {
    std::vector<bool> out(val_.size());
    for (std::size_t i = 0; i < val_.size(); ++i) out[i] = val_[i] == 1;
    return out;
  }

 private:
  struct TrailEntry {
    int vertex;
  };

  bool assign(int v, int value, std::vector<int>& trail) {
    val_[v] = value;
    trail.push_back(v);
    bool ok = true;  // apply every counter update so undo stays exact
    for (int e : h_.edges_containing(v)) {
      open_[e]--;
      if (value == 1) ones_[e]++;
      if (ones_[e] > 1) ok = false;
      if (open_[e] == 0 && ones_[e] == 0) ok = false;
    }
    return ok;
  }

  bool propagate(std::vector<int>& trail) {
    // Fixed-point pass: forced zeros in satisfied edges, forced one in
    // edges with a single open slot and no one yet.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < h_.edge_count(); ++e) {
        if (ones_[e] == 1 && open_[e] > 0) {
          Bits mask = h_.edge(e);
          bool bad = false;
          mask.for_each([&](int u) {
            if (bad || val_[u] != -1) return;
            if (!assign(u, 0, trail)) bad = true;
          });
          if (bad) return false;
          changed = true;
        } else if (ones_[e] == 0 && open_[e] == 1) {
          int forced = -1;
          h_.edge(e).for_each([&](int u) {
            if (val_[u] == -1) forced = u;
          });
          if (forced < 0 || !assign(forced, 1, trail)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int v = trail.back();
      trail.pop_back();
      for (int e : h_.edges_containing(v)) {
        open_[e]++;
        if (val_[v] == 1) ones_[e]--;
      }
      val_[v] = -1;
    }
  }

  bool branch(int from) {
    if (budget_) budget_->charge();
    int v = -1;
    for (int i = from; i < static_cast<int>(val_.size()); ++i) {
      if (val_[i] == -1) {
        v = i;
        break;
      }
    }
    if (v == -1) return check_complete();
    // Try 1 first so the first solution has the lex-smallest set of 1-vertices.
    for (int value : {1, 0}) {
      std::vector<int> trail;
      if (assign(v, value, trail) && propagate(trail) && branch(v + 1)) return true;
      undo(trail, 0);
    }
    return false;
  }

  bool check_complete() const {
    for (int e = 0; e < h_.edge_count(); ++e)
      if (ones_[e] != 1) return false;
    return true;
  }

  const Hypergraph& h_;
  SearchBudget* budget_;
  std::vector<int> val_;
  std::vector<int> ones_, open_;
};

}  // namespace

ColourabilityResult ks_colourable(const Hypergraph& h, SearchBudget* budget) {
  SearchBudget local;
  if (!budget) budget = &local;
  ColouringSearch search(h, budget);
  ColourabilityResult res;
  res.colourable = search.run();
  if (res.colourable) res.witness = Colouring{search.assignment()};
  return res;
}

std::optional<int> regularity(const Hypergraph& h) {
  if (h.vertex_count() == 0) return std::nullopt;
  int k = static_cast<int>(h.edges_containing(0).size());
  for (int i = 1; i < h.vertex_count(); ++i)
    if (static_cast<int>(h.edges_containing(i).size()) != k) return std::nullopt;
  return k;
}

}  // namespace oneshot
