#include "oneshot/bruteforce.hpp"

#include <bit>
#include <set>
#include <vector>

namespace oneshot::bruteforce {

int independence_number_exhaustive(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n > 24) throw InputError("exhaustive independence scan limited to 24 vertices");
  std::vector<std::uint32_t> adj(n);
  for (int i = 0; i < n; ++i) {
    std::uint32_t m = 0;
    g.neighbours(i).for_each([&](int j) { m |= 1u << j; });
    adj[i] = m;
  }
  std::size_t total = std::size_t{1} << n;
  std::vector<bool> independent(total, false);
  independent[0] = true;
  int best = 0;
  for (std::size_t s = 1; s < total; ++s) {
    int v = std::countr_zero(s);
    std::size_t rest = s & (s - 1);
    if (independent[rest] && (adj[v] & s) == 0) {
      independent[s] = true;
      int size = std::popcount(s);
      if (size > best) best = size;
    }
  }
  return best;
}

bool ks_colourable_exhaustive(const Hypergraph& h) {
  int n = h.vertex_count();
  if (n > 24) throw InputError("exhaustive colouring scan limited to 24 vertices");
  std::vector<std::uint32_t> edges;
  for (const Bits& e : h.edges()) {
    std::uint32_t m = 0;
    e.for_each([&](int i) { m |= 1u << i; });
    edges.push_back(m);
  }
  std::size_t total = std::size_t{1} << n;
  for (std::size_t a = 0; a < total; ++a) {
    bool ok = true;
    for (std::uint32_t e : edges) {
      if (std::popcount(e & static_cast<std::uint32_t>(a)) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

int max_support_union_exhaustive(const ClassicalChannel& n, int q) {
  int nx = n.input_count();
  std::vector<Bits> sup(nx);
  for (int x = 0; x < nx; ++x) sup[x] = n.input_support(x);
  std::vector<int> tuple(q, 0);
  int best = 0;
  while (true) {
    Bits u;
    for (int x : tuple) u |= sup[x];
    int c = u.count();
    if (c > best) best = c;
    int pos = q - 1;
    while (pos >= 0 && tuple[pos] == nx - 1) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int i = pos + 1; i < q; ++i) tuple[i] = 0;
  }
  return best;
}

Rational classical_max_exhaustive(const ClassicalChannel& n, const MessageEnsemble& p) {
  int q = static_cast<int>(p.p.size());
  int nx = n.input_count();
  int ny = n.output_count();
  std::vector<int> tuple(q, 0);
  Rational best(-1);
  while (true) {
    Rational s = 0;
    for (int y = 0; y < ny; ++y) {
      Rational m_best = 0;
      for (int m = 0; m < q; ++m) {
        Rational v = p.p[m] * n.prob(tuple[m], y);
        if (v > m_best) m_best = v;
      }
      s += m_best;
    }
    if (s > best) best = s;
    int pos = q - 1;
    while (pos >= 0 && tuple[pos] == nx - 1) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int i = pos + 1; i < q; ++i) tuple[i] = 0;
  }
  return best;
}

SimpleGraph random_graph(Rng& rng, int n, double edge_prob) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < edge_prob) edges.emplace_back(names[i], names[j]);
  return SimpleGraph::make(std::move(names), std::move(edges));
}

Hypergraph random_hypergraph(Rng& rng, int n, int edges, int max_edge) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::vector<VertexId>> hyperedges;
  std::set<std::vector<int>> seen;
  int attempts = 0;
  while (static_cast<int>(hyperedges.size()) < edges && attempts < edges * 50) {
    ++attempts;
    int size = 2 + rng.below(std::max(1, max_edge - 1));
    size = std::min(size, n);
    std::set<int> pick;
    while (static_cast<int>(pick.size()) < size) pick.insert(rng.below(n));
    std::vector<int> key(pick.begin(), pick.end());
    if (!seen.insert(key).second) continue;
    std::vector<VertexId> edge;
    for (int i : key) edge.push_back(names[i]);
    hyperedges.push_back(std::move(edge));
  }
  return Hypergraph::make(std::move(names), std::move(hyperedges));
}

CorrelationBox random_local_box(Rng& rng, const std::vector<std::string>& s,
                                const std::vector<std::string>& a,
                                const std::vector<std::string>& t,
                                const std::vector<std::string>& b, int components) {
  CorrelationBox box = CorrelationBox::zeros(s, a, t, b);
  int ns = static_cast<int>(s.size()), na = static_cast<int>(a.size());
  int nt = static_cast<int>(t.size()), nb = static_cast<int>(b.size());
  std::vector<double> w(components);
  double total = 0.0;
  for (double& x : w) {
    x = rng.unit() + 1e-3;
    total += x;
  }
  for (double& x : w) x /= total;
  for (int c = 0; c < components; ++c) {
    std::vector<int> alice(ns), bob(nt);
    for (int i = 0; i < ns; ++i) alice[i] = rng.below(na);
    for (int i = 0; i < nt; ++i) bob[i] = rng.below(nb);
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < nt; ++j) box.at(i, j, alice[i], bob[j]) += w[c];
  }
  return box;
}

CorrelationBox random_ns_chsh_box(Rng& rng) {
  std::vector<std::string> bin = {"0", "1"};
  CorrelationBox box = CorrelationBox::zeros(bin, bin, bin, bin);
  int locals = 8 + rng.below(8);
  int prs = 1 + rng.below(4);
  std::vector<double> w(locals + prs);
  double total = 0.0;
  for (double& x : w) {
    x = rng.unit() + 1e-3;
    total += x;
  }
  for (double& x : w) x /= total;
  int c = 0;
  for (; c < locals; ++c) {
    int a0 = rng.below(2), a1 = rng.below(2), b0 = rng.below(2), b1 = rng.below(2);
    int av[2] = {a0, a1}, bv[2] = {b0, b1};
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) box.at(s, t, av[s], bv[t]) += w[c];
  }
  for (; c < locals + prs; ++c) {
    // PR family: a xor b = (s and t) xor (alpha s xor beta t xor gamma).
    int alpha = rng.below(2), beta = rng.below(2), gamma = rng.below(2);
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        int target = (s & t) ^ (alpha & s) ^ (beta & t) ^ gamma;
        for (int a = 0; a < 2; ++a) box.at(s, t, a, a ^ target) += w[c] / 2.0;
      }
  }
  return box;
}

}  // namespace oneshot::bruteforce
