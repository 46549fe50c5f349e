#include "oneshot/bounds.hpp"

#include <algorithm>
#include <thread>

#include "oneshot/polytope.hpp"
#include "oneshot/simplex.hpp"

namespace oneshot {

std::string method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::Enumeration: return "enumeration";
    case BoundMethod::VertexEnum: return "vertex-enum";
    case BoundMethod::LinearizedLp: return "linearized-LP";
  }
  return "?";
}

namespace {

RatMat incidence_matrix(const Hypergraph& h) {
  RatMat a(h.edge_count(), RatVec(h.vertex_count(), Rational(0)));
  for (int e = 0; e < h.edge_count(); ++e)
    h.edge(e).for_each([&](int v) { a[e][v] = 1; });
  return a;
}

}  // namespace

bool is_probabilistic_model(const Hypergraph& h, const RatVec& assignment) {
  if (static_cast<int>(assignment.size()) != h.vertex_count()) return false;
  for (const auto& q : assignment)
    if (q < 0 || q > 1) return false;
  for (const Bits& e : h.edges()) {
    Rational sum = 0;
    e.for_each([&](int i) { sum += assignment[i]; });
    if (sum != 1) return false;
  }
  return true;
}

RationalPolytope probabilistic_model_polytope(const Hypergraph& h) {
  if (!h.isolated_vertices().empty())
    throw InputError("scenario has vertices outside every hyperedge");
  RationalPolytope p;
  p.var_count = h.vertex_count();
  p.equalities = incidence_matrix(h);
  p.rhs.assign(h.edge_count(), Rational(1));
  return p;
}

std::vector<ProbabilisticModel> polytope_vertices(const Hypergraph& h, std::size_t cap) {
  RationalPolytope poly = probabilistic_model_polytope(h);
  std::vector<RatVec> verts = poly.vertices(cap);
  std::vector<ProbabilisticModel> out;
  out.reserve(verts.size());
  for (auto& v : verts) out.push_back({std::move(v)});
  return out;
}

namespace {

// Enumerates encoder tuples; uniform priors allow the sorted-tuple reduction
// (the objective is invariant under permuting messages).
template <typename Eval>
void enumerate_encoders(int q, int nx, bool sorted_only, SearchBudget* budget, Eval&& eval) {
  std::vector<int> tuple(q, 0);
  while (true) {
    budget->charge();
    eval(tuple);
    int pos = q - 1;
    while (pos >= 0 && tuple[pos] == nx - 1) --pos;
    if (pos < 0) return;
    ++tuple[pos];
    int reset_to = sorted_only ? tuple[pos] : 0;
    for (int i = pos + 1; i < q; ++i) tuple[i] = reset_to;
  }
}

}  // namespace

// Deterministic strategies suffice: the success probability is affine in
// each row p(x|m) of a stochastic encoder and in each row p(m'|y) of a
// stochastic decoder, so some extreme point — a deterministic pair — attains
// the maximum. (Exercised by a randomized test against stochastic strategies.)
ClassicalBound classical_max(const ClassicalChannel& n, const std::vector<std::string>& messages,
                             const MessageEnsemble& p, SearchBudget* budget) {
  SearchBudget local;
  if (!budget) budget = &local;
  p.validate();
  int q = static_cast<int>(messages.size());
  if (static_cast<int>(p.p.size()) != q) throw InputError("ensemble size mismatch");
  if (q == 0) throw InputError("no messages");
  int nx = n.input_count();
  int ny = n.output_count();

  bool uniform = std::all_of(p.p.begin(), p.p.end(),
                             [&](const Rational& r) { return r == p.p[0]; });

  // Fast path: uniform prior, output-uniform channel with constant support
  // size k. Then sum_y max_m p(m) N(y|e(m)) = |union of supports| / (q k).
  bool coverage = uniform && n.is_output_uniform();
  int k = n.input_support(0).count();
  for (int x = 1; coverage && x < nx; ++x)
    if (n.input_support(x).count() != k) coverage = false;

  Rational best_value(-1);
  std::vector<int> best_tuple;

  if (coverage) {
    int best_cover = -1;
    enumerate_encoders(q, nx, true, budget, [&](const std::vector<int>& t) {
      Bits u;
      for (int x : t) u |= n.input_support(x);
      int c = u.count();
      if (c > best_cover) {
        best_cover = c;
        best_tuple = t;
      }
    });
    best_value = Rational(best_cover) / Rational(q * k);
  } else {
    try {
      enumerate_encoders(q, nx, uniform, budget, [&](const std::vector<int>& t) {
        Rational s = 0;
        for (int y = 0; y < ny; ++y) {
          Rational m_best = 0;
          for (int m = 0; m < q; ++m) {
            Rational v = p.p[m] * n.prob(t[m], y);
            if (v > m_best) m_best = v;
          }
          s += m_best;
        }
        if (s > best_value) {
          best_value = s;
          best_tuple = t;
        }
      });
    } catch (BudgetExceeded& e) {
      e.partial_lower_bound = best_value;
      throw;
    }
  }

  ClassicalBound out;
  out.value = best_value;
  out.method = BoundMethod::Enumeration;
  for (int m = 0; m < q; ++m) out.witness.encoder.push_back(n.inputs()[best_tuple[m]]);
  for (int y = 0; y < ny; ++y) {
    int arg = 0;
    Rational best = p.p[0] * n.prob(best_tuple[0], y);
    for (int m = 1; m < q; ++m) {
      Rational v = p.p[m] * n.prob(best_tuple[m], y);
      if (v > best) {
        best = v;
        arg = m;
      }
    }
    out.witness.decoder.push_back(messages[arg]);
  }
  return out;
}

Rational evaluate_classical_strategy(const ClassicalChannel& n, const MessageEnsemble& p,
                                     const ClassicalWitness& w,
                                     const std::vector<std::string>& messages) {
  Rational s = 0;
  for (std::size_t m = 0; m < messages.size(); ++m) {
    int x = n.input_index(w.encoder[m]);
    for (int y = 0; y < n.output_count(); ++y)
      if (w.decoder[y] == messages[m]) s += p.p[m] * n.prob(x, y);
  }
  return s;
}

namespace {

std::vector<std::vector<int>> class_indices(const Hypergraph& gamma, const Encoding& e) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < e.message_count(); ++m) {
    Bits mask = gamma.mask_of(e.classes[m]);
    bool is_edge = false;
    for (const Bits& edge : gamma.edges())
      if (edge == mask) is_edge = true;
    if (!is_edge)
      throw InputError("encoding class for message " + e.messages[m] +
                       " is not a hyperedge of the scenario");
    std::vector<int> idx;
    mask.for_each([&](int i) { idx.push_back(i); });
    out.push_back(std::move(idx));
  }
  return out;
}

BetaBound beta_via_vertices(const Hypergraph& gamma, const Encoding& e, const MessageEnsemble& p,
                            std::size_t cap) {
  auto classes = class_indices(gamma, e);
  std::vector<ProbabilisticModel> verts = polytope_vertices(gamma, cap);
  if (verts.empty()) throw InputError("scenario admits no probabilistic model");
  BetaBound out;
  out.method = BoundMethod::VertexEnum;
  out.value = -1;
  for (const auto& vert : verts) {
    Rational v = 0;
    std::vector<int> sel;
    for (int m = 0; m < e.message_count(); ++m) {
      int arg = classes[m][0];
      Rational best = vert.assignment[arg];
      for (int x : classes[m]) {
        if (vert.assignment[x] > best) {
          best = vert.assignment[x];
          arg = x;
        }
      }
      sel.push_back(arg);
      v += p.p[m] * best;
    }
    if (v > out.value) {
      out.value = v;
      out.model = vert;
      out.selection.clear();
      for (int x : sel) out.selection.push_back(gamma.vertex(x));
    }
  }
  return out;
}

BetaBound beta_via_lp(const Hypergraph& gamma, const Encoding& e, const MessageEnsemble& p,
                      int threads) {
  auto classes = class_indices(gamma, e);
  int q = e.message_count();
  std::size_t total = 1;
  for (const auto& c : classes) {
    total *= c.size();
    if (total > 5'000'000) throw BudgetExceeded("too many LP selections");
  }

  RatMat a = incidence_matrix(gamma);
  RatVec b(gamma.edge_count(), Rational(1));

  auto selection_of = [&](std::size_t idx) {
    std::vector<int> sel(q);
    for (int m = q - 1; m >= 0; --m) {
      sel[m] = classes[m][idx % classes[m].size()];
      idx /= classes[m].size();
    }
    return sel;
  };

  struct SelResult {
    Rational value;
    RatVec x;
  };
  std::vector<SelResult> results(total);

  int nthreads = std::max(1, threads);
  auto worker = [&](int tid) {
    ExactLp lp(a, b);  // phase 1 runs once per thread
    for (std::size_t idx = tid; idx < total; idx += static_cast<std::size_t>(nthreads)) {
      std::vector<int> sel = selection_of(idx);
      RatVec c(gamma.vertex_count(), Rational(0));
      for (int m = 0; m < q; ++m) c[sel[m]] += p.p[m];
      auto r = lp.maximize(c);
      if (r.status == ExactLp::Status::Infeasible)
        throw InputError("scenario admits no probabilistic model");
      if (r.status != ExactLp::Status::Optimal)
        throw InputError("beta LP did not solve to optimality");
      results[idx] = {r.value, std::move(r.x)};
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        try {
          worker(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  BetaBound out;
  out.method = BoundMethod::LinearizedLp;
  out.value = -1;
  std::size_t best_idx = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (results[idx].value > out.value) {
      out.value = results[idx].value;
      best_idx = idx;
    }
  }
  out.model.assignment = results[best_idx].x;
  for (int x : selection_of(best_idx)) out.selection.push_back(gamma.vertex(x));
  return out;
}

}  // namespace

BetaBound beta(const Hypergraph& gamma, const Encoding& e, const MessageEnsemble& p,
               BoundMethod method, std::size_t vertex_cap, int threads) {
  p.validate();
  if (method == BoundMethod::VertexEnum) return beta_via_vertices(gamma, e, p, vertex_cap);
  if (method == BoundMethod::LinearizedLp) return beta_via_lp(gamma, e, p, threads);
  throw InputError("beta supports vertex-enum or linearized-LP");
}

CigBound cig_classical_max(const ClassicalChannel& n, const Encoding& e,
                           const MessageEnsemble& p, std::size_t vertex_cap) {
  p.validate();
  Hypergraph base = channel_hypergraph(n);

  // Models must normalize over each encoding class as well: the classes are
  // complete measurement contexts of the scenario.
  std::vector<std::vector<VertexId>> edges;
  for (const Bits& edge : base.edges()) edges.push_back(base.names(edge));
  for (const auto& cls : e.classes) {
    Bits mask = base.mask_of(cls);
    bool present = false;
    for (const Bits& edge : base.edges())
      if (edge == mask) present = true;
    if (!present) edges.push_back(cls);
  }
  Hypergraph gamma = Hypergraph::make(base.vertices(), std::move(edges));

  std::vector<ProbabilisticModel> verts = polytope_vertices(gamma, vertex_cap);
  if (verts.empty()) throw InputError("scenario admits no probabilistic model");

  int nx = n.input_count();
  int q = e.message_count();
  std::vector<std::vector<int>> classes(q);
  for (int m = 0; m < q; ++m)
    for (const auto& x : e.classes[m]) classes[m].push_back(n.input_index(x));

  // eta(x, x') matrix, exact.
  std::vector<std::vector<Rational>> etam(nx, std::vector<Rational>(nx));
  for (int x = 0; x < nx; ++x)
    for (int x2 = 0; x2 < nx; ++x2) etam[x][x2] = eta_by_index(n, x, x2);

  CigBound out;
  out.method = BoundMethod::VertexEnum;
  out.value = -1;
  for (const auto& vert : verts) {
    Rational total = 0;
    std::vector<int> encoder(q);
    for (int m = 0; m < q; ++m) {
      Rational best = -1;
      int arg = 0;
      for (int x = 0; x < nx; ++x) {
        Rational s = 0;
        for (int xp : classes[m]) s += vert.assignment[xp] * etam[x][xp];
        if (s > best) {
          best = s;
          arg = x;
        }
      }
      encoder[m] = arg;
      total += p.p[m] * best;
    }
    if (total > out.value) {
      out.value = total;
      out.model = vert;
      out.encoder.clear();
      for (int x : encoder) out.encoder.push_back(n.inputs()[x]);
    }
  }
  return out;
}

NoncontextualVerdict check_noncontextual_bounds(double corr_value, const Rational& beta_value,
                                                const Rational& eta_min, const Rational& eta_max,
                                                double s, const std::optional<Rational>& cig) {
  NoncontextualVerdict v;
  v.eta_uniform = eta_min == eta_max;
  v.trivial_bound = beta_value >= 1;
  double beta_d = to_double(beta_value);
  v.corr_margin = corr_value - beta_d;
  v.corr_violation = !v.trivial_bound && v.corr_margin > 0;
  double eta_d = to_double(eta_max);
  double bound = eta_d + (1.0 - eta_d) * beta_d;
  v.s_margin = s - bound;
  v.s_above_eta_beta = v.s_margin > 0;
  if (cig) {
    v.cig_margin = s - to_double(*cig);
    v.s_above_cig = v.cig_margin > 0;
  }
  return v;
}

}  // namespace oneshot
