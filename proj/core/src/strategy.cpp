#include "oneshot/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace oneshot {

namespace {

int find_label(const std::vector<std::string>& v, const std::string& s, const char* what) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) throw InputError(std::string("unknown ") + what + ": " + s);
  return static_cast<int>(it - v.begin());
}

}  // namespace

CorrelationBox CorrelationBox::zeros(std::vector<std::string> s, std::vector<std::string> a,
                                     std::vector<std::string> t, std::vector<std::string> b) {
  CorrelationBox box;
  box.alice_inputs = std::move(s);
  box.alice_outputs = std::move(a);
  box.bob_inputs = std::move(t);
  box.bob_outputs = std::move(b);
  box.p.assign(box.alice_inputs.size(),
               std::vector<std::vector<std::vector<double>>>(
                   box.bob_inputs.size(),
                   std::vector<std::vector<double>>(box.alice_outputs.size(),
                                                    std::vector<double>(box.bob_outputs.size(), 0.0))));
  return box;
}

int CorrelationBox::s_index(const std::string& v) const { return find_label(alice_inputs, v, "alice setting"); }
int CorrelationBox::t_index(const std::string& v) const { return find_label(bob_inputs, v, "bob setting"); }
int CorrelationBox::a_index(const std::string& v) const { return find_label(alice_outputs, v, "alice outcome"); }
int CorrelationBox::b_index(const std::string& v) const { return find_label(bob_outputs, v, "bob outcome"); }

std::vector<BoxViolation> validate_box(const CorrelationBox& box, double tol) {
  std::vector<BoxViolation> out;
  int ns = static_cast<int>(box.alice_inputs.size());
  int nt = static_cast<int>(box.bob_inputs.size());
  int na = static_cast<int>(box.alice_outputs.size());
  int nb = static_cast<int>(box.bob_outputs.size());
  for (int s = 0; s < ns; ++s) {
    for (int t = 0; t < nt; ++t) {
      double sum = 0.0;
      for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) {
          double v = box.at(s, t, a, b);
          if (v < -tol)
            out.push_back({"negative probability at (" + box.alice_inputs[s] + "," +
                               box.bob_inputs[t] + "," + box.alice_outputs[a] + "," +
                               box.bob_outputs[b] + ")",
                           -v});
          sum += v;
        }
      }
      if (std::abs(sum - 1.0) > tol)
        out.push_back({"setting pair (" + box.alice_inputs[s] + "," + box.bob_inputs[t] +
                           ") not normalized",
                       std::abs(sum - 1.0)});
    }
  }
  double ns_defect = no_signalling_defect(box);
  if (ns_defect > tol) out.push_back({"no-signalling violated", ns_defect});
  return out;
}

double no_signalling_defect(const CorrelationBox& box) {
  int ns = static_cast<int>(box.alice_inputs.size());
  int nt = static_cast<int>(box.bob_inputs.size());
  int na = static_cast<int>(box.alice_outputs.size());
  int nb = static_cast<int>(box.bob_outputs.size());
  double worst = 0.0;
  // Alice's marginal must not depend on t.
  for (int s = 0; s < ns; ++s) {
    for (int a = 0; a < na; ++a) {
      double ref = 0.0;
      for (int b = 0; b < nb; ++b) ref += box.at(s, 0, a, b);
      for (int t = 1; t < nt; ++t) {
        double m = 0.0;
        for (int b = 0; b < nb; ++b) m += box.at(s, t, a, b);
        worst = std::max(worst, std::abs(m - ref));
      }
    }
  }
  // Bob's marginal must not depend on s.
  for (int t = 0; t < nt; ++t) {
    for (int b = 0; b < nb; ++b) {
      double ref = 0.0;
      for (int a = 0; a < na; ++a) ref += box.at(0, t, a, b);
      for (int s = 1; s < ns; ++s) {
        double m = 0.0;
        for (int a = 0; a < na; ++a) m += box.at(s, t, a, b);
        worst = std::max(worst, std::abs(m - ref));
      }
    }
  }
  return worst;
}

std::vector<QuantumViolation> validate_strategy(const QuantumStrategy& s, double tol) {
  std::vector<QuantumViolation> out;
  if (s.dim_a * s.dim_b != s.rho_ab.dim)
    out.push_back({"state dimension does not factor as dim_a * dim_b", 0.0});
  auto rho = validate_density(s.rho_ab, tol);
  out.insert(out.end(), rho.begin(), rho.end());
  for (const auto& povm : s.alice) {
    auto v = validate_povm(povm, s.dim_a, tol);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& povm : s.bob) {
    auto v = validate_povm(povm, s.dim_b, tol);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

namespace {

std::vector<std::string> outcome_union(const std::vector<Povm>& povms) {
  std::vector<std::string> labels;
  for (const auto& p : povms)
    for (const auto& [label, effect] : p.elements)
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
  return labels;
}

}  // namespace

CorrelationBox box_from_strategy(const QuantumStrategy& s) {
  if (s.dim_a * s.dim_b != s.rho_ab.dim)
    throw InputError("state dimension does not factor as dim_a * dim_b");
  std::vector<std::string> alice_settings, bob_settings;
  for (const auto& p : s.alice) alice_settings.push_back(p.setting);
  for (const auto& p : s.bob) bob_settings.push_back(p.setting);
  CorrelationBox box = CorrelationBox::zeros(alice_settings, outcome_union(s.alice),
                                             bob_settings, outcome_union(s.bob));
  for (std::size_t m = 0; m < s.alice.size(); ++m) {
    for (std::size_t v = 0; v < s.bob.size(); ++v) {
      for (const auto& [alabel, ea] : s.alice[m].elements) {
        int a = box.a_index(alabel);
        for (const auto& [blabel, eb] : s.bob[v].elements) {
          int b = box.b_index(blabel);
          CMat joint = kron(ea, eb);
          box.at(static_cast<int>(m), static_cast<int>(v), a, b) =
              (joint * s.rho_ab.m).trace().real();
        }
      }
    }
  }
  return box;
}

CorrelationBox effective_box(const CorrelationBox& raw, const Wiring& w,
                             const ClassicalChannel& n,
                             const std::vector<std::string>& messages) {
  int nm = static_cast<int>(messages.size());
  int ny = n.output_count();
  int na = static_cast<int>(raw.alice_outputs.size());
  int nv = static_cast<int>(raw.bob_inputs.size());
  int nz = static_cast<int>(raw.bob_outputs.size());
  if (raw.alice_inputs != messages)
    throw InputError("raw box settings do not match the message alphabet");
  if (static_cast<int>(w.encoder.size()) != nm)
    throw InputError("wiring encoder has wrong message count");
  for (const auto& row : w.encoder)
    if (static_cast<int>(row.size()) != na) throw InputError("wiring encoder not total");
  if (static_cast<int>(w.bob_input_map.size()) != ny)
    throw InputError("wiring bob map has wrong output count");
  for (const auto& row : w.bob_input_map) {
    if (static_cast<int>(row.size()) != nv) throw InputError("wiring bob map shape mismatch");
    double sum = 0.0;
    for (double q : row) {
      if (q < 0.0) throw InputError("wiring bob map has negative probability");
      sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InputError("wiring bob map row does not sum to 1");
  }
  if (static_cast<int>(w.postprocess.size()) != ny)
    throw InputError("wiring postprocess has wrong output count");
  for (const auto& row : w.postprocess)
    if (static_cast<int>(row.size()) != nz) throw InputError("wiring postprocess not total");

  CorrelationBox out = CorrelationBox::zeros(messages, n.inputs(), n.outputs(), messages);
  // Precompute label maps.
  std::vector<std::vector<int>> enc(nm, std::vector<int>(na));
  for (int m = 0; m < nm; ++m)
    for (int a = 0; a < na; ++a) enc[m][a] = n.input_index(w.encoder[m][a]);
  std::vector<std::vector<int>> guess(ny, std::vector<int>(nz));
  for (int y = 0; y < ny; ++y)
    for (int z = 0; z < nz; ++z)
      guess[y][z] = find_label(messages, w.postprocess[y][z], "message");

  for (int m = 0; m < nm; ++m) {
    for (int y = 0; y < ny; ++y) {
      for (int v = 0; v < nv; ++v) {
        double pv = w.bob_input_map[y][v];
        if (pv == 0.0) continue;
        for (int a = 0; a < na; ++a) {
          int x = enc[m][a];
          for (int z = 0; z < nz; ++z)
            out.at(m, y, x, guess[y][z]) += pv * raw.at(m, v, a, z);
        }
      }
    }
  }
  return out;
}

double success_probability(const ClassicalChannel& n, const MessageEnsemble& p,
                           const CorrelationBox& effective) {
  int nm = static_cast<int>(effective.alice_inputs.size());
  if (static_cast<int>(p.p.size()) != nm) throw InputError("ensemble size mismatch");
  if (effective.bob_outputs != effective.alice_inputs)
    throw InputError("effective box guesses are not messages");
  if (effective.alice_outputs != n.inputs() || effective.bob_inputs != n.outputs())
    throw InputError("effective box alphabets do not match the channel");
  double s = 0.0;
  for (int m = 0; m < nm; ++m) {
    double pm = to_double(p.p[m]);
    if (pm == 0.0) continue;
    for (int x = 0; x < n.input_count(); ++x) {
      Bits sup = n.input_support(x);
      double acc = 0.0;
      sup.for_each([&](int y) { acc += to_double(n.prob(x, y)) * effective.at(m, y, x, m); });
      s += pm * acc;
    }
  }
  return s;
}

CigTables cig_tables_from_box(const ClassicalChannel& n, const CorrelationBox& raw,
                              const std::vector<std::string>& messages) {
  if (raw.alice_inputs != messages)
    throw InputError("raw box settings do not match the message alphabet");
  int nm = static_cast<int>(messages.size());
  int nx = n.input_count();
  int ny = n.output_count();
  if (static_cast<int>(raw.alice_outputs.size()) != nx ||
      static_cast<int>(raw.bob_outputs.size()) != nx ||
      static_cast<int>(raw.bob_inputs.size()) != ny)
    throw InputError("raw box alphabets do not fit the channel (need X, Y, X)");
  // Alphabets may be permutations of the channel's; map by label.
  std::vector<int> amap(nx), zmap(nx), ymap(ny);
  for (int x = 0; x < nx; ++x) {
    amap[x] = raw.a_index(n.inputs()[x]);
    zmap[x] = raw.b_index(n.inputs()[x]);
  }
  for (int y = 0; y < ny; ++y) ymap[y] = raw.t_index(n.outputs()[y]);

  CigTables tables;
  tables.joint.assign(nm, std::vector<std::vector<double>>(nx, std::vector<double>(nx, 0.0)));
  for (int m = 0; m < nm; ++m) {
    for (int x = 0; x < nx; ++x) {
      // Alice's marginal; no-signalling makes it setting-independent.
      double px = 0.0;
      for (int y = 0; y < ny; ++y)
        for (int z = 0; z < nx; ++z) px += raw.at(m, ymap[y], amap[x], zmap[z]);
      px /= ny;
      if (px < 1e-12) continue;
      for (int z = 0; z < nx; ++z) {
        Bits contexts = n.input_support(z);  // outputs y with z in X_y
        double lo = 0.0, hi = 0.0, sum = 0.0;
        bool first = true;
        contexts.for_each([&](int y) {
          double c = raw.at(m, ymap[y], amap[x], zmap[z]) / px;
          if (first) {
            lo = hi = c;
            first = false;
          } else {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          sum += c;
        });
        int k = contexts.count();
        if (k == 0) continue;
        tables.max_cig_violation = std::max(tables.max_cig_violation, hi - lo);
        tables.joint[m][x][z] = px * (sum / k);
      }
    }
  }
  return tables;
}

double success_probability_cig(const ClassicalChannel& n, const Encoding& e,
                               const MessageEnsemble& p, const CigTables& tables) {
  int nm = e.message_count();
  if (static_cast<int>(tables.joint.size()) != nm || static_cast<int>(p.p.size()) != nm)
    throw InputError("cig table shape mismatch");
  double s = 0.0;
  for (int m = 0; m < nm; ++m) {
    std::vector<int> cls;
    for (const auto& x : e.classes[m]) cls.push_back(n.input_index(x));
    double norm = 0.0;
    for (int x = 0; x < n.input_count(); ++x)
      for (int xp : cls) norm += tables.joint[m][x][xp];
    if (std::abs(norm - 1.0) > 1e-9)
      throw InputError("cig joint table for message " + e.messages[m] +
                       " is not normalized over X x X_m");
    double pm = to_double(p.p[m]);
    for (int x = 0; x < n.input_count(); ++x)
      for (int xp : cls)
        if (tables.joint[m][x][xp] != 0.0)
          s += pm * tables.joint[m][x][xp] * to_double(eta_by_index(n, x, xp));
  }
  return s;
}

double corr(const ClassicalChannel& n, const Encoding& e, const MessageEnsemble& p,
            const CigTables& tables) {
  double c = 0.0;
  for (int m = 0; m < e.message_count(); ++m) {
    double pm = to_double(p.p[m]);
    for (const auto& x : e.classes[m]) {
      int xi = n.input_index(x);
      c += pm * tables.joint[m][xi][xi];
    }
  }
  return c;
}

namespace {

Eigen::VectorXcd unit_vector(const RatVec& ray) {
  Eigen::VectorXcd v(ray.size());
  double norm2 = 0.0;
  for (std::size_t i = 0; i < ray.size(); ++i) {
    double x = to_double(ray[i]);
    v(static_cast<Eigen::Index>(i)) = x;
    norm2 += x * x;
  }
  return v / std::sqrt(norm2);
}

CMat ray_projector(const RatVec& ray, bool conjugated) {
  Eigen::VectorXcd v = unit_vector(ray);
  if (conjugated) v = v.conjugate();
  return v * v.adjoint();
}

}  // namespace

std::pair<QuantumStrategy, Wiring> cubitt_strategy(const Scenario& peres) {
  return cubitt_strategy(peres, 1.0);
}

std::pair<QuantumStrategy, Wiring> cubitt_strategy(const Scenario& peres, double visibility) {
  if (!peres.has_vectors) throw InputError("cubitt strategy needs a scenario with rays");
  if (peres.dotted.empty()) throw InputError("cubitt strategy needs a dotted basis partition");
  int d = peres.vectors.dim;
  const Hypergraph& hg = peres.hypergraph;

  // Classes and channel outputs in the order channel_from_scenario uses.
  std::set<int> dotted(peres.dotted.begin(), peres.dotted.end());
  std::vector<int> channel_edges;
  for (int e = 0; e < hg.edge_count(); ++e)
    if (!dotted.count(e)) channel_edges.push_back(e);

  QuantumStrategy strat;
  strat.dim_a = d;
  strat.dim_b = d;
  strat.rho_ab = depolarize(max_entangled(d), visibility);

  std::vector<std::string> messages;
  std::map<std::string, std::string> class_of;  // ray label -> message
  int mi = 0;
  for (int e : peres.dotted) {
    Povm povm;
    povm.setting = "m" + std::to_string(mi);
    messages.push_back(povm.setting);
    hg.edge(e).for_each([&](int i) {
      povm.elements.emplace_back(hg.vertex(i), ray_projector(peres.vectors.rays[i], false));
      class_of[hg.vertex(i)] = povm.setting;
    });
    strat.alice.push_back(std::move(povm));
    ++mi;
  }
  for (int e : channel_edges) {
    Povm povm;
    povm.setting = "B" + std::to_string(e);
    hg.edge(e).for_each([&](int i) {
      povm.elements.emplace_back(hg.vertex(i), ray_projector(peres.vectors.rays[i], true));
    });
    strat.bob.push_back(std::move(povm));
  }

  // Raw outcome alphabets as box_from_strategy builds them.
  std::vector<std::string> alice_out = outcome_union(strat.alice);
  std::vector<std::string> bob_out = outcome_union(strat.bob);
  int ny = static_cast<int>(channel_edges.size());

  Wiring w;
  w.encoder.assign(messages.size(), {});
  for (auto& row : w.encoder) row = alice_out;  // outcome labels are channel inputs
  w.bob_input_map.assign(ny, std::vector<double>(ny, 0.0));
  for (int y = 0; y < ny; ++y) w.bob_input_map[y][y] = 1.0;  // v = y
  w.postprocess.assign(ny, {});
  for (int y = 0; y < ny; ++y) {
    for (const auto& z : bob_out) w.postprocess[y].push_back(class_of.at(z));
  }
  return {std::move(strat), std::move(w)};
}

ClassicalChannel prevedel_channel() {
  Hypergraph h = Hypergraph::make(
      {"00", "01", "10", "11"},
      {{"00", "01"}, {"10", "11"}, {"00", "10"}, {"01", "11"}, {"00", "11"}, {"01", "10"}});
  return output_uniform_channel(h, {"1:0", "1:1", "2:0", "2:1", "P:0", "P:1"});
}

Encoding prevedel_encoding() {
  Encoding e;
  e.messages = {"0", "1"};
  e.classes = {{"00", "01"}, {"10", "11"}};
  return e;
}

namespace {

CMat qubit_projector(double theta) {
  // Projector onto (cos theta, sin theta).
  Eigen::VectorXcd v(2);
  v << std::cos(theta), std::sin(theta);
  return v * v.adjoint();
}

}  // namespace

std::pair<QuantumStrategy, Wiring> prevedel_strategy() {
  QuantumStrategy strat;
  strat.dim_a = strat.dim_b = 2;
  strat.rho_ab = max_entangled(2);

  const double pi = std::numbers::pi;
  // Alice: Z for message 0, X for message 1; outcome label is the bit b2.
  {
    Povm z;
    z.setting = "0";
    z.elements.emplace_back("0", qubit_projector(0.0));
    z.elements.emplace_back("1", qubit_projector(pi / 2));
    strat.alice.push_back(std::move(z));
    Povm x;
    x.setting = "1";
    x.elements.emplace_back("0", qubit_projector(pi / 4));
    x.elements.emplace_back("1", qubit_projector(3 * pi / 4));
    strat.alice.push_back(std::move(x));
  }
  // Bob: (Z+X)/sqrt(2) and (Z-X)/sqrt(2) as projective binary measurements.
  {
    Povm b0;
    b0.setting = "0";
    b0.elements.emplace_back("0", qubit_projector(pi / 8));
    b0.elements.emplace_back("1", qubit_projector(pi / 8 + pi / 2));
    strat.bob.push_back(std::move(b0));
    Povm b1;
    b1.setting = "1";
    b1.elements.emplace_back("0", qubit_projector(-pi / 8));
    b1.elements.emplace_back("1", qubit_projector(-pi / 8 + pi / 2));
    strat.bob.push_back(std::move(b1));
  }

  // Channel outputs in prevedel_channel order: 1:0 1:1 2:0 2:1 P:0 P:1.
  // p(v|y): v=1 for y=(2,b); v=0 for y=(P,b); fixed v=0 for y=(1,b), where the
  // guess ignores z, so any choice gives the same box.
  Wiring w;
  w.encoder = {{"00", "01"}, {"10", "11"}};  // x = (m, b2)
  w.bob_input_map = {{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 0.0}};
  auto xor_bit = [](char b, const std::string& z) {
    int r = (b - '0') ^ (z == "1" ? 1 : 0);
    return std::string(1, static_cast<char>('0' + r));
  };
  w.postprocess = {
      {"0", "0"},                      // y=1:0 -> m'=0
      {"1", "1"},                      // y=1:1 -> m'=1
      {xor_bit('0', "0"), xor_bit('0', "1")},  // y=2:0 -> b xor z
      {xor_bit('1', "0"), xor_bit('1', "1")},  // y=2:1
      {xor_bit('0', "0"), xor_bit('0', "1")},  // y=P:0
      {xor_bit('1', "0"), xor_bit('1', "1")},  // y=P:1
  };
  return {std::move(strat), std::move(w)};
}

CorrelationBox pr_box() {
  CorrelationBox box = CorrelationBox::zeros({"0", "1"}, {"0", "1"}, {"0", "1"}, {"0", "1"});
  for (int m = 0; m < 2; ++m)
    for (int v = 0; v < 2; ++v)
      for (int a = 0; a < 2; ++a)
        for (int z = 0; z < 2; ++z)
          if ((a ^ z) == (m & v)) box.at(m, v, a, z) = 0.5;
  return box;
}

double prevedel_decomposition(const CorrelationBox& raw) {
  if (raw.alice_inputs.size() != 2 || raw.bob_inputs.size() != 2 ||
      raw.alice_outputs.size() != 2 || raw.bob_outputs.size() != 2)
    throw InputError("decomposition needs a 2x2x2x2 box");
  double sum = 0.0;
  for (int m = 0; m < 2; ++m)
    for (int v = 0; v < 2; ++v)
      for (int a = 0; a < 2; ++a)
        for (int z = 0; z < 2; ++z)
          if ((a ^ z) == (m & v)) sum += raw.at(m, v, a, z);
  return 1.0 / 3.0 + sum / 6.0;
}

}  // namespace oneshot
