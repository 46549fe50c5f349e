#include "oneshot/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace oneshot {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or \"num/den\" string");
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

Hypergraph hypergraph_from_json(const std::string& text) {
  json j = parse(text);
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : j.at("hyperedges")) edges.push_back(string_list(e, "hyperedge"));
  return Hypergraph::make(string_list(j.at("vertices"), "vertices"), std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& h) {
  json j;
  j["vertices"] = h.vertices();
  json edges = json::array();
  for (const Bits& e : h.edges()) edges.push_back(h.names(e));
  j["hyperedges"] = std::move(edges);
  return j.dump(2);
}

ClassicalChannel channel_from_json(const std::string& text) {
  json j = parse(text);
  if (j.contains("hypergraph")) {
    if (!j.value("output_uniform", false))
      throw InputError("hypergraph channel form requires \"output_uniform\": true");
    Hypergraph h = hypergraph_from_json(j.at("hypergraph").dump());
    if (j.contains("outputs"))
      return output_uniform_channel(h, string_list(j.at("outputs"), "outputs"));
    return output_uniform_channel(h);
  }
  auto inputs = string_list(j.at("inputs"), "inputs");
  auto outputs = string_list(j.at("outputs"), "outputs");
  std::vector<std::vector<Rational>> probs(inputs.size(),
                                           std::vector<Rational>(outputs.size(), Rational(0)));
  const json& table = j.at("probs");
  for (std::size_t x = 0; x < inputs.size(); ++x) {
    if (!table.contains(inputs[x])) throw InputError("probs missing input " + inputs[x]);
    const json& row = table.at(inputs[x]);
    for (auto it = row.begin(); it != row.end(); ++it) {
      auto pos = std::find(outputs.begin(), outputs.end(), it.key());
      if (pos == outputs.end()) throw InputError("probs references unknown output " + it.key());
      probs[x][pos - outputs.begin()] = rational_from_json(it.value());
    }
  }
  return ClassicalChannel::make(std::move(inputs), std::move(outputs), std::move(probs));
}

std::string channel_to_json(const ClassicalChannel& n) {
  json j;
  j["inputs"] = n.inputs();
  j["outputs"] = n.outputs();
  json probs;
  for (int x = 0; x < n.input_count(); ++x) {
    json row;
    for (int y = 0; y < n.output_count(); ++y)
      if (n.prob(x, y) != 0) row[n.outputs()[y]] = to_fraction_string(n.prob(x, y));
    probs[n.inputs()[x]] = std::move(row);
  }
  j["probs"] = std::move(probs);
  return j.dump(2);
}

Encoding encoding_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InputError("encoding file must be a JSON object");
  Encoding e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    e.messages.push_back(it.key());
    e.classes.push_back(string_list(it.value(), "encoding class"));
  }
  return e;
}

std::string encoding_to_json(const Encoding& e) {
  json j;
  for (int m = 0; m < e.message_count(); ++m) j[e.messages[m]] = e.classes[m];
  return j.dump(2);
}

MessageEnsemble ensemble_from_json(const std::string& text, const Encoding& e) {
  json j = parse(text);
  const json& probs = j.contains("probs") ? j.at("probs") : j;
  MessageEnsemble p;
  for (const auto& m : e.messages) {
    if (!probs.contains(m)) throw InputError("ensemble missing message " + m);
    p.p.push_back(rational_from_json(probs.at(m)));
  }
  p.validate();
  return p;
}

std::string ensemble_to_json(const MessageEnsemble& p, const Encoding& e) {
  json probs;
  for (int m = 0; m < e.message_count(); ++m)
    probs[e.messages[m]] = to_fraction_string(p.p[m]);
  json j;
  j["probs"] = std::move(probs);
  return j.dump(2);
}

CorrelationBox box_from_json(const std::string& text) {
  json j = parse(text);
  const json& al = j.at("alphabets");
  CorrelationBox box = CorrelationBox::zeros(
      string_list(al.at("alice_inputs"), "alice_inputs"),
      string_list(al.at("alice_outputs"), "alice_outputs"),
      string_list(al.at("bob_inputs"), "bob_inputs"),
      string_list(al.at("bob_outputs"), "bob_outputs"));
  const json& table = j.at("table");
  for (auto s = table.begin(); s != table.end(); ++s) {
    int si = box.s_index(s.key());
    for (auto t = s.value().begin(); t != s.value().end(); ++t) {
      int ti = box.t_index(t.key());
      for (auto a = t.value().begin(); a != t.value().end(); ++a) {
        int ai = box.a_index(a.key());
        for (auto b = a.value().begin(); b != a.value().end(); ++b)
          box.at(si, ti, ai, box.b_index(b.key())) = b.value().get<double>();
      }
    }
  }
  return box;
}

std::string box_to_json(const CorrelationBox& box) {
  json j;
  j["alphabets"] = {{"alice_inputs", box.alice_inputs},
                    {"alice_outputs", box.alice_outputs},
                    {"bob_inputs", box.bob_inputs},
                    {"bob_outputs", box.bob_outputs}};
  json table;
  for (std::size_t s = 0; s < box.alice_inputs.size(); ++s) {
    json ts;
    for (std::size_t t = 0; t < box.bob_inputs.size(); ++t) {
      json as;
      for (std::size_t a = 0; a < box.alice_outputs.size(); ++a) {
        json bs;
        for (std::size_t b = 0; b < box.bob_outputs.size(); ++b) {
          double v = box.p[s][t][a][b];
          if (v != 0.0) bs[box.bob_outputs[b]] = v;
        }
        if (!bs.empty()) as[box.alice_outputs[a]] = std::move(bs);
      }
      ts[box.bob_inputs[t]] = std::move(as);
    }
    table[box.alice_inputs[s]] = std::move(ts);
  }
  j["table"] = std::move(table);
  return j.dump(2);
}

VectorSet rayset_from_json(const std::string& text) {
  json j = parse(text);
  int dim = j.at("dim").get<int>();
  const json& rays = j.at("rays");
  std::vector<std::string> labels;
  for (auto it = rays.begin(); it != rays.end(); ++it) labels.push_back(it.key());
  bool numeric = std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit);
  });
  std::sort(labels.begin(), labels.end(), [&](const std::string& a, const std::string& b) {
    if (numeric) return std::stol(a) < std::stol(b);
    return a < b;
  });
  std::vector<RatVec> coords;
  for (const auto& label : labels) {
    RatVec v;
    for (const auto& c : rays.at(label)) v.push_back(rational_from_json(c));
    coords.push_back(std::move(v));
  }
  return VectorSet::make(dim, std::move(labels), std::move(coords));
}

std::string rayset_to_json(const VectorSet& v) {
  json rays;
  for (int i = 0; i < v.size(); ++i) {
    json coords = json::array();
    for (const auto& q : v.rays[i]) {
      if (q.get_den() == 1 && q.get_num().fits_slong_p())
        coords.push_back(q.get_num().get_si());
      else
        coords.push_back(to_fraction_string(q));
    }
    rays[v.labels[i]] = std::move(coords);
  }
  json j;
  j["dim"] = v.dim;
  j["rays"] = std::move(rays);
  return j.dump(2);
}

std::string game_to_json(const GameSpec& g) {
  json j;
  j["alice_questions"] = g.alice_questions;
  j["alice_answers"] = g.alice_answers;
  j["bob_questions"] = g.bob_questions;
  j["bob_answers"] = g.bob_answers;
  json weights = json::array();
  for (const auto& w : g.message_weights) weights.push_back(to_fraction_string(w));
  j["message_weights"] = std::move(weights);
  json v = json::array();
  for (std::size_t m = 0; m < g.alice_questions.size(); ++m) {
    json ym = json::array();
    for (std::size_t y = 0; y < g.bob_questions.size(); ++y) {
      json xm = json::array();
      for (std::size_t x = 0; x < g.alice_answers.size(); ++x) {
        json row = json::array();
        for (std::size_t mp = 0; mp < g.bob_answers.size(); ++mp)
          row.push_back(static_cast<int>(g.v(static_cast<int>(m), static_cast<int>(y),
                                             static_cast<int>(x), static_cast<int>(mp))));
        xm.push_back(std::move(row));
      }
      ym.push_back(std::move(xm));
    }
    v.push_back(std::move(ym));
  }
  j["V"] = std::move(v);
  j["message_symmetric"] = g.message_symmetric;
  return j.dump();
}

GameSpec game_from_json(const std::string& text) {
  json j = parse(text);
  GameSpec g;
  g.alice_questions = string_list(j.at("alice_questions"), "alice_questions");
  g.alice_answers = string_list(j.at("alice_answers"), "alice_answers");
  g.bob_questions = string_list(j.at("bob_questions"), "bob_questions");
  g.bob_answers = string_list(j.at("bob_answers"), "bob_answers");
  for (const auto& w : j.at("message_weights")) g.message_weights.push_back(rational_from_json(w));
  g.message_symmetric = j.value("message_symmetric", false);
  std::size_t nm = g.alice_questions.size(), ny = g.bob_questions.size(),
              nx = g.alice_answers.size(), nq = g.bob_answers.size();
  g.predicate.assign(nm * ny * nx * nq, 0);
  const json& v = j.at("V");
  for (std::size_t m = 0; m < nm; ++m)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t mp = 0; mp < nq; ++mp)
          g.v(static_cast<int>(m), static_cast<int>(y), static_cast<int>(x),
              static_cast<int>(mp)) = v.at(m).at(y).at(x).at(mp).get<int>() ? 1 : 0;
  return g;
}

std::string classical_bound_to_json(const ClassicalBound& b,
                                    const std::vector<std::string>& messages,
                                    const std::vector<std::string>& outputs) {
  json j;
  j["value"] = to_fraction_string(b.value);
  j["method"] = method_name(b.method);
  json enc, dec;
  for (std::size_t m = 0; m < messages.size(); ++m) enc[messages[m]] = b.witness.encoder[m];
  for (std::size_t y = 0; y < outputs.size(); ++y) dec[outputs[y]] = b.witness.decoder[y];
  j["witness"] = {{"encoder", std::move(enc)}, {"decoder", std::move(dec)}};
  return j.dump(2);
}

std::string beta_bound_to_json(const BetaBound& b, const Encoding& e,
                               const std::vector<std::string>& vertices) {
  json j;
  j["value"] = to_fraction_string(b.value);
  j["method"] = method_name(b.method);
  json model;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    model[vertices[i]] = to_fraction_string(b.model.assignment[i]);
  json sel;
  for (int m = 0; m < e.message_count(); ++m) sel[e.messages[m]] = b.selection[m];
  j["witness"] = {{"model", std::move(model)}, {"selection", std::move(sel)}};
  return j.dump(2);
}

std::string cig_bound_to_json(const CigBound& b, const Encoding& e,
                              const std::vector<std::string>& inputs) {
  json j;
  j["value"] = to_fraction_string(b.value);
  j["method"] = method_name(b.method);
  json model;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    model[inputs[i]] = to_fraction_string(b.model.assignment[i]);
  json enc;
  for (int m = 0; m < e.message_count(); ++m) enc[e.messages[m]] = b.encoder[m];
  j["witness"] = {{"model", std::move(model)}, {"encoder", std::move(enc)}};
  return j.dump(2);
}

std::string AppendixFReport::to_json_string() const {
  json j;
  json claims_j = json::array();
  for (const auto& c : claims)
    claims_j.push_back({{"claim", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["claims"] = std::move(claims_j);
  json stages = json::array();
  for (const auto& sc : stage_counts)
    stages.push_back({{"rays", sc.rays}, {"complete", sc.complete}, {"incomplete", sc.incomplete}});
  j["stage_counts"] = std::move(stages);
  j["alpha"] = {{"initial", alpha_initial}, {"closed", alpha_closed}};
  j["max_disjoint"] = {{"initial", max_disjoint_initial},
                       {"closed", max_disjoint_closed},
                       {"complete_only_initial", max_disjoint_complete_initial}};
  j["ks_basis_set"] = {{"initial", ks_basis_set_initial}, {"closed", ks_basis_set_closed}};
  j["all_pass"] = all_pass();
  return j.dump(2);
}

}  // namespace oneshot
