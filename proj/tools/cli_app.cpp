#include "cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oneshot/bounds.hpp"
#include "oneshot/bruteforce.hpp"
#include "oneshot/game.hpp"
#include "oneshot/io.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/papersuite.hpp"
#include "oneshot/strategy.hpp"

namespace oneshot::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  int threads = 1;
  std::uint64_t budget_nodes = 1'000'000'000;
  std::size_t vertex_cap = 1'000'000;
  double tolerance = 1e-9;  // quantum-side checks only
  std::uint64_t seed = 20240801;
};

// FNV-1a over every input that reached the run.
struct Digest {
  std::uint64_t h = 1469598103934665603ULL;
  void feed(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

struct Context {
  Options opt;
  Digest digest;

  std::string slurp(const std::string& path) {
    std::string text = read_file(path);
    digest.feed(path);
    digest.feed(text);
    return text;
  }
};

// "builtin:prevedel" | "builtin:cubitt" | path.
std::pair<ClassicalChannel, std::optional<Encoding>> load_channel_arg(Context& ctx,
                                                                      const std::string& spec) {
  if (spec == "builtin:prevedel") {
    ctx.digest.feed(spec);
    return {prevedel_channel(), prevedel_encoding()};
  }
  if (spec == "builtin:cubitt") {
    ctx.digest.feed(spec);
    Scenario s = load_builtin("peres24");
    auto [channel, encoding] = channel_from_scenario(s.hypergraph, s.dotted);
    return {std::move(channel), std::move(encoding)};
  }
  return {channel_from_json(ctx.slurp(spec)), std::nullopt};
}

Encoding load_encoding_arg(Context& ctx, const std::string& spec,
                           const std::optional<Encoding>& builtin) {
  if (spec.empty()) {
    if (builtin) return *builtin;
    throw InputError("an --encoding is required for this channel");
  }
  if (spec == "builtin:prevedel") {
    ctx.digest.feed(spec);
    return prevedel_encoding();
  }
  if (spec == "builtin:cubitt") {
    ctx.digest.feed(spec);
    Scenario s = load_builtin("peres24");
    auto [channel, encoding] = channel_from_scenario(s.hypergraph, s.dotted);
    return encoding;
  }
  return encoding_from_json(ctx.slurp(spec));
}

MessageEnsemble load_ensemble_arg(Context& ctx, const std::string& spec, const Encoding& e) {
  if (spec.empty()) return MessageEnsemble::uniform(e.message_count());
  return ensemble_from_json(ctx.slurp(spec), e);
}

Scenario load_scenario_arg(Context& ctx, const std::string& rays, const std::string& builtin) {
  if (!builtin.empty()) {
    ctx.digest.feed("builtin:" + builtin);
    return load_builtin(builtin);
  }
  if (rays.empty()) throw InputError("need --rays FILE or --builtin NAME");
  return orthogonality_scenario(rayset_from_json(ctx.slurp(rays)));
}

Hypergraph load_hypergraph_arg(Context& ctx, const std::string& hyper, const std::string& rays,
                               const std::string& builtin) {
  if (!hyper.empty()) return hypergraph_from_json(ctx.slurp(hyper));
  return load_scenario_arg(ctx, rays, builtin).hypergraph;
}

void emit(std::ostream& out, const Options& opt, const std::string& command, const Digest& digest,
          double seconds, const json& results) {
  if (opt.format == "json") {
    json report;
    report["command"] = command;
    report["inputs_digest"] = digest.hex();
    report["results"] = results;
    report["elapsed_ms"] = seconds * 1000.0;  // excluded from the determinism contract
    out << report.dump(2) << "\n";
    return;
  }
  out << "command: " << command << "\n";
  out << "inputs-digest: " << digest.hex() << "\n";
  std::function<void(const json&, const std::string&)> walk = [&](const json& j,
                                                                  const std::string& prefix) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it)
        walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
      return;
    }
    if (j.is_array()) {
      out << prefix << ": " << j.dump() << "\n";
      return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  };
  walk(results, "");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", seconds * 1000.0);
  out << "elapsed-ms: " << buf << "\n";
}

json witness_json(const std::vector<std::string>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s);
  return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tools for entanglement-assisted one-shot classical communication"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  if (const char* env = std::getenv("ONESHOT_THREADS")) ctx.opt.threads = std::atoi(env);
  app.add_option("--format", ctx.opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", ctx.opt.threads, "worker threads for parallelizable searches");
  app.add_option("--budget-nodes", ctx.opt.budget_nodes, "search node budget");
  app.add_option("--vertex-cap", ctx.opt.vertex_cap, "polytope vertex cap");
  app.add_option("--tolerance", ctx.opt.tolerance, "quantum-side tolerance (exact paths ignore it)");
  app.add_option("--seed", ctx.opt.seed, "seed for random-box property runs");

  // alpha
  std::string a_hyper, a_rays, a_builtin;
  auto* alpha_cmd = app.add_subcommand("alpha", "independence number of the orthogonality graph");
  alpha_cmd->add_option("--hypergraph", a_hyper, "hypergraph JSON file");
  alpha_cmd->add_option("--rays", a_rays, "ray-set JSON file");
  alpha_cmd->add_option("--builtin", a_builtin, "ck31 or peres24");

  // colourable
  std::string c_hyper, c_rays, c_builtin;
  auto* col_cmd = app.add_subcommand("colourable", "KS-colourability of a hypergraph");
  col_cmd->add_option("--hypergraph", c_hyper, "hypergraph JSON file");
  col_cmd->add_option("--rays", c_rays, "ray-set JSON file");
  col_cmd->add_option("--builtin", c_builtin, "ck31 or peres24");

  // channel-info
  std::string ci_channel, ci_encoding;
  auto* info_cmd = app.add_subcommand("channel-info", "hypergraph, regularity, capacity, eta range");
  info_cmd->add_option("--channel", ci_channel, "channel JSON file or builtin:NAME")->required();
  info_cmd->add_option("--encoding", ci_encoding, "encoding JSON file or builtin:NAME");

  // classical-bound
  std::string cb_channel, cb_encoding, cb_ensemble;
  auto* cb_cmd = app.add_subcommand("classical-bound", "exact best deterministic strategy");
  cb_cmd->add_option("--channel", cb_channel)->required();
  cb_cmd->add_option("--encoding", cb_encoding);
  cb_cmd->add_option("--ensemble", cb_ensemble);

  // cig-bound
  std::string gb_channel, gb_encoding, gb_ensemble;
  auto* gb_cmd = app.add_subcommand("cig-bound", "noncontextual bound under context-independent guessing");
  gb_cmd->add_option("--channel", gb_channel)->required();
  gb_cmd->add_option("--encoding", gb_encoding);
  gb_cmd->add_option("--ensemble", gb_ensemble);

  // beta
  std::string be_rays, be_builtin, be_hyper, be_encoding, be_ensemble, be_method = "vertex";
  auto* be_cmd = app.add_subcommand("beta", "weighted max-predictability of a scenario");
  be_cmd->add_option("--rays", be_rays);
  be_cmd->add_option("--builtin", be_builtin);
  be_cmd->add_option("--hypergraph", be_hyper);
  be_cmd->add_option("--encoding", be_encoding, "message classes (must be hyperedges)");
  be_cmd->add_option("--method", be_method, "vertex or lp")->check(CLI::IsMember({"vertex", "lp"}));
  be_cmd->add_option("--ensemble", be_ensemble);

  // simulate
  std::string sim_strategy = "prevedel", sim_box, sim_channel, sim_encoding, sim_ensemble;
  double sim_visibility = 1.0;
  auto* sim_cmd = app.add_subcommand("simulate", "evaluate a strategy's success probability");
  sim_cmd->add_option("--strategy", sim_strategy, "cubitt, prevedel, pr, or file")
      ->check(CLI::IsMember({"cubitt", "prevedel", "pr", "file"}));
  sim_cmd->add_option("--box", sim_box, "effective box JSON (strategy=file)");
  sim_cmd->add_option("--channel", sim_channel);
  sim_cmd->add_option("--encoding", sim_encoding);
  sim_cmd->add_option("--ensemble", sim_ensemble);
  sim_cmd->add_option("--visibility", sim_visibility, "depolarizing visibility (cubitt)");

  // game
  auto* game_cmd = app.add_subcommand("game", "nonlocal game construction and bounds");
  std::string g_channel, g_encoding, g_ensemble, g_out;
  int g_boxes = 100, g_messages = 0;
  auto* g_build = game_cmd->add_subcommand("build", "emit the game for a channel");
  g_build->add_option("--channel", g_channel)->required();
  g_build->add_option("--encoding", g_encoding, "message names come from the encoding");
  g_build->add_option("--messages", g_messages, "or: number of messages m0..m{q-1}");
  g_build->add_option("--ensemble", g_ensemble);
  g_build->add_option("--output", g_out, "write game JSON here instead of the report");
  auto* g_local = game_cmd->add_subcommand("local-bound", "exact Bell-local bound");
  g_local->add_option("--channel", g_channel)->required();
  g_local->add_option("--encoding", g_encoding);
  g_local->add_option("--messages", g_messages);
  g_local->add_option("--ensemble", g_ensemble);
  auto* g_affine = game_cmd->add_subcommand("affine-check", "identity residual on random boxes");
  g_affine->add_option("--channel", g_channel)->required();
  g_affine->add_option("--encoding", g_encoding);
  g_affine->add_option("--messages", g_messages);
  g_affine->add_option("--boxes", g_boxes, "number of random no-signalling boxes");

  // ks
  auto* ks_cmd = app.add_subcommand("ks", "vector-set machinery");
  std::string k_rays, k_builtin, k_ids;
  int k_qmin = 2;
  auto* k_bases = ks_cmd->add_subcommand("bases", "complete/incomplete bases of a ray set");
  k_bases->add_option("--rays", k_rays);
  k_bases->add_option("--builtin", k_builtin);
  auto* k_complete = ks_cmd->add_subcommand("complete", "complete d-1 orthogonal rays");
  k_complete->add_option("--rays", k_rays);
  k_complete->add_option("--builtin", k_builtin);
  k_complete->add_option("--ids", k_ids, "comma-separated ray labels")->required();
  auto* k_disjoint = ks_cmd->add_subcommand("disjoint", "maximum disjoint basis families");
  k_disjoint->add_option("--rays", k_rays);
  k_disjoint->add_option("--builtin", k_builtin);
  auto* k_ksbasis = ks_cmd->add_subcommand("ksbasis", "search for a KS basis set");
  k_ksbasis->add_option("--rays", k_rays);
  k_ksbasis->add_option("--builtin", k_builtin);
  k_ksbasis->add_option("--qmin", k_qmin, "minimum family size")->required();

  // verify-appendix-f
  std::string va_rays;
  auto* va_cmd = app.add_subcommand("verify-appendix-f", "reproduce the Conway-Kochen analysis");
  va_cmd->add_option("--rays", va_rays, "override the built-in 31-ray data");

  // paper-suite
  int ps_criterion = 0;
  auto* ps_cmd = app.add_subcommand("paper-suite", "run all acceptance checks");
  ps_cmd->add_option("--criterion", ps_criterion, "run a single criterion (1..7)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's machinery.
      std::ostringstream os;
      os << app.help();
      out << os.str();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  // Presentation and execution knobs stay out of the input digest.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads" || args[i] == "--format") {
      ++i;
      continue;
    }
    ctx.digest.feed(args[i]);
  }
  std::string command;
  json results;
  int exit_code = 0;

  try {
    SearchBudget budget{ctx.opt.budget_nodes, 0};

    if (*alpha_cmd) {
      command = "alpha";
      SimpleGraph g = !a_hyper.empty()
                          ? orthogonality_graph(load_hypergraph_arg(ctx, a_hyper, "", ""))
                          : load_scenario_arg(ctx, a_rays, a_builtin).orthogonality;
      IndependenceResult r = independence_number(g, &budget);
      results["alpha"] = r.size;
      results["witness"] = witness_json(r.witness);
    } else if (*col_cmd) {
      command = "colourable";
      Hypergraph h = load_hypergraph_arg(ctx, c_hyper, c_rays, c_builtin);
      ColourabilityResult r = ks_colourable(h, &budget);
      results["colourable"] = r.colourable;
      if (r.witness) {
        json ones = json::array();
        for (int i = 0; i < h.vertex_count(); ++i)
          if (r.witness->assignment[i]) ones.push_back(h.vertex(i));
        results["witness_ones"] = std::move(ones);
      }
    } else if (*info_cmd) {
      command = "channel-info";
      auto [n, builtin_enc] = load_channel_arg(ctx, ci_channel);
      Hypergraph h = channel_hypergraph(n);
      results["inputs"] = n.input_count();
      results["outputs"] = n.output_count();
      results["hyperedges"] = h.edge_count();
      auto k = regularity(h);
      results["regularity"] = k ? json(*k) : json(nullptr);
      results["output_uniform"] = n.is_output_uniform();
      results["zero_error_capacity"] = zero_error_capacity(n, &budget);
      results["confusability_complete"] = confusability_graph(n).is_complete();
      if (!ci_encoding.empty() || builtin_enc) {
        Encoding e = load_encoding_arg(ctx, ci_encoding, builtin_enc);
        auto violations = validate_encoding(n, e);
        results["encoding_valid"] = violations.empty();
        json v = json::array();
        for (const auto& viol : violations) v.push_back(viol.detail);
        if (!violations.empty()) results["encoding_violations"] = std::move(v);
        auto [lo, hi] = eta_range(n, e);
        results["eta_min"] = to_fraction_string(lo);
        results["eta_max"] = to_fraction_string(hi);
        ZeroErrorCodeResult z = admits_zero_error_code(n, e, &budget);
        results["admits_zero_error_code"] = z.admits;
        if (z.admits) results["zero_error_witness"] = witness_json(z.witness);
      }
    } else if (*cb_cmd) {
      command = "classical-bound";
      auto [n, builtin_enc] = load_channel_arg(ctx, cb_channel);
      Encoding e = load_encoding_arg(ctx, cb_encoding, builtin_enc);
      MessageEnsemble p = load_ensemble_arg(ctx, cb_ensemble, e);
      ClassicalBound b = classical_max(n, e.messages, p, &budget);
      results = json::parse(classical_bound_to_json(b, e.messages, n.outputs()));
    } else if (*gb_cmd) {
      command = "cig-bound";
      auto [n, builtin_enc] = load_channel_arg(ctx, gb_channel);
      Encoding e = load_encoding_arg(ctx, gb_encoding, builtin_enc);
      MessageEnsemble p = load_ensemble_arg(ctx, gb_ensemble, e);
      CigBound b = cig_classical_max(n, e, p, ctx.opt.vertex_cap);
      results = json::parse(cig_bound_to_json(b, e, n.inputs()));
    } else if (*be_cmd) {
      command = "beta";
      Hypergraph gamma = load_hypergraph_arg(ctx, be_hyper, be_rays, be_builtin);
      Encoding e;
      if (!be_encoding.empty()) {
        std::optional<Encoding> none;
        e = load_encoding_arg(ctx, be_encoding, none);
      } else if (!be_builtin.empty() && be_builtin == "peres24") {
        Scenario s = load_builtin("peres24");
        for (std::size_t i = 0; i < s.dotted.size(); ++i) {
          e.messages.push_back("m" + std::to_string(i));
          e.classes.push_back(s.hypergraph.names(s.hypergraph.edge(s.dotted[i])));
        }
      } else {
        throw InputError("beta needs --encoding (classes must be hyperedges)");
      }
      MessageEnsemble p = load_ensemble_arg(ctx, be_ensemble, e);
      BetaBound b = beta(gamma, e, p,
                         be_method == "lp" ? BoundMethod::LinearizedLp : BoundMethod::VertexEnum,
                         ctx.opt.vertex_cap, ctx.opt.threads);
      results = json::parse(beta_bound_to_json(b, e, gamma.vertices()));
    } else if (*sim_cmd) {
      command = "simulate";
      if (sim_strategy == "prevedel" || sim_strategy == "pr") {
        ClassicalChannel n = prevedel_channel();
        Encoding e = prevedel_encoding();
        MessageEnsemble p = load_ensemble_arg(ctx, sim_ensemble, e);
        auto [strat, wiring] = prevedel_strategy();
        if (sim_strategy == "prevedel")
          results["strategy_violations"] = validate_strategy(strat, ctx.opt.tolerance).size();
        CorrelationBox raw = sim_strategy == "pr" ? pr_box() : box_from_strategy(strat);
        CorrelationBox eff = effective_box(raw, wiring, n, e.messages);
        double s = success_probability(n, p, eff);
        results["strategy"] = sim_strategy;
        results["S"] = s;
        results["S_CHSH"] = chsh_value(raw);
        results["S_decomposition"] = prevedel_decomposition(raw);
        results["no_signalling_defect"] = no_signalling_defect(eff);
      } else if (sim_strategy == "cubitt") {
        Scenario sc = load_builtin("peres24");
        auto [n, e] = channel_from_scenario(sc.hypergraph, sc.dotted);
        MessageEnsemble p = load_ensemble_arg(ctx, sim_ensemble, e);
        auto [strat, wiring] = cubitt_strategy(sc, sim_visibility);
        results["strategy_violations"] = validate_strategy(strat, ctx.opt.tolerance).size();
        CorrelationBox raw = box_from_strategy(strat);
        CorrelationBox eff = effective_box(raw, wiring, n, e.messages);
        CigTables tables = cig_tables_from_box(n, raw, e.messages);
        results["strategy"] = "cubitt";
        results["visibility"] = sim_visibility;
        results["S"] = success_probability(n, p, eff);
        results["S_cig"] = success_probability_cig(n, e, p, tables);
        results["Corr"] = corr(n, e, p, tables);
        results["cig_violation"] = tables.max_cig_violation;
      } else {
        if (sim_box.empty() || sim_channel.empty())
          throw InputError("simulate --strategy file needs --box and --channel");
        auto [n, builtin_enc] = load_channel_arg(ctx, sim_channel);
        Encoding e = load_encoding_arg(ctx, sim_encoding, builtin_enc);
        MessageEnsemble p = load_ensemble_arg(ctx, sim_ensemble, e);
        CorrelationBox eff = box_from_json(ctx.slurp(sim_box));
        results["strategy"] = "file";
        results["box_violations"] = validate_box(eff, ctx.opt.tolerance).size();
        results["S"] = success_probability(n, p, eff);
        results["no_signalling_defect"] = no_signalling_defect(eff);
      }
    } else if (*game_cmd) {
      auto [n, builtin_enc] = load_channel_arg(ctx, g_channel);
      Encoding e;
      if (!g_encoding.empty()) {
        std::optional<Encoding> none;
        e = load_encoding_arg(ctx, g_encoding, none);
      } else if (builtin_enc) {
        e = *builtin_enc;
      } else if (g_messages > 0) {
        for (int m = 0; m < g_messages; ++m) {
          e.messages.push_back("m" + std::to_string(m));
          e.classes.push_back({});
        }
      } else {
        throw InputError("game needs --encoding or --messages for a file channel");
      }
      MessageEnsemble p = load_ensemble_arg(ctx, g_ensemble, e);
      if (*g_build) {
        command = "game build";
        GameSpec g = build_game(n, e.messages, p);
        std::string text = game_to_json(g);
        if (!g_out.empty()) {
          write_file(g_out, text);
          results["written"] = g_out;
        } else {
          results["game"] = json::parse(text);
        }
        results["questions"] = {{"alice", e.message_count()}, {"bob", n.output_count()}};
      } else if (*g_local) {
        command = "game local-bound";
        GameSpec g = build_game(n, e.messages, p);
        LocalBound lb = local_max(g, &budget);
        ClassicalBound cb = classical_max(n, e.messages, p, &budget);
        auto k = regularity(channel_hypergraph(n));
        Rational frac = make_rational(*k, n.output_count());
        Rational affine = Rational(1) - frac + frac * cb.value;
        results["local_max"] = to_fraction_string(lb.value);
        results["affine_image_of_classical_max"] = to_fraction_string(affine);
        results["routes_agree"] = lb.value == affine;
        results["alice_strategy"] = witness_json(lb.alice_strategy);
        results["bob_strategy"] = witness_json(lb.bob_strategy);
        if (lb.value != affine) exit_code = 1;
      } else if (*g_affine) {
        command = "game affine-check";
        bruteforce::Rng rng(ctx.opt.seed);
        double worst = 0.0;
        for (int i = 0; i < g_boxes; ++i) {
          CorrelationBox box =
              bruteforce::random_local_box(rng, e.messages, n.inputs(), n.outputs(), e.messages, 12);
          worst = std::max(worst, affine_check(n, p, box));
        }
        results["boxes"] = g_boxes;
        results["worst_residual"] = worst;
        results["pass"] = worst < 1e-12;
        if (worst >= 1e-12) exit_code = 1;
      } else {
        throw InputError("game needs a subcommand: build, local-bound, affine-check");
      }
    } else if (*ks_cmd) {
      Scenario s = load_scenario_arg(ctx, k_rays, k_builtin);
      if (*k_bases) {
        command = "ks bases";
        results["rays"] = s.vectors.size();
        results["complete_bases"] = s.hypergraph.edge_count();
        results["incomplete_bases"] = s.incomplete.size();
        json complete = json::array();
        for (const Bits& e : s.hypergraph.edges())
          complete.push_back(witness_json(s.hypergraph.names(e)));
        results["complete"] = std::move(complete);
        json incomplete = json::array();
        for (const Bits& b : s.incomplete) {
          std::vector<std::string> names;
          b.for_each([&](int i) { names.push_back(s.vectors.labels[i]); });
          incomplete.push_back(witness_json(names));
        }
        results["incomplete"] = std::move(incomplete);
        if (!s.small_maximal.empty()) {
          // Maximal orthogonal sets too small to complete with one ray.
          json small = json::array();
          for (const Bits& b : s.small_maximal) {
            std::vector<std::string> names;
            b.for_each([&](int i) { names.push_back(s.vectors.labels[i]); });
            small.push_back(witness_json(names));
          }
          results["small_maximal"] = std::move(small);
        }
      } else if (*k_complete) {
        command = "ks complete";
        std::vector<RatVec> partial;
        std::stringstream ss(k_ids);
        std::string id;
        while (std::getline(ss, id, ','))
          partial.push_back(s.vectors.rays[s.vectors.index_of(id)]);
        RatVec mate = complete_basis(partial);
        json coords = json::array();
        for (const auto& q : mate) coords.push_back(to_fraction_string(q));
        results["completion"] = std::move(coords);
        for (int i = 0; i < s.vectors.size(); ++i)
          if (projective_canonical(s.vectors.rays[i]) == mate)
            results["matches_ray"] = s.vectors.labels[i];
      } else if (*k_disjoint) {
        command = "ks disjoint";
        DisjointBasesResult r = max_disjoint_bases(s, 10'000, &budget);
        results["max_size"] = r.size;
        results["family_count"] = r.witness_count;
        results["witnesses_truncated"] = r.witnesses_truncated;
        if (!r.witnesses.empty()) {
          json fam = json::array();
          for (const auto& unit : r.witnesses.front()) {
            std::vector<std::string> names;
            Bits b = unit.complete ? s.hypergraph.edge(unit.index) : s.incomplete[unit.index];
            b.for_each([&](int i) { names.push_back(s.vectors.labels[i]); });
            json u;
            u["complete"] = unit.complete;
            u["rays"] = witness_json(names);
            fam.push_back(std::move(u));
          }
          results["first_witness"] = std::move(fam);
        }
      } else if (*k_ksbasis) {
        command = "ks ksbasis";
        KsBasisSetResult r = ks_basis_set_search(s, k_qmin, &budget);
        results["found"] = r.found;
        if (r.found) {
          json fam = json::array();
          for (int e : r.family) fam.push_back(witness_json(s.hypergraph.names(s.hypergraph.edge(e))));
          results["family"] = std::move(fam);
          results["refutation_nodes"] = r.refutation.nodes;
        }
      } else {
        throw InputError("ks needs a subcommand: bases, complete, disjoint, ksbasis");
      }
    } else if (*va_cmd) {
      command = "verify-appendix-f";
      AppendixFReport rep = va_rays.empty()
                                ? verify_conway_kochen()
                                : verify_conway_kochen(rayset_from_json(ctx.slurp(va_rays)));
      results = json::parse(rep.to_json_string());
      if (!rep.all_pass()) exit_code = 1;
    } else if (*ps_cmd) {
      command = "paper-suite";
      papersuite::SuiteResult suite;
      if (ps_criterion != 0) {
        suite.criteria.push_back(
            papersuite::run_criterion(ps_criterion, ctx.opt.threads, ctx.opt.seed));
      } else {
        suite = papersuite::run_all(ctx.opt.threads, ctx.opt.seed);
      }
      json arr = json::array();
      for (const auto& c : suite.criteria) {
        out << "[" << (c.pass ? "PASS" : "FAIL") << "] criterion " << c.id << ": " << c.name
            << "\n";
        arr.push_back({{"id", c.id},
                       {"name", c.name},
                       {"pass", c.pass},
                       {"detail", c.detail},
                       {"seconds", c.seconds}});
      }
      results["criteria"] = std::move(arr);
      results["all_pass"] = suite.all_pass();
      if (!suite.all_pass()) exit_code = 1;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  auto stop = std::chrono::steady_clock::now();
  emit(out, ctx.opt, command, ctx.digest, std::chrono::duration<double>(stop - start).count(),
       results);
  return exit_code;
}

}  // namespace oneshot::cli
