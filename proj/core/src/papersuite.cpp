#include "oneshot/papersuite.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oneshot/bounds.hpp"
#include "oneshot/bruteforce.hpp"
#include "oneshot/game.hpp"
#include "oneshot/io.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/strategy.hpp"

namespace oneshot::papersuite {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
  void note(const std::string& what) { detail << what << "; "; }
};

double tsirelson_s() { return 1.0 / 3.0 + (2.0 + std::numbers::sqrt2) / 6.0; }

struct CubittSetup {
  Scenario scenario;
  ClassicalChannel channel;
  Encoding encoding;
  MessageEnsemble prior;
  std::vector<std::string> messages;
};

CubittSetup cubitt_setup() {
  CubittSetup s{load_builtin("peres24"), prevedel_channel(), Encoding{}, MessageEnsemble{}, {}};
  auto [channel, encoding] = channel_from_scenario(s.scenario.hypergraph, s.scenario.dotted);
  s.channel = std::move(channel);
  s.encoding = std::move(encoding);
  s.prior = MessageEnsemble::uniform(s.encoding.message_count());
  s.messages = s.encoding.messages;
  return s;
}

// Criterion 1: the two-bit complete-confusability channel suite.
void criterion1(Check& c, std::uint64_t seed) {
  ClassicalChannel n = prevedel_channel();
  Encoding enc = prevedel_encoding();
  MessageEnsemble p = MessageEnsemble::uniform(2);

  ClassicalBound cl = classical_max(n, enc.messages, p);
  c.expect(cl.value == make_rational(5, 6), "classical_max == 5/6 exactly");
  c.note("classical_max = " + to_fraction_string(cl.value));

  auto [strat, wiring] = prevedel_strategy();
  CorrelationBox raw = box_from_strategy(strat);
  CorrelationBox eff = effective_box(raw, wiring, n, enc.messages);
  double s_quantum = success_probability(n, p, eff);
  c.expect(std::abs(s_quantum - tsirelson_s()) <= 1e-9,
           "quantum strategy S within 1e-9 of 1/3 + (2+sqrt2)/6");
  c.note("S_quantum = " + std::to_string(s_quantum));

  CorrelationBox pr = pr_box();
  CorrelationBox pr_eff = effective_box(pr, wiring, n, enc.messages);
  double s_pr = success_probability(n, p, pr_eff);
  c.expect(std::abs(s_pr - 1.0) <= 1e-12, "PR-box wired S == 1 within 1e-12");

  bruteforce::Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    CorrelationBox box = bruteforce::random_ns_chsh_box(rng);
    CorrelationBox wired = effective_box(box, wiring, n, enc.messages);
    double lhs = success_probability(n, p, wired);
    double rhs = 1.0 / 3.0 + (2.0 / 3.0) * chsh_value(box);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  c.expect(worst <= 1e-12, "S = 1/3 + (2/3) S_CHSH across 100 random no-signalling boxes");
  c.note("worst CHSH-relation residual = " + std::to_string(worst));
}

// Criterion 2: the 24-input KS channel suite.
void criterion2(Check& c) {
  CubittSetup s = cubitt_setup();
  c.expect(s.encoding.message_count() == 6, "6 messages");

  auto [strat, wiring] = cubitt_strategy(s.scenario);
  c.expect(validate_strategy(strat).empty(), "strategy passes validation");
  CorrelationBox raw = box_from_strategy(strat);
  CorrelationBox eff = effective_box(raw, wiring, s.channel, s.messages);
  double s_quantum = success_probability(s.channel, s.prior, eff);
  c.expect(std::abs(s_quantum - 1.0) <= 1e-9, "S == 1 within 1e-9 for q = 6 uniform");
  c.note("S_quantum = " + std::to_string(s_quantum));

  int alpha = zero_error_capacity(s.channel);
  int alpha_oracle = bruteforce::independence_number_exhaustive(confusability_graph(s.channel));
  c.expect(alpha == 5 && alpha_oracle == 5, "zero-error capacity == 5 (search and oracle)");

  ClassicalBound cl = classical_max(s.channel, s.messages, s.prior);
  int best_union = bruteforce::max_support_union_exhaustive(s.channel, 6);
  Rational oracle_value = Rational(best_union) / Rational(18);
  c.expect(cl.value == oracle_value, "classical_max matches the exhaustive oracle exactly");
  c.note("classical_max = " + to_fraction_string(cl.value));
  c.expect(s_quantum > to_double(cl.value) + 1e-6, "S_quantum strictly above classical_max");

  CigTables tables = cig_tables_from_box(s.channel, raw, s.messages);
  double corr_value = corr(s.channel, s.encoding, s.prior, tables);
  c.expect(std::abs(corr_value - 1.0) <= 1e-9, "Corr == 1 within 1e-9");
  c.note("Corr = " + std::to_string(corr_value));
}

// Criterion 3: game mapping identity on both channels.
void criterion3(Check& c, int threads, std::uint64_t seed) {
  (void)threads;
  bruteforce::Rng rng(seed + 1);

  {
    ClassicalChannel n = prevedel_channel();
    Encoding enc = prevedel_encoding();
    MessageEnsemble p = MessageEnsemble::uniform(2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      CorrelationBox box = bruteforce::random_local_box(rng, enc.messages, n.inputs(),
                                                        n.outputs(), enc.messages, 12);
      worst = std::max(worst, affine_check(n, p, box));
    }
    c.expect(worst <= 1e-12, "affine identity < 1e-12 on 100 boxes (two-bit channel)");
    c.note("worst residual (two-bit) = " + std::to_string(worst));

    GameSpec g = build_game(n, enc.messages, p);
    LocalBound lb = local_max(g);
    ClassicalBound cl = classical_max(n, enc.messages, p);
    Rational frac = make_rational(3, 6);
    Rational expect = Rational(1) - frac + frac * cl.value;
    c.expect(lb.value == expect, "local_max equals the affine image exactly (two-bit channel)");
    c.note("local_max = " + to_fraction_string(lb.value));
  }

  {
    CubittSetup s = cubitt_setup();
    MessageEnsemble p = s.prior;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      CorrelationBox box = bruteforce::random_local_box(rng, s.messages, s.channel.inputs(),
                                                        s.channel.outputs(), s.messages, 16);
      worst = std::max(worst, affine_check(s.channel, p, box));
    }
    c.expect(worst <= 1e-12, "affine identity < 1e-12 on 100 boxes (KS channel)");
    c.note("worst residual (KS) = " + std::to_string(worst));

    GameSpec g = build_game(s.channel, s.messages, p);
    LocalBound lb = local_max(g);
    ClassicalBound cl = classical_max(s.channel, s.messages, p);
    Rational frac = make_rational(3, 18);
    Rational expect = Rational(1) - frac + frac * cl.value;
    c.expect(lb.value == expect, "local_max equals the affine image exactly (KS channel)");
    c.note("local_max = " + to_fraction_string(lb.value));
  }
}

// Criterion 4: Conway-Kochen reproduction.
void criterion4(Check& c) {
  AppendixFReport rep = verify_conway_kochen();
  for (const auto& claim : rep.claims)
    c.expect(claim.pass, claim.name + (claim.detail.empty() ? "" : " (" + claim.detail + ")"));
  c.note(std::to_string(rep.claims.size()) + " claims");
}

// Criterion 5: contextuality bounds and the noise sweep.
void criterion5(Check& c, int threads) {
  {
    ClassicalChannel n = prevedel_channel();
    Encoding enc = prevedel_encoding();
    MessageEnsemble p = MessageEnsemble::uniform(2);
    Hypergraph gamma = channel_hypergraph(n);
    BetaBound b = beta(gamma, enc, p, BoundMethod::VertexEnum);
    c.expect(b.value == make_rational(1, 2), "beta(two-bit scenario) == 1/2 exactly");
  }

  CubittSetup s = cubitt_setup();
  Encoding dotted_enc;
  for (std::size_t i = 0; i < s.scenario.dotted.size(); ++i) {
    dotted_enc.messages.push_back(s.encoding.messages[i]);
    dotted_enc.classes.push_back(
        s.scenario.hypergraph.names(s.scenario.hypergraph.edge(s.scenario.dotted[i])));
  }
  BetaBound peres_beta =
      beta(s.scenario.hypergraph, dotted_enc, s.prior, BoundMethod::VertexEnum, 1'000'000, threads);
  c.expect(peres_beta.value < 1, "beta(KS scenario) < 1 exactly");
  c.note("beta = " + to_fraction_string(peres_beta.value));

  auto corr_at = [&](double v) {
    auto [strat, wiring] = cubitt_strategy(s.scenario, v);
    CorrelationBox raw = box_from_strategy(strat);
    CigTables tables = cig_tables_from_box(s.channel, raw, s.messages);
    return corr(s.channel, s.encoding, s.prior, tables);
  };

  double corr_ideal = corr_at(1.0);
  auto [eta_min, eta_max] = eta_range(s.channel, s.encoding);
  NoncontextualVerdict verdict =
      check_noncontextual_bounds(corr_ideal, peres_beta.value, eta_min, eta_max, 1.0);
  c.expect(verdict.corr_violation, "ideal strategy violates Corr <= beta");
  c.note("Corr margin = " + std::to_string(verdict.corr_margin));

  double beta_d = to_double(peres_beta.value);
  double lo = 0.0, hi = 1.0;
  double f_lo = corr_at(lo) - beta_d, f_hi = corr_at(hi) - beta_d;
  c.expect(f_lo < 0 && f_hi > 0, "bisection bracket: Corr(0) < beta < Corr(1)");
  while (hi - lo > 1e-6) {
    double mid = (lo + hi) / 2;
    if (corr_at(mid) - beta_d >= 0)
      hi = mid;
    else
      lo = mid;
  }
  double vstar = (lo + hi) / 2;
  double residual = std::abs(corr_at(vstar) - beta_d);
  c.expect(hi - lo <= 1e-6 && residual <= 1e-5,
           "bisection locates Corr(v*) = beta to within 1e-6");
  c.note("v* = " + std::to_string(vstar) + ", |Corr(v*) - beta| = " + std::to_string(residual));
}

// Criterion 6: oracle equivalence.
void criterion6(Check& c, int threads, std::uint64_t seed) {
  bruteforce::Rng rng(seed + 2);
  int alpha_mismatch = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 4 + rng.below(17);  // 4..20
    double density = 0.15 + 0.7 * rng.unit();
    SimpleGraph g = bruteforce::random_graph(rng, n, density);
    if (independence_number(g).size != bruteforce::independence_number_exhaustive(g))
      ++alpha_mismatch;
  }
  c.expect(alpha_mismatch == 0, "independence_number matches exhaustive scan on 200 graphs");

  int colour_mismatch = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 4 + rng.below(17);
    int edges = 2 + rng.below(2 * n);
    Hypergraph h = bruteforce::random_hypergraph(rng, n, edges, 4);
    if (ks_colourable(h).colourable != bruteforce::ks_colourable_exhaustive(h))
      ++colour_mismatch;
  }
  c.expect(colour_mismatch == 0, "ks_colourable matches exhaustive scan on 200 hypergraphs");

  // beta: vertex enumeration vs linearized LPs, exact equality.
  int beta_checked = 0, beta_mismatch = 0;
  {
    ClassicalChannel n = prevedel_channel();
    Encoding enc = prevedel_encoding();
    MessageEnsemble p = MessageEnsemble::uniform(2);
    Hypergraph gamma = channel_hypergraph(n);
    BetaBound v = beta(gamma, enc, p, BoundMethod::VertexEnum);
    BetaBound l = beta(gamma, enc, p, BoundMethod::LinearizedLp, 1'000'000, threads);
    ++beta_checked;
    if (v.value != l.value) ++beta_mismatch;
  }
  {
    Scenario s = load_builtin("peres24");
    Encoding enc;
    for (std::size_t i = 0; i < s.dotted.size(); ++i) {
      enc.messages.push_back("m" + std::to_string(i));
      enc.classes.push_back(s.hypergraph.names(s.hypergraph.edge(s.dotted[i])));
    }
    MessageEnsemble p = MessageEnsemble::uniform(enc.message_count());
    BetaBound v = beta(s.hypergraph, enc, p, BoundMethod::VertexEnum);
    BetaBound l = beta(s.hypergraph, enc, p, BoundMethod::LinearizedLp, 1'000'000, threads);
    ++beta_checked;
    if (v.value != l.value) ++beta_mismatch;
  }
  int attempts = 0;
  while (beta_checked < 32 && attempts < 400) {
    ++attempts;
    int nv = 4 + rng.below(7);  // 4..10 vertices
    Hypergraph h = bruteforce::random_hypergraph(rng, nv, 3 + rng.below(5), 3);
    if (!h.isolated_vertices().empty()) continue;
    // Disjoint hyperedges become the message classes.
    Encoding enc;
    Bits used;
    for (int e = 0; e < h.edge_count(); ++e) {
      if (h.edge(e).intersects(used)) continue;
      used |= h.edge(e);
      enc.messages.push_back("m" + std::to_string(enc.messages.size()));
      enc.classes.push_back(h.names(h.edge(e)));
      if (enc.message_count() == 2) break;
    }
    if (enc.message_count() == 0) continue;
    MessageEnsemble p = MessageEnsemble::uniform(enc.message_count());
    try {
      BetaBound v = beta(h, enc, p, BoundMethod::VertexEnum);
      BetaBound l = beta(h, enc, p, BoundMethod::LinearizedLp, 1'000'000, 1);
      ++beta_checked;
      if (v.value != l.value) ++beta_mismatch;
    } catch (const InputError&) {
      continue;  // no probabilistic model on this random scenario
    }
  }
  c.expect(beta_mismatch == 0, "beta routes agree exactly on all completed instances");
  c.expect(beta_checked >= 20, "enough beta instances completed");
  c.note("beta instances compared: " + std::to_string(beta_checked));
}

// Criterion 7: CIG consistency and the sandwich bounds.
void criterion7(Check& c) {
  CubittSetup s = cubitt_setup();
  auto [eta_min, eta_max] = eta_range(s.channel, s.encoding);
  double lo_eta = to_double(eta_min), hi_eta = to_double(eta_max);
  for (double v : {1.0, 0.9, 0.5, 0.0}) {
    auto [strat, wiring] = cubitt_strategy(s.scenario, v);
    CorrelationBox raw = box_from_strategy(strat);
    CorrelationBox eff = effective_box(raw, wiring, s.channel, s.messages);
    double s_direct = success_probability(s.channel, s.prior, eff);
    CigTables tables = cig_tables_from_box(s.channel, raw, s.messages);
    double s_cig = success_probability_cig(s.channel, s.encoding, s.prior, tables);
    double corr_v = corr(s.channel, s.encoding, s.prior, tables);
    std::string tag = " at v=" + std::to_string(v);
    c.expect(std::abs(s_direct - s_cig) <= 1e-9, "S and S_cig agree within 1e-9" + tag);
    double lower = corr_v + lo_eta * (1.0 - corr_v);
    double upper = corr_v + hi_eta * (1.0 - corr_v);
    c.expect(s_direct >= lower - 1e-9 && s_direct <= upper + 1e-9,
             "sandwich bounds hold within 1e-9" + tag);
    c.expect(tables.max_cig_violation <= 1e-9, "guess tables satisfy CIG within 1e-9" + tag);
  }
}

}  // namespace

CriterionResult run_criterion(int id, int threads, std::uint64_t seed) {
  static const char* names[] = {
      "two-bit channel suite (classical 5/6, Tsirelson S, PR wiring, CHSH relation)",
      "KS channel suite (S=1, capacity 5, exhaustive classical bound, Corr=1)",
      "game mapping (affine identity, local bound equals affine image)",
      "Conway-Kochen appendix reproduction",
      "contextuality bounds (beta values, Corr>beta, crossing visibility)",
      "oracle equivalence (independence, colourability, beta routes)",
      "context-independent guessing consistency",
  };
  if (id < 1 || id > 7) throw InputError("criterion id must be 1..7");
  CriterionResult res;
  res.id = id;
  res.name = names[id - 1];
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion1(check, seed); break;
      case 2: criterion2(check); break;
      case 3: criterion3(check, threads, seed); break;
      case 4: criterion4(check); break;
      case 5: criterion5(check, threads); break;
      case 6: criterion6(check, threads, seed); break;
      case 7: criterion7(check); break;
    }
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail << "exception: " << e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  res.seconds = std::chrono::duration<double>(stop - start).count();

  // Stated runtime limits are part of the criteria.
  if (id == 1 && res.seconds >= 5.0) {
    check.ok = false;
    check.detail << "runtime limit 5 s exceeded; ";
  }
  if (id == 2 && res.seconds >= 120.0) {
    check.ok = false;
    check.detail << "runtime limit 120 s exceeded; ";
  }
  if (id == 4 && res.seconds >= 60.0) {
    check.ok = false;
    check.detail << "runtime limit 60 s exceeded; ";
  }
  res.pass = check.ok;
  res.detail = check.detail.str();
  return res;
}

SuiteResult run_all(int threads, std::uint64_t seed) {
  SuiteResult out;
  for (int id = 1; id <= 7; ++id) out.criteria.push_back(run_criterion(id, threads, seed));
  return out;
}

}  // namespace oneshot::papersuite
