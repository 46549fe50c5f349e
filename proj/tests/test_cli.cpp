#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"
#include "oneshot/io.hpp"
#include "oneshot/strategy.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = oneshot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// The report body with timing stripped; used for determinism checks.
std::string strip_timing(const std::string& text) {
  std::string result;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("elapsed-ms:", 0) == 0) continue;
    if (line.find("\"elapsed_ms\"") != std::string::npos) continue;
    result += line + "\n";
  }
  return result;
}

}  // namespace

TEST_CASE("alpha subcommand on builtin data") {
  CliRun r = run_cli({"alpha", "--builtin", "ck31"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha: 11") != std::string::npos);
}

TEST_CASE("unknown builtin is an input error with exit 2") {
  CliRun r = run_cli({"alpha", "--builtin", "nope"});
  CHECK(r.code == 2);
  CHECK(r.err.find("input error") != std::string::npos);
}

TEST_CASE("missing file is an input error") {
  CliRun r = run_cli({"alpha", "--hypergraph", "/nonexistent/file.json"});
  CHECK(r.code == 2);
}

TEST_CASE("tiny budget exits with code 3") {
  CliRun r = run_cli({"alpha", "--builtin", "ck31", "--budget-nodes", "2"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("classical bound on the builtin channels") {
  CliRun r = run_cli({"classical-bound", "--channel", "builtin:prevedel"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 5/6") != std::string::npos);
}

TEST_CASE("json and text formats carry the same values") {
  CliRun text = run_cli({"classical-bound", "--channel", "builtin:prevedel"});
  CliRun json_run =
      run_cli({"classical-bound", "--channel", "builtin:prevedel", "--format", "json"});
  CHECK(text.code == 0);
  CHECK(json_run.code == 0);
  auto j = nlohmann::json::parse(json_run.out);
  CHECK(j["results"]["value"] == "5/6");
  CHECK(text.out.find("value: 5/6") != std::string::npos);
  // JSON rationals are strings, never floats.
  CHECK(j["results"]["value"].is_string());
}

TEST_CASE("reports are deterministic modulo timing") {
  CliRun a = run_cli({"beta", "--builtin", "peres24", "--format", "json"});
  CliRun b = run_cli({"beta", "--builtin", "peres24", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("thread count never changes reported values") {
  CliRun one = run_cli({"beta", "--builtin", "peres24", "--method", "lp", "--threads", "1"});
  CliRun two = run_cli({"beta", "--builtin", "peres24", "--method", "lp", "--threads", "2"});
  CHECK(strip_timing(one.out) == strip_timing(two.out));
  CHECK(one.out.find("value: 2/3") != std::string::npos);
}

TEST_CASE("simulate strategies") {
  CliRun prevedel = run_cli({"simulate", "--strategy", "prevedel"});
  CHECK(prevedel.code == 0);
  CHECK(prevedel.out.find("S: 0.902368927") != std::string::npos);
  CHECK(prevedel.out.find("strategy_violations: 0") != std::string::npos);
  CliRun pr = run_cli({"simulate", "--strategy", "pr"});
  CHECK(pr.out.find("S: 1") != std::string::npos);
  CliRun file_missing = run_cli({"simulate", "--strategy", "file"});
  CHECK(file_missing.code == 2);
}

TEST_CASE("simulate from an effective-box file") {
  // Wire the PR box through the two-bit protocol, save the effective box,
  // and feed the file back through the CLI.
  using namespace oneshot;
  ClassicalChannel n = prevedel_channel();
  Encoding e = prevedel_encoding();
  auto [strat, wiring] = prevedel_strategy();
  CorrelationBox eff = effective_box(pr_box(), wiring, n, e.messages);
  std::string box_path = "/tmp/oneshot_test_box.json";
  std::string chan_path = "/tmp/oneshot_test_channel.json";
  std::string enc_path = "/tmp/oneshot_test_encoding.json";
  write_file(box_path, box_to_json(eff));
  write_file(chan_path, channel_to_json(n));
  write_file(enc_path, encoding_to_json(e));
  CliRun r = run_cli({"simulate", "--strategy", "file", "--box", box_path, "--channel", chan_path,
                      "--encoding", enc_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("S: 1") != std::string::npos);
  CHECK(r.out.find("box_violations: 0") != std::string::npos);
}

TEST_CASE("verify-appendix-f passes and exits zero") {
  CliRun r = run_cli({"verify-appendix-f", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["all_pass"] == true);
}

TEST_CASE("game subcommands") {
  CliRun local = run_cli({"game", "local-bound", "--channel", "builtin:prevedel"});
  CHECK(local.code == 0);
  CHECK(local.out.find("local_max: 11/12") != std::string::npos);
  CHECK(local.out.find("routes_agree: true") != std::string::npos);

  CliRun affine =
      run_cli({"game", "affine-check", "--channel", "builtin:prevedel", "--boxes", "20"});
  CHECK(affine.code == 0);
  CHECK(affine.out.find("pass: true") != std::string::npos);
}

TEST_CASE("ks subcommands") {
  CliRun disjoint = run_cli({"ks", "disjoint", "--builtin", "ck31"});
  CHECK(disjoint.code == 0);
  CHECK(disjoint.out.find("max_size: 13") != std::string::npos);

  CliRun complete = run_cli({"ks", "complete", "--builtin", "ck31", "--ids", "1,14"});
  CHECK(complete.code == 0);
  CHECK(complete.out.find("completion") != std::string::npos);

  CliRun ksb = run_cli({"ks", "ksbasis", "--builtin", "peres24", "--qmin", "6"});
  CHECK(ksb.code == 0);
  CHECK(ksb.out.find("found: true") != std::string::npos);
}

TEST_CASE("game build writes a loadable file") {
  std::string path = "/tmp/oneshot_test_game.json";
  CliRun r = run_cli({"game", "build", "--channel", "builtin:prevedel", "--output", path});
  CHECK(r.code == 0);
  auto g = oneshot::game_from_json(oneshot::read_file(path));
  CHECK(g.alice_questions.size() == 2);
  CHECK(g.bob_questions.size() == 6);
}

TEST_CASE("channel-info and cig-bound subcommands") {
  CliRun info = run_cli({"channel-info", "--channel", "builtin:cubitt"});
  CHECK(info.code == 0);
  CHECK(info.out.find("zero_error_capacity: 5") != std::string::npos);
  CHECK(info.out.find("regularity: 3") != std::string::npos);
  CHECK(info.out.find("eta_min: 1/3") != std::string::npos);
  CHECK(info.out.find("admits_zero_error_code: false") != std::string::npos);

  CliRun cig = run_cli({"cig-bound", "--channel", "builtin:prevedel"});
  CHECK(cig.code == 0);
  CHECK(cig.out.find("value: 2/3") != std::string::npos);
}

TEST_CASE("help succeeds") {
  CliRun r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("paper-suite") != std::string::npos);
}
