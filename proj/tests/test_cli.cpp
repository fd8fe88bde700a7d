#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "drd/cli.hpp"
#include "drd/instance_io.hpp"
#include "oracles.hpp"

using namespace drd;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = cli::dispatch(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::string& sample_text() {
  static const std::string text = serialize_instance(oracle::sample7());
  return text;
}

}  // namespace

TEST_CASE("solve seven-vertex sample from stdin") {
  const auto r = run({"solve", "--rule", "ceil", "--input", "-"}, sample_text());
  CHECK(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["rule"] == "ceil");
  CHECK(j["gamma"] == 3);
  CHECK(j["set"] == json::array({1, 2, 4}));
  CHECK(j["method"] == "brute_force");
  CHECK(r.out.rfind("{\"rule\":\"ceil\",\"gamma\":3,\"set\":[1,2,4]", 0) == 0);

  const auto bnb = run({"solve", "--rule", "translate", "--method", "bnb", "--input", "-"}, sample_text());
  CHECK(json::parse(bnb.out)["gamma"] == 2);
  CHECK(json::parse(bnb.out)["method"] == "branch_and_bound");
}

TEST_CASE("solve K1 under each rule") {
  for (const char* rule : {"ceil", "floor", "translate", "classic"}) {
    const auto r = run({"solve", "--rule", rule, "--input", "-"}, "p drd 1 0\nf 1\n");
    CHECK(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["gamma"] == 1);
    CHECK(j["set"] == json::array({1}));
  }
  // Minimum degree 0 admits no k-part rule.
  CHECK(run({"solve", "--rule", "kpart:1", "--input", "-"}, "p drd 1 0\nf 1\n").code == cli::kUsage);
}

TEST_CASE("validate") {
  const auto ok = run({"validate", "--rule", "translate", "--input", "-", "--set", "3,4"}, sample_text());
  CHECK(ok.code == cli::kOk);
  const auto j = json::parse(ok.out);
  CHECK(j["feasible"] == true);
  CHECK(j["minimal"] == true);
  CHECK(j["assignment"].size() == 5);

  const auto miss = run({"validate", "--rule", "classic", "--input", "-", "--set", "4"}, sample_text());
  CHECK(miss.code == cli::kNegative);
  const auto m = json::parse(miss.out);
  CHECK(m["feasible"] == false);
  CHECK(m["uncovered"] == json::array({3}));
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"solve"}).code == cli::kUsage);
  CHECK(run({"solve", "--input", "-", "--rule", "median"}, sample_text()).code == cli::kUsage);
  CHECK(run({"solve", "--input", "-", "--rule", "kpart:2"}, sample_text()).code == cli::kUsage);
  const auto bad = run({"solve", "--input", "-"}, "p drd 2 1\nf 1 1\n");
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("CountMismatch") != std::string::npos);
  CHECK(run({"solve", "--input", "/nonexistent/file.drd"}).code == cli::kUsage);
  CHECK(run({"check", "--theorems", "T1"}).code == cli::kUsage);
  CHECK(run({"validate", "--input", "-", "--set", "1,x"}, sample_text()).code == cli::kUsage);
  CHECK(run({"validate", "--input", "-", "--set", "9"}, sample_text()).code == cli::kUsage);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == cli::kOk); }

TEST_CASE("gen emits a parseable instance") {
  const auto r = run({"gen", "caterpillar:1,2,1", "--f", "degrees"});
  CHECK(r.code == cli::kOk);
  const auto inst = parse_instance(r.out);
  CHECK(inst.order() == 7);
  CHECK(inst.k(2) == 4);
  CHECK(run({"gen", "cycle:2"}).code == cli::kUsage);
}

TEST_CASE("radius") {
  const auto c6 = run({"gen", "cycle:6"}).out;
  const auto r = run({"radius", "--input", "-", "--subset", "1,4"}, c6);
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "{\"subset\":[1,4],\"radius\":3}\n");
  CHECK(run({"radius", "--input", "-", "--subset", "2"}, c6).out == "{\"subset\":[2],\"radius\":null}\n");
}

TEST_CASE("check corpus and counterexample files") {
  const std::vector<std::string> args{"check", "--theorems", "T1,D1", "--corpus", "gnp:9,0.35,5",
                                      "--trials", "20", "--seed", "5"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["instances"] == 20);
  CHECK(j["results"]["T1"]["pass"] == 20);

  const auto dir = std::filesystem::temp_directory_path() / "drd_cli_cx";
  std::filesystem::remove_all(dir);
  const auto f = run({"check", "--theorems", "T9", "--corpus", "path:4", "--f", "ones", "--counterexample-dir",
                      dir.string()});
  CHECK(f.code == cli::kNegative);
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    CHECK(entry.path().filename().string().rfind("T9-", 0) == 0);
    std::ifstream in(entry.path());
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("# violated T9", 0) == 0);
    const auto replay = run({"check", "--theorems", "T9", "--input", entry.path().string()});
    CHECK(replay.code == cli::kNegative);
  }
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}
