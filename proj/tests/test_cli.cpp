/*
 * Copyright 2026 The boundmu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boundmu/cli.hpp"
#include "boundmu/kripke.hpp"

using namespace boundmu;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("boundmu-cli-" + std::to_string(counter()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  static int counter() {
    static int n = 0;
    return ++n;
  }
};

std::string ones(int n) {
  std::string s;
  while (n-- > 0) s += "1\n";
  return s;
}

const char* kM1 = R"({"states":["a","b"],"edges":[["a","b"],["b","b"]],"val":{"p":["b"]}})";
const char* kAFp = "mu X. (p | []X)";

}  // namespace

TEST_CASE("eval verdicts and exit codes") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  Run r = run({"eval", "-m", m, "-f", kAFp});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out == "true\n");
  CHECK(run({"eval", "-m", m, "-f", "p"}).code == cli::kFalse);
  CHECK(run({"eval", "-m", m, "-f", "p", "-s", "b"}).code == cli::kTrue);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "bounded:1"}).code == cli::kFalse);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "bounded:2", "--mode", "exhaustive"}).code == cli::kTrue);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "omega"}).code == cli::kTrue);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "fbounded:1"}).code == cli::kTrue);
  CHECK(run({"eval", "-m", m, "-f", "mu X. X", "--semantics", "free"}).code == cli::kUndetermined);
  CHECK(run({"eval", "-m", m, "-f", "p", "--semantics", "free"}).code == cli::kFalse);
  const std::string ff = d.write("phi.txt", kAFp);
  CHECK(run({"eval", "-m", m, "--formula-file", ff}).code == cli::kTrue);
}

TEST_CASE("eval normalizes the formula") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  const Run r = run({"eval", "-m", m, "-f", "(mu X. p | <>X) & (mu X. <>X)", "--semantics", "bounded:3", "--json"});
  CHECK(r.code == cli::kFalse);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["formula"] == "(mu X. (p | (<> X))) & (mu X1. (<> X1))");
}

TEST_CASE("eval JSON report") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  const Run r = run({"eval", "-m", m, "-f", kAFp, "--semantics", "bounded:2", "--json", "--strategy", "--trace"});
  REQUIRE(r.code == cli::kTrue);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "true");
  CHECK(j["winner"] == "Eloise");
  CHECK(j["semantics"] == "bounded:2");
  CHECK(j["state"] == "a");
  CHECK(j["positions"].get<int>() > 0);
  CHECK(j["timings"].contains("load_ms"));
  CHECK(j["timings"].contains("solve_ms"));
  CHECK(j["strategy"]["player"] == "Eloise");
  CHECK_FALSE(j["strategy"]["moves"].empty());
  CHECK(j["trace"].back()["won"] == "Eloise");
  CHECK(j["trace"].front()["round"] == 0);

  const auto f = nlohmann::json::parse(run({"eval", "-m", m, "-f", kAFp, "--semantics", "fbounded:1", "--json"}).out);
  CHECK(f["f"] == 10);
  const auto u = nlohmann::json::parse(run({"eval", "-m", m, "-f", "mu X. X", "--semantics", "free", "--json"}).out);
  CHECK(u["verdict"] == "undetermined");
  CHECK(u["winner"].is_null());
}

TEST_CASE("eval text output with trace and strategy") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  const Run r = run({"eval", "-m", m, "-f", kAFp, "--trace", "--strategy"});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out.rfind("true\n", 0) == 0);
  CHECK(r.out.find("strategy (Eloise):") != std::string::npos);
  CHECK(r.out.find("won: Eloise") != std::string::npos);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "free", "--trace"}).code == cli::kError);
}

TEST_CASE("eval --check") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  const Run r = run({"eval", "-m", m, "-f", kAFp, "--check", "--json"});
  CHECK(r.code == cli::kTrue);
  CHECK(nlohmann::json::parse(r.out)["check"] == true);
}

TEST_CASE("errors map to exit codes") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "bounded:0"}).code == cli::kError);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--semantics", "lazy"}).code == cli::kError);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "--mode", "random"}).code == cli::kError);
  CHECK(run({"eval", "-m", m, "-f", kAFp, "-s", "zz"}).code == cli::kError);
  const Run bad = run({"eval", "-m", m, "-f", "p & $"});
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.find("offset 4") != std::string::npos);
  CHECK(run({"eval", "-m", (d.path / "missing.json").string(), "-f", "p"}).code == cli::kError);
  CHECK(run({"eval", "-m", m}).code == cli::kError);
  CHECK(run({"frobnicate"}).code == cli::kError);
  CHECK(run({}).code == cli::kError);
  const Run cap = run({"eval", "-m", m, "-f", kAFp, "--semantics", "bounded:4", "--cap", "3"});
  CHECK(cap.code == cli::kPositionCap);
  CHECK(run({"reduce", "-m", m, "-f", kAFp, "--cap", "2"}).code == cli::kPositionCap);
}

TEST_CASE("play") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  const Run r = run({"play", "-m", m, "-f", kAFp, "--gamma", "2"}, ones(20));
  CHECK(r.code == cli::kTrue);
  CHECK(r.out.find("won: Eloise") != std::string::npos);
  CHECK(r.out.find("(machine)") != std::string::npos);

  const Run eof = run({"play", "-m", m, "-f", kAFp, "--as", "eloise"});
  CHECK(eof.code == cli::kAborted);
  CHECK(run({"play", "-m", m, "-f", kAFp, "--as", "nobody"}).code == cli::kError);

  const Run lose = run({"play", "-m", m, "-f", kAFp, "--gamma", "2", "--as", "both"}, ones(20));
  CHECK(lose.out.find("won:") != std::string::npos);
}

TEST_CASE("reduce") {
  TempDir d;
  const std::string m = d.write("m1.json", kM1);
  const std::string outp = (d.path / "red.json").string();
  const Run r = run({"reduce", "-m", m, "-f", kAFp, "--gamma", "2", "-o", outp});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out.find("root: a|r|") != std::string::npos);
  CHECK(r.out.find("positions: ") != std::string::npos);
  const KripkeModel red = load_model_file(outp);
  CHECK(red.card() > 1);
  CHECK(run({"eval", "-m", outp, "-f", "mu X. ((p_B | (q_B & <>X)) | (!q_B & []X))", "-s", "a|r|"}).code == cli::kTrue);

  const Run piped = run({"reduce", "-m", m, "-f", "p"});
  CHECK(piped.code == cli::kTrue);
  CHECK(nlohmann::json::parse(piped.out)["root"] == "a|r|");
  CHECK(piped.err.find("positions: 1") != std::string::npos);
  CHECK(run({"reduce", "-m", m, "-f", kAFp, "--tree", "--gamma", "omega"}).code == cli::kTrue);
}

TEST_CASE("gen") {
  TempDir d;
  const Run r = run({"gen", "starN", "3"});
  CHECK(r.code == cli::kTrue);
  CHECK(load_model(r.out).card() == 4);
  const std::string outp = (d.path / "c.json").string();
  CHECK(run({"gen", "clique", "3", "-o", outp}).code == cli::kTrue);
  CHECK(load_model_file(outp).card() == 4);
  CHECK(run({"gen", "wheel", "3"}).code == cli::kError);
}

TEST_CASE("compare") {
  const Run ok = run({"compare", "--max-states", "1", "--max-nodes", "3", "--gammas", "1,omega", "--ar-max-states", "1"});
  CHECK(ok.code == cli::kTrue);
  CHECK(ok.out.find("PASS") != std::string::npos);
  const Run bad = run({"compare", "--max-states", "2", "--max-nodes", "3", "--gammas", "2", "--ar-max-states", "0",
                       "--inject-fault", "--json"});
  CHECK(bad.code == cli::kFalse);
  CHECK(nlohmann::json::parse(bad.out)["all_agree"] == false);
  CHECK(run({"compare", "--gammas", "1,x"}).code == cli::kError);
  CHECK(run({"compare", "--max-states", "1", "--max-nodes", "3", "--gammas", "4", "--ar-max-states", "0", "--cap", "3"}).code ==
        cli::kResourceCaps);
}
