#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support/oracles.hpp"

using kaestner::testing::data_path;
using kaestner::testing::read_text;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kaestner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kaestner::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("kaestner_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

const std::string kPb = data_path("parity_biquandle3.txt");
const std::string kKb = data_path("bracket_z5.txt");

}  // namespace

TEST_CASE("verify-kaestner") {
  const auto r = run({"verify-kaestner", "--structure", kPb, "--bracket", kKb});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS w=1 delta=2\n");

  auto text = read_text(kKb);
  text.replace(text.rfind("1\n"), 2, "2\n");  // last entry of B1
  const auto bad = run({"verify-kaestner", "--structure", kPb, "--bracket", temp_file("bad.txt", text)});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("FAIL", 0) == 0);
  CHECK(bad.out.find("odd delta condition [3,3]") != std::string::npos);

  const auto j = run({"verify-kaestner", "--structure", kPb, "--bracket", kKb, "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "verify-kaestner");
  CHECK(doc["pass"] == true);
  CHECK(doc["w"] == 1);
  CHECK(doc["delta"] == 2);
  CHECK(doc["violations"].empty());
}

TEST_CASE("other verifiers") {
  CHECK(run({"verify-biquandle", "--structure", data_path("biquandle3.txt")}).out == "PASS\n");
  CHECK(run({"verify-parity-biquandle", "--structure", kPb}).code == 0);
  CHECK(run({"verify-parity-biquandle", "--structure", data_path("biquandle3.txt")}).code == 2);
  const auto vb = run({"verify-bracket", "--structure", kPb, "--bracket", data_path("bracket_z5_even.txt")});
  CHECK(vb.code == 0);
  CHECK(vb.out == "PASS w=1 delta=2\n");
  const auto f = run({"verify-bracket", "--structure", data_path("biquandle3.txt"), "--bracket",
                      data_path("bracket_z5_even.txt")});
  CHECK(f.code == 1);
  CHECK(f.out.find("R3") != std::string::npos);
}

TEST_CASE("invariant, colorings, classify") {
  const auto r = run({"invariant", "--knots", data_path("two.txt"), "--structure", kPb, "--bracket", kKb});
  CHECK(r.code == 0);
  CHECK(r.out == "unknot: 3u^2\n2.1: 3u^3\n");

  const auto c = run({"colorings", "--code", "O1-,O2-,U1-,U2-", "--structure", kPb});
  CHECK(c.out == "code: 3\n");

  const auto k = run({"classify", "--knots", data_path("knots.txt"), "--structure", kPb, "--bracket", kKb});
  CHECK(k.code == 0);
  CHECK(k.out == "3u^2: unknot, 7_2\n3u^3: 2.1\n");

  const auto bad = run({"classify", "--knots", temp_file("list.txt", "a: O1+,U2+\nb:\n"), "--structure", kPb,
                        "--bracket", kKb});
  CHECK(bad.code == 2);
  CHECK(bad.out == "3u^2: b\n");
  CHECK(bad.err.find("a:") != std::string::npos);

  const auto j = run({"invariant", "--code", "", "--structure", kPb, "--bracket", kKb, "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["knots"][0]["polynomial"] == "3u^2");
  CHECK(doc["knots"][0]["terms"][0]["exponent"] == 2);
  CHECK(doc["knots"][0]["terms"][0]["multiplicity"] == 3);
}

TEST_CASE("parse and parity") {
  const auto r = run({"parse", "--code", "O1+,U2+"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unpaired") != std::string::npos);
  CHECK(r.err.find("1, 2") != std::string::npos);
  CHECK(run({"parse", "--code", "O4-,O9-,U4-,U9-"}).out == "O1-,O2-,U1-,U2-\n");
  CHECK(run({"parity", "--code", "O1+,U1+,O2-,U3+,U2-,O3+"}).out == "1 + even\n2 - odd\n3 + odd\n");
}

TEST_CASE("moves") {
  CHECK(run({"moves", "--code", "", "--apply", "r1+:0:0:o:+"}).out == "O1+,U1+\n");
  CHECK(run({"moves", "--code", "O1+,U1+", "--apply", "r1-:1"}).out == "\n");
  CHECK(run({"moves", "--code", "", "--apply", "r2+:0:0:0:0:p:+", "--apply", "r2-:1:2"}).out == "\n");
  CHECK(run({"moves", "--code", "U1+,U2+,O1+,U3+,O2+,O3+", "--apply", "r3:1:2:3"}).out ==
        "U1+,U2+,U3+,O2+,O3+,O1+\n");
  CHECK(run({"moves", "--code", "O1+,O2+,U1+,U2+", "--apply", "r1-:1"}).code == 2);
  CHECK(run({"moves", "--code", "", "--apply", "r9:1"}).code == 2);

  const auto a = run({"moves", "--code", "O1-,O2-,U1-,U2-", "--random", "--seed", "4", "--count", "12"});
  const auto b = run({"moves", "--code", "O1-,O2-,U1-,U2-", "--random", "--seed", "4", "--count", "12"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto noseed = run({"moves", "--code", "", "--random", "--count", "3"});
  CHECK(noseed.code == 2);
  CHECK(noseed.err.find("--seed") != std::string::npos);

  const auto j = run({"moves", "--code", "", "--random", "--seed", "1", "--count", "2", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["applied"].size() == 2);
}

TEST_CASE("search") {
  const auto one = temp_file("one.txt", "n=1\nutr0\n1\notr0\n1\n");
  const auto r = run({"search", "--structure", one, "--modulus", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "ring=Z2\nA0\n1\nB0\n1\nA1\n1\nB1\n1\n%%\n"
        "status=complete tasks=1 next_task=1 work_units=4\nfound=1 pruned_instances=0\n");

  const auto odd = run({"search", "--structure", kPb, "--modulus", "5", "--mode", "odd-only", "--even", kKb,
                        "--max-work", "100"});
  CHECK(odd.code == 0);
  CHECK(odd.out.find("status=work-limit") != std::string::npos);

  const auto j = run({"search", "--structure", one, "--modulus", "3", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["found"] == 8);
  CHECK(doc["brackets"].size() == 8);
  CHECK(doc["status"] == "complete");
}

TEST_CASE("usage errors and output files") {
  CHECK(run({}).code == 2);
  const auto u = run({"frobnicate"});
  CHECK(u.code == 2);
  CHECK(u.err.find("Usage") != std::string::npos);
  CHECK(run({"parse", "--code", "", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"colorings", "--structure", kPb}).code == 2);
  CHECK(run({"colorings", "--structure", "/nonexistent/file", "--code", ""}).code == 2);
  CHECK(run({"search", "--structure", kPb, "--modulus", "5", "--mode", "sideways"}).code == 2);

  const auto path = (std::filesystem::temp_directory_path() / "kaestner_cli_out.txt").string();
  const auto r = run({"parse", "--code", "O1+,U1+", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_text(path) == "O1+,U1+\n");
}
