// Copyright 2026 The cutcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cutcert/cli.hpp"
#include "cutcert/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cutcert;
using namespace cutcert::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cutcert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void write_graph(const std::string& path, std::size_t n, std::size_t k, const std::vector<Edge>& edges) {
  std::ofstream out(path);
  out << "n " << n << " k " << k << '\n';
  for (const Edge& e : edges) out << "+ " << e.u << ' ' << e.v << '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("K5 with k=4 certifies positive and verifies") {
  TempDir dir;
  write_graph(dir.file("k5.txt"), 5, 4, complete_graph(5));
  auto r = cli({"ingest", "--stream", dir.file("k5.txt"), "--seed", "3", "--out", dir.file("k5.sk")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("updates 10") != std::string::npos);
  r = cli({"certify", "--sketch", dir.file("k5.sk"), "--out", dir.file("k5.json")});
  CHECK(r.code == exit_code::kOk);
  CHECK(r.out.find("kind positive") != std::string::npos);
  r = cli({"verify", "--stream", dir.file("k5.txt"), "--cert", dir.file("k5.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("valid positive") != std::string::npos);
}

TEST_CASE("bridge graph exits 10 with one crossing edge") {
  TempDir dir;
  write_graph(dir.file("b.txt"), 8, 2, barbell(4, 4, 1));
  REQUIRE(cli({"ingest", "--stream", dir.file("b.txt"), "--seed", "1", "--out", dir.file("b.sk")}).code == 0);
  const auto r = cli({"certify", "--sketch", dir.file("b.sk"), "--out", dir.file("b.json")});
  CHECK(r.code == exit_code::kNegativeCut);
  CHECK(r.out.find("cut_edges 1") != std::string::npos);
  CHECK(certificate_from_json(slurp(dir.file("b.json"))).edges == std::vector<Edge>{{1, 5}});
  CHECK(cli({"verify", "--stream", dir.file("b.txt"), "--cert", dir.file("b.json")}).code == 0);
}

TEST_CASE("two components exit 11") {
  TempDir dir;
  write_graph(dir.file("d.txt"), 6, 1, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
  REQUIRE(cli({"ingest", "--stream", dir.file("d.txt"), "--seed", "1", "--out", dir.file("d.sk")}).code == 0);
  const auto r = cli({"certify", "--sketch", dir.file("d.sk"), "--out", dir.file("d.json")});
  CHECK(r.code == exit_code::kNegativeDisconnected);
  CHECK(r.out.find("component [1 2 3]") != std::string::npos);
}

TEST_CASE("tampered or mismatched certificates fail verification") {
  TempDir dir;
  write_graph(dir.file("b.txt"), 8, 2, barbell(4, 4, 1));
  REQUIRE(cli({"ingest", "--stream", dir.file("b.txt"), "--seed", "1", "--out", dir.file("b.sk")}).code == 0);
  REQUIRE(cli({"certify", "--sketch", dir.file("b.sk"), "--out", dir.file("b.json")}).code == 10);

  Certificate cert = certificate_from_json(slurp(dir.file("b.json")));
  cert.edges = {{2, 6}};
  std::ofstream(dir.file("t.json")) << certificate_to_json(cert);
  auto r = cli({"verify", "--stream", dir.file("b.txt"), "--cert", dir.file("t.json")});
  CHECK(r.code == exit_code::kInvalid);
  CHECK(r.out.find("invalid") == 0);

  // C5 is 2-connected; its positive certificate relabelled for k=4 is the
  // wrong branch.
  write_graph(dir.file("c.txt"), 5, 2, cycle_graph(5));
  write_graph(dir.file("c4.txt"), 5, 4, cycle_graph(5));
  REQUIRE(cli({"ingest", "--stream", dir.file("c.txt"), "--seed", "2", "--out", dir.file("c.sk")}).code == 0);
  REQUIRE(cli({"certify", "--sketch", dir.file("c.sk"), "--out", dir.file("c.json")}).code == 0);
  Certificate pos = certificate_from_json(slurp(dir.file("c.json")));
  pos.k = 4;
  std::ofstream(dir.file("c4.json")) << certificate_to_json(pos);
  r = cli({"verify", "--stream", dir.file("c4.txt"), "--cert", dir.file("c4.json")});
  CHECK(r.code == exit_code::kInvalid);
  CHECK(r.out.find("wrong branch") != std::string::npos);
}

TEST_CASE("seed falls back to CUTCERT_SEED") {
  TempDir dir;
  write_graph(dir.file("g.txt"), 5, 2, cycle_graph(5));
  ::setenv("CUTCERT_SEED", "1234", 1);
  REQUIRE(cli({"ingest", "--stream", dir.file("g.txt"), "--out", dir.file("env.sk")}).code == 0);
  ::unsetenv("CUTCERT_SEED");
  REQUIRE(cli({"ingest", "--stream", dir.file("g.txt"), "--seed", "1234", "--out", dir.file("flag.sk")}).code == 0);
  REQUIRE(cli({"ingest", "--stream", dir.file("g.txt"), "--out", dir.file("default.sk")}).code == 0);
  CHECK(read_file(dir.file("env.sk")) == read_file(dir.file("flag.sk")));
  CHECK(read_file(dir.file("env.sk")) != read_file(dir.file("default.sk")));
  CHECK(ConnSketch::deserialize(read_file(dir.file("default.sk"))).seed() == kDefaultSeed);

  ::setenv("CUTCERT_SEED", "abc", 1);
  CHECK(cli({"ingest", "--stream", dir.file("g.txt"), "--out", dir.file("x.sk")}).code == exit_code::kError);
  ::unsetenv("CUTCERT_SEED");
}

TEST_CASE("stats, oracle-mincut and simulate-distributed") {
  TempDir dir;
  write_graph(dir.file("g.txt"), 9, 3, barbell(5, 4, 2));
  REQUIRE(cli({"ingest", "--stream", dir.file("g.txt"), "--seed", "5", "--out", dir.file("g.sk")}).code == 0);
  auto r = cli({"stats", "--sketch", dir.file("g.sk")});
  CHECK(r.code == 0);
  const auto bytes = read_file(dir.file("g.sk")).size();
  CHECK(r.out.find("total_bits " + std::to_string(bytes * 8)) != std::string::npos);
  CHECK(r.out.find("M_2 budget=3") != std::string::npos);

  r = cli({"oracle-mincut", "--stream", dir.file("g.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("mincut 2") != std::string::npos);
  CHECK(r.out.find("k_connected no") != std::string::npos);

  r = cli({"simulate-distributed", "--stream", dir.file("g.txt"), "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("identical yes") != std::string::npos);
  CHECK(r.out.find("verdict valid") != std::string::npos);
}

TEST_CASE("bad input exits 2 with a message") {
  TempDir dir;
  std::ofstream(dir.file("bad.txt")) << "n 4 k 2\n+ 1 1\n";
  auto r = cli({"ingest", "--stream", dir.file("bad.txt"), "--seed", "1", "--out", dir.file("bad.sk")});
  CHECK(r.code == exit_code::kError);
  CHECK(r.err.find("SelfLoop") != std::string::npos);
  CHECK(cli({"certify", "--sketch", dir.file("missing.sk"), "--out", dir.file("x.json")}).code == exit_code::kError);
  std::ofstream(dir.file("junk.sk")) << "not a sketch";
  CHECK(cli({"stats", "--sketch", dir.file("junk.sk")}).code == exit_code::kError);
  CHECK(cli({"frobnicate"}).code == exit_code::kError);
  CHECK(cli({}).code == exit_code::kError);
  CHECK(cli({"ingest", "--stream", dir.file("bad.txt")}).code == exit_code::kError);
}

TEST_CASE("duplicate insert fails only under --strict") {
  TempDir dir;
  std::ofstream(dir.file("dup.txt")) << "n 4 k 1\n+ 1 2\n+ 1 2\n";
  CHECK(cli({"ingest", "--stream", dir.file("dup.txt"), "--out", dir.file("a.sk")}).code == 0);
  const auto r = cli({"ingest", "--stream", dir.file("dup.txt"), "--out", dir.file("b.sk"), "--strict"});
  CHECK(r.code == exit_code::kError);
  CHECK(r.err.find("StrictViolation") != std::string::npos);
}

TEST_CASE("the installed binary reports certify exit codes") {
  TempDir dir;
  write_graph(dir.file("b.txt"), 8, 2, barbell(4, 4, 1));
  const std::string bin = CUTCERT_CLI_PATH;
  const std::string ingest = bin + " ingest --stream " + dir.file("b.txt") + " --seed 1 --out " + dir.file("b.sk") +
                             " > /dev/null";
  REQUIRE(WEXITSTATUS(std::system(ingest.c_str())) == 0);
  const std::string certify = bin + " certify --sketch " + dir.file("b.sk") + " --out " + dir.file("b.json") +
                              " > /dev/null";
  CHECK(WEXITSTATUS(std::system(certify.c_str())) == 10);
}
