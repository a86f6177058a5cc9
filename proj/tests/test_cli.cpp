// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frobmat/cli.hpp"

namespace frobmat {
namespace {

const std::string kData = FROBMAT_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "frobmat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("frobmat_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

TEST(Frobpart, D6) {
  auto r = run({"frobpart", "--group", data("d6.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "order 6\n"
            "partitions 3\n"
            "partition 0 trivial\n"
            "kernel 6: 0,1,2,3,4,5 (e r r^2 s r s r^2 s)\n"
            "complements none\n"
            "partition 1 trivial\n"
            "kernel 1: 0 (e)\n"
            "complement 6: 0,1,2,3,4,5 (e r r^2 s r s r^2 s)\n"
            "partition 2 nontrivial\n"
            "kernel 3: 0,1,2 (e r r^2)\n"
            "complement 2: 0,3 (e s)\n"
            "complement 2: 0,4 (e r s)\n"
            "complement 2: 0,5 (e r^2 s)\n");
}

TEST(Frobpart, Counts) {
  auto z4 = write_temp("z4.json", R"({"kind": "cyclic", "n": 4})");
  EXPECT_NE(run({"frobpart", "--group", z4}).out.find("partitions 2\n"), std::string::npos);
  auto f3 = write_temp("f3.json", R"({"kind": "field_affine", "q": 3})");
  auto r = run({"frobpart", "--group", f3});
  EXPECT_NE(r.out.find("partitions 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("partition 2 nontrivial\nkernel 3:"), std::string::npos);
}

TEST(Frobpart, Errors) {
  auto r = run({"frobpart", "--group", data("missing.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error: cannot open"), std::string::npos);
  auto bad = write_temp("bad_group.json", R"({"kind": "table", "table": [[0,1],[1,1]]})");
  EXPECT_EQ(run({"frobpart", "--group", bad}).code, 2);
  EXPECT_NE(run({"frobpart"}).code, 0);
}

TEST(Rank, EmptySubset) {
  auto r = run({"rank", "--graph", data("d6_eight.json"), "--subset", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Rank, CompleteD6) {
  EXPECT_EQ(run({"rank", "--graph", data("k4_d6.json")}).out, "5\n");
  EXPECT_EQ(run({"rank", "--graph", data("k4_d6.json"), "--kernel", "kernel=e,r,r^2"}).out,
            "5\n");
  EXPECT_EQ(run({"rank", "--graph", data("k4_d6.json"), "--kernel", "0,1,2"}).out, "5\n");
  EXPECT_EQ(run({"rank", "--graph", data("k4_d6.json"), "--kernel", "trivial"}).out, "4\n");
}

TEST(Rank, LiftDisjointLoops) {
  auto g = write_temp("loops.json", R"({"group": {"kind": "cyclic", "n": 2},
      "vertices": 2, "edges": [[0, 0, 1], [1, 1, 1]]})");
  EXPECT_EQ(run({"rank", "--graph", g, "--kernel", "all"}).out, "1\n");
  EXPECT_EQ(run({"rank", "--graph", g, "--kernel", "trivial"}).out, "2\n");
}

TEST(Rank, SelectorErrors) {
  // Z2 has no nontrivial partition.
  auto r = run({"rank", "--graph", data("k4_z2.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no nontrivial Frobenius partition"), std::string::npos);
  auto notsub = run({"rank", "--graph", data("k4_d6.json"), "--kernel", "0,1"});
  EXPECT_EQ(notsub.code, 2);
  EXPECT_NE(notsub.err.find("is not a subgroup"), std::string::npos);
  auto noedge = run({"rank", "--graph", data("d6_eight.json"), "--subset", "0,42"});
  EXPECT_EQ(noedge.code, 2);
  EXPECT_NE(noedge.err.find("no edge 42"), std::string::npos);
}

TEST(Circuits, Tree) {
  auto g = write_temp("tree.json", R"({"group": "d6.json", "vertices": 3,
      "edges": [[0, 1, "s"], [1, 2, "r"]]})");
  std::filesystem::copy_file(data("d6.json"),
                             std::filesystem::temp_directory_path() / "d6.json",
                             std::filesystem::copy_options::overwrite_existing);
  auto r = run({"circuits", "--graph", g});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(run({"bases", "--graph", g}).out, "0,1\n");
}

TEST(Circuits, Spike) {
  auto r = run({"circuits", "--graph", data("spike3.json"), "--kernel", "all"});
  EXPECT_EQ(r.code, 0);
  for (const char* line : {"0,1,6\n", "2,3,6\n", "4,5,6\n"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
}

std::string golden(const std::string& name) { return read_text(data(name)); }

TEST(Circuits, GoldenD6) {
  EXPECT_EQ(run({"circuits", "--graph", data("d6_eight.json")}).out,
            golden("d6_eight.circuits"));
  EXPECT_EQ(run({"bases", "--graph", data("d6_eight.json")}).out, golden("d6_eight.bases"));
  EXPECT_EQ(run({"circuits", "--graph", data("d6_eight.json"), "--linear-class"}).out,
            golden("d6_eight.class"));
}

// The frozen files agree with brute force over the rank oracle.
TEST(Circuits, GoldenMatchesBruteForce) {
  GainGraph g = read_graph(data("d6_eight.json"));
  LiftedMatroid m(nontrivial_context(g.group_ptr()), g);
  EXPECT_EQ(parse_circuits(golden("d6_eight.circuits")), minimal_dependent_sets(m));
  std::vector<EdgeSet> b;
  for (unsigned long long mask = 0; mask < 256; ++mask) {
    EdgeSet x = subset_from_mask(g.edge_ids(), mask);
    if (static_cast<int>(x.size()) == m.full_rank() && m.rank(x) == m.full_rank()) {
      b.push_back(x);
    }
  }
  std::sort(b.begin(), b.end());
  EXPECT_EQ(parse_circuits(golden("d6_eight.bases")), b);
}

TEST(Circuits, LimitFlag) {
  auto r = run({"--limit", "4", "circuits", "--graph", data("d6_eight.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("limited to 4"), std::string::npos);
  // The cap does not leak into later runs.
  EXPECT_EQ(run({"circuits", "--graph", data("d6_eight.json")}).code, 0);
}

TEST(Verify, FigureRepresentation) {
  auto r = run({"verify", "--graph", data("figure_gf5.json"), "--representation"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "representation: PASS 64 subsets\n");
}

TEST(Verify, AllChecksD6) {
  auto r = run({"verify", "--graph", data("d6_eight.json"), "--axioms", "--linear-class",
                "--minors", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "axioms: PASS\nlinear-class: PASS 3 circuits\nminors: PASS\n");
}

TEST(Verify, CorruptedClass) {
  auto ok = run({"verify", "--graph", data("d6_eight.json"), "--linear-class", "--class",
                 data("d6_eight.class")});
  EXPECT_EQ(ok.code, 0);
  auto r = run({"verify", "--graph", data("d6_eight.json"), "--linear-class", "--class",
                data("d6_eight_bad.class")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "linear-class: FAIL modular pair {0,1} {0,3,4,7} contains circuit "
            "{1,3,4,7} outside the class\n");
}

TEST(Verify, NeedsACheck) {
  EXPECT_EQ(run({"verify", "--graph", data("d6_eight.json")}).code, 2);
}

TEST(Verify, Deterministic) {
  std::vector<std::string> args = {"verify", "--graph", data("k4_d6.json"), "--minors",
                                   "--samples", "20", "--seed", "3", "--limit", "0"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Matrix, Figure) {
  auto r = run({"matrix", "--graph", data("figure_gf5.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 4 6\n3 1 0 2 0 4\n4 1 4 1 0 0\n0 2 1 0 1 0\n0 0 0 1 3 0\n");
}

TEST(Matrix, SmallCases) {
  auto one = write_temp("one.json", R"j({"group": {"kind": "field_affine", "q": 5},
      "vertices": 2, "edges": [[0, 1, "(0,1)"]]})j");
  EXPECT_EQ(run({"matrix", "--graph", one}).out, "5 3 1\n0\n1\n4\n");
  auto none = write_temp("none.json", R"({"group": {"kind": "field_affine", "q": 5},
      "vertices": 2, "edges": []})");
  EXPECT_EQ(run({"matrix", "--graph", none}).out, "5 3 0\n");
  EXPECT_EQ(run({"matrix", "--graph", data("d6_eight.json")}).code, 2);
}

TEST(Minor, DeleteOnly) {
  auto r = run({"minor", "--graph", data("d6_eight.json"), "--delete", "5,6"});
  EXPECT_EQ(r.code, 0);
  GainGraph g = parse_graph(json::parse(r.out));
  GainGraph orig = read_graph(data("d6_eight.json"));
  EXPECT_EQ(g.edge_ids(), (EdgeSet{0, 1, 2, 3, 4, 7}));
  for (EdgeId e : g.edge_ids()) EXPECT_EQ(g.edge(e), orig.edge(e));
}

TEST(Minor, ContractMergesVertices) {
  auto r = run({"minor", "--graph", data("d6_eight.json"), "--contract", "0"});
  EXPECT_EQ(r.code, 0);
  GainGraph g = parse_graph(json::parse(r.out));
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_TRUE(g.edge(1).is_loop());
  // Ranks of the written minor match the oracle-level contraction.
  GainGraph orig = read_graph(data("d6_eight.json"));
  auto ctx = nontrivial_context(orig.group_ptr());
  LiftedMatroid m(ctx, orig), c(ctx, g);
  for (unsigned long long mask = 0; mask < 128; ++mask) {
    EdgeSet x = subset_from_mask(c.ground(), mask);
    EXPECT_EQ(c.rank(x), m.rank(with_edge(x, 0)) - m.rank({0}));
  }
}

TEST(Minor, Errors) {
  auto r = run({"minor", "--graph", data("d6_eight.json"), "--contract", "99"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err, "error: graph has no edge 99\n");
  // With a trivial kernel the loop of gain r is unbalanced, not a kernel loop.
  auto k = run({"minor", "--graph", data("d6_eight.json"), "--kernel", "trivial",
                "--contract", "6"});
  EXPECT_EQ(k.code, 0) << k.err;
}

TEST(Recover, BuildD6) {
  auto r = run({"recover", "--graph", data("k4_d6.json"), "--kernel", "0,1,2", "--build"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "branch classes\n"
            "kernel 3: 0,1,2 (e r r^2)\n"
            "complement 2: 0,3 (e s)\n"
            "complement 2: 0,4 (e r s)\n"
            "complement 2: 0,5 (e r^2 s)\n"
            "checked 2000 subsets (sampled)\n");
}

TEST(Recover, LiftClassFile) {
  auto r = run({"recover", "--graph", data("k4_z2.json"), "--kernel", "all", "--class",
                data("k4_z2_lift.class")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "branch lift\n"
            "kernel 2: 0,1 (0 1)\n"
            "complements none\n"
            "checked 4096 subsets (all)\n");
}

TEST(Recover, ClassViolatingCycleHypothesis) {
  auto r = run({"recover", "--graph", data("k4_z2.json"), "--kernel", "all", "--class",
                data("k4_z2_missing_cycle.class")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err, "error: cycle hypothesis fails on balanced cycle {0,2,6}\n");
}

TEST(Recover, Errors) {
  EXPECT_EQ(run({"recover", "--graph", data("k4_d6.json"), "--kernel", "0,1,2"}).code, 2);
  EXPECT_EQ(run({"recover", "--graph", data("k4_d6.json"), "--kernel", "0,1,2", "--build",
                 "--class", data("d6_eight.class")})
                .code,
            2);
  auto r = run({"recover", "--graph", data("d6_eight.json"), "--kernel", "0,1,2", "--build"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("complete gain graph"), std::string::npos);
}

}  // namespace
}  // namespace frobmat
