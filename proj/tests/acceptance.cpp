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

// Prints one PASS/FAIL line per acceptance criterion; exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "frobmat/cli.hpp"
#include "test_util.hpp"

namespace frobmat {
namespace {

using testing::random_gain_graph;

const std::string kData = FROBMAT_TEST_DATA;

// Returns an empty string on success, else a description of the failure.
using Criterion = std::function<std::string()>;

std::vector<EdgeSet> all_subsets(const EdgeSet& ground) {
  std::vector<EdgeSet> out;
  for (unsigned long long m = 0; m < (1ULL << ground.size()); ++m) {
    out.push_back(subset_from_mask(ground, m));
  }
  return out;
}

std::string figure_reproduction() {
  const std::string graph = kData + "/figure_gf5.json";
  const char* argv[] = {"frobmat", "matrix", "--graph", graph.c_str()};
  std::ostringstream out, err;
  if (run_cli(4, argv, out, err) != 0) return "matrix failed: " + err.str();
  if (out.str() != "5 4 6\n3 1 0 2 0 4\n4 1 4 1 0 0\n0 2 1 0 1 0\n0 0 0 1 3 0\n") {
    return "matrix differs:\n" + out.str();
  }
  const char* vargv[] = {"frobmat", "verify", "--graph", graph.c_str(), "--representation"};
  std::ostringstream vout;
  if (run_cli(5, vargv, vout, err) != 0 || vout.str() != "representation: PASS 64 subsets\n") {
    return "verify: " + vout.str() + err.str();
  }
  return "";
}

std::string partition_catalog() {
  auto kernel_sizes = [](const FiniteGroup& g) {
    std::vector<int> out;
    for (const auto& p : frobenius_partitions(g)) out.push_back(p.kernel.size());
    return out;
  };
  if (kernel_sizes(*make_dihedral(6)) != std::vector<int>{6, 1, 3}) return "D6";
  if (frobenius_partitions(*make_cyclic(4)).size() != 2) return "Z4";
  if (frobenius_partitions(*testing::make_q8()).size() != 2) return "Q8";
  auto f20 = make_field_affine(5);
  auto parts = frobenius_partitions(*f20);
  if (parts.size() != 3) return "field_affine(5) partition count";
  const auto& p = parts[2];
  if (p.kernel.size() != 5 || p.complements.size() != 5) return "field_affine(5) shape";
  for (const auto& c : p.complements) {
    if (c.size() != 4) return "field_affine(5) complement size";
  }
  return "";
}

std::string special_cases() {
  std::mt19937 rng(301);
  std::vector<GroupPtr> groups = {make_cyclic(2), make_cyclic(5),  make_dihedral(6),
                                  testing::make_a4(), make_dihedral(10), make_field_affine(3),
                                  testing::make_q8(), make_cyclic(12)};
  int count = 0;
  for (int t = 0; t < 120; ++t) {
    const auto& grp = groups[t % groups.size()];
    auto g = random_gain_graph(grp, rng, 2 + t % 4, 3 + t % 8, 0.25);
    auto fc = frame_context(grp), lc = lift_context(grp);
    for (const auto& x : all_subsets(g.edge_ids())) {
      if (matroid_rank(*fc, g, x) != frame_rank(g, x)) return "frame case on " + format_set(x);
      if (matroid_rank(*lc, g, x) != lift_rank(g, x)) return "lift case on " + format_set(x);
    }
    ++count;
  }
  return count >= 100 ? "" : "too few instances";
}

std::string linear_class_theorem() {
  std::mt19937 rng(302);
  std::vector<ContextPtr> ctxs;
  for (auto g : {make_dihedral(6), make_dihedral(10), make_field_affine(5),
                 make_field_affine(7), make_inversion_extension(*make_cyclic(9))}) {
    ctxs.push_back(nontrivial_context(g));
  }
  int count = 0;
  for (int t = 0; t < 550; ++t) {
    const auto& ctx = ctxs[t % ctxs.size()];
    auto g = random_gain_graph(ctx->group, rng, 2 + t % 4, 4 + t % 7, 0.3);
    auto host = GainFrameOracle(quotient_gains(g, ctx->quotient));
    auto chk = is_linear_class(host, underlying_circuits(*ctx, g), linear_class(*ctx, g));
    if (!chk.ok) return chk.message;
    ++count;
  }
  return count >= 500 ? "" : "too few instances";
}

std::string equivalence_lemma() {
  auto check = [](const FrobeniusContext& ctx, const GainGraph& g) -> std::string {
    for (const auto& c : underlying_circuits(ctx, g)) {
      if (underlying_circuit_shape(ctx, g, c).kind == CircuitKind::kCycle) continue;
      if (class_member(ctx, g, c) != class_member_walks(ctx, g, c)) {
        return "disagreement on " + format_set(c);
      }
    }
    return "";
  };
  auto d6 = nontrivial_context(make_dihedral(6));
  if (auto e = check(*d6, complete_gain_graph(d6->group, 3)); !e.empty()) return e;
  std::mt19937 rng(303);
  std::vector<ContextPtr> ctxs = {d6, nontrivial_context(testing::make_a4()),
                                  nontrivial_context(make_field_affine(5))};
  for (int t = 0; t < 50; ++t) {
    const auto& ctx = ctxs[t % ctxs.size()];
    if (auto e = check(*ctx, random_gain_graph(ctx->group, rng, 3 + t % 3, 7, 0.3));
        !e.empty()) {
      return e;
    }
  }
  return "";
}

std::string matroid_axioms() {
  std::mt19937 rng(304);
  std::vector<ContextPtr> ctxs = {nontrivial_context(make_dihedral(6)),
                                  nontrivial_context(testing::make_a4()),
                                  nontrivial_context(make_field_affine(5)),
                                  frame_context(make_dihedral(6)),
                                  lift_context(make_cyclic(3))};
  for (int t = 0; t < 40; ++t) {
    const auto& ctx = ctxs[t % ctxs.size()];
    auto g = random_gain_graph(ctx->group, rng, 2 + t % 5, 4 + t % 9, 0.3);
    auto chk = matroid_axiom_check(LiftedMatroid(ctx, g));
    if (!chk.ok) return chk.message + " on " + format_set(chk.x) + " " + format_set(chk.y);
  }
  return "";
}

std::string minor_commutation() {
  std::mt19937 rng(305);
  std::vector<ContextPtr> ctxs = {nontrivial_context(make_dihedral(6)),
                                  nontrivial_context(testing::make_a4()),
                                  nontrivial_context(make_field_affine(5)),
                                  lift_context(make_dihedral(6)),
                                  lift_context(make_cyclic(3))};
  std::map<std::string, int> lemmas;
  int count = 0;
  for (int t = 0; t < 60; ++t) {
    const auto& ctx = ctxs[t % ctxs.size()];
    auto g = random_gain_graph(ctx->group, rng, 2 + t % 3, 6 + t % 3, 0.35);
    LiftedMatroid m(ctx, g);
    for (EdgeId e : g.edge_ids()) {
      const Edge& ed = g.edge(e);
      if (!ed.is_loop()) {
        ++lemmas["nonloop"];
      } else if (ed.gain != 0 && ctx->part_of[ed.gain] == kKernelPart) {
        ++lemmas[ctx->complements().empty() ? "kernel loop, lift" : "kernel loop"];
      } else if (ed.gain != 0) {
        ++lemmas["unbalanced loop"];
      }
      auto del = delete_edge(ctx, g, e);
      auto con = contract_edge(ctx, g, e);
      const int re = m.rank({e});
      for (const auto& x : all_subsets(del->ground())) {
        if (del->rank(x) != m.rank(x)) return "deletion of " + std::to_string(e);
        if (con->rank(x) != m.rank(with_edge(x, e)) - re) {
          return "contraction of " + std::to_string(e) + " on " + format_set(x);
        }
      }
    }
    ++count;
  }
  for (const char* k : {"nonloop", "kernel loop", "kernel loop, lift", "unbalanced loop"}) {
    if (lemmas[k] == 0) return std::string("no instance of ") + k;
  }
  return count >= 50 ? "" : "too few instances";
}

std::string spikes() {
  for (auto grp : {make_cyclic(2), make_cyclic(3)}) {
    auto ctx = lift_context(grp);
    for (int r = 3; r <= 6; ++r) {
      auto m = build_spike_graph(ctx, r);
      if (m->full_rank() != r || static_cast<int>(m->ground().size()) != 2 * r + 1 ||
          !is_spike_with_tip(*m, 2 * r)) {
        return "r = " + std::to_string(r) + " over Z" + std::to_string(grp->order());
      }
    }
  }
  return "";
}

std::string round_trip() {
  for (const auto& [name, g] : testing::frobenius_groups_to_20()) {
    auto ctx = nontrivial_context(g);
    LiftedMatroid m(ctx, complete_gain_graph(g, 4));
    if (!(recover_partition(g, ctx->kernel(), 4, m).partition == ctx->partition)) return name;
  }
  for (auto g : {make_dihedral(6), make_cyclic(2)}) {
    for (const auto& ctx : {frame_context(g), lift_context(g)}) {
      LiftedMatroid m(ctx, complete_gain_graph(g, 4));
      if (!(recover_partition(g, ctx->kernel(), 4, m).partition == ctx->partition)) {
        return "trivial case over order " + std::to_string(g->order());
      }
    }
  }
  return "";
}

std::string switching_scaling() {
  std::mt19937 rng(310);
  for (int t = 0; t < 100; ++t) {
    const int q = t % 2 ? 7 : 5;
    auto grp = make_field_affine(q);
    auto g = random_gain_graph(grp, rng, 2 + t % 4, 3 + t % 6, 0.25);
    SwitchingFunction eta(g.vertex_count());
    for (auto& x : eta) x = static_cast<Element>(rng() % grp->order());
    const int c = 1 + static_cast<int>(rng() % (q - 1));
    if (!switching_projective_check(g, eta)) return "switching, instance " + std::to_string(t);
    if (!scaling_matrix_check(g, c)) return "scaling, instance " + std::to_string(t);
    VectorOracle a(incidence_matrix(g), g.edge_ids());
    VectorOracle b(incidence_matrix(apply_switching(g, eta)), g.edge_ids());
    VectorOracle s(incidence_matrix(scale_gains(g, c)), g.edge_ids());
    for (const auto& x : all_subsets(g.edge_ids())) {
      if (a.rank(x) != b.rank(x) || a.rank(x) != s.rank(x)) {
        return "rank changed on " + format_set(x) + ", instance " + std::to_string(t);
      }
    }
  }
  return "";
}

}  // namespace
}  // namespace frobmat

int main() {
  using namespace frobmat;
  const std::vector<std::pair<int, Criterion>> criteria = {
      {1, figure_reproduction}, {2, partition_catalog}, {3, special_cases},
      {4, linear_class_theorem}, {5, equivalence_lemma}, {6, matroid_axioms},
      {7, minor_commutation},   {8, spikes},            {9, round_trip},
      {10, switching_scaling},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << ": " << (why.empty() ? "PASS" : "FAIL") << " ("
              << secs << " s)";
    if (!why.empty()) std::cout << " " << why;
    std::cout << "\n";
    failed += !why.empty();
  }
  return failed ? 1 : 0;
}
