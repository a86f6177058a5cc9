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

#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobmat/biased_matroid.hpp"
#include "frobmat/io.hpp"
#include "frobmat/lift.hpp"
#include "frobmat/recovery.hpp"
#include "frobmat/representation.hpp"

namespace frobmat {

namespace cli {

struct Options {
  std::string group_file, graph_file, kernel = "auto", subset, delete_ids,
      contract_ids, class_file;
  bool has_subset = false;
  bool axioms = false, linear = false, representation = false, minors = false,
       build = false;
  unsigned seed = 1;
  int samples = 2000;
  int limit = 0;
};

inline EdgeSet parse_subset(const GainGraph& g, const std::string& text) {
  EdgeSet s = make_edge_set(parse_id_list(text));
  for (EdgeId e : s) {
    if (!g.has_edge(e)) throw Error("graph has no edge " + std::to_string(e));
  }
  return s;
}

inline int cmd_frobpart(const Options& o, std::ostream& out) {
  GroupPtr g = parse_group(read_json(o.group_file),
                           std::filesystem::path(o.group_file).parent_path());
  auto parts = frobenius_partitions(*g);
  out << "order " << g->order() << "\n";
  out << "partitions " << parts.size() << "\n";
  for (size_t i = 0; i < parts.size(); ++i) {
    out << "partition " << i << (parts[i].is_trivial(*g) ? " trivial" : " nontrivial")
        << "\n"
        << format_partition(*g, parts[i]);
  }
  return 0;
}

inline int cmd_rank(const Options& o, std::ostream& out) {
  GainGraph g = read_graph(o.graph_file);
  ContextPtr ctx = select_context(g.group_ptr(), o.kernel);
  EdgeSet x = o.has_subset ? parse_subset(g, o.subset) : g.edge_ids();
  out << matroid_rank(*ctx, g, x) << "\n";
  return 0;
}

inline int cmd_circuits(const Options& o, std::ostream& out) {
  GainGraph g = read_graph(o.graph_file);
  ContextPtr ctx = select_context(g.group_ptr(), o.kernel);
  out << format_circuits(o.linear ? linear_class(*ctx, g) : circuits(*ctx, g));
  return 0;
}

inline int cmd_bases(const Options& o, std::ostream& out) {
  GainGraph g = read_graph(o.graph_file);
  ContextPtr ctx = select_context(g.group_ptr(), o.kernel);
  out << format_circuits(bases(*ctx, g));
  return 0;
}

inline int cmd_matrix(const Options& o, std::ostream& out) {
  out << format_matrix(incidence_matrix(read_graph(o.graph_file)));
  return 0;
}

// Subsets of `ground`: all of them up to 14 elements, else `samples`
// uniformly random ones.
template <typename F>
void sweep(const EdgeSet& ground, int samples, unsigned seed, F&& f) {
  if (ground.size() <= 14) {
    for (unsigned long long m = 0; m < (1ULL << ground.size()); ++m) {
      if (!f(subset_from_mask(ground, m))) return;
    }
    return;
  }
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    EdgeSet x;
    for (EdgeId e : ground) {
      if (rng() & 1u) x.push_back(e);
    }
    if (!f(x)) return;
  }
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.axioms && !o.linear && !o.representation && !o.minors) {
    throw Error("verify needs at least one of --axioms --linear-class "
                "--representation --minors");
  }
  GainGraph g = read_graph(o.graph_file);
  ContextPtr ctx = select_context(g.group_ptr(), o.kernel);
  auto m = make_lifted(ctx, g);
  bool all = true;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    out << name << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) out << " " << detail;
    out << "\n";
    all = all && ok;
  };
  if (o.axioms) {
    auto chk = matroid_axiom_check(*m);
    report("axioms", chk.ok,
           chk.ok ? "" : chk.message + " X=" + format_set(chk.x) + " Y=" + format_set(chk.y));
  }
  if (o.linear) {
    std::vector<EdgeSet> lc = o.class_file.empty()
                                  ? m->linear_class()
                                  : parse_circuits(read_text(o.class_file));
    auto chk = is_linear_class(*m->underlying(), underlying_circuits(*ctx, g), lc);
    report("linear-class", chk.ok,
           chk.ok ? std::to_string(lc.size()) + " circuits" : chk.message);
  }
  if (o.representation) {
    auto chk = verify_representation(*ctx, g, o.seed, o.samples);
    report("representation", chk.ok,
           chk.ok ? std::to_string(chk.subsets_checked) + " subsets"
                  : "matrix rank " + std::to_string(chk.matrix_rank) +
                        " matroid rank " + std::to_string(chk.matroid_rank) +
                        " on " + format_set(chk.witness));
  }
  if (o.minors) {
    std::string bad;
    for (EdgeId e : g.edge_ids()) {
      auto del = delete_edge(ctx, g, e);
      auto con = contract_edge(ctx, g, e);
      const int re = m->rank({e});
      sweep(del->ground(), o.samples, o.seed + e, [&](const EdgeSet& x) {
        if (del->rank(x) != m->rank(x)) {
          bad = "deletion of " + std::to_string(e) + " on " + format_set(x);
        } else if (con->rank(x) != m->rank(with_edge(x, e)) - re) {
          bad = "contraction of " + std::to_string(e) + " on " + format_set(x);
        }
        return bad.empty();
      });
      if (!bad.empty()) break;
    }
    report("minors", bad.empty(), bad);
  }
  return all ? 0 : 1;
}

inline int cmd_minor(const Options& o, std::ostream& out) {
  GainGraph g = read_graph(o.graph_file);
  ContextPtr ctx = select_context(g.group_ptr(), o.kernel);
  for (EdgeId e : parse_id_list(o.delete_ids)) {
    if (!g.has_edge(e)) throw Error("graph has no edge " + std::to_string(e));
    g = delete_edge(ctx, g, e)->graph();
  }
  for (EdgeId e : parse_id_list(o.contract_ids)) {
    if (!g.has_edge(e)) throw Error("graph has no edge " + std::to_string(e));
    g = contract_edge(ctx, g, e)->graph();
  }
  out << graph_to_json(g).dump() << "\n";
  return 0;
}

inline int cmd_recover(const Options& o, std::ostream& out) {
  GainGraph g = read_graph(o.graph_file);
  const GroupPtr& grp = g.group_ptr();
  const int n = g.vertex_count();
  if (!(g == complete_gain_graph(grp, n))) {
    throw Error("recover needs the complete gain graph K_n of the group");
  }
  Subgroup kernel;
  if (o.kernel == "all") {
    kernel = whole_group(*grp);
  } else if (o.kernel == "trivial") {
    kernel = trivial_subgroup();
  } else {
    std::string list = o.kernel.rfind("kernel=", 0) == 0 ? o.kernel.substr(7) : o.kernel;
    auto sub = as_subgroup(*grp, parse_elements(*grp, list));
    if (!sub) throw Error("kernel \"" + list + "\" is not a subgroup");
    kernel = *sub;
  }
  if (o.build == !o.class_file.empty()) {
    throw Error("recover needs exactly one of --class FILE or --build");
  }
  RecoveryOptions ro;
  ro.samples = o.samples;
  ro.seed = o.seed;
  RecoveryReport rep;
  if (o.build) {
    auto m = make_lifted(context_with_kernel(grp, kernel), g);
    rep = recover_partition(grp, kernel, n, *m, ro);
  } else {
    ClassLiftOracle m(quotient_gains(g, quotient(grp, kernel)),
                      parse_circuits(read_text(o.class_file)));
    rep = recover_partition(grp, kernel, n, m, ro);
  }
  out << "branch " << rep.branch << "\n"
      << format_partition(*grp, rep.partition) << "checked "
      << rep.subsets_checked << (rep.exhaustive_sweep ? " subsets (all)" : " subsets (sampled)")
      << "\n";
  return 0;
}

}  // namespace cli

// Entry point shared by the frobmat binary and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  cli::Options o;
  CLI::App app{"frobmat: lifted gain-graph matroids over Frobenius partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--limit", o.limit, "Edge cap for exponential enumerations");

  auto graph_opts = [&](CLI::App* c) {
    c->add_option("--graph", o.graph_file, "Gain graph JSON")->required();
    c->add_option("--kernel", o.kernel,
                  "auto | trivial | all | kernel=e1,e2,...");
  };
  auto* frob = app.add_subcommand("frobpart", "List Frobenius partitions of a group");
  frob->add_option("--group", o.group_file, "Group JSON")->required();

  auto* rank = app.add_subcommand("rank", "Rank of a subset");
  graph_opts(rank);
  auto* subset_opt = rank->add_option("--subset", o.subset, "Comma-separated edge ids");

  auto* circ = app.add_subcommand("circuits", "List circuits");
  graph_opts(circ);
  circ->add_flag("--linear-class", o.linear, "List the linear class instead");

  auto* bas = app.add_subcommand("bases", "List bases");
  graph_opts(bas);

  auto* ver = app.add_subcommand("verify", "Run verification checks");
  graph_opts(ver);
  ver->add_flag("--axioms", o.axioms, "Rank axioms on all subsets");
  ver->add_flag("--linear-class", o.linear, "Linear class condition");
  ver->add_option("--class", o.class_file, "Circuit list to check instead of the built class");
  ver->add_flag("--representation", o.representation, "Incidence matrix rank agreement");
  ver->add_flag("--minors", o.minors, "Deletion/contraction commutation");
  ver->add_option("--seed", o.seed, "Seed for sampled sweeps");
  ver->add_option("--samples", o.samples, "Sample count for large sweeps");

  auto* mat = app.add_subcommand("matrix", "Incidence matrix over GF(q)");
  mat->add_option("--graph", o.graph_file, "Gain graph JSON over field_affine(q)")->required();

  auto* min = app.add_subcommand("minor", "Delete then contract edges");
  graph_opts(min);
  min->add_option("--delete", o.delete_ids, "Edge ids to delete");
  min->add_option("--contract", o.contract_ids, "Edge ids to contract, in order");

  auto* rec = app.add_subcommand("recover", "Recover the partition from a lift of K_n");
  rec->add_option("--graph", o.graph_file, "Complete gain graph JSON")->required();
  rec->add_option("--kernel", o.kernel, "Kernel elements, or trivial | all")->required();
  rec->add_option("--class", o.class_file, "Linear class circuit list");
  rec->add_flag("--build", o.build, "Build the lift from the partition with this kernel");
  rec->add_option("--seed", o.seed, "Seed for sampled sweeps");
  rec->add_option("--samples", o.samples, "Sample count for large sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  o.has_subset = subset_opt->count() > 0;
  struct RestoreLimits {
    Limits saved = limits();
    ~RestoreLimits() { limits() = saved; }
  } restore;
  if (o.limit > 0) {
    limits().max_cycle_edges = o.limit;
    limits().max_circuit_ground = o.limit;
  }
  try {
    if (frob->parsed()) return cli::cmd_frobpart(o, out);
    if (rank->parsed()) return cli::cmd_rank(o, out);
    if (circ->parsed()) return cli::cmd_circuits(o, out);
    if (bas->parsed()) return cli::cmd_bases(o, out);
    if (ver->parsed()) return cli::cmd_verify(o, out);
    if (mat->parsed()) return cli::cmd_matrix(o, out);
    if (min->parsed()) return cli::cmd_minor(o, out);
    if (rec->parsed()) return cli::cmd_recover(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace frobmat
