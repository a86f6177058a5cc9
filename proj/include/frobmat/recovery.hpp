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

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "frobmat/biased_matroid.hpp"
#include "frobmat/gain_graph.hpp"
#include "frobmat/lift.hpp"

namespace frobmat {

// All edges of K_n^G whose gain lies in `s`.
inline EdgeSet edge_bundle(const FiniteGroup& g, int n,
                           const std::vector<Element>& s) {
  EdgeSet out;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Element a : s) {
        if (a < 0 || a >= g.order()) throw Error("element out of range");
        out.push_back(complete_edge_id(g.order(), n, i, j, a));
      }
    }
  }
  return make_edge_set(out);
}

// Elementary lift of F(G, psi / kernel) given by a linear class of
// circuits: rank goes up by one on sets holding an underlying circuit that
// is not in the class.
class ClassLiftOracle : public RankOracle {
 public:
  ClassLiftOracle(GainGraph quotient_graph, const std::vector<EdgeSet>& lc)
      : q_(std::move(quotient_graph)),
        ground_(q_.edge_ids()),
        lc_(lc.begin(), lc.end()) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override {
    int r = frame_rank(q_, x);
    for (const auto& c : frame_circuits(restrict_edges(q_, x))) {
      if (!lc_.count(c)) return r + 1;
    }
    return r;
  }

 private:
  GainGraph q_;
  EdgeSet ground_;
  std::set<EdgeSet> lc_;
};

struct RecoveryOptions {
  int samples = 2000;
  unsigned seed = 1;
  long max_exhaustive_cycles = 600000;
};

struct RecoveryReport {
  FrobeniusPartition partition;
  std::string branch;  // "lift", "frame" or "classes"
  long subsets_checked = 0;
  bool exhaustive_sweep = false;
};

namespace detail {

// Calls f(cycle as edge set, balanced?) for every cycle of K_n^G of length
// 2..4 (all cycles when n = 4); sampled per vertex tour when too many.
template <typename F>
void for_complete_cycles(const FiniteGroup& g, int n, const RecoveryOptions& opt,
                         F&& f) {
  const int k = g.order();
  auto id = [&](Vertex a, Vertex b, Element x) {
    return a < b ? complete_edge_id(k, n, a, b, x) : complete_edge_id(k, n, b, a, x);
  };
  // Gain of the edge with id for (a, b, x) read from a to b.
  auto gain = [&](Vertex a, Vertex b, Element x) { return a < b ? x : g.inv(x); };
  std::vector<std::vector<Vertex>> tours;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      tours.push_back({a, b});
      for (Vertex c = b + 1; c < n; ++c) {
        tours.push_back({a, b, c});
        for (Vertex d = c + 1; d < n; ++d) {
          tours.push_back({a, b, c, d});
          tours.push_back({a, b, d, c});
          tours.push_back({a, c, b, d});
        }
      }
    }
  }
  std::mt19937 rng(opt.seed);
  for (const auto& t : tours) {
    const int len = static_cast<int>(t.size());
    long count = 1;
    for (int i = 0; i < len; ++i) count *= k;
    auto visit = [&](const std::vector<Element>& xs) {
      if (len == 2) {
        // Parallel edges; never balanced since the gains differ.
        if (xs[0] < xs[1]) f(make_edge_set({id(t[0], t[1], xs[0]), id(t[0], t[1], xs[1])}), false);
        return;
      }
      Element prod = 0;
      EdgeSet c;
      for (int i = 0; i < len; ++i) {
        Vertex u = t[i], v = t[(i + 1) % len];
        prod = g.mul(prod, gain(u, v, xs[i]));
        c.push_back(id(u, v, xs[i]));
      }
      f(make_edge_set(c), prod == 0);
    };
    std::vector<Element> xs(len, 0);
    if (count <= opt.max_exhaustive_cycles) {
      for (long m = 0; m < count; ++m) {
        long r = m;
        for (int i = 0; i < len; ++i) {
          xs[i] = static_cast<Element>(r % k);
          r /= k;
        }
        visit(xs);
      }
    } else {
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (long s = 0; s < opt.max_exhaustive_cycles; ++s) {
        for (int i = 0; i < len; ++i) xs[i] = pick(rng);
        visit(xs);
      }
    }
  }
}

}  // namespace detail

// Recovers the Frobenius partition {kernel} + A from an elementary lift M of
// F(K_n^G, psi / kernel) in which a cycle is a circuit iff it is balanced.
inline RecoveryReport recover_partition(const GroupPtr& g, const Subgroup& kernel,
                                        int n, const RankOracle& m,
                                        const RecoveryOptions& opt = {}) {
  if (n < 4) throw Error("recovery needs n >= 4");
  if (!as_subgroup(*g, kernel.elements) || !is_normal(*g, kernel)) {
    throw Error("kernel " + format_set(kernel.elements) + " is not a normal subgroup");
  }
  const int k = g->order();
  GainGraph kn = complete_gain_graph(g, n);
  if (m.ground() != kn.edge_ids()) {
    throw Error("oracle ground set is not E(K_" + std::to_string(n) + ")");
  }
  const QuotientMap qm = quotient(g, kernel);
  const GainFrameOracle base(quotient_gains(kn, qm));

  detail::for_complete_cycles(*g, n, opt, [&](const EdgeSet& c, bool balanced) {
    bool circuit = m.rank(c) == static_cast<int>(c.size()) - 1;
    if (circuit != balanced) {
      throw Error(std::string("cycle hypothesis fails on ") +
                  (balanced ? "balanced" : "unbalanced") + " cycle " +
                  format_set(c));
    }
  });

  const EdgeSet& ground = kn.edge_ids();
  if (static_cast<int>(ground.size()) <= 16) {
    auto chk = is_elementary_lift(m, base);
    if (!chk.ok) throw Error("not an elementary lift: " + chk.message);
  } else {
    std::mt19937 rng(opt.seed + 1);
    for (int s = 0; s < opt.samples; ++s) {
      EdgeSet x;
      for (EdgeId e : ground) {
        if (rng() & 1u) x.push_back(e);
      }
      int d = m.rank(x) - base.rank(x);
      if (d < 0 || d > 1) {
        throw Error("not an elementary lift: rank difference " +
                    std::to_string(d) + " on " + format_set(x));
      }
    }
  }

  RecoveryReport out;
  out.partition.kernel = kernel;
  const int rm = m.full_rank();
  if (kernel.size() == k) {
    out.branch = "lift";
  } else if (rm == n) {
    if (kernel.size() != 1) {
      Element gamma = kernel.elements[1];
      throw Error("rank n with nontrivial kernel: digon " +
                  format_set(make_edge_set({complete_edge_id(k, n, 0, 1, 0),
                                            complete_edge_id(k, n, 0, 1, gamma)})) +
                  " is a circuit of the underlying matroid yet unbalanced");
    }
    out.branch = "frame";
    out.partition.complements = {whole_group(*g)};
  } else if (rm == n + 1) {
    out.branch = "classes";
    std::vector<Element> rest;
    for (Element a = 0; a < k; ++a) {
      if (!kernel.contains(a)) rest.push_back(a);
    }
    std::map<std::pair<Element, Element>, bool> rel;
    for (Element a : rest) {
      for (Element b : rest) {
        if (b < a) {
          rel[{a, b}] = rel[{b, a}];
          continue;
        }
        rel[{a, b}] = m.rank(edge_bundle(*g, n, {0, a, b})) == n;
      }
    }
    for (Element a : rest) {
      if (!rel[{a, a}]) {
        throw Error("relation is not reflexive at " + g->label(a));
      }
    }
    std::vector<int> seen(k, 0);
    for (Element a : rest) {
      if (seen[a]) continue;
      std::vector<Element> cls = {0};
      for (Element b : rest) {
        if (rel[{a, b}]) cls.push_back(b);
      }
      for (Element b : cls) {
        if (b == 0) continue;
        if (seen[b]) {
          throw Error("relation is not transitive at " + g->label(b));
        }
        for (Element c : cls) {
          if (c != 0 && !rel[{b, c}]) {
            throw Error("relation is not transitive: " + g->label(a) + " ~ " +
                        g->label(b) + ", " + g->label(a) + " ~ " + g->label(c) +
                        " but not " + g->label(b) + " ~ " + g->label(c));
          }
        }
        seen[b] = 1;
      }
      auto sub = as_subgroup(*g, cls);
      if (!sub) throw Error("class of " + g->label(a) + " plus identity is not a subgroup");
      if (!is_malnormal(*g, *sub)) {
        throw Error("class of " + g->label(a) + " is not malnormal");
      }
      out.partition.complements.push_back(*sub);
    }
    std::sort(out.partition.complements.begin(), out.partition.complements.end());
  } else {
    throw Error("rank " + std::to_string(rm) + " is neither n nor n + 1");
  }
  if (auto bad = partition_violation(*g, out.partition)) {
    throw Error("recovered partition is invalid: " + *bad);
  }

  const LiftedMatroid rebuilt(make_context(g, out.partition), kn);
  auto compare = [&](const EdgeSet& x) {
    ++out.subsets_checked;
    int a = m.rank(x), b = rebuilt.rank(x);
    if (a != b) {
      throw Error("reconstruction mismatch on " + format_set(x) + ": oracle " +
                  std::to_string(a) + ", rebuilt " + std::to_string(b));
    }
  };
  if (ground.size() <= 16) {
    out.exhaustive_sweep = true;
    for (unsigned long long mask = 0; mask < (1ULL << ground.size()); ++mask) {
      compare(subset_from_mask(ground, mask));
    }
  } else {
    std::mt19937 rng(opt.seed + 2);
    std::uniform_int_distribution<int> size_of(0, static_cast<int>(ground.size()));
    for (int s = 0; s < opt.samples; ++s) {
      EdgeSet pool = ground;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(size_of(rng));
      compare(make_edge_set(pool));
    }
  }
  return out;
}

// Single-vertex switchings of K_n^G map the class `lc` onto itself.
// Requires every balanced cycle of K_n^G to lie in `lc`.
inline bool switching_action_check(const GroupPtr& g, const Subgroup& kernel,
                                   int n, std::vector<EdgeSet> lc) {
  if (n < 3) throw Error("switching action needs n >= 3");
  GainGraph kn = complete_gain_graph(g, n);
  const QuotientMap qm = quotient(g, kernel);
  const GainFrameOracle base(quotient_gains(kn, qm));
  for (const auto& c : lc) {
    if (base.rank(c) != static_cast<int>(c.size()) - 1) {
      throw Error(format_set(c) + " is not dependent in the underlying frame matroid");
    }
  }
  std::sort(lc.begin(), lc.end());
  std::set<EdgeSet> in(lc.begin(), lc.end());
  for (const auto& c : enumerate_cycles(kn)) {
    if (is_balanced_cycle(kn, c) && !in.count(c)) {
      throw Error("balanced cycle " + format_set(c) + " is not in the class");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Element x = 1; x < g->order(); ++x) {
      SwitchingFunction eta(n, 0);
      eta[v] = x;
      if (permute_sets(lc, complete_switching_permutation(*g, n, eta)) != lc) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace frobmat
