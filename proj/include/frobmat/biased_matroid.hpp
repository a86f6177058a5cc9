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

#include <bitset>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobmat/common.hpp"
#include "frobmat/gain_graph.hpp"

namespace frobmat {

class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual const EdgeSet& ground() const = 0;
  virtual int rank(const EdgeSet& x) const = 0;

  int full_rank() const { return rank(ground()); }
};

using OraclePtr = std::shared_ptr<const RankOracle>;

// Wraps an arbitrary rank function; used for fault injection and tables.
class FunctionOracle : public RankOracle {
 public:
  FunctionOracle(EdgeSet ground, std::function<int(const EdgeSet&)> f)
      : ground_(std::move(ground)), f_(std::move(f)) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return f_(x); }

 private:
  EdgeSet ground_;
  std::function<int(const EdgeSet&)> f_;
};

// Ranks looked up from a finite table; unknown queries throw.
class TableOracle : public RankOracle {
 public:
  TableOracle(EdgeSet ground, std::map<EdgeSet, int> table)
      : ground_(std::move(ground)), table_(std::move(table)) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override {
    auto it = table_.find(x);
    if (it == table_.end()) {
      throw Error("rank table has no entry for " + format_set(x));
    }
    return it->second;
  }

 private:
  EdgeSet ground_;
  std::map<EdgeSet, int> table_;
};

// M \ e restricted to ground - e.
class DeletionOracle : public RankOracle {
 public:
  DeletionOracle(OraclePtr m, EdgeId e)
      : m_(std::move(m)), ground_(without_edge(m_->ground(), e)) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return m_->rank(x); }

 private:
  OraclePtr m_;
  EdgeSet ground_;
};

// M / e: r(X) = r_M(X + e) - r_M({e}).
class ContractionOracle : public RankOracle {
 public:
  ContractionOracle(OraclePtr m, EdgeId e)
      : m_(std::move(m)),
        e_(e),
        ground_(without_edge(m_->ground(), e)),
        re_(m_->rank({e})) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override {
    return m_->rank(with_edge(x, e_)) - re_;
  }

 private:
  OraclePtr m_;
  EdgeId e_;
  EdgeSet ground_;
  int re_;
};

// ---------------------------------------------------------------------------
// Gain-based frame, lift and graphic ranks (spanning-tree normalization).

inline int graphic_rank(const GainGraph& g, const EdgeSet& x) {
  auto a = analyze_components(g, x);
  return a.vertex_total - static_cast<int>(a.components.size());
}

inline bool component_balanced(const Component& c) {
  for (const auto& f : c.fundamental) {
    if (f.second != 0) return false;
  }
  return true;
}

inline int frame_rank(const GainGraph& g, const EdgeSet& x) {
  auto a = analyze_components(g, x);
  int r = a.vertex_total;
  for (const auto& c : a.components) r -= component_balanced(c) ? 1 : 0;
  return r;
}

inline int lift_rank(const GainGraph& g, const EdgeSet& x) {
  auto a = analyze_components(g, x);
  int r = a.vertex_total - static_cast<int>(a.components.size());
  for (const auto& c : a.components) {
    if (!component_balanced(c)) return r + 1;
  }
  return r;
}

class GraphicOracle : public RankOracle {
 public:
  explicit GraphicOracle(GainGraph g) : g_(std::move(g)), ground_(g_.edge_ids()) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return graphic_rank(g_, x); }

 private:
  GainGraph g_;
  EdgeSet ground_;
};

class GainFrameOracle : public RankOracle {
 public:
  explicit GainFrameOracle(GainGraph g) : g_(std::move(g)), ground_(g_.edge_ids()) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return frame_rank(g_, x); }
  const GainGraph& graph() const { return g_; }

 private:
  GainGraph g_;
  EdgeSet ground_;
};

class GainLiftOracle : public RankOracle {
 public:
  explicit GainLiftOracle(GainGraph g) : g_(std::move(g)), ground_(g_.edge_ids()) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return lift_rank(g_, x); }

 private:
  GainGraph g_;
  EdgeSet ground_;
};

// ---------------------------------------------------------------------------
// Biased graphs with an explicit set of balanced cycles.

struct BiasedGraph {
  GainGraph graph;                // gains are ignored
  std::vector<EdgeSet> balanced;  // sorted

  bool is_balanced(const EdgeSet& cycle) const {
    return std::binary_search(balanced.begin(), balanced.end(), cycle);
  }

  static BiasedGraph from_gains(const GainGraph& g) {
    BiasedGraph b{g, {}};
    for (const auto& c : enumerate_cycles(g)) {
      if (is_balanced_cycle(g, c)) b.balanced.push_back(c);
    }
    return b;
  }
};

namespace detail {

// Number of components of G[X] all of whose cycles are balanced, with the
// cycles of each component enumerated directly.
inline int balanced_components(const BiasedGraph& b, const EdgeSet& x,
                               bool* any_unbalanced) {
  auto a = analyze_components(b.graph, x);
  int count = 0;
  *any_unbalanced = false;
  for (const auto& c : a.components) {
    bool bal = true;
    if (!c.fundamental.empty()) {
      for (const auto& cyc : enumerate_cycles(restrict_edges(b.graph, c.edges))) {
        if (!b.is_balanced(cyc)) {
          bal = false;
          break;
        }
      }
    }
    if (bal) {
      ++count;
    } else {
      *any_unbalanced = true;
    }
  }
  return count;
}

}  // namespace detail

inline int frame_rank(const BiasedGraph& b, const EdgeSet& x) {
  bool any = false;
  int bal = detail::balanced_components(b, x, &any);
  return static_cast<int>(vertices_of(b.graph, x).size()) - bal;
}

inline int lift_rank(const BiasedGraph& b, const EdgeSet& x) {
  bool any = false;
  detail::balanced_components(b, x, &any);
  return graphic_rank(b.graph, x) + (any ? 1 : 0);
}

class BiasedFrameOracle : public RankOracle {
 public:
  explicit BiasedFrameOracle(BiasedGraph b)
      : b_(std::move(b)), ground_(b_.graph.edge_ids()) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return frame_rank(b_, x); }

 private:
  BiasedGraph b_;
  EdgeSet ground_;
};

class BiasedLiftOracle : public RankOracle {
 public:
  explicit BiasedLiftOracle(BiasedGraph b)
      : b_(std::move(b)), ground_(b_.graph.edge_ids()) {}
  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override { return lift_rank(b_, x); }

 private:
  BiasedGraph b_;
  EdgeSet ground_;
};

// ---------------------------------------------------------------------------
// Structural circuit enumeration.

constexpr int kMaxBits = 256;
using Bits = std::bitset<kMaxBits>;

namespace detail {

struct CycleInfo {
  EdgeSet edges;
  Bits edge_bits;
  Bits vertex_bits;
  bool balanced;
};

// Position of every edge id of g in 0..m-1.
inline std::unordered_map<EdgeId, int> edge_positions(const GainGraph& g) {
  if (g.edge_count() > kMaxBits || g.vertex_count() > kMaxBits) {
    throw LimitExceeded("circuit enumeration supports at most " +
                        std::to_string(kMaxBits) + " edges and vertices");
  }
  std::unordered_map<EdgeId, int> pos;
  int i = 0;
  for (const Edge& e : g.edges()) pos[e.id] = i++;
  return pos;
}

inline std::vector<CycleInfo> cycle_infos(
    const GainGraph& g, const std::vector<EdgeSet>& cycles,
    const std::function<bool(const EdgeSet&)>& balanced,
    const std::unordered_map<EdgeId, int>& pos) {
  std::vector<CycleInfo> out;
  for (const auto& c : cycles) {
    CycleInfo ci{c, {}, {}, balanced(c)};
    for (EdgeId id : c) {
      const Edge& e = g.edge(id);
      ci.edge_bits.set(pos.at(id));
      ci.vertex_bits.set(e.tail);
      ci.vertex_bits.set(e.head);
    }
    out.push_back(std::move(ci));
  }
  return out;
}

inline EdgeSet bits_to_set(const Bits& b, const EdgeSet& ids) {
  EdgeSet out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (b.test(i)) out.push_back(ids[i]);
  }
  return out;
}

// Paths from V(c1) to V(c2) whose interior avoids both cycles.
inline void connecting_paths(const GainGraph& g, const Bits& v1,
                             const Bits& v2,
                             const std::unordered_map<EdgeId, int>& pos,
                             std::vector<Bits>& out) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<EdgeId, Vertex>>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.tail].push_back({e.id, e.head});
    adj[e.head].push_back({e.id, e.tail});
  }
  std::vector<char> on(n, 0);
  Bits path;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    for (auto [id, w] : adj[v]) {
      if (on[w] || v1.test(w)) continue;
      Bits p = path;
      p.set(pos.at(id));
      if (v2.test(w)) {
        out.push_back(p);
        continue;
      }
      on[w] = 1;
      std::swap(path, p);
      self(self, w);
      std::swap(path, p);
      on[w] = 0;
    }
  };
  for (Vertex a = 0; a < n; ++a) {
    if (!v1.test(a)) continue;
    on[a] = 1;
    dfs(dfs, a);
    on[a] = 0;
  }
}

inline bool is_theta_union(const GainGraph& g, const EdgeSet& u) {
  std::map<Vertex, int> deg;
  for (EdgeId id : u) {
    const Edge& e = g.edge(id);
    deg[e.tail]++;
    deg[e.head]++;
  }
  if (u.size() != deg.size() + 1) return false;
  int threes = 0;
  for (auto [v, d] : deg) {
    if (d == 3) {
      ++threes;
    } else if (d != 2) {
      return false;
    }
  }
  return threes == 2;
}

inline std::vector<EdgeSet> structural_circuits(
    const GainGraph& g, const std::function<bool(const EdgeSet&)>& balanced,
    bool lift) {
  if (g.edge_count() > limits().max_circuit_ground) {
    throw LimitExceeded("circuit enumeration limited to " +
                        std::to_string(limits().max_circuit_ground) +
                        " edges, graph has " + std::to_string(g.edge_count()));
  }
  const auto pos = edge_positions(g);
  const EdgeSet ids = g.edge_ids();
  const auto cyc = cycle_infos(g, enumerate_cycles(g), balanced, pos);
  std::set<EdgeSet> found;
  std::map<EdgeSet, bool> balance_of;
  for (const auto& c : cyc) {
    balance_of[c.edges] = c.balanced;
    if (c.balanced) found.insert(c.edges);
  }
  for (size_t i = 0; i < cyc.size(); ++i) {
    if (cyc[i].balanced) continue;
    for (size_t j = i + 1; j < cyc.size(); ++j) {
      if (cyc[j].balanced) continue;
      const Bits shared_e = cyc[i].edge_bits & cyc[j].edge_bits;
      const Bits shared_v = cyc[i].vertex_bits & cyc[j].vertex_bits;
      const Bits both = cyc[i].edge_bits | cyc[j].edge_bits;
      if (shared_e.any()) {
        EdgeSet u = bits_to_set(both, ids);
        if (!is_theta_union(g, u)) continue;
        EdgeSet third = bits_to_set(cyc[i].edge_bits ^ cyc[j].edge_bits, ids);
        auto it = balance_of.find(third);
        if (it != balance_of.end() && !it->second) found.insert(u);
      } else if (shared_v.count() == 1) {
        found.insert(bits_to_set(both, ids));
      } else if (shared_v.none()) {
        if (lift) {
          found.insert(bits_to_set(both, ids));
        } else {
          std::vector<Bits> paths;
          connecting_paths(g, cyc[i].vertex_bits, cyc[j].vertex_bits, pos,
                           paths);
          for (const auto& p : paths) found.insert(bits_to_set(both | p, ids));
        }
      }
    }
  }
  return std::vector<EdgeSet>(found.begin(), found.end());
}

}  // namespace detail

inline std::vector<EdgeSet> frame_circuits(const BiasedGraph& b) {
  return detail::structural_circuits(
      b.graph, [&](const EdgeSet& c) { return b.is_balanced(c); }, false);
}

inline std::vector<EdgeSet> lift_circuits(const BiasedGraph& b) {
  return detail::structural_circuits(
      b.graph, [&](const EdgeSet& c) { return b.is_balanced(c); }, true);
}

// Circuits of the frame matroid of a gain graph, balance decided by gains.
inline std::vector<EdgeSet> frame_circuits(const GainGraph& g) {
  return detail::structural_circuits(
      g, [&](const EdgeSet& c) { return is_balanced_cycle(g, c); }, false);
}

inline std::vector<EdgeSet> lift_circuits(const GainGraph& g) {
  return detail::structural_circuits(
      g, [&](const EdgeSet& c) { return is_balanced_cycle(g, c); }, true);
}

struct ThetaCheck {
  bool ok = true;
  std::vector<EdgeSet> witness;  // the three cycles of a violating theta
};

inline ThetaCheck theta_property_check(const BiasedGraph& b) {
  const auto cycles = enumerate_cycles(b.graph);
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      if (set_intersection(cycles[i], cycles[j]).empty()) continue;
      EdgeSet u = set_union(cycles[i], cycles[j]);
      if (!detail::is_theta_union(b.graph, u)) continue;
      EdgeSet third;
      std::set_symmetric_difference(cycles[i].begin(), cycles[i].end(),
                                    cycles[j].begin(), cycles[j].end(),
                                    std::back_inserter(third));
      int bal = b.is_balanced(cycles[i]) + b.is_balanced(cycles[j]) +
                b.is_balanced(third);
      if (bal == 2) {
        std::vector<EdgeSet> w{cycles[i], cycles[j], third};
        std::sort(w.begin(), w.end());
        return {false, w};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Linear classes and elementary lifts.

struct LinearClassCheck {
  bool ok = true;
  EdgeSet c1, c2, c;  // modular pair and a circuit in its union not in cand
  std::string message;
};

namespace detail {

struct BitIndex {
  std::unordered_map<EdgeId, int> pos;
  Bits of(const EdgeSet& s) const {
    Bits b;
    for (EdgeId id : s) b.set(pos.at(id));
    return b;
  }
};

inline BitIndex bit_index(const EdgeSet& ground) {
  if (ground.size() > static_cast<size_t>(kMaxBits)) {
    throw LimitExceeded("ground set too large for circuit bookkeeping");
  }
  BitIndex ix;
  for (size_t i = 0; i < ground.size(); ++i) ix.pos[ground[i]] = static_cast<int>(i);
  return ix;
}

inline bool bits_subset(const Bits& a, const Bits& b) { return (a & ~b).none(); }

}  // namespace detail

inline LinearClassCheck is_linear_class(const RankOracle& host,
                                        const std::vector<EdgeSet>& host_circuits,
                                        const std::vector<EdgeSet>& cand) {
  std::set<EdgeSet> in_cand(cand.begin(), cand.end());
  std::set<EdgeSet> hosts(host_circuits.begin(), host_circuits.end());
  for (const auto& c : cand) {
    if (!hosts.count(c)) {
      LinearClassCheck r;
      r.ok = false;
      r.c1 = r.c2 = r.c = c;
      r.message = format_set(c) + " is not a circuit of the host";
      return r;
    }
  }
  const auto ix = detail::bit_index(host.ground());
  std::vector<Bits> outside;
  std::vector<EdgeSet> outside_sets;
  for (const auto& h : host_circuits) {
    if (!in_cand.count(h)) {
      outside.push_back(ix.of(h));
      outside_sets.push_back(h);
    }
  }
  std::vector<Bits> cb;
  for (const auto& c : cand) cb.push_back(ix.of(c));
  for (size_t i = 0; i < cand.size(); ++i) {
    for (size_t j = i + 1; j < cand.size(); ++j) {
      Bits u = cb[i] | cb[j];
      // Cheap filter: a circuit outside the class must fit in the union.
      int hit = -1;
      for (size_t k = 0; k < outside.size() && hit < 0; ++k) {
        if (detail::bits_subset(outside[k], u)) hit = static_cast<int>(k);
      }
      if (hit < 0) continue;
      EdgeSet us = set_union(cand[i], cand[j]);
      if (static_cast<int>(us.size()) - host.rank(us) != 2) continue;
      LinearClassCheck r;
      r.ok = false;
      r.c1 = cand[i];
      r.c2 = cand[j];
      r.c = outside_sets[hit];
      r.message = "modular pair " + format_set(r.c1) + " " + format_set(r.c2) +
                  " contains circuit " + format_set(r.c) + " outside the class";
      return r;
    }
  }
  return {};
}

// Elementary lift of `host` determined by the linear class `lc`:
// r(X) = r_host(X) if every host circuit inside X is in lc, else +1.
class BrylawskiLift : public RankOracle {
 public:
  BrylawskiLift(OraclePtr host, const std::vector<EdgeSet>& host_circuits,
                const std::vector<EdgeSet>& lc)
      : host_(std::move(host)), ix_(detail::bit_index(host_->ground())) {
    std::set<EdgeSet> in(lc.begin(), lc.end());
    for (const auto& h : host_circuits) {
      if (!in.count(h)) outside_.push_back(ix_.of(h));
    }
  }
  const EdgeSet& ground() const override { return host_->ground(); }
  int rank(const EdgeSet& x) const override {
    Bits b = ix_.of(x);
    for (const auto& o : outside_) {
      if (detail::bits_subset(o, b)) return host_->rank(x) + 1;
    }
    return host_->rank(x);
  }

 private:
  OraclePtr host_;
  detail::BitIndex ix_;
  std::vector<Bits> outside_;
};

inline OraclePtr brylawski_lift(OraclePtr host,
                                const std::vector<EdgeSet>& host_circuits,
                                const std::vector<EdgeSet>& lc) {
  auto chk = is_linear_class(*host, host_circuits, lc);
  if (!chk.ok) throw Error("not a linear class: " + chk.message);
  return std::make_shared<BrylawskiLift>(std::move(host), host_circuits, lc);
}

// All inclusion-minimal dependent sets of `o`, by exhaustive scan.
inline std::vector<EdgeSet> minimal_dependent_sets(const RankOracle& o) {
  const EdgeSet& ground = o.ground();
  const int m = static_cast<int>(ground.size());
  if (m > limits().max_oracle_ground) {
    throw LimitExceeded("minimal_dependent_sets limited to " +
                        std::to_string(limits().max_oracle_ground) +
                        " elements");
  }
  const unsigned long long total = 1ULL << m;
  std::vector<char> indep(total, 0);
  std::vector<EdgeSet> out;
  indep[0] = 1;
  for (unsigned long long mask = 1; mask < total; ++mask) {
    bool subsets_indep = true;
    for (int i = 0; i < m && subsets_indep; ++i) {
      if (mask >> i & 1ULL) subsets_indep = indep[mask ^ (1ULL << i)];
    }
    if (!subsets_indep) continue;
    EdgeSet x = subset_from_mask(ground, mask);
    if (o.rank(x) == static_cast<int>(x.size())) {
      indep[mask] = 1;
    } else {
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct AxiomCheck {
  bool ok = true;
  std::string message;
  EdgeSet x, y;
};

// Rank axioms on every subset: r(empty) = 0, unit increase, and
// submodularity (all pairs up to 12 elements, the equivalent local form
// r(X+a) + r(X+b) >= r(X+a+b) + r(X) above that).
inline AxiomCheck matroid_axiom_check(const RankOracle& o) {
  const EdgeSet& ground = o.ground();
  const int m = static_cast<int>(ground.size());
  if (m > limits().max_axiom_ground) {
    throw LimitExceeded("matroid_axiom_check limited to " +
                        std::to_string(limits().max_axiom_ground) +
                        " elements");
  }
  const unsigned total = 1u << m;
  std::vector<int> r(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    r[mask] = o.rank(subset_from_mask(ground, mask));
  }
  auto fail = [&](std::string msg, unsigned a, unsigned b) {
    return AxiomCheck{false, std::move(msg), subset_from_mask(ground, a),
                      subset_from_mask(ground, b)};
  };
  if (r[0] != 0) return fail("rank of the empty set is not 0", 0, 0);
  for (unsigned mask = 0; mask < total; ++mask) {
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1u) continue;
      int d = r[mask | (1u << i)] - r[mask];
      if (d < 0 || d > 1) {
        return fail("unit increase fails adding element " +
                        std::to_string(ground[i]),
                    mask, mask | (1u << i));
      }
    }
  }
  if (m <= 12) {
    for (unsigned a = 0; a < total; ++a) {
      for (unsigned b = a + 1; b < total; ++b) {
        if (r[a] + r[b] < r[a | b] + r[a & b]) {
          return fail("submodularity fails", a, b);
        }
      }
    }
  } else {
    for (unsigned x = 0; x < total; ++x) {
      for (int i = 0; i < m; ++i) {
        if (x >> i & 1u) continue;
        for (int j = i + 1; j < m; ++j) {
          if (x >> j & 1u) continue;
          unsigned xa = x | (1u << i), xb = x | (1u << j);
          if (r[xa] + r[xb] < r[xa | xb] + r[x]) {
            return fail("submodularity fails", xa, xb);
          }
        }
      }
    }
  }
  return {};
}

struct ElementaryLiftCheck {
  bool ok = true;
  std::vector<EdgeSet> linear_class;
  std::string message;
};

// Is `lift` an elementary lift of `base`? Recovers the class of base
// circuits that stay circuits in `lift` and checks that it is linear and
// reproduces every rank of `lift`.
inline ElementaryLiftCheck is_elementary_lift(const RankOracle& lift,
                                              const RankOracle& base) {
  ElementaryLiftCheck out;
  if (lift.ground() != base.ground()) {
    out.ok = false;
    out.message = "ground sets differ";
    return out;
  }
  const EdgeSet& ground = base.ground();
  const int m = static_cast<int>(ground.size());
  if (m > limits().max_axiom_ground) {
    throw LimitExceeded("is_elementary_lift limited to " +
                        std::to_string(limits().max_axiom_ground) +
                        " elements");
  }
  auto base_circuits = minimal_dependent_sets(base);
  for (const auto& c : base_circuits) {
    if (lift.rank(c) == static_cast<int>(c.size()) - 1) {
      out.linear_class.push_back(c);
    }
  }
  auto chk = is_linear_class(base, base_circuits, out.linear_class);
  if (!chk.ok) {
    out.ok = false;
    out.message = chk.message;
    return out;
  }
  const auto ix = detail::bit_index(ground);
  std::set<EdgeSet> in(out.linear_class.begin(), out.linear_class.end());
  std::vector<Bits> outside;
  for (const auto& c : base_circuits) {
    if (!in.count(c)) outside.push_back(ix.of(c));
  }
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    EdgeSet x = subset_from_mask(ground, mask);
    Bits b = ix.of(x);
    int extra = 0;
    for (const auto& o : outside) {
      if (detail::bits_subset(o, b)) {
        extra = 1;
        break;
      }
    }
    if (lift.rank(x) != base.rank(x) + extra) {
      out.ok = false;
      out.message = "rank mismatch on " + format_set(x);
      return out;
    }
  }
  return out;
}

}  // namespace frobmat
