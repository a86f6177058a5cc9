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
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobmat/biased_matroid.hpp"
#include "frobmat/gain_graph.hpp"
#include "frobmat/group.hpp"

namespace frobmat {

constexpr int kIdentityPart = -1;
constexpr int kKernelPart = -2;

// A group with a Frobenius partition, its quotient by the kernel, and the
// part containing each element.
struct FrobeniusContext {
  GroupPtr group;
  FrobeniusPartition partition;
  QuotientMap quotient;
  std::vector<int> part_of;  // kIdentityPart, kKernelPart or complement index

  bool in_kernel(Element x) const {
    return part_of[x] == kKernelPart || part_of[x] == kIdentityPart;
  }
  const Subgroup& kernel() const { return partition.kernel; }
  const std::vector<Subgroup>& complements() const {
    return partition.complements;
  }
};

using ContextPtr = std::shared_ptr<const FrobeniusContext>;

inline ContextPtr make_context(GroupPtr g, FrobeniusPartition p) {
  if (auto bad = partition_violation(*g, p)) {
    throw Error("invalid Frobenius partition: " + *bad);
  }
  auto ctx = std::make_shared<FrobeniusContext>();
  ctx->group = g;
  ctx->quotient = quotient(g, p.kernel);
  ctx->part_of.assign(g->order(), kKernelPart);
  ctx->part_of[0] = kIdentityPart;
  for (size_t i = 0; i < p.complements.size(); ++i) {
    for (Element x : p.complements[i].elements) {
      if (x != 0) ctx->part_of[x] = static_cast<int>(i);
    }
  }
  ctx->partition = std::move(p);
  return ctx;
}

// Kernel {0}, single complement the whole group: the frame matroid case.
inline ContextPtr frame_context(GroupPtr g) {
  if (g->order() == 1) return make_context(g, {trivial_subgroup(), {}});
  return make_context(g, {trivial_subgroup(), {whole_group(*g)}});
}

// Kernel the whole group, no complements: the lift matroid case.
inline ContextPtr lift_context(GroupPtr g) {
  return make_context(g, {whole_group(*g), {}});
}

// The unique nontrivial Frobenius partition; throws if there is none.
inline ContextPtr nontrivial_context(GroupPtr g) {
  for (auto& p : frobenius_partitions(*g)) {
    if (!p.is_trivial(*g)) return make_context(g, p);
  }
  throw Error("group has no nontrivial Frobenius partition");
}

// The partition of `g` whose kernel is `kernel`.
inline ContextPtr context_with_kernel(GroupPtr g, const Subgroup& kernel) {
  if (kernel.size() == g->order()) return lift_context(g);
  if (kernel.size() == 1) return frame_context(g);
  for (auto& p : frobenius_partitions(*g)) {
    if (p.kernel == kernel) return make_context(g, p);
  }
  throw Error("no Frobenius partition has kernel " + format_set(kernel.elements));
}

// ---------------------------------------------------------------------------
// Shapes of frame circuits: cycles, tight/loose handcuffs and thetas.

enum class CircuitKind { kCycle, kTightHandcuff, kLooseHandcuff, kTheta };

inline const char* kind_name(CircuitKind k) {
  switch (k) {
    case CircuitKind::kCycle: return "cycle";
    case CircuitKind::kTightHandcuff: return "tight handcuff";
    case CircuitKind::kLooseHandcuff: return "loose handcuff";
    case CircuitKind::kTheta: return "theta";
  }
  return "?";
}

// A maximal path of G[C] between branch vertices (degree != 2).
struct Branch {
  Vertex from;
  Vertex to;
  std::vector<Step> steps;
  EdgeSet edges;
};

struct CircuitShape {
  CircuitKind kind;
  std::vector<Branch> branches;
  std::vector<EdgeSet> cycles;  // 1 for a cycle, 2 for handcuffs, 3 for thetas
};

namespace detail {

inline std::vector<Step> reversed(const std::vector<Step>& s) {
  std::vector<Step> out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    out.push_back({it->edge, !it->forward});
  }
  return out;
}

inline std::vector<Branch> trace_branches(const GainGraph& g, const EdgeSet& c,
                                          const std::set<Vertex>& branch_vs) {
  std::map<Vertex, std::vector<EdgeId>> inc;
  for (EdgeId id : c) {
    const Edge& e = g.edge(id);
    inc[e.tail].push_back(id);
    if (!e.is_loop()) inc[e.head].push_back(id);
  }
  std::set<EdgeId> used;
  std::vector<Branch> out;
  for (Vertex b : branch_vs) {
    for (EdgeId first : inc[b]) {
      if (used.count(first)) continue;
      Branch br{b, b, {}, {}};
      Vertex at = b;
      EdgeId id = first;
      while (true) {
        used.insert(id);
        const Edge& e = g.edge(id);
        bool fwd = e.tail == at;
        br.steps.push_back({id, fwd});
        br.edges.push_back(id);
        at = e.other(at);
        if (branch_vs.count(at)) break;
        EdgeId next = -1;
        for (EdgeId f : inc[at]) {
          if (!used.count(f)) next = f;
        }
        if (next < 0) break;
        id = next;
      }
      br.to = at;
      std::sort(br.edges.begin(), br.edges.end());
      out.push_back(std::move(br));
    }
  }
  return out;
}

}  // namespace detail

// Classifies C by the degree signature of G[C] and decomposes it into
// branches; nullopt if C is none of the four shapes.
inline std::optional<CircuitShape> circuit_shape(const GainGraph& g,
                                                 const EdgeSet& c) {
  if (c.empty()) return std::nullopt;
  std::map<Vertex, int> deg;
  for (EdgeId id : c) {
    const Edge& e = g.edge(id);
    deg[e.tail]++;
    deg[e.head]++;
  }
  if (analyze_components(g, c).components.size() != 1) return std::nullopt;
  const size_t nv = deg.size();
  std::set<Vertex> threes, fours;
  for (auto [v, d] : deg) {
    if (d == 3) threes.insert(v);
    else if (d == 4) fours.insert(v);
    else if (d != 2) return std::nullopt;
  }
  if (c.size() == nv && threes.empty() && fours.empty()) {
    Walk w = cycle_walk(g, c);
    Branch b{w.start, w.start, w.steps, c};
    return CircuitShape{CircuitKind::kCycle, {b}, {c}};
  }
  if (c.size() != nv + 1) return std::nullopt;
  if (fours.size() == 1 && threes.empty()) {
    auto br = detail::trace_branches(g, c, fours);
    if (br.size() != 2) return std::nullopt;
    return CircuitShape{CircuitKind::kTightHandcuff, br,
                        {br[0].edges, br[1].edges}};
  }
  if (threes.size() == 2 && fours.empty()) {
    auto br = detail::trace_branches(g, c, threes);
    if (br.size() != 3) return std::nullopt;
    int closed = 0;
    for (const auto& b : br) closed += b.from == b.to;
    if (closed == 0) {
      CircuitShape s{CircuitKind::kTheta, br, {}};
      s.cycles = {set_union(br[0].edges, br[1].edges),
                  set_union(br[0].edges, br[2].edges),
                  set_union(br[1].edges, br[2].edges)};
      return s;
    }
    if (closed != 2) return std::nullopt;
    // Order as: cycle at u, path u -> v, cycle at v.
    Vertex u = *threes.begin();
    std::vector<Branch> ordered(3);
    for (auto& b : br) {
      if (b.from == b.to && b.from == u) {
        ordered[0] = b;
      } else if (b.from == b.to) {
        ordered[2] = b;
      } else {
        if (b.from != u) {
          b.steps = detail::reversed(b.steps);
          std::swap(b.from, b.to);
        }
        ordered[1] = b;
      }
    }
    return CircuitShape{CircuitKind::kLooseHandcuff, ordered,
                        {ordered[0].edges, ordered[2].edges}};
  }
  return std::nullopt;
}

// Gain of the closed walk around `cycle` projected to the quotient.
inline bool quotient_balanced_cycle(const FrobeniusContext& ctx,
                                    const GainGraph& g, const EdgeSet& cycle) {
  return ctx.quotient.projection[gain_of_walk(g, cycle_walk(g, cycle))] == 0;
}

// Shape of C after checking that it is a circuit of the frame matroid of
// (G, psi / kernel); throws otherwise.
inline CircuitShape underlying_circuit_shape(const FrobeniusContext& ctx,
                                             const GainGraph& g,
                                             const EdgeSet& c) {
  auto shape = circuit_shape(g, c);
  if (!shape) {
    throw Error(format_set(c) + " is not a circuit of the underlying frame matroid");
  }
  if (shape->kind == CircuitKind::kCycle) {
    if (!quotient_balanced_cycle(ctx, g, c)) {
      throw Error(format_set(c) +
                  " is an unbalanced cycle of the underlying frame matroid");
    }
  } else {
    for (const auto& cyc : shape->cycles) {
      if (quotient_balanced_cycle(ctx, g, cyc)) {
        throw Error(format_set(c) + " is a " + kind_name(shape->kind) +
                    " containing a balanced cycle " + format_set(cyc));
      }
    }
  }
  return *shape;
}

// Membership in the linear class: a cycle must be balanced; a theta or
// handcuff must have all non-tree gains in one complement after its BFS
// spanning tree is normalized.
inline bool class_member(const FrobeniusContext& ctx, const GainGraph& g,
                         const EdgeSet& c) {
  CircuitShape shape = underlying_circuit_shape(ctx, g, c);
  if (shape.kind == CircuitKind::kCycle) return is_balanced_cycle(g, c);
  auto a = analyze_components(g, c);
  const auto& fund = a.components[0].fundamental;
  int part = ctx.part_of[fund[0].second];
  if (part < 0) return false;
  for (const auto& f : fund) {
    if (ctx.part_of[f.second] != part) return false;
  }
  return true;
}

struct CoveringPair {
  Walk first;
  Walk second;
};

// A cyclic covering pair of closed walks for a theta or handcuff.
inline CoveringPair cyclic_covering_pair(const GainGraph& g, const EdgeSet& c) {
  auto shape = circuit_shape(g, c);
  if (!shape || shape->kind == CircuitKind::kCycle) {
    throw Error(format_set(c) + " is not a theta or handcuff");
  }
  const auto& br = shape->branches;
  CoveringPair p;
  switch (shape->kind) {
    case CircuitKind::kTightHandcuff:
      p.first = {br[0].from, br[0].steps};
      p.second = {br[1].from, br[1].steps};
      break;
    case CircuitKind::kLooseHandcuff: {
      p.first = {br[0].from, br[0].steps};
      p.second.start = br[1].from;
      p.second.steps = br[1].steps;
      for (const auto& s : br[2].steps) p.second.steps.push_back(s);
      for (const auto& s : detail::reversed(br[1].steps)) {
        p.second.steps.push_back(s);
      }
      break;
    }
    case CircuitKind::kTheta: {
      p.first.start = p.second.start = br[0].from;
      p.first.steps = br[0].steps;
      for (const auto& s : detail::reversed(br[1].steps)) p.first.steps.push_back(s);
      p.second.steps = br[1].steps;
      for (const auto& s : detail::reversed(br[2].steps)) {
        p.second.steps.push_back(s);
      }
      break;
    }
    case CircuitKind::kCycle:
      break;
  }
  return p;
}

// Membership decided by the walk values of a cyclic covering pair.
inline bool class_member_walks(const FrobeniusContext& ctx, const GainGraph& g,
                               const EdgeSet& c) {
  CircuitShape shape = underlying_circuit_shape(ctx, g, c);
  if (shape.kind == CircuitKind::kCycle) {
    throw Error(format_set(c) + " is a cycle, not a theta or handcuff");
  }
  CoveringPair p = cyclic_covering_pair(g, c);
  int a = ctx.part_of[gain_of_walk(g, p.first)];
  int b = ctx.part_of[gain_of_walk(g, p.second)];
  return a >= 0 && a == b;
}

// Frame circuits of (G, psi / kernel).
inline std::vector<EdgeSet> underlying_circuits(const FrobeniusContext& ctx,
                                                const GainGraph& g) {
  return frame_circuits(quotient_gains(g, ctx.quotient));
}

inline std::vector<EdgeSet> linear_class(const FrobeniusContext& ctx,
                                         const GainGraph& g) {
  std::vector<EdgeSet> out;
  for (auto& c : underlying_circuits(ctx, g)) {
    if (class_member(ctx, g, c)) out.push_back(std::move(c));
  }
  return out;
}

// r(X) = |V(G[X])| - b(X) + l(X). Per component of G[X] with a normalized
// spanning tree: the component is balanced in the quotient iff every
// non-tree gain is in the kernel, and l(X) = 0 iff every such component has
// only identity non-tree gains and every other component has its
// non-identity non-tree gains outside the kernel and inside one complement.
inline int matroid_rank(const FrobeniusContext& ctx, const GainGraph& g,
                        const EdgeSet& x) {
  auto a = analyze_components(g, x);
  int r = a.vertex_total;
  int l = 0;
  for (const auto& c : a.components) {
    bool qbal = true;
    for (const auto& f : c.fundamental) {
      if (!ctx.in_kernel(f.second)) qbal = false;
    }
    if (qbal) {
      --r;
      for (const auto& f : c.fundamental) {
        if (f.second != 0) l = 1;
      }
    } else if (!l) {
      int part = kIdentityPart;
      for (const auto& f : c.fundamental) {
        int p = ctx.part_of[f.second];
        if (p == kIdentityPart) continue;
        if (p == kKernelPart || (part != kIdentityPart && p != part)) {
          l = 1;
          break;
        }
        part = p;
      }
    }
  }
  return r + l;
}

// The same rank computed from the definition: frame rank of the quotient
// plus one iff some underlying circuit inside X is not a class member.
inline int matroid_rank_by_circuits(const FrobeniusContext& ctx,
                                    const GainGraph& g, const EdgeSet& x) {
  GainGraph sub = restrict_edges(g, x);
  GainGraph q = quotient_gains(sub, ctx.quotient);
  int r = frame_rank(q, x);
  for (const auto& c : frame_circuits(q)) {
    if (!class_member(ctx, sub, c)) return r + 1;
  }
  return r;
}

class LiftedMatroid : public RankOracle {
 public:
  LiftedMatroid(ContextPtr ctx, GainGraph g)
      : ctx_(std::move(ctx)),
        g_(std::move(g)),
        ground_(g_.edge_ids()),
        underlying_(std::make_shared<GainFrameOracle>(
            quotient_gains(g_, ctx_->quotient))) {
    if (!g_.group().same_table(*ctx_->group)) {
      throw Error("gain graph group does not match the partition's group");
    }
  }

  const EdgeSet& ground() const override { return ground_; }
  int rank(const EdgeSet& x) const override {
    return matroid_rank(*ctx_, g_, x);
  }

  const FrobeniusContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const GainGraph& graph() const { return g_; }
  const std::shared_ptr<GainFrameOracle>& underlying() const {
    return underlying_;
  }

  const std::vector<EdgeSet>& linear_class() const {
    std::call_once(once_, [this] { class_ = frobmat::linear_class(*ctx_, g_); });
    return class_;
  }

 private:
  ContextPtr ctx_;
  GainGraph g_;
  EdgeSet ground_;
  std::shared_ptr<GainFrameOracle> underlying_;
  mutable std::once_flag once_;
  mutable std::vector<EdgeSet> class_;
};

using LiftedPtr = std::shared_ptr<const LiftedMatroid>;

inline LiftedPtr make_lifted(ContextPtr ctx, GainGraph g) {
  return std::make_shared<LiftedMatroid>(std::move(ctx), std::move(g));
}

// ---------------------------------------------------------------------------
// Bases and circuits from the structural characterizations.

namespace detail {

inline std::vector<EdgeSet> subsets_of_size(const EdgeSet& ground, int k) {
  const int m = static_cast<int>(ground.size());
  if (m > limits().max_oracle_ground) {
    throw LimitExceeded("basis enumeration limited to " +
                        std::to_string(limits().max_oracle_ground) + " edges");
  }
  std::vector<EdgeSet> out;
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    EdgeSet s;
    for (int i : idx) s.push_back(ground[i]);
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace detail

// A basis spans the underlying frame matroid N and contains exactly one
// N-circuit, which is outside the class; when every N-circuit is in the
// class the bases are those of N.
inline std::vector<EdgeSet> bases(const FrobeniusContext& ctx,
                                  const GainGraph& g) {
  const GainGraph q = quotient_gains(g, ctx.quotient);
  const EdgeSet ground = g.edge_ids();
  const int rn = frame_rank(q, ground);
  const int rm = matroid_rank(ctx, g, ground);
  std::vector<EdgeSet> out;
  if (rm == rn) {
    for (auto& b : detail::subsets_of_size(ground, rn)) {
      if (frame_rank(q, b) == rn) out.push_back(std::move(b));
    }
    return out;
  }
  for (auto& b : detail::subsets_of_size(ground, rn + 1)) {
    if (frame_rank(q, b) != rn) continue;
    EdgeSet circuit;
    for (EdgeId e : b) {
      if (frame_rank(q, without_edge(b, e)) == rn) circuit.push_back(e);
    }
    if (!class_member(ctx, g, circuit)) out.push_back(std::move(b));
  }
  return out;
}

// Circuits: the class members, and the sets containing no class member
// that are minimal with |C| - r_N(C) = 2.
inline std::vector<EdgeSet> circuits(const FrobeniusContext& ctx,
                                     const GainGraph& g) {
  const GainGraph q = quotient_gains(g, ctx.quotient);
  const auto ncirc = frame_circuits(q);
  std::vector<EdgeSet> members, others;
  for (const auto& c : ncirc) {
    (class_member(ctx, g, c) ? members : others).push_back(c);
  }
  const auto ix = detail::bit_index(g.edge_ids());
  std::vector<Bits> member_bits;
  for (const auto& c : members) member_bits.push_back(ix.of(c));
  std::set<EdgeSet> out(members.begin(), members.end());
  auto nullity = [&](const EdgeSet& s) {
    return static_cast<int>(s.size()) - frame_rank(q, s);
  };
  std::set<EdgeSet> tried;
  for (size_t i = 0; i < others.size(); ++i) {
    for (size_t j = i + 1; j < others.size(); ++j) {
      EdgeSet u = set_union(others[i], others[j]);
      if (!tried.insert(u).second) continue;
      Bits ub = ix.of(u);
      bool has_member = false;
      for (const auto& mb : member_bits) {
        if (detail::bits_subset(mb, ub)) {
          has_member = true;
          break;
        }
      }
      if (has_member || nullity(u) != 2) continue;
      bool minimal = true;
      for (EdgeId e : u) {
        if (nullity(without_edge(u, e)) == 2) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.insert(u);
    }
  }
  return std::vector<EdgeSet>(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// Minors.

inline LiftedPtr delete_edge(const ContextPtr& ctx, const GainGraph& g,
                             EdgeId e) {
  return make_lifted(ctx, delete_edges(g, {e}));
}

inline LiftedPtr contract_nonloop(const ContextPtr& ctx, const GainGraph& g,
                                  EdgeId e) {
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) {
    throw Error("edge " + std::to_string(e) + " is a loop");
  }
  GainGraph sw = apply_switching(g, normalize_forest(g, {e}, ed.tail));
  return make_lifted(ctx, contract_identity_edge(sw, e));
}

inline LiftedPtr contract_unbalanced_loop(const ContextPtr& ctx,
                                          const GainGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!ed.is_loop()) throw Error("edge " + std::to_string(e) + " is not a loop");
  if (ed.gain == 0) return delete_edge(ctx, g, e);
  const int part = ctx->part_of[ed.gain];
  if (part < 0) {
    throw Error("loop " + std::to_string(e) + " has a kernel gain");
  }
  const FiniteGroup& grp = g.group();
  const Subgroup& a = ctx->complements()[part];
  const Vertex v = ed.tail;
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (const Edge& f : g.edges()) {
    if (f.id == e) continue;
    if (f.tail != v && f.head != v) {
      out.add_edge_with_id(f);
    } else if (!f.is_loop()) {
      Vertex w = f.other(v);
      Element fv = g.oriented_gain(f, f.tail == v);
      out.add_edge_with_id(
          {f.id, w, w, grp.mul(grp.inv(fv), grp.mul(ed.gain, fv))});
    } else if (a.contains(f.gain)) {
      out.add_edge_with_id({f.id, v, v, 0});
    } else {
      if (ctx->kernel().size() < 2) {
        throw Error("no non-identity kernel element for loop " +
                    std::to_string(f.id));
      }
      out.add_edge_with_id({f.id, v, v, ctx->kernel().elements[1]});
    }
  }
  return make_lifted(ctx, std::move(out));
}

// An isomorphism from the quotient by the kernel onto some complement,
// as a map quotient element -> group element. Identity map to {0} when the
// quotient is trivial.
inline std::optional<std::vector<Element>> quotient_embedding(
    const FrobeniusContext& ctx) {
  const FiniteGroup& quo = *ctx.quotient.quotient;
  if (quo.order() == 1) return std::vector<Element>{0};
  for (const Subgroup& a : ctx.complements()) {
    auto ag = subgroup_as_group(*ctx.group, a);
    if (auto iso = find_isomorphism(quo, *ag)) {
      std::vector<Element> out(quo.order());
      for (int x = 0; x < quo.order(); ++x) out[x] = a.elements[(*iso)[x]];
      return out;
    }
  }
  return std::nullopt;
}

inline LiftedPtr contract_kernel_loop(const ContextPtr& ctx, const GainGraph& g,
                                      EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!ed.is_loop()) throw Error("edge " + std::to_string(e) + " is not a loop");
  if (ed.gain == 0 || ctx->part_of[ed.gain] != kKernelPart) {
    throw Error("loop " + std::to_string(e) + " does not have a non-identity kernel gain");
  }
  auto iota = quotient_embedding(*ctx);
  if (!iota) {
    throw Error("quotient by the kernel is not isomorphic to any complement");
  }
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (const Edge& f : g.edges()) {
    if (f.id == e) continue;
    out.add_edge_with_id(
        {f.id, f.tail, f.head, (*iota)[ctx->quotient.projection[f.gain]]});
  }
  return make_lifted(ctx, std::move(out));
}

// Dispatches to the deletion/contraction lemma that applies to e.
inline LiftedPtr contract_edge(const ContextPtr& ctx, const GainGraph& g,
                               EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!ed.is_loop()) return contract_nonloop(ctx, g, e);
  if (ed.gain != 0 && ctx->part_of[ed.gain] == kKernelPart) {
    return contract_kernel_loop(ctx, g, e);
  }
  return contract_unbalanced_loop(ctx, g, e);
}

// ---------------------------------------------------------------------------
// Spikes.

// An r-cycle with every edge doubled (gains identity and alpha) plus a
// loop of gain alpha at vertex 0, alpha the least non-identity kernel
// element. Pair i is edges 2i, 2i+1; the loop (the tip) is edge 2r.
inline LiftedPtr build_spike_graph(const ContextPtr& ctx, int r) {
  if (r < 3) throw Error("spikes need r >= 3");
  if (ctx->kernel().size() < 2) throw Error("spikes need a nontrivial kernel");
  const Element alpha = ctx->kernel().elements[1];
  GainGraph g(ctx->group, r);
  for (int i = 0; i < r; ++i) {
    g.add_edge(i, (i + 1) % r, 0);
    g.add_edge(i, (i + 1) % r, alpha);
  }
  g.add_edge(0, 0, alpha);
  return make_lifted(ctx, std::move(g));
}

// Simple, rank r, 2r+1 elements, r >= 3, and `tip` on r three-point lines
// that partition the other elements.
inline bool is_spike_with_tip(const RankOracle& o, EdgeId tip) {
  const EdgeSet& e = o.ground();
  const int m = static_cast<int>(e.size());
  const int r = o.full_rank();
  if (r < 3 || m != 2 * r + 1 || !contains(e, tip)) return false;
  for (int i = 0; i < m; ++i) {
    if (o.rank({e[i]}) != 1) return false;
    for (int j = i + 1; j < m; ++j) {
      if (o.rank({e[i], e[j]}) != 2) return false;
    }
  }
  int lines = 0;
  for (EdgeId x : e) {
    if (x == tip) continue;
    int partners = 0;
    for (EdgeId y : e) {
      if (y == tip || y == x) continue;
      if (o.rank(make_edge_set({tip, x, y})) == 2) ++partners;
    }
    if (partners != 1) return false;
    ++lines;
  }
  return lines == 2 * r;
}

inline std::optional<EdgeId> spike_tip(const RankOracle& o) {
  for (EdgeId t : o.ground()) {
    if (is_spike_with_tip(o, t)) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Switching invariance.

inline bool switch_invariance_check(const FrobeniusContext& ctx,
                                    const GainGraph& g,
                                    const SwitchingFunction& eta) {
  return linear_class(ctx, g) == linear_class(ctx, apply_switching(g, eta));
}

// For K_n^G: switching by eta sends edge (i, j, a) to (i, j, eta_i^-1 a eta_j).
inline std::vector<EdgeId> complete_switching_permutation(const FiniteGroup& grp,
                                                          int n,
                                                          const SwitchingFunction& eta) {
  const int k = grp.order();
  std::vector<EdgeId> perm(static_cast<size_t>(n * (n - 1) / 2) * k);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Element a = 0; a < k; ++a) {
        Element b = grp.mul(grp.inv(eta[i]), grp.mul(a, eta[j]));
        perm[complete_edge_id(k, n, i, j, a)] = complete_edge_id(k, n, i, j, b);
      }
    }
  }
  return perm;
}

inline std::vector<EdgeSet> permute_sets(const std::vector<EdgeSet>& sets,
                                         const std::vector<EdgeId>& perm) {
  std::vector<EdgeSet> out;
  for (const auto& s : sets) {
    EdgeSet t;
    for (EdgeId e : s) t.push_back(perm[e]);
    out.push_back(make_edge_set(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The class of K_n^G is mapped onto itself by the edge permutation that
// switching induces.
inline bool complete_switch_invariance_check(const FrobeniusContext& ctx, int n,
                                             const SwitchingFunction& eta) {
  GainGraph k = complete_gain_graph(ctx.group, n);
  auto lc = linear_class(ctx, k);
  return permute_sets(lc, complete_switching_permutation(*ctx.group, n, eta)) == lc;
}

}  // namespace frobmat
