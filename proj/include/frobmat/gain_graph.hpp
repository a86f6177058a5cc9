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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobmat/common.hpp"
#include "frobmat/group.hpp"

namespace frobmat {

// `gain` is the value on the orientation tail -> head. Loops have
// tail == head.
struct Edge {
  EdgeId id;
  Vertex tail;
  Vertex head;
  Element gain;

  bool is_loop() const { return tail == head; }
  Vertex other(Vertex v) const { return v == tail ? head : tail; }
  bool operator==(const Edge& o) const {
    return id == o.id && tail == o.tail && head == o.head && gain == o.gain;
  }
};

// A step along `edge`; forward means tail -> head.
struct Step {
  EdgeId edge;
  bool forward;
};

struct Walk {
  Vertex start = 0;
  std::vector<Step> steps;
};

// eta: vertex -> element.
using SwitchingFunction = std::vector<Element>;

class GainGraph {
 public:
  GainGraph() = default;
  GainGraph(GroupPtr group, int vertex_count)
      : group_(std::move(group)), vertex_count_(vertex_count) {
    if (vertex_count < 0) throw Error("negative vertex count");
  }

  // Appends an edge with id one past the largest id so far.
  EdgeId add_edge(Vertex tail, Vertex head, Element gain) {
    EdgeId id = edges_.empty() ? 0 : edges_.back().id + 1;
    add_edge_with_id({id, tail, head, gain});
    return id;
  }

  void add_edge_with_id(const Edge& e) {
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 ||
        e.head >= vertex_count_) {
      throw Error("edge " + std::to_string(e.id) + " has an invalid end");
    }
    if (e.gain < 0 || e.gain >= group_->order()) {
      throw Error("edge " + std::to_string(e.id) + " has an invalid gain");
    }
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), e.id,
        [](const Edge& a, EdgeId id) { return a.id < id; });
    if (it != edges_.end() && it->id == e.id) {
      throw Error("duplicate edge id " + std::to_string(e.id));
    }
    edges_.insert(it, e);
  }

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(EdgeId id) const { return find(id) != nullptr; }

  const Edge& edge(EdgeId id) const {
    const Edge* e = find(id);
    if (!e) throw Error("no edge with id " + std::to_string(id));
    return *e;
  }

  EdgeSet edge_ids() const {
    EdgeSet out;
    for (const auto& e : edges_) out.push_back(e.id);
    return out;
  }

  // Gain of `e` traversed in the given direction.
  Element oriented_gain(const Edge& e, bool forward) const {
    return forward ? e.gain : group_->inv(e.gain);
  }

  // psi(e, from, other end) for a non-loop.
  Element gain_from(EdgeId id, Vertex from) const {
    const Edge& e = edge(id);
    if (from != e.tail && from != e.head) {
      throw Error("vertex " + std::to_string(from) + " is not an end of edge " +
                  std::to_string(id));
    }
    return oriented_gain(e, from == e.tail);
  }

  bool operator==(const GainGraph& o) const {
    return vertex_count_ == o.vertex_count_ && edges_ == o.edges_ &&
           group_->same_table(*o.group_);
  }

 private:
  const Edge* find(EdgeId id) const {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), id,
        [](const Edge& a, EdgeId x) { return a.id < x; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
  }

  GroupPtr group_;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

inline Element gain_of_walk(const GainGraph& g, const Walk& w) {
  const FiniteGroup& grp = g.group();
  Element acc = 0;
  Vertex at = w.start;
  for (const Step& s : w.steps) {
    const Edge& e = g.edge(s.edge);
    Vertex from = s.forward ? e.tail : e.head;
    if (from != at) {
      throw Error("walk step on edge " + std::to_string(s.edge) +
                  " does not start at vertex " + std::to_string(at));
    }
    acc = grp.mul(acc, g.oriented_gain(e, s.forward));
    at = s.forward ? e.head : e.tail;
  }
  return acc;
}

inline Vertex walk_end(const GainGraph& g, const Walk& w) {
  Vertex at = w.start;
  for (const Step& s : w.steps) {
    const Edge& e = g.edge(s.edge);
    at = s.forward ? e.head : e.tail;
  }
  return at;
}

inline GainGraph apply_switching(const GainGraph& g,
                                 const SwitchingFunction& eta) {
  if (static_cast<int>(eta.size()) != g.vertex_count()) {
    throw Error("switching function has wrong length");
  }
  const FiniteGroup& grp = g.group();
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    Element x = grp.mul(grp.inv(eta[e.tail]), grp.mul(e.gain, eta[e.head]));
    out.add_edge_with_id({e.id, e.tail, e.head, x});
  }
  return out;
}

inline SwitchingFunction inverse_switching(const FiniteGroup& grp,
                                           SwitchingFunction eta) {
  for (auto& x : eta) x = grp.inv(x);
  return eta;
}

// eta with eta(root) = identity such that every edge of `forest` has
// identity gain after switching. Components of the forest not containing
// `root` are rooted at their least vertex.
inline SwitchingFunction normalize_forest(const GainGraph& g,
                                          const EdgeSet& forest, Vertex root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= std::max(n, 1)) throw Error("invalid root vertex");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId id : forest) {
    const Edge& e = g.edge(id);
    int a = find(e.tail), b = find(e.head);
    if (a == b) {
      throw Error("forest contains a cycle through edge " + std::to_string(id));
    }
    parent[a] = b;
    adj[e.tail].push_back(id);
    adj[e.head].push_back(id);
  }
  const FiniteGroup& grp = g.group();
  SwitchingFunction eta(n, 0);
  std::vector<char> seen(n, 0);
  auto bfs = [&](Vertex r) {
    seen[r] = 1;
    std::vector<Vertex> q{r};
    for (size_t i = 0; i < q.size(); ++i) {
      Vertex u = q[i];
      for (EdgeId id : adj[u]) {
        const Edge& e = g.edge(id);
        Vertex w = e.other(u);
        if (seen[w]) continue;
        seen[w] = 1;
        eta[w] = grp.mul(grp.inv(g.oriented_gain(e, u == e.tail)), eta[u]);
        q.push_back(w);
      }
    }
  };
  if (n > 0) bfs(root);
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) bfs(v);
  }
  return eta;
}

// The closed walk around `cycle` starting at its least vertex and leaving
// along its least edge id there. Throws if `cycle` is not a cycle.
inline Walk cycle_walk(const GainGraph& g, const EdgeSet& cycle) {
  if (cycle.empty()) throw Error("empty edge set is not a cycle");
  std::vector<int> degree(g.vertex_count(), 0);
  std::set<Vertex> verts;
  for (EdgeId id : cycle) {
    const Edge& e = g.edge(id);
    degree[e.tail]++;
    degree[e.head]++;
    verts.insert(e.tail);
    verts.insert(e.head);
  }
  for (Vertex v : verts) {
    if (degree[v] != 2) throw Error(format_set(cycle) + " is not a cycle");
  }
  if (verts.size() != cycle.size()) {
    throw Error(format_set(cycle) + " is not a cycle");
  }
  Walk w;
  w.start = *verts.begin();
  if (cycle.size() == 1) {
    w.steps.push_back({cycle[0], true});
    return w;
  }
  std::vector<char> used(cycle.size(), 0);
  Vertex at = w.start;
  for (size_t k = 0; k < cycle.size(); ++k) {
    int pick = -1;
    for (size_t i = 0; i < cycle.size(); ++i) {
      const Edge& e = g.edge(cycle[i]);
      if (!used[i] && (e.tail == at || e.head == at)) {
        pick = static_cast<int>(i);
        break;
      }
    }
    if (pick < 0) throw Error(format_set(cycle) + " is not a cycle");
    used[pick] = 1;
    const Edge& e = g.edge(cycle[pick]);
    bool fwd = e.tail == at;
    w.steps.push_back({e.id, fwd});
    at = e.other(at);
  }
  if (at != w.start) throw Error(format_set(cycle) + " is not a cycle");
  return w;
}

inline bool is_balanced_cycle(const GainGraph& g, const EdgeSet& cycle) {
  return gain_of_walk(g, cycle_walk(g, cycle)) == 0;
}

// All vertex-simple cycles (loops and digons included) as sorted edge
// sets, in lexicographic order.
inline std::vector<EdgeSet> enumerate_cycles(const GainGraph& g) {
  if (g.edge_count() > limits().max_cycle_edges) {
    throw LimitExceeded("cycle enumeration limited to " +
                        std::to_string(limits().max_cycle_edges) +
                        " edges, graph has " +
                        std::to_string(g.edge_count()));
  }
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<EdgeId, Vertex>>> adj(n);
  std::vector<EdgeSet> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      out.push_back({e.id});
    } else {
      adj[e.tail].push_back({e.id, e.head});
      adj[e.head].push_back({e.id, e.tail});
    }
  }
  const long cap = limits().max_cycles;
  std::vector<char> on_path(n, 0);
  std::vector<EdgeId> path;
  auto dfs = [&](auto&& self, Vertex s, Vertex v) -> void {
    for (auto [id, w] : adj[v]) {
      if (!path.empty() && id == path.back()) continue;
      if (w == s) {
        if (!path.empty() && path.front() < id) {
          EdgeSet c = path;
          c.push_back(id);
          std::sort(c.begin(), c.end());
          out.push_back(std::move(c));
          if (static_cast<long>(out.size()) > cap) {
            throw LimitExceeded("more than " + std::to_string(cap) + " cycles");
          }
        }
        continue;
      }
      if (w < s || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(id);
      self(self, s, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline GainGraph quotient_gains(const GainGraph& g, const QuotientMap& qm) {
  if (!g.group().same_table(*qm.source)) {
    throw Error("gain group does not match quotient source");
  }
  GainGraph out(qm.quotient, g.vertex_count());
  for (const Edge& e : g.edges()) {
    out.add_edge_with_id({e.id, e.tail, e.head, qm.projection[e.gain]});
  }
  return out;
}

// Id of edge ({i,j}, alpha) of K_n^G, i < j.
inline EdgeId complete_edge_id(int group_order, int n, Vertex i, Vertex j,
                               Element alpha) {
  int pair = 0;
  for (int a = 0; a < i; ++a) pair += n - 1 - a;
  pair += j - i - 1;
  return pair * group_order + alpha;
}

inline GainGraph complete_gain_graph(const GroupPtr& grp, int n) {
  if (n < 2) throw Error("complete gain graph needs n >= 2");
  GainGraph g(grp, n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Element a = 0; a < grp->order(); ++a) g.add_edge(i, j, a);
    }
  }
  return g;
}

struct SignedEdge {
  Vertex tail;
  Vertex head;
  Element phi;  // element of the odd abelian group
  int sigma;    // +1 or -1
};

inline Element signed_gain_index(Element phi, int sigma) {
  return 2 * phi + (sigma < 0 ? 1 : 0);
}

inline GainGraph from_signed_gains(const FiniteGroup& g1, int vertex_count,
                                   const std::vector<SignedEdge>& edges) {
  GainGraph g(make_inversion_extension(g1), vertex_count);
  for (const auto& e : edges) {
    if (e.sigma != 1 && e.sigma != -1) throw Error("sign must be +1 or -1");
    g.add_edge(e.tail, e.head, signed_gain_index(e.phi, e.sigma));
  }
  return g;
}

inline std::vector<Element> gain_set(const GainGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  std::vector<Element> s{e.gain, g.group().inv(e.gain)};
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline GainGraph delete_edges(const GainGraph& g, const EdgeSet& ids) {
  for (EdgeId id : ids) g.edge(id);
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!contains(ids, e.id)) out.add_edge_with_id(e);
  }
  return out;
}

inline GainGraph restrict_edges(const GainGraph& g, const EdgeSet& keep) {
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (EdgeId id : keep) out.add_edge_with_id(g.edge(id));
  return out;
}

// Merges the head of non-loop `id` into its tail and removes the edge;
// vertices above the head shift down by one.
inline GainGraph contract_identity_edge(const GainGraph& g, EdgeId id) {
  const Edge& c = g.edge(id);
  if (c.is_loop()) throw Error("cannot contract a loop as a link");
  if (c.gain != 0) throw Error("contracted edge must have identity gain");
  const Vertex keep = c.tail, gone = c.head;
  auto relabel = [&](Vertex v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  GainGraph out(g.group_ptr(), g.vertex_count() - 1);
  for (const Edge& e : g.edges()) {
    if (e.id == id) continue;
    out.add_edge_with_id({e.id, relabel(e.tail), relabel(e.head), e.gain});
  }
  return out;
}

inline std::vector<Vertex> vertices_of(const GainGraph& g, const EdgeSet& x) {
  std::vector<Vertex> vs;
  for (EdgeId id : x) {
    const Edge& e = g.edge(id);
    vs.push_back(e.tail);
    vs.push_back(e.head);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// One connected component of G[X] with a BFS spanning tree (rooted at the
// least vertex, edges scanned in id order) normalized by `eta`, and the
// normalized gain of every non-tree edge.
struct Component {
  std::vector<Vertex> vertices;
  EdgeSet edges;
  EdgeSet tree;
  std::vector<std::pair<EdgeId, Element>> fundamental;
};

struct ComponentAnalysis {
  std::vector<Component> components;
  SwitchingFunction eta;
  int vertex_total = 0;
};

inline ComponentAnalysis analyze_components(const GainGraph& g,
                                            const EdgeSet& x) {
  const int n = g.vertex_count();
  const FiniteGroup& grp = g.group();
  std::vector<std::vector<EdgeId>> adj(n);
  std::vector<char> present(n, 0);
  for (EdgeId id : x) {
    const Edge& e = g.edge(id);
    adj[e.tail].push_back(id);
    if (!e.is_loop()) adj[e.head].push_back(id);
    present[e.tail] = present[e.head] = 1;
  }
  ComponentAnalysis out;
  out.eta.assign(n, 0);
  std::vector<int> comp_of(n, -1);
  for (Vertex r = 0; r < n; ++r) {
    if (!present[r] || comp_of[r] >= 0) continue;
    Component c;
    int ci = static_cast<int>(out.components.size());
    comp_of[r] = ci;
    std::vector<Vertex> q{r};
    for (size_t i = 0; i < q.size(); ++i) {
      Vertex u = q[i];
      for (EdgeId id : adj[u]) {
        const Edge& e = g.edge(id);
        Vertex w = e.other(u);
        if (comp_of[w] >= 0) continue;
        comp_of[w] = ci;
        out.eta[w] = grp.mul(grp.inv(g.oriented_gain(e, u == e.tail)),
                             out.eta[u]);
        c.tree.push_back(id);
        q.push_back(w);
      }
    }
    c.vertices = q;
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.tree.begin(), c.tree.end());
    out.vertex_total += static_cast<int>(q.size());
    out.components.push_back(std::move(c));
  }
  for (EdgeId id : x) {
    const Edge& e = g.edge(id);
    Component& c = out.components[comp_of[e.tail]];
    c.edges.push_back(id);
    if (contains(c.tree, id)) continue;
    Element h = grp.mul(grp.inv(out.eta[e.tail]),
                        grp.mul(e.gain, out.eta[e.head]));
    c.fundamental.push_back({id, h});
  }
  return out;
}

}  // namespace frobmat
