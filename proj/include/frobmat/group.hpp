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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobmat/common.hpp"

namespace frobmat {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group stored as its Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  // Validates `table` (table[a][b] = a*b) and relabels so that the identity
  // has index 0. Throws Error naming the first violated axiom.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("group table is empty");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n) {
        throw Error("group table is not square (row " + std::to_string(a) +
                    ")");
      }
      for (int b = 0; b < n; ++b) {
        if (table[a][b] < 0 || table[a][b] >= n) {
          throw Error("non-closure: table[" + std::to_string(a) + "][" +
                      std::to_string(b) + "] = " +
                      std::to_string(table[a][b]) + " is not an element");
        }
      }
    }
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        ok = table[e][a] == a && table[a][e] == a;
      }
      if (ok) id = e;
    }
    if (id < 0) throw Error("missing identity element");
    for (int a = 0; a < n; ++a) {
      bool found = false;
      for (int b = 0; b < n && !found; ++b) {
        found = table[a][b] == id && table[b][a] == id;
      }
      if (!found) throw Error("no inverse for " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw Error("non-associative: (" + std::to_string(a) + "*" +
                        std::to_string(b) + ")*" + std::to_string(c) +
                        " != " + std::to_string(a) + "*(" +
                        std::to_string(b) + "*" + std::to_string(c) + ")");
          }
        }
      }
    }
    // Swap indices 0 and id.
    auto relabel = [&](int x) { return x == id ? 0 : (x == 0 ? id : x); };
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
      }
    }
    if (!labels.empty()) {
      if (static_cast<int>(labels.size()) != n) {
        throw Error("label count does not match group order");
      }
      std::swap(labels[0], labels[id]);
    }
    return make_trusted(n, std::move(flat), std::move(labels));
  }

  // Builds from a flat table known to be a group with identity 0.
  static GroupPtr make_trusted(int n, std::vector<int> flat,
                               std::vector<std::string> labels,
                               int field_modulus = 0) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->n_ = n;
    g->table_ = std::move(flat);
    g->inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (g->table_[a * n + b] == 0) {
          g->inverse_[a] = b;
          break;
        }
      }
    }
    if (labels.empty()) {
      for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    }
    g->labels_ = std::move(labels);
    g->field_modulus_ = field_modulus;
    return g;
  }

  int order() const { return n_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element g, Element x) const { return mul(inv(g), mul(x, g)); }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& flat_table() const { return table_; }

  // q when built by make_field_affine(q), otherwise 0.
  int field_modulus() const { return field_modulus_; }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    }
    return t;
  }

  int element_order(Element a) const {
    int k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  std::optional<Element> find_label(const std::string& s) const {
    for (int a = 0; a < n_; ++a) {
      if (labels_[a] == s) return a;
    }
    return std::nullopt;
  }

  bool same_table(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  FiniteGroup() = default;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  int field_modulus_ = 0;
};

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

inline GroupPtr make_cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
  }
  return FiniteGroup::make_trusted(n, std::move(flat), {});
}

// D_{2n}: index i is r^i and index n+i is r^i s, for 0 <= i < n.
inline GroupPtr make_dihedral(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw Error("dihedral order must be even and at least 2");
  }
  const int n = two_n / 2;
  std::vector<int> flat(static_cast<size_t>(two_n) * two_n);
  for (int x = 0; x < two_n; ++x) {
    for (int y = 0; y < two_n; ++y) {
      int i = x % n, j = y % n;
      bool xs = x >= n, ys = y >= n;
      int rot = xs ? ((i - j) % n + n) % n : (i + j) % n;
      flat[x * two_n + y] = rot + ((xs != ys) ? n : 0);
    }
  }
  std::vector<std::string> labels;
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < n; ++i) {
      std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      if (s == 0) {
        labels.push_back(i == 0 ? "e" : r);
      } else {
        labels.push_back(i == 0 ? "s" : r + " s");
      }
    }
  }
  return FiniteGroup::make_trusted(two_n, std::move(flat), std::move(labels));
}

// Pairs (a, b) indexed a*|G2| + b, multiplied by
// (a,b)(c,d) = (a * action[b][c], b * d).
// Throws if some action[b] is not an automorphism or b -> action[b] is not
// a homomorphism.
inline GroupPtr make_semidirect(const FiniteGroup& g1, const FiniteGroup& g2,
                                const std::vector<std::vector<Element>>& action) {
  const int n1 = g1.order(), n2 = g2.order();
  if (static_cast<int>(action.size()) != n2) {
    throw Error("action must give one permutation per element of G2");
  }
  for (int b = 0; b < n2; ++b) {
    const auto& phi = action[b];
    if (static_cast<int>(phi.size()) != n1) {
      throw Error("action[" + std::to_string(b) + "] has wrong length");
    }
    std::vector<char> seen(n1, 0);
    for (int c = 0; c < n1; ++c) {
      if (phi[c] < 0 || phi[c] >= n1 || seen[phi[c]]) {
        throw Error("action[" + std::to_string(b) + "] is not a permutation");
      }
      seen[phi[c]] = 1;
    }
    for (int x = 0; x < n1; ++x) {
      for (int y = 0; y < n1; ++y) {
        if (phi[g1.mul(x, y)] != g1.mul(phi[x], phi[y])) {
          throw Error("action[" + std::to_string(b) +
                      "] is not an automorphism: fails on (" +
                      std::to_string(b) + ", " + std::to_string(x) + ", " +
                      std::to_string(y) + ")");
        }
      }
    }
  }
  for (int b = 0; b < n2; ++b) {
    for (int d = 0; d < n2; ++d) {
      for (int x = 0; x < n1; ++x) {
        if (action[g2.mul(b, d)][x] != action[b][action[d][x]]) {
          throw Error("action is not a homomorphism: fails on (" +
                      std::to_string(b) + ", " + std::to_string(d) + ", " +
                      std::to_string(x) + ")");
        }
      }
    }
  }
  const int n = n1 * n2;
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      for (int c = 0; c < n1; ++c) {
        for (int d = 0; d < n2; ++d) {
          int x = g1.mul(a, action[b][c]);
          int y = g2.mul(b, d);
          flat[(a * n2 + b) * n + (c * n2 + d)] = x * n2 + y;
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      labels.push_back("(" + g1.label(a) + "," + g2.label(b) + ")");
    }
  }
  return FiniteGroup::make_trusted(n, std::move(flat), std::move(labels));
}

inline GroupPtr make_direct_product(const FiniteGroup& g1,
                                    const FiniteGroup& g2) {
  std::vector<Element> id(g1.order());
  for (int a = 0; a < g1.order(); ++a) id[a] = a;
  return make_semidirect(g1, g2, std::vector<std::vector<Element>>(g2.order(), id));
}

// Affine maps x -> a + b x of GF(q); (a,b) has index a*(q-1) + (b-1).
inline GroupPtr make_field_affine(int q) {
  if (!is_prime(q) || q < 3) throw Error("field_affine needs a prime q >= 3");
  const int m = q - 1, n = q * m;
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    int a = x / m, b = x % m + 1;
    for (int y = 0; y < n; ++y) {
      int c = y / m, d = y % m + 1;
      int ra = (a + b * c) % q, rb = (b * d) % q;
      flat[x * n + y] = ra * m + (rb - 1);
    }
  }
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back("(" + std::to_string(x / m) + "," +
                     std::to_string(x % m + 1) + ")");
  }
  return FiniteGroup::make_trusted(n, std::move(flat), std::move(labels), q);
}

inline Element field_affine_element(int q, int a, int b) {
  return ((a % q + q) % q) * (q - 1) + (((b % q + q) % q) - 1);
}

// G1 x| {+1,-1} with -1 acting by inversion; (a, s) has index 2a + s where
// s = 0 means +1 and s = 1 means -1.
inline GroupPtr make_inversion_extension(const FiniteGroup& g1) {
  if (g1.order() % 2 == 0) {
    throw Error("inversion extension needs a group of odd order");
  }
  if (!g1.is_abelian()) {
    throw Error("inversion extension needs an abelian group");
  }
  std::vector<Element> id(g1.order()), inv(g1.order());
  for (int a = 0; a < g1.order(); ++a) {
    id[a] = a;
    inv[a] = g1.inv(a);
  }
  auto sd = make_semidirect(g1, *make_cyclic(2), {id, inv});
  std::vector<std::string> labels;
  for (int a = 0; a < g1.order(); ++a) {
    labels.push_back("(" + g1.label(a) + ",+1)");
    labels.push_back("(" + g1.label(a) + ",-1)");
  }
  return FiniteGroup::make_trusted(sd->order(), sd->flat_table(),
                                   std::move(labels));
}

// ---------------------------------------------------------------------------
// Subgroups.

struct Subgroup {
  std::vector<Element> elements;  // strictly increasing, contains 0

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(Element x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const {
    if (elements.size() != o.elements.size()) {
      return elements.size() < o.elements.size();
    }
    return elements < o.elements;
  }
};

inline Subgroup trivial_subgroup() { return Subgroup{{0}}; }

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  for (int a = 0; a < g.order(); ++a) s.elements.push_back(a);
  return s;
}

inline Subgroup generate_subgroup(const FiniteGroup& g,
                                  const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{members};
}

// Checks that `elems` (any order) is a subgroup; returns it normalized.
inline std::optional<Subgroup> as_subgroup(const FiniteGroup& g,
                                           std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0) return std::nullopt;
  for (Element x : elems) {
    if (x < 0 || x >= g.order()) return std::nullopt;
  }
  Subgroup s{elems};
  for (Element x : elems) {
    if (!s.contains(g.inv(x))) return std::nullopt;
    for (Element y : elems) {
      if (!s.contains(g.mul(x, y))) return std::nullopt;
    }
  }
  return s;
}

// All subgroups sorted by (size, elements).
inline std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  if (g.order() > limits().max_group_order) {
    throw LimitExceeded("group order " + std::to_string(g.order()) +
                        " exceeds subgroup enumeration limit " +
                        std::to_string(limits().max_group_order));
  }
  std::set<std::vector<Element>> seen;
  std::vector<std::pair<Subgroup, std::vector<Element>>> queue;
  queue.push_back({trivial_subgroup(), {}});
  seen.insert({0});
  for (size_t i = 0; i < queue.size(); ++i) {
    const Subgroup h = queue[i].first;
    const std::vector<Element> gens = queue[i].second;
    for (Element x = 1; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      auto more = gens;
      more.push_back(x);
      Subgroup k = generate_subgroup(g, more);
      if (seen.insert(k.elements).second) queue.push_back({k, more});
    }
  }
  std::vector<Subgroup> out;
  for (auto& q : queue) out.push_back(q.first);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y : h.elements) {
      if (!h.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

inline bool is_malnormal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    for (Element y : h.elements) {
      if (y != 0 && h.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

inline Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element x) {
  Subgroup out;
  for (Element y : h.elements) out.elements.push_back(g.conj(x, y));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// ---------------------------------------------------------------------------
// Frobenius partitions.

struct FrobeniusPartition {
  Subgroup kernel;
  std::vector<Subgroup> complements;  // sorted

  bool operator==(const FrobeniusPartition& o) const {
    return kernel == o.kernel && complements == o.complements;
  }
  bool is_trivial(const FiniteGroup& g) const {
    return kernel.size() == 1 || kernel.size() == g.order();
  }
};

// Returns a description of the first violated partition invariant, or
// nullopt when `p` is a valid partition of `g`.
inline std::optional<std::string> partition_violation(
    const FiniteGroup& g, const FrobeniusPartition& p) {
  if (!as_subgroup(g, p.kernel.elements)) return "kernel is not a subgroup";
  if (!is_normal(g, p.kernel)) return "kernel is not normal";
  std::vector<int> hits(g.order(), 0);
  for (Element x : p.kernel.elements) ++hits[x];
  for (size_t i = 0; i < p.complements.size(); ++i) {
    const Subgroup& a = p.complements[i];
    std::string name = "complement " + std::to_string(i);
    if (!as_subgroup(g, a.elements)) return name + " is not a subgroup";
    if (a.size() == 1) return name + " is trivial";
    if (!is_malnormal(g, a)) return name + " is not malnormal";
    for (Element x : a.elements) ++hits[x];
  }
  for (Element x = 1; x < g.order(); ++x) {
    if (hits[x] != 1) {
      return "element " + std::to_string(x) + " lies in " +
             std::to_string(hits[x]) + " parts";
    }
  }
  for (const Subgroup& a : p.complements) {
    for (Element x = 0; x < g.order(); ++x) {
      Subgroup c = conjugate(g, a, x);
      if (!std::binary_search(p.complements.begin(), p.complements.end(), c)) {
        return "complements are not closed under conjugation";
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline void exact_covers(const std::vector<Subgroup>& cands,
                         std::vector<char>& covered, int remaining,
                         std::vector<int>& chosen,
                         std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  int target = -1;
  for (int x = 0; x < static_cast<int>(covered.size()); ++x) {
    if (!covered[x]) {
      target = x;
      break;
    }
  }
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    const Subgroup& a = cands[i];
    if (!a.contains(target)) continue;
    bool clash = false;
    for (Element x : a.elements) {
      if (x != 0 && covered[x]) clash = true;
    }
    if (clash) continue;
    for (Element x : a.elements) {
      if (x != 0) covered[x] = 1;
    }
    chosen.push_back(i);
    exact_covers(cands, covered, remaining - (a.size() - 1), chosen, out);
    chosen.pop_back();
    for (Element x : a.elements) {
      if (x != 0) covered[x] = 0;
    }
  }
}

}  // namespace detail

// Every Frobenius partition of g: the two trivial ones first (kernel g, then
// kernel {0}), then any nontrivial one.
inline std::vector<FrobeniusPartition> frobenius_partitions(
    const FiniteGroup& g) {
  const auto subs = subgroups(g);
  std::vector<Subgroup> malnormal;
  for (const auto& s : subs) {
    if (s.size() > 1 && is_malnormal(g, s)) malnormal.push_back(s);
  }
  std::vector<FrobeniusPartition> trivial, nontrivial;
  trivial.push_back({whole_group(g), {}});
  for (const auto& n : subs) {
    if (n.size() == g.order() || !is_normal(g, n)) continue;
    std::vector<Subgroup> cands;
    for (const auto& a : malnormal) {
      bool meets = false;
      for (Element x : a.elements) {
        if (x != 0 && n.contains(x)) meets = true;
      }
      if (!meets) cands.push_back(a);
    }
    std::vector<char> covered(g.order(), 0);
    for (Element x : n.elements) covered[x] = 1;
    std::vector<int> chosen;
    std::vector<std::vector<int>> covers;
    detail::exact_covers(cands, covered, g.order() - n.size(), chosen, covers);
    for (const auto& cover : covers) {
      FrobeniusPartition p{n, {}};
      for (int i : cover) p.complements.push_back(cands[i]);
      std::sort(p.complements.begin(), p.complements.end());
      if (partition_violation(g, p)) continue;
      if (n.size() == 1) {
        if (!(trivial.size() > 1 && trivial[1] == p)) trivial.push_back(p);
      } else {
        nontrivial.push_back(p);
      }
    }
  }
  for (auto& p : nontrivial) trivial.push_back(p);
  return trivial;
}

// ---------------------------------------------------------------------------
// Quotients and isomorphisms.

struct QuotientMap {
  GroupPtr source;
  Subgroup normal;
  GroupPtr quotient;
  std::vector<Element> projection;  // source element -> coset index
  std::vector<Element> section;     // coset index -> least element of coset
};

inline QuotientMap quotient(const GroupPtr& g, const Subgroup& n) {
  if (!as_subgroup(*g, n.elements) || !is_normal(*g, n)) {
    throw Error("quotient needs a normal subgroup");
  }
  QuotientMap qm;
  qm.source = g;
  qm.normal = n;
  qm.projection.assign(g->order(), -1);
  for (Element x = 0; x < g->order(); ++x) {
    if (qm.projection[x] >= 0) continue;
    int idx = static_cast<int>(qm.section.size());
    qm.section.push_back(x);
    for (Element y : n.elements) qm.projection[g->mul(x, y)] = idx;
  }
  const int m = static_cast<int>(qm.section.size());
  std::vector<int> flat(static_cast<size_t>(m) * m);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back("[" + g->label(qm.section[i]) + "]");
    for (int j = 0; j < m; ++j) {
      flat[i * m + j] = qm.projection[g->mul(qm.section[i], qm.section[j])];
    }
  }
  qm.quotient = FiniteGroup::make_trusted(m, std::move(flat), std::move(labels));
  return qm;
}

// The subgroup h of g as a standalone group; element i is h.elements[i].
inline GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const int m = h.size();
  std::vector<int> flat(static_cast<size_t>(m) * m);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(g.label(h.elements[i]));
    for (int j = 0; j < m; ++j) {
      Element p = g.mul(h.elements[i], h.elements[j]);
      flat[i * m + j] = static_cast<int>(
          std::lower_bound(h.elements.begin(), h.elements.end(), p) -
          h.elements.begin());
    }
  }
  return FiniteGroup::make_trusted(m, std::move(flat), std::move(labels));
}

// An isomorphism h -> k as an element map, found by backtracking over
// images of a generating set of h.
inline std::optional<std::vector<Element>> find_isomorphism(
    const FiniteGroup& h, const FiniteGroup& k) {
  if (h.order() != k.order()) return std::nullopt;
  const int n = h.order();
  std::vector<Element> gens;
  {
    std::vector<Element> by_order(n);
    for (int x = 0; x < n; ++x) by_order[x] = x;
    std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) {
      return h.element_order(a) > h.element_order(b);
    });
    Subgroup span = trivial_subgroup();
    for (Element x : by_order) {
      if (span.size() == n) break;
      if (span.contains(x)) continue;
      gens.push_back(x);
      span = generate_subgroup(h, gens);
    }
  }
  std::vector<Element> images(gens.size(), 0);
  std::vector<Element> map;
  auto extend = [&]() -> bool {
    map.assign(n, -1);
    map[0] = 0;
    std::vector<Element> q{0};
    for (size_t i = 0; i < q.size(); ++i) {
      for (size_t j = 0; j < gens.size(); ++j) {
        Element y = h.mul(q[i], gens[j]);
        Element img = k.mul(map[q[i]], images[j]);
        if (map[y] < 0) {
          map[y] = img;
          q.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (hit[map[x]]) return false;
      hit[map[x]] = 1;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (map[h.mul(a, b)] != k.mul(map[a], map[b])) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<Element>> options(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    int ord = h.element_order(gens[j]);
    for (Element y = 0; y < n; ++y) {
      if (k.element_order(y) == ord) options[j].push_back(y);
    }
  }
  std::optional<std::vector<Element>> found;
  auto search = [&](auto&& self, size_t j) -> void {
    if (found) return;
    if (j == gens.size()) {
      if (extend()) found = map;
      return;
    }
    for (Element y : options[j]) {
      images[j] = y;
      self(self, j + 1);
      if (found) return;
    }
  };
  search(search, 0);
  return found;
}

inline bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace frobmat
