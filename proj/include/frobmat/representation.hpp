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

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frobmat/biased_matroid.hpp"
#include "frobmat/gain_graph.hpp"
#include "frobmat/lift.hpp"

namespace frobmat {

constexpr int kMaxFieldModulus = 101;

inline int mod(long x, int q) { return static_cast<int>(((x % q) + q) % q); }

inline int mod_inverse(int x, int q) {
  x = mod(x, q);
  if (x == 0) throw Error("zero has no inverse mod " + std::to_string(q));
  long r = 1, b = x;
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
  }
  return static_cast<int>(r);
}

// Dense matrix over GF(q), entries reduced to [0, q).
struct FieldMatrix {
  int q = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;  // row-major

  FieldMatrix() = default;
  FieldMatrix(int q_, int r, int c)
      : q(q_), rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0) {}

  int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const {
    return entries[static_cast<size_t>(r) * cols + c];
  }
  bool operator==(const FieldMatrix& o) const {
    return q == o.q && rows == o.rows && cols == o.cols && entries == o.entries;
  }

  void scale_row(int r, int c) {
    for (int j = 0; j < cols; ++j) at(r, j) = mod(1L * at(r, j) * c, q);
  }
  void scale_col(int j, int c) {
    for (int r = 0; r < rows; ++r) at(r, j) = mod(1L * at(r, j) * c, q);
  }
  // row dst += c * row src
  void add_row(int dst, int src, int c) {
    for (int j = 0; j < cols; ++j) {
      at(dst, j) = mod(at(dst, j) + 1L * c * at(src, j), q);
    }
  }
};

struct AffinePair {
  int a;
  int b;
};

inline int field_of(const GainGraph& g) {
  int q = g.group().field_modulus();
  if (q == 0) throw Error("gain group was not built by make_field_affine");
  if (q > kMaxFieldModulus) throw Error("field modulus above 101");
  return q;
}

inline AffinePair affine_pair(int q, Element x) {
  return {x / (q - 1), x % (q - 1) + 1};
}

// Rows: v0, then one per vertex. Column per edge in id order; for an edge
// tail v -> head w with gain (a, b): a in row v0, 1 at v and -b at w, or
// 1 - b at v for a loop.
inline FieldMatrix incidence_matrix(const GainGraph& g) {
  const int q = field_of(g);
  FieldMatrix m(q, g.vertex_count() + 1, g.edge_count());
  int col = 0;
  for (const Edge& e : g.edges()) {
    AffinePair p = affine_pair(q, e.gain);
    m.at(0, col) = mod(p.a, q);
    if (e.is_loop()) {
      m.at(e.tail + 1, col) = mod(1 - p.b, q);
    } else {
      m.at(e.tail + 1, col) = 1;
      m.at(e.head + 1, col) = mod(-p.b, q);
    }
    ++col;
  }
  return m;
}

// Rank over GF(q) of the columns listed in `cols`.
inline int matrix_rank_gf(const FieldMatrix& m, const std::vector<int>& cols) {
  const int q = m.q;
  const int nr = m.rows, nc = static_cast<int>(cols.size());
  std::vector<int> w(static_cast<size_t>(nr) * nc);
  for (int r = 0; r < nr; ++r) {
    for (int j = 0; j < nc; ++j) w[r * nc + j] = m.at(r, cols[j]);
  }
  int rank = 0;
  for (int j = 0; j < nc && rank < nr; ++j) {
    int piv = -1;
    for (int r = rank; r < nr; ++r) {
      if (w[r * nc + j]) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int k = 0; k < nc; ++k) std::swap(w[piv * nc + k], w[rank * nc + k]);
    int inv = mod_inverse(w[rank * nc + j], q);
    for (int k = 0; k < nc; ++k) w[rank * nc + k] = mod(1L * w[rank * nc + k] * inv, q);
    for (int r = 0; r < nr; ++r) {
      if (r == rank || !w[r * nc + j]) continue;
      int f = w[r * nc + j];
      for (int k = 0; k < nc; ++k) {
        w[r * nc + k] = mod(w[r * nc + k] - 1L * f * w[rank * nc + k], q);
      }
    }
    ++rank;
  }
  return rank;
}

inline int matrix_rank_gf(const FieldMatrix& m) {
  std::vector<int> all(m.cols);
  for (int j = 0; j < m.cols; ++j) all[j] = j;
  return matrix_rank_gf(m, all);
}

// The matrix with row 0 removed.
inline FieldMatrix drop_first_row(const FieldMatrix& m) {
  FieldMatrix out(m.q, m.rows - 1, m.cols);
  for (int r = 1; r < m.rows; ++r) {
    for (int j = 0; j < m.cols; ++j) out.at(r - 1, j) = m.at(r, j);
  }
  return out;
}

// Column matroid with columns labelled by `ids` (in column order).
class VectorOracle : public RankOracle {
 public:
  VectorOracle(FieldMatrix m, EdgeSet ids) : m_(std::move(m)), ids_(std::move(ids)) {}
  const EdgeSet& ground() const override { return ids_; }
  int rank(const EdgeSet& x) const override {
    std::vector<int> cols;
    for (EdgeId e : x) {
      cols.push_back(static_cast<int>(
          std::lower_bound(ids_.begin(), ids_.end(), e) - ids_.begin()));
    }
    return matrix_rank_gf(m_, cols);
  }

 private:
  FieldMatrix m_;
  EdgeSet ids_;
};

// Translations as the kernel, point stabilizers {(x(1-b), b)} as the
// complements.
inline ContextPtr field_affine_context(int q) {
  auto g = make_field_affine(q);
  FrobeniusPartition p;
  for (int a = 0; a < q; ++a) p.kernel.elements.push_back(field_affine_element(q, a, 1));
  std::sort(p.kernel.elements.begin(), p.kernel.elements.end());
  for (int x = 0; x < q; ++x) {
    Subgroup s;
    for (int b = 1; b < q; ++b) {
      s.elements.push_back(field_affine_element(q, x * (1 - b), b));
    }
    std::sort(s.elements.begin(), s.elements.end());
    p.complements.push_back(s);
  }
  std::sort(p.complements.begin(), p.complements.end());
  return make_context(g, p);
}

struct RepresentationCheck {
  bool ok = true;
  EdgeSet witness;
  int matrix_rank = 0;
  int matroid_rank = 0;
  long subsets_checked = 0;
};

// Compares matrix rank with the lifted matroid rank on every subset when
// |E| <= 16, else on `samples` random subsets.
inline RepresentationCheck verify_representation(const FrobeniusContext& ctx,
                                                 const GainGraph& g,
                                                 unsigned seed = 1,
                                                 int samples = 4096) {
  const int q = field_of(g);
  if (!ctx.group->same_table(g.group())) throw Error("context group mismatch");
  Subgroup translations;
  for (int a = 0; a < q; ++a) translations.elements.push_back(field_affine_element(q, a, 1));
  std::sort(translations.elements.begin(), translations.elements.end());
  if (!(ctx.kernel() == translations)) {
    throw Error("representation needs the translation subgroup as kernel");
  }
  const FieldMatrix m = incidence_matrix(g);
  const EdgeSet ground = g.edge_ids();
  const int n = static_cast<int>(ground.size());
  RepresentationCheck out;
  auto check = [&](const EdgeSet& x) {
    std::vector<int> cols;
    for (EdgeId e : x) {
      cols.push_back(static_cast<int>(
          std::lower_bound(ground.begin(), ground.end(), e) - ground.begin()));
    }
    int a = matrix_rank_gf(m, cols), b = matroid_rank(ctx, g, x);
    ++out.subsets_checked;
    if (a != b) {
      out.ok = false;
      out.witness = x;
      out.matrix_rank = a;
      out.matroid_rank = b;
    }
    return a == b;
  };
  if (n <= 16) {
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
      if (!check(subset_from_mask(ground, mask))) return out;
    }
  } else {
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
      EdgeSet x;
      for (EdgeId e : ground) {
        if (rng() & 1u) x.push_back(e);
      }
      if (!check(x)) return out;
    }
  }
  return out;
}

struct ReorientResult {
  GainGraph graph;
  bool column_scaled = false;  // new column == -b^-1 * old column
};

inline ReorientResult reorient_edge(const GainGraph& g, EdgeId id) {
  const int q = field_of(g);
  const Edge& e = g.edge(id);
  if (e.is_loop()) throw Error("cannot reorient loop " + std::to_string(id));
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (const Edge& f : g.edges()) {
    if (f.id == id) {
      out.add_edge_with_id({f.id, f.head, f.tail, g.group().inv(f.gain)});
    } else {
      out.add_edge_with_id(f);
    }
  }
  FieldMatrix before = incidence_matrix(g), after = incidence_matrix(out);
  int col = static_cast<int>(
      std::lower_bound(g.edges().begin(), g.edges().end(), id,
                       [](const Edge& a, EdgeId x) { return a.id < x; }) -
      g.edges().begin());
  int factor = mod(-mod_inverse(affine_pair(q, e.gain).b, q), q);
  before.scale_col(col, factor);
  return {out, before == after};
}

inline GainGraph scale_gains(const GainGraph& g, int c) {
  const int q = field_of(g);
  if (mod(c, q) == 0) throw Error("scaling factor must be nonzero");
  GainGraph out(g.group_ptr(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    AffinePair p = affine_pair(q, e.gain);
    out.add_edge_with_id(
        {e.id, e.tail, e.head, field_affine_element(q, p.a * c, p.b)});
  }
  return out;
}

// A(D, c psi) equals A(D, psi) with row v0 multiplied by c.
inline bool scaling_matrix_check(const GainGraph& g, int c) {
  FieldMatrix a = incidence_matrix(g);
  a.scale_row(0, c);
  return a == incidence_matrix(scale_gains(g, c));
}

// Applies, vertex by vertex, the row and column operations that realize
// switching at v by (c, d) with every non-loop at v pointing into v, and
// compares with the matrix of the switched gain graph.
inline bool switching_projective_check(const GainGraph& g,
                                       const SwitchingFunction& eta) {
  const int q = field_of(g);
  const FiniteGroup& grp = g.group();
  if (static_cast<int>(eta.size()) != g.vertex_count()) {
    throw Error("switching function has wrong length");
  }
  std::vector<Edge> cur = g.edges();
  FieldMatrix m = incidence_matrix(g);
  auto reorient = [&](size_t col) {
    Edge& e = cur[col];
    m.scale_col(static_cast<int>(col),
                mod(-mod_inverse(affine_pair(q, e.gain).b, q), q));
    e = {e.id, e.head, e.tail, grp.inv(e.gain)};
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Element gamma = eta[v];
    if (gamma == 0) continue;
    const AffinePair cd = affine_pair(q, gamma);
    std::vector<size_t> flipped;
    for (size_t j = 0; j < cur.size(); ++j) {
      if (!cur[j].is_loop() && cur[j].tail == v) {
        reorient(j);
        flipped.push_back(j);
      }
    }
    m.add_row(0, v + 1, mod(-cd.a, q));
    m.scale_row(v + 1, cd.b);
    const int dinv = mod_inverse(cd.b, q);
    for (size_t j = 0; j < cur.size(); ++j) {
      Edge& e = cur[j];
      if (e.is_loop() && e.tail == v) {
        m.scale_col(static_cast<int>(j), dinv);
        e.gain = grp.conj(gamma, e.gain);
      } else if (e.head == v) {
        e.gain = grp.mul(e.gain, gamma);
      }
    }
    for (size_t j : flipped) reorient(j);
  }
  GainGraph sw = apply_switching(g, eta);
  if (sw.edges() != cur) return false;
  return m == incidence_matrix(sw);
}

// For non-translations (a, b) and (c, d): same complement iff
// a (1 - d) = c (1 - b).
inline bool same_affine_part(int q, AffinePair p, AffinePair r) {
  if (mod(p.b, q) == 1 || mod(r.b, q) == 1) {
    throw Error("same_affine_part is defined for non-translations only");
  }
  return mod(1L * p.a * (1 - r.b), q) == mod(1L * r.a * (1 - p.b), q);
}

inline std::string format_matrix(const FieldMatrix& m) {
  std::string s = std::to_string(m.q) + " " + std::to_string(m.rows) + " " +
                  std::to_string(m.cols) + "\n";
  if (m.cols == 0) return s;
  for (int r = 0; r < m.rows; ++r) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += " ";
      s += std::to_string(m.at(r, j));
    }
    s += "\n";
  }
  return s;
}

}  // namespace frobmat
