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
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobmat {

using Element = int;
using Vertex = int;
using EdgeId = int;

// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive enumeration would exceed its configured cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Caps for the exponential enumerations. FROBMAT_LIMIT, when set, scales
// every cap (it is read as the new edge cap; the others follow).
struct Limits {
  int max_group_order = 96;
  int max_cycle_edges = 40;
  long max_cycles = 1000000;
  int max_oracle_ground = 20;
  int max_axiom_ground = 16;
  int max_circuit_ground = 40;
};

inline Limits& limits() {
  static Limits l = [] {
    Limits d;
    if (const char* env = std::getenv("FROBMAT_LIMIT")) {
      int v = std::atoi(env);
      if (v > 0) {
        d.max_cycle_edges = v;
        d.max_circuit_ground = v;
        d.max_group_order = std::max(d.max_group_order, v);
      }
    }
    return d;
  }();
  return l;
}

inline EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline bool contains(const EdgeSet& s, EdgeId e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline bool is_subset(const EdgeSet& a, const EdgeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline EdgeSet with_edge(EdgeSet s, EdgeId e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it == s.end() || *it != e) s.insert(it, e);
  return s;
}

inline EdgeSet without_edge(EdgeSet s, EdgeId e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it != s.end() && *it == e) s.erase(it);
  return s;
}

// Subset of `ground` selected by the bits of `mask` (ground.size() <= 63).
inline EdgeSet subset_from_mask(const EdgeSet& ground, unsigned long long mask) {
  EdgeSet out;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1ULL) out.push_back(ground[i]);
  }
  return out;
}

inline std::string join_ids(const std::vector<int>& ids,
                            const char* sep = ",") {
  std::ostringstream os;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) os << sep;
    os << ids[i];
  }
  return os.str();
}

inline std::string format_set(const std::vector<int>& ids) {
  return "{" + join_ids(ids) + "}";
}

}  // namespace frobmat
