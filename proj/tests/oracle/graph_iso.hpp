#pragma once

#include <vector>

#include "semiprim/graph.hpp"

namespace oracle {

/// Backtracking isomorphism test; fine for the small fixture graphs.
inline bool isomorphic(semiprim::Graph const& a, semiprim::Graph const& b) {
  std::size_t const n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(n, -1), used(n, 0);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || a.neighbours(v).size() != b.neighbours(w).size()) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = a.has_edge(u, v) == b.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace oracle
