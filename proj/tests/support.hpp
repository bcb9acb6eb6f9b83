// Copyright 2026 The vmu Authors
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


// Shared helpers for the unit tests: seeded random graphs and a deliberately
// naive adjacency-matrix model used as an independent reference.

#pragma once

#include <random>
#include <vector>

#include "vmu/graph.hpp"
#include "vmu/random.hpp"

namespace vmu::testing {

inline Graph random_graph(Rng& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge_in_place(a, b);
  return g;
}

/// Dense boolean matrix over labels 0..n-1 with the rewrite rules written
/// straight from their definitions.
struct RefGraph {
  std::vector<std::vector<bool>> adj;
  std::vector<bool> alive;

  explicit RefGraph(const Graph& g) {
    const auto vs = g.vertices();
    const std::size_t n = vs.empty() ? 0 : vs.back() + 1;
    adj.assign(n, std::vector<bool>(n, false));
    alive.assign(n, false);
    for (Vertex v : vs) alive[v] = true;
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  }

  void lc(Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < adj.size(); ++u)
      if (alive[u] && adj[v][u]) nb.push_back(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const bool e = adj[nb[i]][nb[j]];
        adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = !e;
      }
  }

  void del(Vertex v) {
    alive[v] = false;
    for (Vertex u = 0; u < adj.size(); ++u) adj[u][v] = adj[v][u] = false;
  }

  bool matches(const Graph& g) const {
    for (Vertex u = 0; u < adj.size(); ++u) {
      if (alive[u] != g.has_vertex(u)) return false;
      if (!alive[u]) continue;
      for (Vertex v = u + 1; v < adj.size(); ++v)
        if (alive[v] && adj[u][v] != g.adjacent(u, v)) return false;
    }
    return true;
  }
};

inline Graph path3() {
  Graph g(std::vector<Vertex>{1, 2, 3});
  g.add_edge_in_place(1, 2);
  g.add_edge_in_place(2, 3);
  return g;
}

}  // namespace vmu::testing
