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


// Seeded randomness. Every task of a sweep gets its own mt19937_64 stream
// whose seed is derived from (base seed, task index) by splitmix64 mixing,
// so results do not depend on scheduling or thread count.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vmu/error.hpp"
#include "vmu/graph.hpp"

namespace vmu {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(task + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t task) { return Rng(derive_seed(seed, task)); }

/// Uniform integer in [0, n).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

/// Random bipartite graph: left labels 0..l-1, right labels l..l+r-1, each
/// of the l*r cross pairs an edge independently with probability 1/2.
inline Graph sample_bipartite(std::size_t l, std::size_t r, Rng& rng) {
  if (l < 1 || r < 1) throw InputError("sample_bipartite needs l, r >= 1");
  Graph g(l + r);
  std::uint64_t pool = 0;
  int left_bits = 0;
  for (std::size_t u = 0; u < l; ++u)
    for (std::size_t v = l; v < l + r; ++v) {
      if (left_bits == 0) {
        pool = rng();
        left_bits = 64;
      }
      if (pool & 1U) g.add_edge_in_place(static_cast<Vertex>(u), static_cast<Vertex>(v));
      pool >>= 1;
      --left_bits;
    }
  std::vector<Vertex> left(l);
  for (std::size_t i = 0; i < l; ++i) left[i] = static_cast<Vertex>(i);
  g.set_bipartition(left);
  return g;
}

inline Graph sample_bipartite(std::size_t l, std::size_t r, std::uint64_t seed) {
  Rng rng(seed);
  Graph g = sample_bipartite(l, r, rng);
  g.set_tag({Provenance::RandomBipartite, seed});
  return g;
}

/// k distinct values from [0, n), ascending (Floyd's algorithm).
inline std::vector<Vertex> sample_subset(Rng& rng, std::size_t n, std::size_t k) {
  if (k > n) throw InputError("subset larger than population");
  std::vector<Vertex> out;
  for (std::size_t j = n - k; j < n; ++j) {
    auto t = static_cast<Vertex>(uniform_below(rng, j + 1));
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
    else
      out.push_back(static_cast<Vertex>(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vmu
