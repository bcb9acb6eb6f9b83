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

// Rank-based synthesis on bipartite hosts.
//
// For K on the left side, a right vertex x contributes the incidence row
// indexed by pairs {u,v} of K with entry adj(x,u)·adj(x,v); locally
// complementing x toggles exactly the K-pairs where its row is 1. If the
// rows of some X ⊆ R span all C(k,2) pairs, any graph on K is reached by
// complementing a suitable subset of X and deleting everything else.

#pragma once

#include <algorithm>
#include <vector>

#include "vmu/certificate.hpp"
#include "vmu/f2.hpp"
#include "vmu/graph.hpp"

namespace vmu {

namespace detail {

inline std::vector<Edge> pairs_of(const std::vector<Vertex>& k) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b) out.emplace_back(k[a], k[b]);
  return out;
}

inline BitVector incidence_row(const Graph& g, Vertex x, const std::vector<Edge>& pairs) {
  BitVector row(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (g.adjacent(x, pairs[p].first) && g.adjacent(x, pairs[p].second)) row.set(p);
  return row;
}

inline void require_left(const Graph& g, const std::vector<Vertex>& k) {
  if (!g.has_bipartition()) throw InputError("host graph has no bipartition");
  for (Vertex v : k)
    if (g.side(v) != Side::Left) throw PreconditionError("vertex " + std::to_string(v) + " is not on the left side");
}

}  // namespace detail

/// Greedy full-rank row selection: right vertices are scanned by label and
/// kept when their incidence row raises the rank.
struct RankBasis {
  std::vector<Vertex> k;
  std::vector<Edge> pairs;
  std::vector<Vertex> x;  // selected right vertices, scan order
  F2Matrix rows{0, 0};    // their incidence rows
};

inline Outcome<RankBasis> rank_basis(const Graph& g, std::vector<Vertex> k) {
  std::sort(k.begin(), k.end());
  if (k.size() < 2) throw InputError("rank_basis needs at least two target vertices");
  detail::require_left(g, k);
  RankBasis out;
  out.k = k;
  out.pairs = detail::pairs_of(k);
  out.rows = F2Matrix(0, out.pairs.size());
  F2Basis basis(out.pairs.size());
  for (Vertex x : g.right()) {
    if (basis.rank() == out.pairs.size()) break;
    auto row = detail::incidence_row(g, x, out.pairs);
    if (basis.insert(row)) {
      out.x.push_back(x);
      out.rows.append_row(std::move(row));
    }
  }
  if (basis.rank() < out.pairs.size())
    return Outcome<RankBasis>::fail("right side exhausted at rank " + std::to_string(basis.rank()) + " of " +
                                    std::to_string(out.pairs.size()));
  return Outcome<RankBasis>::ok(std::move(out));
}

/// Induces `target` on K ⊆ L by complementing a subset of the rank basis,
/// then deleting every vertex outside K.
inline CertificateOutcome synth_on_left(const Graph& g, const TargetGraph& target) {
  auto basis = rank_basis(g, target.vertices);
  if (!basis) return CertificateOutcome::fail(basis.failure.reason);
  // Toggle vector: pairs whose adjacency must change. K ⊆ L in a bipartite
  // host, so the current K-K adjacency is empty and this is the target.
  BitVector t(basis->pairs.size());
  for (std::size_t p = 0; p < basis->pairs.size(); ++p) {
    const auto [u, v] = basis->pairs[p];
    if (target.has_edge(u, v) != g.adjacent(u, v)) t.set(p);
  }
  auto x = f2_solve(basis->rows, t);
  detail::require(x.has_value(), "full-rank system without solution");

  SynthesisCertificate cert;
  cert.kind = CertificateKind::RankBasis;
  cert.k = target.vertices;
  cert.target_edges = target.edges;
  for (std::size_t r = 0; r < basis->x.size(); ++r) cert.add("X", static_cast<int>(r + 1), 0, basis->x[r]);
  std::vector<Vertex> chosen;
  for (std::size_t r = 0; r < basis->x.size(); ++r)
    if (x->get(r)) chosen.push_back(basis->x[r]);
  std::sort(chosen.begin(), chosen.end());
  for (Vertex a : chosen) cert.steps.push_back(TransformStep::lc(a));
  for (Vertex w : g.vertices())
    if (!std::binary_search(cert.k.begin(), cert.k.end(), w)) cert.steps.push_back(TransformStep::del(w));
  return CertificateOutcome::ok(std::move(cert));
}

struct PivotResult {
  Graph graph;             // bipartite, K on the left
  StepSequence steps;      // PIVOT a b, DEL b, ...
  std::vector<Edge> moved; // (a, partner b) per relocated vertex
};

/// Moves every right-side vertex of K to the left: pivot on a and its
/// lowest-label neighbour b in L∖K, then delete b.
inline Outcome<PivotResult> pivot_to_left(const Graph& g, std::vector<Vertex> k) {
  if (!g.has_bipartition()) throw InputError("host graph has no bipartition");
  std::sort(k.begin(), k.end());
  auto in_k = [&](Vertex v) { return std::binary_search(k.begin(), k.end(), v); };
  PivotResult out{g, {}, {}};
  for (Vertex a : k) {
    if (out.graph.side(a) != Side::Right) continue;
    std::optional<Vertex> partner;
    for (Vertex b : out.graph.neighbors(a))
      if (!in_k(b) && out.graph.side(b) == Side::Left) {
        partner = b;
        break;
      }
    if (!partner)
      return Outcome<PivotResult>::fail("vertex " + std::to_string(a) + " has no neighbour in L outside K", a);
    out.graph.pivot_in_place(a, *partner);
    out.graph.delete_vertex_in_place(*partner);
    out.steps.push_back(TransformStep::pivot(a, *partner));
    out.steps.push_back(TransformStep::del(*partner));
    out.moved.emplace_back(a, *partner);
  }
  return Outcome<PivotResult>::ok(std::move(out));
}

/// Pivot relocation followed by rank synthesis; the certificate steps apply
/// to the original host.
inline CertificateOutcome synth_bipartite(const Graph& g, const TargetGraph& target) {
  auto moved = pivot_to_left(g, target.vertices);
  if (!moved) return CertificateOutcome::fail(moved.failure.reason, moved.failure.stuck);
  auto cert = synth_on_left(moved->graph, target);
  if (!cert) return cert;
  StepSequence steps = moved->steps;
  steps.insert(steps.end(), cert->steps.begin(), cert->steps.end());
  cert->steps = std::move(steps);
  cert->relocations = moved->moved;
  return cert;
}

}  // namespace vmu
