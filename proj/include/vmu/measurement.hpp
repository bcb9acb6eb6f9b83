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


// Graph-state rewriting under local Cliffords and destructive Pauli
// measurements.
//
// Every rule returns the graph whose state the measured (or rotated) state
// equals after a product of single-qubit Cliffords, together with that
// product's inverse as a list of corrections. Applying the corrections to
// the post-measurement state yields the graph state of the returned graph.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "vmu/clifford.hpp"
#include "vmu/error.hpp"
#include "vmu/graph.hpp"

namespace vmu {

struct Correction {
  Vertex qubit = 0;
  Clifford op;
};

enum class Basis { X, Y, Z };

inline char basis_char(Basis b) { return b == Basis::X ? 'X' : b == Basis::Y ? 'Y' : 'Z'; }

inline Basis parse_basis(char c) {
  switch (c) {
    case 'X': return Basis::X;
    case 'Y': return Basis::Y;
    case 'Z': return Basis::Z;
    default: throw InputError(std::string("unknown Pauli basis '") + c + "'");
  }
}

/// Local unitary U with U|G> = |G*v> up to phase: sqrt(-iX) on v and
/// sqrt(iZ) on each neighbour.
inline std::vector<Correction> lc_unitary(const Graph& g, Vertex v) {
  std::vector<Correction> out{{v, Clifford::from_matrix(sqrt_pauli('X', -1))}};
  const Clifford phase = Clifford::from_matrix(sqrt_pauli('Z', +1));
  for (Vertex u : g.neighbors(v)) out.push_back({u, phase});
  return out;
}

struct MeasureResult {
  Graph graph;
  bool possible = true;  // false for the zero-probability branch of X on an isolated vertex
  std::vector<Correction> corrections;
  std::optional<Vertex> special;  // neighbour used by an X measurement
};

namespace detail {

// corrections = inverse of the byproduct operator, dropping identities.
inline void add_inverse(std::vector<Correction>& out, Vertex q, const Mat2& byproduct) {
  const Clifford c = Clifford::from_matrix(byproduct).inverse();
  if (!c.is_identity()) out.push_back({q, c});
}

}  // namespace detail

/// Destructive measurement of v in `basis`; outcome 0 is the +1 eigenvalue.
inline MeasureResult measure_graph(const Graph& g, Vertex v, Basis basis, int outcome,
                                   std::optional<Vertex> special = std::nullopt) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (outcome != 0 && outcome != 1) throw InputError("outcome must be 0 or 1");
  const auto nv = g.neighbors(v);
  if (special && basis != Basis::X) throw InputError("a special neighbour only applies to X measurements");
  if (special && !std::binary_search(nv.begin(), nv.end(), *special))
    throw InputError("special neighbour " + std::to_string(*special) + " is not adjacent to " + std::to_string(v));

  MeasureResult res;
  res.graph = g;
  const Mat2 z = gate_matrix('Z');
  switch (basis) {
    case Basis::Z:
      if (outcome)
        for (Vertex u : nv) detail::add_inverse(res.corrections, u, z);
      break;
    case Basis::Y:
      res.graph.local_complement_in_place(v);
      for (Vertex u : nv) detail::add_inverse(res.corrections, u, sqrt_pauli('Z', outcome ? +1 : -1));
      break;
    case Basis::X: {
      if (nv.empty()) {
        res.possible = outcome == 0;
        break;
      }
      const Vertex b0 = special.value_or(nv.front());
      res.special = b0;
      const auto nb = g.neighbors(b0);
      auto in = [](const std::vector<Vertex>& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); };
      detail::add_inverse(res.corrections, b0, sqrt_pauli('Y', outcome ? -1 : +1));
      // outcome +: Z on N(v) \ N(b0) \ {b0};  outcome -: Z on N(b0) \ N(v) \ {v}
      const auto& from = outcome ? nb : nv;
      const auto& minus = outcome ? nv : nb;
      const Vertex skip = outcome ? v : b0;
      for (Vertex u : from)
        if (u != skip && !in(minus, u)) detail::add_inverse(res.corrections, u, z);
      res.graph.pivot_in_place(v, b0);
      break;
    }
  }
  res.graph.delete_vertex_in_place(v);
  std::sort(res.corrections.begin(), res.corrections.end(),
            [](const Correction& a, const Correction& b) { return a.qubit < b.qubit; });
  return res;
}

}  // namespace vmu
