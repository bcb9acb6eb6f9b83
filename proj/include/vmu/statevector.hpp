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


// Dense statevectors for graph states on at most 14 qubits.
//
// Qubits carry vertex labels. Position p in `qubits` is bit p of the basis
// index, and qubits are always kept sorted by label.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "vmu/clifford.hpp"
#include "vmu/error.hpp"
#include "vmu/graph.hpp"

namespace vmu {

inline constexpr std::size_t kMaxStatevectorQubits = 14;

struct Statevector {
  std::vector<Vertex> qubits;  // ascending labels
  std::vector<Complex> amp;    // size 2^qubits.size()

  std::size_t size() const noexcept { return qubits.size(); }

  std::size_t position(Vertex v) const {
    auto it = std::lower_bound(qubits.begin(), qubits.end(), v);
    if (it == qubits.end() || *it != v) throw InputError("qubit " + std::to_string(v) + " is not in the state");
    return static_cast<std::size_t>(it - qubits.begin());
  }

  double norm() const {
    double s = 0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
  }

  void normalize() {
    const double n = norm();
    if (n < 1e-300) throw Error("cannot normalize a zero vector");
    for (auto& a : amp) a /= n;
  }

  /// Applies a 2x2 matrix to one qubit.
  void apply(Vertex v, const Mat2& u) {
    const std::size_t bit = std::size_t{1} << position(v);
    for (std::size_t x = 0; x < amp.size(); ++x) {
      if (x & bit) continue;
      const Complex a0 = amp[x], a1 = amp[x | bit];
      amp[x] = u[0] * a0 + u[1] * a1;
      amp[x | bit] = u[2] * a0 + u[3] * a1;
    }
  }

  void apply(Vertex v, const Clifford& c) { apply(v, c.matrix()); }
  void apply_word(Vertex v, std::string_view word) { apply(v, word_matrix(word)); }
};

/// |G> with amplitude 2^{-n/2} (-1)^{|E(G[x])|} on basis word x.
inline Statevector statevector(const Graph& g) {
  const auto labels = g.vertices();
  const std::size_t n = labels.size();
  if (n > kMaxStatevectorQubits)
    throw InputError("statevector supports at most " + std::to_string(kMaxStatevectorQubits) + " qubits");
  // Neighbour masks over positions.
  std::vector<std::uint32_t> nb(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.adjacent(labels[a], labels[b])) nb[a] |= 1U << b;
  Statevector s;
  s.qubits = labels;
  s.amp.resize(std::size_t{1} << n);
  const double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
  for (std::uint32_t x = 0; x < s.amp.size(); ++x) {
    int edges = 0;
    for (std::size_t a = 0; a < n; ++a)
      if ((x >> a) & 1U) edges += std::popcount(nb[a] & x);
    s.amp[x] = (edges & 1) ? -scale : scale;
  }
  return s;
}

/// |<a|b>| for states on the same qubit labels; 0 when labels differ.
inline double overlap(const Statevector& a, const Statevector& b) {
  if (a.qubits != b.qubits) return 0.0;
  Complex s = 0;
  for (std::size_t x = 0; x < a.amp.size(); ++x) s += std::conj(a.amp[x]) * b.amp[x];
  return std::abs(s);
}

inline constexpr double kPhaseTolerance = 1e-8;

inline bool equal_up_to_phase(const Statevector& a, const Statevector& b, double tol = kPhaseTolerance) {
  return a.qubits == b.qubits && std::abs(overlap(a, b) - 1.0) <= tol;
}

/// Destructive single-qubit measurement: contracts qubit v with the bra of
/// the Pauli eigenstate (basis, outcome) and drops it. outcome 0 is the +1
/// eigenvalue. Returns the unnormalized branch state; its squared norm is
/// the outcome probability.
inline Statevector project_out(const Statevector& s, Vertex v, char basis, int outcome) {
  const std::size_t p = s.position(v);
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  const int sign = outcome ? -1 : 1;
  Complex b0, b1;  // bra coefficients on |0>, |1>
  switch (basis) {
    case 'Z': b0 = outcome ? 0.0 : 1.0; b1 = outcome ? 1.0 : 0.0; break;
    case 'X': b0 = h; b1 = h * static_cast<double>(sign); break;
    case 'Y': b0 = h; b1 = -i * h * static_cast<double>(sign); break;
    default: throw InputError(std::string("unknown measurement basis '") + basis + "'");
  }
  Statevector out;
  out.qubits = s.qubits;
  out.qubits.erase(out.qubits.begin() + static_cast<std::ptrdiff_t>(p));
  out.amp.assign(s.amp.size() / 2, 0.0);
  const std::size_t low = (std::size_t{1} << p) - 1;
  for (std::size_t y = 0; y < out.amp.size(); ++y) {
    const std::size_t x0 = (y & low) | ((y & ~low) << 1);
    out.amp[y] = b0 * s.amp[x0] + b1 * s.amp[x0 | (std::size_t{1} << p)];
  }
  return out;
}

/// Non-destructive variant: the measured qubit stays, collapsed onto the
/// eigenstate. Unnormalized like project_out.
inline Statevector project_keep(const Statevector& s, Vertex v, char basis, int outcome) {
  Statevector rest = project_out(s, v, basis, outcome);
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  const double sign = outcome ? -1.0 : 1.0;
  Complex k0, k1;  // ket coefficients
  switch (basis) {
    case 'Z': k0 = outcome ? 0.0 : 1.0; k1 = outcome ? 1.0 : 0.0; break;
    case 'X': k0 = h; k1 = h * sign; break;
    default: k0 = h; k1 = i * h * sign; break;
  }
  const std::size_t p = s.position(v);
  Statevector out;
  out.qubits = s.qubits;
  out.amp.assign(s.amp.size(), 0.0);
  const std::size_t low = (std::size_t{1} << p) - 1;
  for (std::size_t y = 0; y < rest.amp.size(); ++y) {
    const std::size_t x0 = (y & low) | ((y & ~low) << 1);
    out.amp[x0] = k0 * rest.amp[y];
    out.amp[x0 | (std::size_t{1} << p)] = k1 * rest.amp[y];
  }
  return out;
}

}  // namespace vmu
