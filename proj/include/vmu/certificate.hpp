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

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vmu/error.hpp"
#include "vmu/graph.hpp"

namespace vmu {

/// A graph to be induced on a vertex subset K of some host.
struct TargetGraph {
  std::vector<Vertex> vertices;  // K, ascending
  std::vector<Edge> edges;       // (u, v) with u < v, ascending

  TargetGraph() = default;
  TargetGraph(std::vector<Vertex> k, std::vector<Edge> e) : vertices(std::move(k)), edges(std::move(e)) {
    normalize();
  }

  static TargetGraph from_graph(const Graph& g) { return TargetGraph(g.vertices(), g.edges()); }

  std::size_t size() const noexcept { return vertices.size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
  }

  Graph to_graph() const { return Graph::from_edges(vertices, edges); }

 private:
  void normalize() {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw InputError("target has a repeated vertex");
    for (auto& [u, v] : edges) {
      if (u == v) throw InputError("target has a loop at " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
          !std::binary_search(vertices.begin(), vertices.end(), v))
        throw InputError("target edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " leaves the target vertex set");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InputError("target has a repeated edge");
  }
};

enum class CertificateKind { RankBasis, Pairing, OneSideVMU, FullVMU, ReducedVMU };

inline std::string kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::RankBasis: return "rank";
    case CertificateKind::Pairing: return "pairing";
    case CertificateKind::OneSideVMU: return "oneside";
    case CertificateKind::FullVMU: return "full";
    case CertificateKind::ReducedVMU: return "reduced";
  }
  return "?";
}

/// One "choose something avoiding ..." decision of a geometric recursion.
///
/// `excluded` is the number of candidates actually rejected, `avoid_size`
/// the size of the avoided collection as the counting argument measures it,
/// `cap` the worst case of that count for the given k, and `available` the
/// number of candidates (q + 1). A choice is guaranteed when
/// excluded <= avoid_size <= cap < available.
struct AvoidanceCheck {
  std::string label;
  std::size_t excluded = 0;
  std::size_t avoid_size = 0;
  std::size_t cap = 0;
  std::size_t available = 0;

  bool holds() const { return excluded <= avoid_size && avoid_size <= cap && cap < available; }
};

/// A vertex of a certificate with its one- or two-index name, e.g. α_{ij}.
struct Indexed {
  int i = 0;
  int j = 0;
  Vertex v = 0;
  friend bool operator==(const Indexed&, const Indexed&) = default;
};

struct SynthesisCertificate {
  CertificateKind kind = CertificateKind::RankBasis;
  std::vector<Vertex> k;          // target vertex set
  std::vector<Edge> target_edges;
  std::uint32_t q = 0;            // field order for geometric kinds

  /// Named elements in construction order: "X", "alpha", "beta", "c",
  /// "omega", "gamma", "a", "b". Geometric line choices in the reduced
  /// construction are recorded as "line_alpha"/"line_beta" (line indices).
  std::map<std::string, std::vector<Indexed>> elements;
  /// Intersection bookkeeping sets, keyed like "I(2)" or "I_S1(1,3)".
  std::map<std::string, std::vector<Vertex>> intersections;
  std::vector<AvoidanceCheck> checks;
  /// Pivot partners chosen during relocation to the left side (a, b).
  std::vector<Edge> relocations;
  StepSequence steps;

  std::vector<Vertex> members(const std::string& role) const {
    std::vector<Vertex> out;
    auto it = elements.find(role);
    if (it != elements.end())
      for (const auto& e : it->second) out.push_back(e.v);
    return out;
  }

  Vertex at(const std::string& role, int i, int j = 0) const {
    auto it = elements.find(role);
    if (it != elements.end())
      for (const auto& e : it->second)
        if (e.i == i && e.j == j) return e.v;
    throw InputError("certificate has no element " + role + "(" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
  }

  void add(const std::string& role, int i, int j, Vertex v) { elements[role].push_back({i, j, v}); }

  /// The named vertex sets of the certificate (C, S, X, C1, S1, Omega, C2, S2).
  std::map<std::string, std::vector<Vertex>> named_sets() const {
    auto cat = [&](std::initializer_list<const char*> roles) {
      std::vector<Vertex> out;
      for (auto r : roles) {
        auto m = members(r);
        out.insert(out.end(), m.begin(), m.end());
      }
      return out;
    };
    switch (kind) {
      case CertificateKind::RankBasis: return {{"X", members("X")}};
      case CertificateKind::Pairing:
      case CertificateKind::OneSideVMU: return {{"C", members("c")}, {"S", cat({"alpha", "beta"})}};
      case CertificateKind::ReducedVMU: return {{"C", members("c")}, {"S", cat({"a", "b"})}};
      case CertificateKind::FullVMU:
        return {{"C1", members("c")}, {"S1", cat({"alpha", "beta"})}, {"Omega", members("omega")},
                {"C2", members("gamma")}, {"S2", cat({"a", "b"})}};
    }
    return {};
  }

  bool all_checks_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const AvoidanceCheck& c) { return c.holds(); });
  }
};

struct SynthesisFailure {
  std::string reason;
  std::optional<Vertex> stuck;  // vertex that blocked the construction, if any
};

/// Either a value or a failure description. Failures are expected outcomes
/// of randomized or opportunistic constructions, not exceptions.
template <typename T>
struct Outcome {
  std::optional<T> value;
  SynthesisFailure failure;

  static Outcome ok(T v) { return Outcome{std::move(v), {}}; }
  static Outcome fail(std::string reason, std::optional<Vertex> stuck = std::nullopt) {
    return Outcome{std::nullopt, {std::move(reason), stuck}};
  }
  explicit operator bool() const noexcept { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }
};

using CertificateOutcome = Outcome<SynthesisCertificate>;

/// True iff replaying the certificate on `host` leaves exactly the target.
inline bool replay_matches(const Graph& host, const SynthesisCertificate& cert) {
  Graph out = apply_sequence(host, cert.steps);
  return out == Graph::from_edges(cert.k, cert.target_edges);
}

/// Host restricted to the vertices a certificate actually touches (K plus
/// every LC or pivot operand), with the deletions of untouched vertices
/// dropped. Deleting a vertex commutes with complementing any other vertex,
/// so the restricted steps produce the same graph on K.
struct RestrictedCertificate {
  Graph host;
  StepSequence steps;
};

inline RestrictedCertificate restrict_to_support(const Graph& host, const SynthesisCertificate& cert) {
  std::vector<Vertex> keep = cert.k;
  for (const auto& s : cert.steps) {
    if (s.kind == StepKind::LocalComplement) keep.push_back(s.a);
    if (s.kind == StepKind::Pivot) {
      keep.push_back(s.a);
      keep.push_back(s.b);
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  RestrictedCertificate out{induced_subgraph(host, keep), {}};
  for (const auto& s : cert.steps)
    if (s.kind != StepKind::DeleteVertex || std::binary_search(keep.begin(), keep.end(), s.a)) out.steps.push_back(s);
  return out;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("certificate invariant violated: " + what);
}

inline std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace detail

}  // namespace vmu
