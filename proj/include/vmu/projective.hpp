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
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "vmu/error.hpp"
#include "vmu/field.hpp"
#include "vmu/graph.hpp"

namespace vmu {

using Coords = std::array<Gfq::Elem, 3>;

struct ProjPoint {
  Coords c;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// A line, stored by its normal vector: point a lies on it iff a·n = 0.
struct ProjLine {
  Coords normal;
  friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

/// PG(2,q) with points and lines indexed 0..N-1, N = q²+q+1.
///
/// Index i names both the point with normalized coordinates coords(i) and
/// the line with that normal vector. Normalized means the first nonzero
/// coordinate is 1, and indices follow lexicographic order of the
/// normalized coordinates: (0,0,1), (0,1,0), (0,1,1), ..., (1,q-1,q-1).
/// With this convention the orthogonality map from points to lines is the
/// identity on indices.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(std::uint64_t q) : field_(make_field(q)) {
    const std::uint64_t n = q * q + q + 1;
    if (n * (q + 1) > (std::uint64_t{1} << 26))
      throw ConstructionError("PG(2," + std::to_string(q) + ") is too large to tabulate");
    n_ = static_cast<std::size_t>(n);
    coords_.resize(n_);
    const auto qq = static_cast<Gfq::Elem>(q);
    coords_[0] = {0, 0, 1};
    for (Gfq::Elem z = 0; z < qq; ++z) coords_[1 + z] = {0, 1, z};
    for (Gfq::Elem y = 0; y < qq; ++y)
      for (Gfq::Elem z = 0; z < qq; ++z) coords_[1 + qq + y * qq + z] = {1, y, z};
    incident_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) incident_[i] = orthogonal_indices(coords_[i]);
  }

  const Gfq& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.order(); }
  /// Number of points (equivalently, of lines).
  std::size_t size() const noexcept { return n_; }

  const Coords& coords(std::size_t i) const { return coords_.at(i); }
  ProjPoint point(std::size_t i) const { return {coords(i)}; }
  ProjLine line(std::size_t i) const { return {coords(i)}; }

  Coords normalize(Coords v) const {
    std::size_t lead = 0;
    while (lead < 3 && v[lead] == 0) ++lead;
    if (lead == 3) throw InputError("zero vector is not a projective point");
    const auto s = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(x, s);
    return v;
  }

  /// Index of the point (or line) spanned by v.
  std::size_t index_of(const Coords& v) const {
    const Coords c = normalize(v);
    for (auto x : c)
      if (x >= q()) throw InputError("coordinate outside GF(q)");
    const std::size_t qq = q();
    if (c[0] == 1) return 1 + qq + c[1] * qq + c[2];
    if (c[1] == 1) return 1 + c[2];
    return 0;
  }
  std::size_t index_of(const ProjPoint& p) const { return index_of(p.c); }
  std::size_t index_of(const ProjLine& l) const { return index_of(l.normal); }

  Gfq::Elem dot(const Coords& a, const Coords& b) const {
    return field_.add(field_.add(field_.mul(a[0], b[0]), field_.mul(a[1], b[1])),
                      field_.mul(a[2], b[2]));
  }

  bool incident(std::size_t point, std::size_t line) const {
    return dot(coords(point), coords(line)) == 0;
  }

  /// The q+1 lines through a point, ascending. By the shared indexing this
  /// is also the list of points on the line with the same index.
  const std::vector<std::uint32_t>& lines_through(std::size_t point) const { return incident_.at(point); }
  const std::vector<std::uint32_t>& points_on(std::size_t line) const { return incident_.at(line); }

  std::size_t line_through(std::size_t p1, std::size_t p2) const {
    if (p1 == p2) throw InputError("line_through needs two distinct points");
    return index_of(cross(coords(p1), coords(p2)));
  }
  std::size_t meet(std::size_t l1, std::size_t l2) const {
    if (l1 == l2) throw InputError("meet needs two distinct lines");
    return index_of(cross(coords(l1), coords(l2)));
  }
  ProjLine line_through(const ProjPoint& a, const ProjPoint& b) const {
    return line(line_through(index_of(a), index_of(b)));
  }
  ProjPoint meet(const ProjLine& a, const ProjLine& b) const {
    return point(meet(index_of(a), index_of(b)));
  }

  /// The orthogonal line of a point; the identity on indices.
  std::size_t phi(std::size_t point) const {
    if (point >= n_) throw InputError("point index out of range");
    return point;
  }
  ProjLine phi(const ProjPoint& p) const { return line(index_of(p)); }

  bool self_orthogonal(std::size_t point) const { return incident(point, point); }

  Coords cross(const Coords& a, const Coords& b) const {
    const auto& f = field_;
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
  }

 private:
  // Normalized vectors orthogonal to a: the q+1 points of a 2-dimensional
  // subspace, spanned by the two basis vectors read off the equation a·x=0.
  std::vector<std::uint32_t> orthogonal_indices(const Coords& a) const {
    Coords u, v;
    if (a[0] == 1) {
      u = {field_.neg(a[1]), 1, 0};
      v = {field_.neg(a[2]), 0, 1};
    } else if (a[1] == 1) {
      u = {1, 0, 0};
      v = {0, field_.neg(a[2]), 1};
    } else {
      u = {1, 0, 0};
      v = {0, 1, 0};
    }
    std::vector<std::uint32_t> out;
    out.reserve(q() + 1);
    out.push_back(static_cast<std::uint32_t>(index_of(v)));
    for (Gfq::Elem t = 0; t < q(); ++t) {
      Coords w{field_.add(u[0], field_.mul(t, v[0])), field_.add(u[1], field_.mul(t, v[1])),
               field_.add(u[2], field_.mul(t, v[2]))};
      out.push_back(static_cast<std::uint32_t>(index_of(w)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Gfq field_;
  std::size_t n_ = 0;
  std::vector<Coords> coords_;
  std::vector<std::vector<std::uint32_t>> incident_;
};

/// Label of point i in the incidence graph is i; line j has label N + j.
inline Vertex point_vertex(const ProjectivePlane& pl, std::size_t i) {
  (void)pl;
  return static_cast<Vertex>(i);
}
inline Vertex line_vertex(const ProjectivePlane& pl, std::size_t j) {
  return static_cast<Vertex>(pl.size() + j);
}

/// Bipartite point-line incidence graph; points on the left.
inline Graph build_incidence_graph(const ProjectivePlane& pl) {
  const std::size_t n = pl.size();
  Graph g(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : pl.lines_through(i)) g.add_edge_in_place(point_vertex(pl, i), line_vertex(pl, j));
  std::vector<Vertex> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = static_cast<Vertex>(i);
  g.set_bipartition(left);
  g.set_tag({Provenance::Projective, pl.q()});
  return g;
}
inline Graph build_incidence_graph(std::uint64_t q) { return build_incidence_graph(ProjectivePlane(q)); }

/// Points, with a joined to b when a != b and a·b = 0.
inline Graph build_reduced_graph(const ProjectivePlane& pl) {
  const std::size_t n = pl.size();
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : pl.lines_through(pl.phi(a)))
      if (b > a) g.add_edge_in_place(static_cast<Vertex>(a), b);
  g.set_tag({Provenance::Reduced, pl.q()});
  return g;
}
inline Graph build_reduced_graph(std::uint64_t q) { return build_reduced_graph(ProjectivePlane(q)); }

/// Maps an incidence-graph vertex to its dual (point i <-> line i). This is
/// a graph automorphism exchanging the two sides.
inline Vertex dual_vertex(const ProjectivePlane& pl, Vertex v) {
  const auto n = static_cast<Vertex>(pl.size());
  if (v >= 2 * n) throw InputError("vertex " + std::to_string(v) + " is not in the incidence graph");
  return v < n ? v + n : v - n;
}

/// `index,x,y,z` rows for every vertex; lines are listed by normal vector.
inline std::string coordinate_csv(const ProjectivePlane& pl, bool include_lines) {
  std::ostringstream out;
  out << "index,x,y,z\n";
  const std::size_t n = pl.size();
  const std::size_t total = include_lines ? 2 * n : n;
  for (std::size_t v = 0; v < total; ++v) {
    const auto& c = pl.coords(v % n);
    out << v << ',' << c[0] << ',' << c[1] << ',' << c[2] << '\n';
  }
  return out.str();
}

}  // namespace vmu
