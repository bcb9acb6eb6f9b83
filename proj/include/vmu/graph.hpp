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
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vmu/error.hpp"

namespace vmu {

/// External vertex label. Labels survive deletions unchanged.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxVertices = 4096;

namespace bits {

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline bool test(std::span<const std::uint64_t> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1U;
}
inline void set(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline void clear(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}
inline void flip(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] ^= std::uint64_t{1} << (i & 63);
}
inline std::size_t count(std::span<const std::uint64_t> row) {
  std::size_t c = 0;
  for (auto w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

template <typename F>
void for_each(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word) {
      const int b = std::countr_zero(word);
      f(w * 64 + static_cast<std::size_t>(b));
      word &= word - 1;
    }
  }
}

}  // namespace bits

/// Where a host graph came from; used by the dispatching synthesizer.
enum class Provenance { None, Projective, Reduced, RandomBipartite };

struct GraphTag {
  Provenance kind = Provenance::None;
  std::uint64_t parameter = 0;  // q for geometric hosts, seed for random ones

  friend bool operator==(const GraphTag&, const GraphTag&) = default;
};

enum class Side { Left, Right };

/// Undirected simple graph over a fixed universe of labelled slots.
///
/// Each slot has a stable external label; deleting a vertex clears its slot
/// without renumbering the others. Adjacency is stored as one bit-row per
/// slot. An optional bipartition marks each live vertex as left or right.
///
/// The free functions below (local_complement, delete_vertex, pivot, ...)
/// never modify their argument. The `*_in_place` members are the primitive
/// edits used to build graphs and to replay long step sequences on a single
/// private copy.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on labels 0..n-1.
  explicit Graph(std::size_t n) {
    std::vector<Vertex> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Vertex>(i);
    init(std::move(labels));
  }

  /// Edgeless graph on the given labels (any order, must be distinct).
  explicit Graph(std::vector<Vertex> labels) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw InputError("duplicate vertex label");
    init(std::move(labels));
  }

  static Graph from_edges(std::vector<Vertex> labels, std::span<const Edge> edges) {
    Graph g(std::move(labels));
    for (auto [u, v] : edges) g.add_edge_in_place(u, v);
    return g;
  }

  std::size_t capacity() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return live_; }
  bool empty() const noexcept { return live_ == 0; }

  bool has_vertex(Vertex v) const noexcept {
    auto i = find_slot(v);
    return i && bits::test(alive_, *i);
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(live_);
    bits::for_each(alive_, [&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  bool adjacent(Vertex u, Vertex v) const {
    return bits::test(row(slot(u)), slot(v));
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    bits::for_each(row(slot(v)), [&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  std::size_t degree(Vertex v) const { return bits::count(row(slot(v))); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    bits::for_each(alive_, [&](std::size_t i) { twice += bits::count(row(i)); });
    return twice / 2;
  }

  /// All edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    bits::for_each(alive_, [&](std::size_t i) {
      bits::for_each(row(i), [&](std::size_t j) {
        if (j > i) out.emplace_back(labels_[i], labels_[j]);
      });
    });
    return out;
  }

  bool has_bipartition() const noexcept { return !left_.empty(); }

  std::optional<Side> side(Vertex v) const {
    const std::size_t i = slot(v);
    if (!has_bipartition()) return std::nullopt;
    return bits::test(left_, i) ? Side::Left : Side::Right;
  }

  std::vector<Vertex> left() const { return side_members(true); }
  std::vector<Vertex> right() const { return side_members(false); }

  const GraphTag& tag() const noexcept { return tag_; }
  void set_tag(GraphTag t) noexcept { tag_ = t; }

  /// Same vertex labels and same edges. Bipartition and tag are metadata
  /// and do not take part in the comparison.
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.live_ != b.live_) return false;
    if (a.labels_ == b.labels_) {
      if (a.alive_ != b.alive_) return false;
      bool same = true;
      bits::for_each(a.alive_, [&](std::size_t i) {
        if (same && !std::equal(a.row(i).begin(), a.row(i).end(), b.row(i).begin()))
          same = false;
      });
      return same;
    }
    if (a.vertices() != b.vertices()) return false;
    for (Vertex v : a.vertices())
      if (a.neighbors(v) != b.neighbors(v)) return false;
    return true;
  }

  bool same_bipartition(const Graph& other) const {
    return left() == other.left() && right() == other.right() &&
           has_bipartition() == other.has_bipartition();
  }

  // ----- primitive edits -------------------------------------------------

  void add_edge_in_place(Vertex u, Vertex v) {
    auto [i, j] = edge_slots(u, v);
    bits::set(row(i), j);
    bits::set(row(j), i);
  }
  void remove_edge_in_place(Vertex u, Vertex v) {
    auto [i, j] = edge_slots(u, v);
    bits::clear(row(i), j);
    bits::clear(row(j), i);
  }
  void toggle_edge_in_place(Vertex u, Vertex v) {
    auto [i, j] = edge_slots(u, v);
    bits::flip(row(i), j);
    bits::flip(row(j), i);
  }

  /// Declares the bipartition; every edge must join the two sides.
  void set_bipartition(std::span<const Vertex> left_side) {
    std::vector<std::uint64_t> mask(words_, 0);
    for (Vertex v : left_side) bits::set(mask, slot(v));
    bool ok = true;
    bits::for_each(alive_, [&](std::size_t i) {
      const bool li = bits::test(mask, i);
      bits::for_each(row(i), [&](std::size_t j) {
        if (bits::test(mask, j) == li) ok = false;
      });
    });
    if (!ok) throw InputError("bipartition has an edge inside one side");
    left_ = std::move(mask);
  }
  void clear_bipartition() noexcept { left_.clear(); }

  /// Toggles every pair inside N(v).
  void local_complement_in_place(Vertex v) {
    const std::size_t i = slot(v);
    std::vector<std::uint64_t> nb(row(i).begin(), row(i).end());
    std::size_t deg = 0;
    bits::for_each(nb, [&](std::size_t u) {
      auto r = row(u);
      for (std::size_t w = 0; w < words_; ++w) r[w] ^= nb[w];
      bits::flip(r, u);
      ++deg;
    });
    // Two same-side neighbours are now adjacent.
    if (deg >= 2) left_.clear();
  }

  void delete_vertex_in_place(Vertex v) {
    const std::size_t i = slot(v);
    bits::for_each(row(i), [&](std::size_t u) { bits::clear(row(u), i); });
    auto r = row(i);
    std::fill(r.begin(), r.end(), 0);
    bits::clear(alive_, i);
    if (has_bipartition()) bits::clear(left_, i);
    --live_;
  }

  /// Pivot on the edge ab by the direct toggle rule: with A = N(a)\N[b],
  /// B = N(b)\N[a] and C = N(a)∩N(b), toggle all pairs between the three
  /// classes, then exchange the neighbourhoods of a and b. For bipartite
  /// graphs C is empty and a, b swap sides.
  void pivot_in_place(Vertex a, Vertex b) {
    const std::size_t ia = slot(a), ib = slot(b);
    if (ia == ib || !bits::test(row(ia), ib))
      throw PreconditionError("pivot on non-adjacent vertices " + std::to_string(a) +
                              ", " + std::to_string(b));
    std::vector<std::uint64_t> na(row(ia).begin(), row(ia).end());
    std::vector<std::uint64_t> nb(row(ib).begin(), row(ib).end());
    std::vector<std::uint64_t> ca(words_), cb(words_), cc(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      cc[w] = na[w] & nb[w];
      ca[w] = na[w] & ~nb[w];
      cb[w] = nb[w] & ~na[w];
    }
    bits::clear(ca, ib);
    bits::clear(cb, ia);
    // Row of x gains the XOR of the two classes x is not in.
    auto toggle_class = [&](const std::vector<std::uint64_t>& cls,
                            const std::vector<std::uint64_t>& o1,
                            const std::vector<std::uint64_t>& o2) {
      bits::for_each(cls, [&](std::size_t x) {
        auto r = row(x);
        for (std::size_t w = 0; w < words_; ++w) r[w] ^= o1[w] | o2[w];
      });
    };
    toggle_class(ca, cb, cc);
    toggle_class(cb, ca, cc);
    toggle_class(cc, ca, cb);
    // Exchange a and b: N'(a) = N(b) Δ {a,b}, N'(b) = N(a) Δ {a,b}.
    auto swap_columns = [&](std::size_t x) {
      auto r = row(x);
      const bool ha = bits::test(r, ia), hb = bits::test(r, ib);
      if (ha != hb) {
        bits::flip(r, ia);
        bits::flip(r, ib);
      }
    };
    bits::for_each(alive_, [&](std::size_t x) {
      if (x != ia && x != ib) swap_columns(x);
    });
    {
      auto ra = row(ia), rb = row(ib);
      std::swap_ranges(ra.begin(), ra.end(), rb.begin());
      // After the swap row(a) holds N(b) including a and lacking b.
      bits::clear(ra, ia);
      bits::set(ra, ib);
      bits::clear(rb, ib);
      bits::set(rb, ia);
    }
    if (has_bipartition()) {
      if (!cc.empty() && bits::count(cc) != 0) {
        left_.clear();
      } else {
        bits::flip(left_, ia);
        bits::flip(left_, ib);
      }
    }
  }

  /// Slot index of a live vertex; throws InputError for unknown labels.
  std::size_t slot(Vertex v) const {
    auto i = find_slot(v);
    if (!i || !bits::test(alive_, *i)) throw InputError("unknown vertex " + std::to_string(v));
    return *i;
  }
  Vertex label_at(std::size_t slot_index) const { return labels_[slot_index]; }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {adj_.data() + i * words_, words_};
  }
  std::span<const std::uint64_t> alive_mask() const { return alive_; }
  std::size_t words() const noexcept { return words_; }

 private:
  void init(std::vector<Vertex> labels) {
    if (labels.size() > kMaxVertices)
      throw ConstructionError("graph with " + std::to_string(labels.size()) +
                              " vertices exceeds the supported maximum of " +
                              std::to_string(kMaxVertices));
    labels_ = std::move(labels);
    identity_ = true;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] != i) identity_ = false;
    words_ = bits::words_for(labels_.size());
    alive_.assign(words_, 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) bits::set(alive_, i);
    adj_.assign(words_ * labels_.size(), 0);
    live_ = labels_.size();
  }

  std::optional<std::size_t> find_slot(Vertex v) const noexcept {
    if (identity_) {
      if (v < labels_.size()) return v;
      return std::nullopt;
    }
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::span<std::uint64_t> row(std::size_t i) { return {adj_.data() + i * words_, words_}; }

  std::pair<std::size_t, std::size_t> edge_slots(Vertex u, Vertex v) const {
    const std::size_t i = slot(u), j = slot(v);
    if (i == j) throw InputError("loop at vertex " + std::to_string(u));
    if (has_bipartition() && bits::test(left_, i) == bits::test(left_, j))
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " inside one side of the bipartition");
    return {i, j};
  }

  std::vector<Vertex> side_members(bool want_left) const {
    std::vector<Vertex> out;
    if (!has_bipartition()) return out;
    bits::for_each(alive_, [&](std::size_t i) {
      if (bits::test(left_, i) == want_left) out.push_back(labels_[i]);
    });
    return out;
  }

  std::vector<Vertex> labels_;
  bool identity_ = true;
  std::size_t words_ = 0;
  std::size_t live_ = 0;
  std::vector<std::uint64_t> alive_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> left_;  // empty when no bipartition is tracked
  GraphTag tag_;
};

// ----- transform steps -----------------------------------------------------

enum class StepKind : std::uint8_t { LocalComplement, DeleteVertex, Pivot };

struct TransformStep {
  StepKind kind = StepKind::LocalComplement;
  Vertex a = 0;
  Vertex b = 0;  // second operand of a pivot

  static TransformStep lc(Vertex v) { return {StepKind::LocalComplement, v, 0}; }
  static TransformStep del(Vertex v) { return {StepKind::DeleteVertex, v, 0}; }
  static TransformStep pivot(Vertex a, Vertex b) { return {StepKind::Pivot, a, b}; }

  /// `LC v`, `DEL v` or `PIVOT a b`.
  std::string to_string() const {
    switch (kind) {
      case StepKind::LocalComplement: return "LC " + std::to_string(a);
      case StepKind::DeleteVertex: return "DEL " + std::to_string(a);
      case StepKind::Pivot: return "PIVOT " + std::to_string(a) + " " + std::to_string(b);
    }
    return {};
  }

  friend bool operator==(const TransformStep& x, const TransformStep& y) {
    return x.kind == y.kind && x.a == y.a && (x.kind != StepKind::Pivot || x.b == y.b);
  }
};

using StepSequence = std::vector<TransformStep>;

inline void apply_in_place(Graph& g, const TransformStep& s) {
  switch (s.kind) {
    case StepKind::LocalComplement: g.local_complement_in_place(s.a); break;
    case StepKind::DeleteVertex: g.delete_vertex_in_place(s.a); break;
    case StepKind::Pivot: g.pivot_in_place(s.a, s.b); break;
  }
}

/// G★v: the subgraph induced by N(v) is complemented.
inline Graph local_complement(Graph g, Vertex v) {
  g.local_complement_in_place(v);
  return g;
}

inline Graph delete_vertex(Graph g, Vertex v) {
  g.delete_vertex_in_place(v);
  return g;
}

/// G∧ab = G★a★b★a. Requires ab ∈ E(G).
inline Graph pivot(Graph g, Vertex a, Vertex b) {
  g.pivot_in_place(a, b);
  return g;
}

/// Left-to-right fold of `steps` over `g`. A failing step is reported as a
/// SequenceError carrying its index.
inline Graph apply_sequence(Graph g, std::span<const TransformStep> steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      apply_in_place(g, steps[i]);
    } catch (const Error& e) {
      throw SequenceError(i, e.what());
    }
  }
  return g;
}

/// Graph on `keep` with the edges it inherits from `g`. The bipartition is
/// restricted; the provenance tag is dropped.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> labels(keep.begin(), keep.end());
  for (Vertex v : labels) (void)g.slot(v);
  Graph h(labels);
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = x + 1; y < labels.size(); ++y)
      if (g.adjacent(labels[x], labels[y])) h.add_edge_in_place(labels[x], labels[y]);
  if (g.has_bipartition()) {
    std::vector<Vertex> l;
    for (Vertex v : labels)
      if (*g.side(v) == Side::Left) l.push_back(v);
    h.set_bipartition(l);
  }
  return h;
}

/// Edges with both endpoints in `among`, as a sorted list of label pairs.
inline std::vector<Edge> edges_among(const Graph& g, std::span<const Vertex> among) {
  std::vector<Vertex> s(among.begin(), among.end());
  std::sort(s.begin(), s.end());
  std::vector<Edge> out;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y)
      if (g.adjacent(s[x], s[y])) out.emplace_back(s[x], s[y]);
  return out;
}

}  // namespace vmu
