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


// Brute-force ground truth for graphs on at most eight vertices, and
// exhaustive universality / pairability sweeps.
//
// A graph on <= 8 positions packs into one 64-bit word: byte i is the
// neighbour mask of position i, and a deleted vertex is marked by its own
// bit in its byte (graphs have no loops, so the bit is free).
//
// Two search strategies are offered. The interleaved one explores LC and
// deletion moves together, deletions first. The deferred one explores only
// the LC orbit and reads targets off induced subgraphs: deleting w commutes
// with complementing any v != w, so every vertex-minor sequence can be
// reordered to delete last. Both must agree.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vmu/parallel.hpp"
#include "vmu/random.hpp"
#include "vmu/synth.hpp"

namespace vmu {

inline constexpr std::size_t kMaxOracleVertices = 8;

namespace detail {

using Packed = std::uint64_t;

inline std::uint8_t byte_of(Packed s, std::size_t i) { return static_cast<std::uint8_t>(s >> (8 * i)); }

inline Packed with_byte(Packed s, std::size_t i, std::uint8_t b) {
  return (s & ~(Packed{0xff} << (8 * i))) | (Packed{b} << (8 * i));
}

inline bool deleted(Packed s, std::size_t i) { return (byte_of(s, i) >> i) & 1U; }

inline Packed pack(const Graph& g, const std::vector<Vertex>& labels) {
  Packed s = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    std::uint8_t row = 0;
    for (std::size_t b = 0; b < labels.size(); ++b)
      if (a != b && g.adjacent(labels[a], labels[b])) row |= static_cast<std::uint8_t>(1U << b);
    s = with_byte(s, a, row);
  }
  return s;
}

inline Packed lc_packed(Packed s, std::size_t v) {
  const std::uint8_t nb = byte_of(s, v);
  for (std::size_t u = 0; u < 8; ++u)
    if ((nb >> u) & 1U)
      s = with_byte(s, u, static_cast<std::uint8_t>(byte_of(s, u) ^ (nb & ~(1U << u))));
  return s;
}

inline Packed delete_packed(Packed s, std::size_t v, std::size_t n) {
  for (std::size_t u = 0; u < n; ++u) s = with_byte(s, u, static_cast<std::uint8_t>(byte_of(s, u) & ~(1U << v)));
  return with_byte(s, v, static_cast<std::uint8_t>(1U << v));
}

// Rows restricted to the positions in `mask`, compared against `want`
// (which holds restricted rows for the same positions).
inline bool induced_equals(Packed s, std::uint8_t mask, Packed want) {
  for (std::size_t i = 0; i < 8; ++i)
    if ((mask >> i) & 1U && (byte_of(s, i) & mask) != byte_of(want, i)) return false;
  return true;
}

// Pair-indexed bitmask of the graph induced on the (ascending) positions.
inline std::uint64_t induced_code(Packed s, const std::vector<std::size_t>& pos) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b, ++bit)
      if ((byte_of(s, pos[a]) >> pos[b]) & 1U) code |= std::uint64_t{1} << bit;
  return code;
}

inline void require_oracle_size(const Graph& g) {
  if (g.size() > kMaxOracleVertices)
    throw InputError("brute-force oracle is limited to " + std::to_string(kMaxOracleVertices) + " vertices, got " +
                     std::to_string(g.size()));
}

}  // namespace detail

struct OracleOptions {
  bool interleaved = false;              // explore deletions as moves
  std::optional<std::uint64_t> shuffle;  // permute move order per expansion
};

struct VertexMinorResult {
  bool found = false;
  StepSequence witness;
  std::size_t explored = 0;
};

/// Exact decision whether h (on a subset of V(g), same labels) is a vertex
/// minor of g, with a replayable witness when it is.
inline VertexMinorResult is_vertex_minor_bruteforce(const Graph& g, const Graph& h, OracleOptions opt = {}) {
  using namespace detail;
  require_oracle_size(g);
  const auto labels = g.vertices();
  const std::size_t n = labels.size();
  std::uint8_t kmask = 0;
  for (Vertex v : h.vertices()) {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || *it != v) throw InputError("vertex " + std::to_string(v) + " of h is not in g");
    kmask |= static_cast<std::uint8_t>(1U << (it - labels.begin()));
  }
  Packed want = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!((kmask >> a) & 1U)) continue;
    std::uint8_t row = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (kmask >> b) & 1U && h.adjacent(labels[a], labels[b])) row |= static_cast<std::uint8_t>(1U << b);
    want = with_byte(want, a, row);
  }
  auto goal = [&](Packed s) {
    if (!induced_equals(s, kmask, want)) return false;
    if (!opt.interleaved) return true;
    for (std::size_t i = 0; i < n; ++i)
      if (!((kmask >> i) & 1U) && !deleted(s, i)) return false;
    return true;
  };

  struct Parent {
    Packed from;
    TransformStep step;
  };
  const Packed start = pack(g, labels);
  std::unordered_map<Packed, Parent> parent;
  parent.emplace(start, Parent{start, {}});
  std::deque<Packed> queue{start};
  std::optional<Rng> rng;
  if (opt.shuffle) rng.emplace(*opt.shuffle);
  std::vector<TransformStep> moves;
  VertexMinorResult res;
  std::optional<Packed> hit;
  while (!queue.empty()) {
    const Packed s = queue.front();
    queue.pop_front();
    ++res.explored;
    if (goal(s)) {
      hit = s;
      break;
    }
    moves.clear();
    if (opt.interleaved)
      for (std::size_t i = 0; i < n; ++i)
        if (!((kmask >> i) & 1U) && !deleted(s, i)) moves.push_back(TransformStep::del(static_cast<Vertex>(i)));
    for (std::size_t i = 0; i < n; ++i)
      if (!deleted(s, i) && std::popcount(static_cast<unsigned>(byte_of(s, i))) >= 2)
        moves.push_back(TransformStep::lc(static_cast<Vertex>(i)));
    if (rng) std::shuffle(moves.begin(), moves.end(), *rng);
    for (const auto& m : moves) {
      const Packed t = m.kind == StepKind::DeleteVertex ? delete_packed(s, m.a, n) : lc_packed(s, m.a);
      if (parent.emplace(t, Parent{s, m}).second) queue.push_back(t);
    }
  }
  if (!hit) return res;
  res.found = true;
  for (Packed s = *hit; s != start; s = parent.at(s).from) {
    TransformStep st = parent.at(s).step;
    st.a = labels[st.a];
    res.witness.push_back(st);
  }
  std::reverse(res.witness.begin(), res.witness.end());
  if (!opt.interleaved)
    for (std::size_t i = 0; i < n; ++i)
      if (!((kmask >> i) & 1U)) res.witness.push_back(TransformStep::del(labels[i]));
  return res;
}

/// Every graph in the LC orbit of g (packed over g's sorted labels).
inline std::vector<std::uint64_t> lc_orbit(const Graph& g) {
  using namespace detail;
  require_oracle_size(g);
  const auto labels = g.vertices();
  const Packed start = pack(g, labels);
  std::unordered_set<Packed> seen{start};
  std::vector<Packed> order{start};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const Packed t = lc_packed(order[head], v);
      if (seen.insert(t).second) order.push_back(t);
    }
  return order;
}

// ---------------------------------------------------------------------------
// Exhaustive sweeps

struct CheckOptions {
  bool bruteforce = false;  // orbit oracle instead of a synthesizer
  Method method = Method::Auto;
  GeometricOptions geometric{};
  bool require_checks = false;  // a certificate must also pass its avoidance checks
  unsigned threads = 1;
  std::optional<std::vector<Vertex>> pool;  // candidate vertices for K (default: all)
  std::size_t samples = 0;                  // 0: every subset; otherwise this many seeded draws
  std::uint64_t seed = 0;
};

struct Counterexample {
  std::vector<Vertex> k;
  std::vector<Edge> target;
  std::string reason;
};

struct CheckResult {
  bool pass = true;
  std::size_t subsets = 0;
  std::size_t targets = 0;
  std::optional<Counterexample> counterexample;  // first in enumeration order
};

namespace detail {

inline std::vector<std::vector<Vertex>> subsets_for(const std::vector<Vertex>& pool, std::size_t k,
                                                    const CheckOptions& opt) {
  std::vector<std::vector<Vertex>> out;
  if (k > pool.size()) return out;
  if (opt.samples > 0) {
    for (std::size_t i = 0; i < opt.samples; ++i) {
      Rng rng = make_rng(opt.seed, i);
      std::vector<Vertex> s;
      for (auto p : sample_subset(rng, pool.size(), k)) s.push_back(pool[p]);
      out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<Vertex> s;
    for (auto i : idx) s.push_back(pool[i]);
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::vector<std::vector<Edge>> all_graphs_on(const std::vector<Vertex>& k) {
  const auto pairs = pairs_of(k);
  std::vector<std::vector<Edge>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((mask >> p) & 1U) e.push_back(pairs[p]);
    out.push_back(std::move(e));
  }
  return out;
}

inline void pairings_rec(std::vector<Vertex> rest, std::vector<Edge>& cur, std::vector<std::vector<Edge>>& out) {
  if (rest.empty()) {
    auto e = cur;
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
    return;
  }
  const Vertex a = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    std::vector<Vertex> next;
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (t != j) next.push_back(rest[t]);
    cur.emplace_back(a, rest[j]);
    pairings_rec(std::move(next), cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<Edge>> all_pairings_on(const std::vector<Vertex>& k) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  pairings_rec(k, cur, out);
  return out;
}

template <typename TargetsFn>
CheckResult sweep(const Graph& g, std::size_t subset_size, const CheckOptions& opt, TargetsFn targets_of) {
  const auto pool = opt.pool ? *opt.pool : g.vertices();
  for (Vertex v : pool)
    if (!g.has_vertex(v)) throw InputError("pool vertex " + std::to_string(v) + " is not in the graph");
  const auto subsets = subsets_for(pool, subset_size, opt);
  CheckResult res;
  res.subsets = subsets.size();
  std::vector<std::optional<Counterexample>> bad(subsets.size());
  std::vector<std::size_t> counted(subsets.size(), 0);

  if (opt.bruteforce) {
    require_oracle_size(g);
    const auto labels = g.vertices();
    const auto orbit = lc_orbit(g);
    parallel_for(subsets.size(), opt.threads, [&](std::size_t s) {
      std::vector<std::size_t> pos;
      for (Vertex v : subsets[s])
        pos.push_back(static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
      std::unordered_set<std::uint64_t> reach;
      for (auto st : orbit) reach.insert(induced_code(st, pos));
      const auto pairs = pairs_of(subsets[s]);
      for (const auto& t : targets_of(subsets[s])) {
        ++counted[s];
        std::uint64_t code = 0;
        for (const auto& e : t)
          code |= std::uint64_t{1} << static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), e) - pairs.begin());
        if (!reach.count(code)) {
          bad[s] = Counterexample{subsets[s], t, "not in the local-complementation orbit"};
          return;
        }
      }
    });
  } else {
    const Synthesizer syn(g, opt.geometric);
    parallel_for(subsets.size(), opt.threads, [&](std::size_t s) {
      for (const auto& t : targets_of(subsets[s])) {
        ++counted[s];
        const TargetGraph target(subsets[s], t);
        std::string reason;
        try {
          auto out = syn(target, opt.method);
          if (!out)
            reason = "synthesis failed: " + out.failure.reason;
          else if (!replay_matches(g, *out))
            reason = "certificate does not replay to the target";
          else if (opt.require_checks && !out->all_checks_hold())
            reason = "an avoidance check does not hold";
        } catch (const InputError& e) {
          reason = e.what();
        }
        if (!reason.empty()) {
          bad[s] = Counterexample{subsets[s], t, reason};
          return;
        }
      }
    });
  }
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    res.targets += counted[s];
    if (bad[s] && !res.counterexample) {
      res.pass = false;
      res.counterexample = bad[s];
    }
  }
  return res;
}

}  // namespace detail

/// Every graph on every k-subset (of the pool) must be realized.
inline CheckResult check_vmu_exhaustive(const Graph& g, std::size_t k, const CheckOptions& opt = {}) {
  if (k < 1) throw InputError("k must be at least 1");
  return detail::sweep(g, k, opt, [](const std::vector<Vertex>& s) { return detail::all_graphs_on(s); });
}

/// Every perfect pairing on every 2k-subset (of the pool) must be realized.
inline CheckResult check_pairable_exhaustive(const Graph& g, std::size_t k, const CheckOptions& opt = {}) {
  if (k < 1) throw InputError("k must be at least 1");
  return detail::sweep(g, 2 * k, opt, [](const std::vector<Vertex>& s) { return detail::all_pairings_on(s); });
}

}  // namespace vmu
