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

// Explicit synthesizers on projective-plane hosts.
//
// Each construction picks auxiliary points and lines one at a time, always
// the smallest index that avoids a forbidden collection, and records how
// many candidates were rejected next to the counting bound that guarantees a
// survivor. Every construction ends by checking the neighbourhood and
// disjointness conditions its step sequence relies on.
//
// Vertex labels follow build_incidence_graph: point i is vertex i and line
// j is vertex N + j. The reduced construction uses point indices directly.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vmu/certificate.hpp"
#include "vmu/projective.hpp"

namespace vmu {

struct GeometricOptions {
  /// Refuse inputs outside the proven parameter range. When false the
  /// construction is attempted anyway and a dead end becomes a failure
  /// value instead of an exception.
  bool enforce_bound = true;
};

namespace detail {

using Idx = std::uint32_t;

struct Pick {
  std::optional<Idx> chosen;
  std::size_t rejected = 0;
};

template <typename Reject>
Pick pick_first(const std::vector<Idx>& candidates, Reject&& reject) {
  Pick out;
  for (Idx c : candidates) {
    if (reject(c)) ++out.rejected;
    else if (!out.chosen) out.chosen = c;
  }
  return out;
}

/// Does `line` contain a flagged point other than `except`?
inline bool hits_point(const ProjectivePlane& pl, Idx line, const std::vector<char>& flag, Idx except) {
  for (Idx p : pl.points_on(line))
    if (p != except && flag[p]) return true;
  return false;
}

/// Does `point` lie on a flagged line other than `except`?
inline bool hits_line(const ProjectivePlane& pl, Idx point, const std::vector<char>& flag, Idx except) {
  for (Idx l : pl.lines_through(point))
    if (l != except && flag[l]) return true;
  return false;
}

inline std::size_t clamp_cap(long long v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

struct Recorder {
  SynthesisCertificate& cert;
  const ProjectivePlane& pl;
  bool enforce;

  // Returns false when the pick failed in opportunistic mode.
  bool record(const std::string& label, const Pick& p, std::size_t avoid, long long cap) {
    cert.checks.push_back({label, p.rejected, avoid, clamp_cap(cap), std::size_t{pl.q()} + 1});
    if (p.chosen) return true;
    if (enforce)
      throw ConstructionError("no admissible candidate for " + label + " although the parameter bound holds");
    return false;
  }
};

inline void delete_outside(SynthesisCertificate& cert, std::size_t total, const std::vector<char>& keep) {
  for (std::size_t v = 0; v < total; ++v)
    if (!keep[v]) cert.steps.push_back(TransformStep::del(static_cast<Vertex>(v)));
}

/// Relabels a certificate through the point/line duality of the incidence
/// graph. Used to serve target sets that sit entirely on the line side.
inline SynthesisCertificate dualize(const ProjectivePlane& pl, SynthesisCertificate c) {
  auto d = [&](Vertex v) { return dual_vertex(pl, v); };
  for (auto& v : c.k) v = d(v);
  std::sort(c.k.begin(), c.k.end());
  for (auto& [u, v] : c.target_edges) {
    u = d(u);
    v = d(v);
    if (u > v) std::swap(u, v);
  }
  std::sort(c.target_edges.begin(), c.target_edges.end());
  for (auto& [role, list] : c.elements)
    for (auto& e : list) e.v = d(e.v);
  for (auto& [name, list] : c.intersections)
    for (auto& v : list) v = d(v);
  for (auto& s : c.steps) {
    s.a = d(s.a);
    if (s.kind == StepKind::Pivot) s.b = d(s.b);
  }
  return c;
}

enum class OneSide { Points, Lines };

inline OneSide side_of(const ProjectivePlane& pl, const std::vector<Vertex>& vs) {
  const auto n = static_cast<Vertex>(pl.size());
  bool points = true, lines = true;
  for (Vertex v : vs) {
    if (v >= 2 * n) throw InputError("vertex " + std::to_string(v) + " is not in the incidence graph");
    if (v < n) lines = false;
    else points = false;
  }
  if (points) return OneSide::Points;
  if (lines) return OneSide::Lines;
  throw InputError("vertices must all be points or all be lines");
}

}  // namespace detail

inline bool pairing_bound_holds(long long k, long long q) { return 5 * k - 4 <= q; }
inline bool oneside_bound_holds(long long k, long long q) { return 3 * k * k - k - 8 <= 2 * q; }
inline bool full_bound_holds(long long k, long long q) { return 7 * k * k - 16 <= 4 * q; }
inline bool reduced_bound_holds(long long k, long long q) { return 5 * k * k - k - 10 <= 2 * q; }

// ---------------------------------------------------------------------------
// Pairings: k disjoint pairs (u_i, v_i) of points.

inline CertificateOutcome synth_pairing_projective(const ProjectivePlane& pl, std::vector<Edge> pairs,
                                                   GeometricOptions opt = {}) {
  using namespace detail;
  const long long k = static_cast<long long>(pairs.size());
  if (k == 0) throw InputError("pairing needs at least one pair");
  std::vector<Vertex> ends;
  for (auto [u, v] : pairs) {
    ends.push_back(u);
    ends.push_back(v);
  }
  if (side_of(pl, ends) == OneSide::Lines) {
    for (auto& [u, v] : pairs) {
      u = dual_vertex(pl, u);
      v = dual_vertex(pl, v);
    }
    auto out = synth_pairing_projective(pl, pairs, opt);
    if (out) out.value = dualize(pl, std::move(*out.value));
    return out;
  }
  {
    auto sorted = ends;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("pairing endpoints must be 2k distinct vertices");
  }
  if (opt.enforce_bound && !pairing_bound_holds(k, pl.q()))
    throw PreconditionError("pairing construction needs 5k-4 <= q (k=" + std::to_string(k) +
                            ", q=" + std::to_string(pl.q()) + ")");

  const std::size_t n = pl.size();
  SynthesisCertificate cert;
  cert.kind = CertificateKind::Pairing;
  cert.q = pl.q();
  cert.k = ends;
  std::sort(cert.k.begin(), cert.k.end());
  for (auto [u, v] : pairs) cert.target_edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(cert.target_edges.begin(), cert.target_edges.end());
  Recorder rec{cert, pl, opt.enforce_bound};

  std::vector<char> in_k(n, 0), in_c(n, 0);
  for (Vertex v : ends) in_k[v] = 1;
  std::vector<Idx> alpha, beta, c;
  for (long long j = 0; j < k; ++j) {
    const Idx u = pairs[j].first, v = pairs[j].second;
    std::vector<char> avoid(n, 0);
    for (std::size_t x = 0; x < n; ++x) avoid[x] = in_k[x] || in_c[x];

    auto pa = pick_first(pl.lines_through(u), [&](Idx l) { return hits_point(pl, l, avoid, u); });
    if (!rec.record("alpha" + std::to_string(j + 1), pa, static_cast<std::size_t>(2 * k - 1 + j), 3 * k - 2))
      return CertificateOutcome::fail("no line for alpha" + std::to_string(j + 1), u);
    const Idx a = *pa.chosen;

    std::vector<Vertex> inter;
    for (std::size_t s = 0; s < alpha.size(); ++s) {
      inter.push_back(static_cast<Vertex>(pl.meet(a, alpha[s])));
      inter.push_back(static_cast<Vertex>(pl.meet(a, beta[s])));
    }
    for (Vertex p : inter) avoid[p] = 1;
    auto pb = pick_first(pl.lines_through(v), [&](Idx l) { return hits_point(pl, l, avoid, v); });
    if (!rec.record("beta" + std::to_string(j + 1), pb, static_cast<std::size_t>(2 * k - 1 + j) + inter.size(),
                    5 * k - 4))
      return CertificateOutcome::fail("no line for beta" + std::to_string(j + 1), v);
    const Idx b = *pb.chosen;
    const Idx cc = static_cast<Idx>(pl.meet(a, b));

    cert.intersections["I(" + std::to_string(j + 1) + ")"] = inter;
    alpha.push_back(a);
    beta.push_back(b);
    c.push_back(cc);
    in_c[cc] = 1;
    cert.add("alpha", static_cast<int>(j + 1), 0, line_vertex(pl, a));
    cert.add("beta", static_cast<int>(j + 1), 0, line_vertex(pl, b));
    cert.add("c", static_cast<int>(j + 1), 0, cc);
  }

  // Conditions the step sequence relies on.
  for (long long i = 0; i < k; ++i) {
    require(!in_k[c[i]], "c" + std::to_string(i + 1) + " in K");
    for (long long j2 = 0; j2 < k; ++j2) {
      if (j2 != i) require(alpha[i] != alpha[j2] && beta[i] != beta[j2] && c[i] != c[j2], "repeated element");
      require(alpha[i] != beta[j2], "alpha/beta collision");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!(in_k[x] || in_c[x])) continue;
      const bool on_a = pl.incident(x, alpha[i]), on_b = pl.incident(x, beta[i]);
      require(on_a == (x == pairs[i].first || x == c[i]), "neighbourhood of alpha" + std::to_string(i + 1));
      require(on_b == (x == pairs[i].second || x == c[i]), "neighbourhood of beta" + std::to_string(i + 1));
    }
  }

  for (long long i = 0; i < k; ++i) {
    cert.steps.push_back(TransformStep::lc(line_vertex(pl, alpha[i])));
    cert.steps.push_back(TransformStep::lc(line_vertex(pl, beta[i])));
  }
  for (long long i = 0; i < k; ++i) cert.steps.push_back(TransformStep::lc(c[i]));
  std::vector<char> keep(2 * n, 0);
  for (Vertex v : ends) keep[v] = 1;
  delete_outside(cert, 2 * n, keep);
  return CertificateOutcome::ok(std::move(cert));
}

// ---------------------------------------------------------------------------
// Any graph on k points (or, by duality, k lines).

inline CertificateOutcome synth_vmu_oneside(const ProjectivePlane& pl, const TargetGraph& target,
                                            GeometricOptions opt = {}) {
  using namespace detail;
  if (target.size() == 0) throw InputError("empty target");
  if (side_of(pl, target.vertices) == OneSide::Lines) {
    std::vector<Vertex> kk;
    std::vector<Edge> ee;
    for (Vertex v : target.vertices) kk.push_back(dual_vertex(pl, v));
    for (auto [u, v] : target.edges) ee.emplace_back(dual_vertex(pl, u), dual_vertex(pl, v));
    auto out = synth_vmu_oneside(pl, TargetGraph(kk, ee), opt);
    if (out) out.value = dualize(pl, std::move(*out.value));
    return out;
  }
  const long long k = static_cast<long long>(target.size());
  if (opt.enforce_bound && !oneside_bound_holds(k, pl.q()))
    throw PreconditionError("one-sided construction needs 3k^2-k-8 <= 2q (k=" + std::to_string(k) +
                            ", q=" + std::to_string(pl.q()) + ")");

  const std::size_t n = pl.size();
  SynthesisCertificate cert;
  cert.kind = CertificateKind::OneSideVMU;
  cert.q = pl.q();
  cert.k = target.vertices;
  cert.target_edges = target.edges;
  Recorder rec{cert, pl, opt.enforce_bound};
  const auto& u = target.vertices;

  std::vector<char> in_k(n, 0), in_c(n, 0);
  for (Vertex v : u) in_k[v] = 1;
  struct Gadget { int i, j; Idx alpha, beta, c; };
  std::vector<Gadget> gadgets;
  const long long half = k * (k - 1) / 2;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::string tag = idx(i + 1, j + 1);
      std::vector<char> avoid(n, 0);
      for (std::size_t x = 0; x < n; ++x) avoid[x] = in_k[x] || in_c[x];
      const std::size_t csize = gadgets.size();

      auto pa = pick_first(pl.lines_through(u[i]), [&](Idx l) { return hits_point(pl, l, avoid, u[i]); });
      if (!rec.record("alpha" + tag, pa, static_cast<std::size_t>(k - 1) + csize, (k - 1) + half - 1))
        return CertificateOutcome::fail("no line for alpha" + tag, u[i]);
      const Idx a = *pa.chosen;

      std::vector<Vertex> inter;
      for (const auto& g : gadgets) {
        inter.push_back(static_cast<Vertex>(pl.meet(a, g.alpha)));
        inter.push_back(static_cast<Vertex>(pl.meet(a, g.beta)));
      }
      for (Vertex p : inter) avoid[p] = 1;
      auto pb = pick_first(pl.lines_through(u[j]), [&](Idx l) { return hits_point(pl, l, avoid, u[j]); });
      if (!rec.record("beta" + tag, pb, static_cast<std::size_t>(k - 1) + csize + inter.size(),
                      (k - 1) + 3 * (half - 1)))
        return CertificateOutcome::fail("no line for beta" + tag, u[j]);
      const Idx b = *pb.chosen;
      const Idx cc = static_cast<Idx>(pl.meet(a, b));
      cert.intersections["I" + tag] = inter;
      gadgets.push_back({i + 1, j + 1, a, b, cc});
      in_c[cc] = 1;
      cert.add("alpha", i + 1, j + 1, line_vertex(pl, a));
      cert.add("beta", i + 1, j + 1, line_vertex(pl, b));
      cert.add("c", i + 1, j + 1, cc);
    }

  for (const auto& g : gadgets) {
    const std::string tag = idx(g.i, g.j);
    require(!in_k[g.c], "c" + tag + " in K");
    for (std::size_t x = 0; x < n; ++x) {
      if (!(in_k[x] || in_c[x])) continue;
      require(pl.incident(x, g.alpha) == (x == u[g.i - 1] || x == g.c), "neighbourhood of alpha" + tag);
      require(pl.incident(x, g.beta) == (x == u[g.j - 1] || x == g.c), "neighbourhood of beta" + tag);
    }
  }
  {
    std::vector<Idx> lines, cs;
    for (const auto& g : gadgets) {
      lines.push_back(g.alpha);
      lines.push_back(g.beta);
      cs.push_back(g.c);
    }
    std::sort(lines.begin(), lines.end());
    std::sort(cs.begin(), cs.end());
    require(std::adjacent_find(lines.begin(), lines.end()) == lines.end(), "S has repeated lines");
    require(std::adjacent_find(cs.begin(), cs.end()) == cs.end(), "C has repeated points");
  }

  for (const auto& g : gadgets) {
    if (!target.has_edge(u[g.i - 1], u[g.j - 1])) continue;
    cert.steps.push_back(TransformStep::lc(line_vertex(pl, g.alpha)));
    cert.steps.push_back(TransformStep::lc(line_vertex(pl, g.beta)));
    cert.steps.push_back(TransformStep::lc(g.c));
  }
  std::vector<char> keep(2 * n, 0);
  for (Vertex v : u) keep[v] = 1;
  delete_outside(cert, 2 * n, keep);
  return CertificateOutcome::ok(std::move(cert));
}

// ---------------------------------------------------------------------------
// Any graph on any k vertices of the incidence graph, K = K1 ⊔ K2 with K1
// points u_1..u_k1 and K2 lines λ_1..λ_k2.

inline CertificateOutcome synth_vmu_full(const ProjectivePlane& pl, const TargetGraph& target,
                                         GeometricOptions opt = {}) {
  using namespace detail;
  const std::size_t n = pl.size();
  if (target.size() == 0) throw InputError("empty target");
  for (Vertex v : target.vertices)
    if (v >= 2 * n) throw InputError("vertex " + std::to_string(v) + " is not in the incidence graph");
  const long long k = static_cast<long long>(target.size());
  if (opt.enforce_bound && !full_bound_holds(k, pl.q()))
    throw PreconditionError("full construction needs 7k^2-16 <= 4q (k=" + std::to_string(k) +
                            ", q=" + std::to_string(pl.q()) + ")");

  std::vector<Idx> u, lam;  // point indices of K1, line indices of K2
  for (Vertex v : target.vertices) {
    if (v < n) u.push_back(v);
    else lam.push_back(static_cast<Idx>(v - n));
  }
  const long long k1 = static_cast<long long>(u.size()), k2 = static_cast<long long>(lam.size());

  SynthesisCertificate cert;
  cert.kind = CertificateKind::FullVMU;
  cert.q = pl.q();
  cert.k = target.vertices;
  cert.target_edges = target.edges;
  Recorder rec{cert, pl, opt.enforce_bound};

  // Point flags: K1, C1, S2. Line flags: K2, S1, Ω, C2.
  std::vector<char> in_k1(n, 0), in_c1(n, 0), in_k2(n, 0), in_s1(n, 0), in_omega(n, 0), in_c2(n, 0), in_s2(n, 0);
  for (Idx p : u) in_k1[p] = 1;
  for (Idx l : lam) in_k2[l] = 1;

  // (1) C1 and S1.
  struct G1 { int i, j; Idx alpha, beta, c; };
  std::vector<G1> g1;
  const long long c1_total = k1 * (k1 - 1) / 2;
  for (int i = 0; i < k1; ++i)
    for (int j = i + 1; j < k1; ++j) {
      const std::string tag = idx(i + 1, j + 1);
      std::vector<char> avoid(n, 0);
      for (std::size_t x = 0; x < n; ++x) avoid[x] = in_k1[x] || in_c1[x];
      const std::size_t csize = g1.size();

      auto pa = pick_first(pl.lines_through(u[i]),
                           [&](Idx l) { return in_k2[l] || hits_point(pl, l, avoid, u[i]); });
      if (!rec.record("alpha" + tag, pa, lam.size() + static_cast<std::size_t>(k1 - 1) + csize,
                      k2 + (k1 - 1) + (c1_total - 1)))
        return CertificateOutcome::fail("no line for alpha" + tag, u[i]);
      const Idx a = *pa.chosen;

      std::vector<Vertex> i_s1, i_k2;
      for (const auto& g : g1) {
        i_s1.push_back(static_cast<Vertex>(pl.meet(a, g.alpha)));
        i_s1.push_back(static_cast<Vertex>(pl.meet(a, g.beta)));
      }
      for (Idx l : lam) i_k2.push_back(static_cast<Vertex>(pl.meet(a, l)));
      for (Vertex p : i_s1) avoid[p] = 1;
      for (Vertex p : i_k2) avoid[p] = 1;
      auto pb = pick_first(pl.lines_through(u[j]),
                           [&](Idx l) { return in_k2[l] || hits_point(pl, l, avoid, u[j]); });
      if (!rec.record("beta" + tag, pb,
                      lam.size() + static_cast<std::size_t>(k1 - 1) + csize + i_s1.size() + i_k2.size(),
                      k2 + (k1 - 1) + (c1_total - 1) + (k1 * (k1 - 1) - 2) + k2))
        return CertificateOutcome::fail("no line for beta" + tag, u[j]);
      const Idx b = *pb.chosen;
      const Idx c = static_cast<Idx>(pl.meet(a, b));
      cert.intersections["I_S1" + tag] = i_s1;
      cert.intersections["I_K2" + tag] = i_k2;
      g1.push_back({i + 1, j + 1, a, b, c});
      in_c1[c] = 1;
      in_s1[a] = in_s1[b] = 1;
      cert.add("alpha", i + 1, j + 1, line_vertex(pl, a));
      cert.add("beta", i + 1, j + 1, line_vertex(pl, b));
      cert.add("c", i + 1, j + 1, c);
    }

  // (2) Ω: k2 lines through each u_i meeting K1 ⊔ C1 only in u_i.
  std::vector<std::vector<Idx>> omega(static_cast<std::size_t>(k1));
  {
    std::vector<char> avoid(n, 0);
    for (std::size_t x = 0; x < n; ++x) avoid[x] = in_k1[x] || in_c1[x];
    for (int i = 0; i < k1; ++i)
      for (int j = 0; j < k2; ++j) {
        const std::string tag = idx(i + 1, j + 1);
        auto pw = pick_first(pl.lines_through(u[i]), [&](Idx l) {
          return in_k2[l] || in_s1[l] || in_omega[l] || hits_point(pl, l, avoid, u[i]);
        });
        if (!rec.record("omega" + tag, pw,
                        lam.size() + static_cast<std::size_t>(j) + static_cast<std::size_t>(k1 - 1) + g1.size(),
                        k2 + (k2 - 1) + (k1 - 1) + c1_total))
          return CertificateOutcome::fail("no line for omega" + tag, u[i]);
        omega[i].push_back(*pw.chosen);
        in_omega[*pw.chosen] = 1;
        cert.add("omega", i + 1, j + 1, line_vertex(pl, *pw.chosen));
      }
  }

  // (3) C2 and S2, indexed by (i, j) with 1 <= j <= k2 and j < i <= k1 + k2.
  struct G3 { int i, j; Idx r, a, b, gamma; };
  std::vector<G3> g3;
  auto r_of = [&](int i, int j) -> Idx {
    return i <= k2 ? lam[static_cast<std::size_t>(i - 1)]
                   : omega[static_cast<std::size_t>(i - k2 - 1)][static_cast<std::size_t>(j - 1)];
  };
  std::vector<char> kc_point(n, 0);
  for (std::size_t x = 0; x < n; ++x) kc_point[x] = in_k1[x] || in_c1[x];
  const long long s1_size = k1 * (k1 - 1), omega_size = k1 * k2;
  const long long c2_total = k2 * (k2 - 1) / 2 + k1 * k2;
  for (int i = 2; i <= k1 + k2; ++i)
    for (int j = 1; j <= std::min<long long>(i - 1, k2); ++j) {
      const std::string tag = idx(i, j);
      const Idx r = r_of(i, j), lj = lam[static_cast<std::size_t>(j - 1)];
      std::vector<char> forbid(n, 0);
      for (std::size_t x = 0; x < n; ++x) forbid[x] = in_k2[x] || in_s1[x] || in_omega[x] || in_c2[x];
      const std::size_t c2size = g3.size();
      std::size_t c1_on_r = 0, c1_on_l = 0;
      for (Idx p : pl.points_on(r)) c1_on_r += in_c1[p];
      for (Idx p : pl.points_on(lj)) c1_on_l += in_c1[p];

      auto pa = pick_first(pl.points_on(r), [&](Idx p) { return kc_point[p] || hits_line(pl, p, forbid, r); });
      if (!rec.record("a" + tag, pa,
                      u.size() + c1_on_r + (lam.size() + static_cast<std::size_t>(omega_size) - 1) +
                          static_cast<std::size_t>(s1_size) + c2size,
                      k1 + (k2 + k1 * k2 - 1) + s1_size + (c2_total - 1)))
        return CertificateOutcome::fail("no point for a" + tag, line_vertex(pl, r));
      const Idx a = *pa.chosen;

      std::vector<Vertex> i_s2, i_kc;
      for (const auto& g : g3) {
        i_s2.push_back(line_vertex(pl, pl.line_through(a, g.a)));
        i_s2.push_back(line_vertex(pl, pl.line_through(a, g.b)));
      }
      for (std::size_t x = 0; x < n; ++x)
        if (kc_point[x]) i_kc.push_back(line_vertex(pl, pl.line_through(a, x)));
      std::vector<char> forbid_b = forbid;
      for (Vertex l : i_s2) forbid_b[l - n] = 1;
      for (Vertex l : i_kc) forbid_b[l - n] = 1;
      auto pb = pick_first(pl.points_on(lj), [&](Idx p) { return kc_point[p] || hits_line(pl, p, forbid_b, lj); });
      if (!rec.record("b" + tag, pb,
                      u.size() + c1_on_l + (lam.size() - 1) + static_cast<std::size_t>(omega_size + s1_size) +
                          c2size + i_s2.size() + i_kc.size(),
                      k1 + (k2 - 1) + omega_size + s1_size + (c2_total - 1) + (2 * c2_total - 2) +
                          (k1 + c1_total)))
        return CertificateOutcome::fail("no point for b" + tag, line_vertex(pl, lj));
      const Idx b = *pb.chosen;
      const Idx gamma = static_cast<Idx>(pl.line_through(a, b));
      cert.intersections["I_S2" + tag] = i_s2;
      cert.intersections["I_K1C1" + tag] = i_kc;
      g3.push_back({i, j, r, a, b, gamma});
      in_c2[gamma] = 1;
      in_s2[a] = in_s2[b] = 1;
      cert.add("gamma", i, j, line_vertex(pl, gamma));
      cert.add("a", i, j, a);
      cert.add("b", i, j, b);
    }

  // Conditions of the step sequence below.
  auto count_flags = [&](const std::vector<char>& f) {
    return static_cast<std::size_t>(std::count(f.begin(), f.end(), 1));
  };
  require(count_flags(in_c1) == g1.size() && count_flags(in_s1) == 2 * g1.size(), "C1/S1 repeated elements");
  require(count_flags(in_omega) == static_cast<std::size_t>(k1 * k2), "Omega repeated lines");
  require(count_flags(in_c2) == g3.size() && count_flags(in_s2) == 2 * g3.size(), "C2/S2 repeated elements");
  for (std::size_t x = 0; x < n; ++x) {
    require(!(in_c1[x] && in_k1[x]), "C1 meets K1");
    require(!(in_s1[x] && in_k2[x]), "S1 meets K2");
    require(!(in_omega[x] && (in_k2[x] || in_s1[x])), "Omega meets K2 or S1");
    require(!(in_c2[x] && (in_k2[x] || in_s1[x] || in_omega[x])), "C2 meets K2, S1 or Omega");
    require(!(in_s2[x] && (in_k1[x] || in_c1[x])), "S2 meets K1 or C1");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (in_c1[p])
      for (Idx l : lam) require(!pl.incident(p, l), "C1 point on a K2 line");
    if (!kc_point[p]) continue;
    for (const auto& g : g1) {
      require(pl.incident(p, g.alpha) == (p == u[g.i - 1] || p == g.c), "neighbourhood of alpha" + idx(g.i, g.j));
      require(pl.incident(p, g.beta) == (p == u[g.j - 1] || p == g.c), "neighbourhood of beta" + idx(g.i, g.j));
    }
    for (int i = 0; i < k1; ++i)
      for (Idx w : omega[i]) require(pl.incident(p, w) == (p == u[i]), "neighbourhood of omega");
    for (const auto& g : g3) require(!pl.incident(p, g.gamma), "gamma" + idx(g.i, g.j) + " meets K1 or C1");
  }
  for (std::size_t l = 0; l < n; ++l) {
    if (!(in_k2[l] || in_s1[l] || in_omega[l] || in_c2[l])) continue;
    for (const auto& g : g3) {
      const Idx lj = lam[static_cast<std::size_t>(g.j - 1)];
      require(pl.incident(g.a, l) == (l == g.r || l == g.gamma), "neighbourhood of a" + idx(g.i, g.j));
      require(pl.incident(g.b, l) == (l == lj || l == g.gamma), "neighbourhood of b" + idx(g.i, g.j));
    }
  }

  // Steps: delete everything unnamed, run the gadgets, delete the rest.
  std::vector<char> named(2 * n, 0);
  for (Vertex v : target.vertices) named[v] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_c1[x] || in_s2[x]) named[x] = 1;
    if (in_s1[x] || in_omega[x] || in_c2[x]) named[n + x] = 1;
  }
  delete_outside(cert, 2 * n, named);
  auto lc = [&](Vertex v) { cert.steps.push_back(TransformStep::lc(v)); };
  auto del = [&](Vertex v) {
    cert.steps.push_back(TransformStep::del(v));
    named[v] = 0;
  };
  for (const auto& g : g1) {
    if (!target.has_edge(u[g.i - 1], u[g.j - 1])) continue;
    lc(line_vertex(pl, g.alpha));
    lc(line_vertex(pl, g.beta));
    del(line_vertex(pl, g.alpha));
    del(line_vertex(pl, g.beta));
    lc(g.c);
    del(g.c);
  }
  auto find3 = [&](int i, int j) -> const G3& {
    for (const auto& g : g3)
      if (g.i == i && g.j == j) return g;
    throw ConstructionError("missing gadget" + idx(i, j));
  };
  for (int i = 2; i <= k2; ++i)
    for (int j = 1; j < i; ++j) {
      if (!target.has_edge(line_vertex(pl, lam[i - 1]), line_vertex(pl, lam[j - 1]))) continue;
      const auto& g = find3(i, j);
      lc(g.a);
      lc(g.b);
      del(g.a);
      del(g.b);
      lc(line_vertex(pl, g.gamma));
      del(line_vertex(pl, g.gamma));
    }
  for (int i = 1; i <= k1; ++i)
    for (int j = 1; j <= k2; ++j) {
      const Vertex ui = u[i - 1], lj = line_vertex(pl, lam[j - 1]);
      if (target.has_edge(ui, lj) == pl.incident(ui, lam[j - 1])) continue;
      const auto& g = find3(static_cast<int>(i + k2), j);
      lc(g.a);
      lc(g.b);
      del(g.a);
      del(g.b);
      lc(line_vertex(pl, g.gamma));
      del(line_vertex(pl, g.gamma));
      const Vertex w = line_vertex(pl, omega[i - 1][j - 1]);
      lc(w);
      del(w);
    }
  for (Vertex v : target.vertices) named[v] = 0;
  for (std::size_t v = 0; v < 2 * n; ++v)
    if (named[v]) cert.steps.push_back(TransformStep::del(static_cast<Vertex>(v)));
  return CertificateOutcome::ok(std::move(cert));
}

// ---------------------------------------------------------------------------
// Any graph on any k vertices of the reduced graph (vertices are points,
// a ~ b iff a·b = 0). Auxiliary lines α, β are chosen in the plane and
// their orthogonal points a = φ⁻¹(α), b = φ⁻¹(β) enter the certificate.

inline CertificateOutcome synth_vmu_reduced(const ProjectivePlane& pl, const TargetGraph& target,
                                            GeometricOptions opt = {}) {
  using namespace detail;
  const std::size_t n = pl.size();
  if (target.size() == 0) throw InputError("empty target");
  for (Vertex v : target.vertices)
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " is not in the reduced graph");
  const long long k = static_cast<long long>(target.size());
  if (opt.enforce_bound && !reduced_bound_holds(k, pl.q()))
    throw PreconditionError("reduced construction needs 5k^2-k-10 <= 2q (k=" + std::to_string(k) +
                            ", q=" + std::to_string(pl.q()) + ")");

  SynthesisCertificate cert;
  cert.kind = CertificateKind::ReducedVMU;
  cert.q = pl.q();
  cert.k = target.vertices;
  cert.target_edges = target.edges;
  Recorder rec{cert, pl, opt.enforce_bound};
  const auto& u = target.vertices;
  auto adj = [&](Idx x, Idx y) { return x != y && pl.incident(x, y); };

  std::vector<char> in_k(n, 0), in_c(n, 0), in_s(n, 0);
  for (Vertex v : u) in_k[v] = 1;
  struct G { int i, j; Idx alpha, beta, c, a, b; };
  std::vector<G> gs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::string tag = idx(i + 1, j + 1);
      std::vector<char> avoid(n, 0);
      for (std::size_t x = 0; x < n; ++x) avoid[x] = in_k[x] || in_c[x] || in_s[x];
      const std::size_t cs = gs.size(), ss = 2 * gs.size();

      // φ is the identity on indices, so φ(K) and φ(C) are flagged by in_k, in_c.
      auto pa = pick_first(pl.lines_through(u[i]),
                           [&](Idx l) { return in_k[l] || in_c[l] || hits_point(pl, l, avoid, u[i]); });
      if (!rec.record("alpha" + tag, pa, static_cast<std::size_t>(2 * k - 1) + 2 * cs + ss, 2 * k * k - 5))
        return CertificateOutcome::fail("no line for alpha" + tag, u[i]);
      const Idx alpha = *pa.chosen;

      std::vector<Vertex> ik, ic;
      for (Vertex x : u) ik.push_back(static_cast<Vertex>(pl.meet(alpha, pl.phi(x))));
      for (const auto& g : gs) ic.push_back(static_cast<Vertex>(pl.meet(alpha, pl.phi(g.c))));
      for (Vertex p : ik) avoid[p] = 1;
      for (Vertex p : ic) avoid[p] = 1;
      avoid[alpha] = 1;  // the point φ⁻¹(α)
      auto pb = pick_first(pl.lines_through(u[j]), [&](Idx l) { return in_c[l] || hits_point(pl, l, avoid, u[j]); });
      if (!rec.record("beta" + tag, pb,
                      static_cast<std::size_t>(k - 1) + 2 * cs + ss + ik.size() + ic.size() + 1,
                      (5 * k * k - k - 10) / 2))
        return CertificateOutcome::fail("no line for beta" + tag, u[j]);
      const Idx beta = *pb.chosen;
      const Idx c = static_cast<Idx>(pl.meet(alpha, beta));
      const Idx a = alpha, b = beta;  // φ⁻¹ on indices
      cert.intersections["I_K" + tag] = ik;
      cert.intersections["I_C" + tag] = ic;
      gs.push_back({i + 1, j + 1, alpha, beta, c, a, b});
      in_c[c] = 1;
      in_s[a] = in_s[b] = 1;
      cert.add("line_alpha", i + 1, j + 1, alpha);
      cert.add("line_beta", i + 1, j + 1, beta);
      cert.add("c", i + 1, j + 1, c);
      cert.add("a", i + 1, j + 1, a);
      cert.add("b", i + 1, j + 1, b);
    }

  const std::size_t m = gs.size();
  require(static_cast<std::size_t>(std::count(in_c.begin(), in_c.end(), 1)) == m, "C has repeated points");
  require(static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), 1)) == 2 * m, "S has repeated points");
  for (std::size_t x = 0; x < n; ++x) {
    require(!(in_c[x] && in_k[x]), "C meets K");
    require(!(in_s[x] && (in_k[x] || in_c[x])), "S meets K or C");
  }
  for (const auto& g : gs) {
    const std::string tag = idx(g.i, g.j);
    for (const auto& h : gs) {
      require(!adj(g.c, h.c), "C not stable");
      require(!adj(g.a, h.a) && !adj(g.a, h.b) && !adj(g.b, h.b), "S not stable");
    }
    for (Vertex x : u) require(!adj(g.c, x), "c" + tag + " adjacent to K");
    for (std::size_t x = 0; x < n; ++x) {
      if (!(in_k[x] || in_c[x])) continue;
      const auto xi = static_cast<Idx>(x);
      require(adj(g.a, xi) == (xi == u[g.i - 1] || xi == g.c), "neighbourhood of a" + tag);
      require(adj(g.b, xi) == (xi == u[g.j - 1] || xi == g.c), "neighbourhood of b" + tag);
    }
  }

  for (const auto& g : gs) {
    const Vertex ui = u[g.i - 1], uj = u[g.j - 1];
    if (target.has_edge(ui, uj) == adj(ui, uj)) continue;
    cert.steps.push_back(TransformStep::lc(g.a));
    cert.steps.push_back(TransformStep::lc(g.b));
    cert.steps.push_back(TransformStep::lc(g.c));
  }
  std::vector<char> keep(n, 0);
  for (Vertex v : u) keep[v] = 1;
  delete_outside(cert, n, keep);
  return CertificateOutcome::ok(std::move(cert));
}

}  // namespace vmu
