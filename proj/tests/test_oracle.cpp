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


#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "vmu/oracle.hpp"

namespace vmu {
namespace {

using vmu::testing::path3;
using vmu::testing::random_graph;

Graph k2() {
  Graph g(2);
  g.add_edge_in_place(0, 1);
  return g;
}

TEST(VertexMinor, Identity) {
  const Graph g = path3();
  const auto r = is_vertex_minor_bruteforce(g, g);
  EXPECT_TRUE(r.found);
  EXPECT_TRUE(r.witness.empty());
}

TEST(VertexMinor, K2CannotBecomeEmpty) {
  for (bool inter : {false, true}) {
    const auto r = is_vertex_minor_bruteforce(k2(), Graph(2), {inter, std::nullopt});
    EXPECT_FALSE(r.found);
    EXPECT_GT(r.explored, 0U);
  }
}

TEST(VertexMinor, PathEndsBecomeAdjacent) {
  Graph h(std::vector<Vertex>{1, 3});
  h.add_edge_in_place(1, 3);
  const auto r = is_vertex_minor_bruteforce(path3(), h);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(apply_sequence(path3(), r.witness), h);
  EXPECT_EQ(r.witness, (StepSequence{TransformStep::lc(2), TransformStep::del(2)}));
}

TEST(VertexMinor, RejectsLargeOrForeignInputs) {
  EXPECT_THROW(is_vertex_minor_bruteforce(Graph(kMaxOracleVertices + 1), Graph(1)), InputError);
  EXPECT_THROW(is_vertex_minor_bruteforce(Graph(3), Graph(std::vector<Vertex>{7})), InputError);
}

TEST(VertexMinor, StrategiesAndShufflesAgree) {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + t % 4;
    const Graph g = random_graph(rng, n);
    std::vector<Vertex> keep = sample_subset(rng, n, 2 + t % 2);
    Graph h = random_graph(rng, keep.size());
    // Relabel h onto the kept vertices.
    std::vector<Edge> he;
    for (auto [a, b] : h.edges()) he.emplace_back(keep[a], keep[b]);
    const Graph target = Graph::from_edges(keep, he);
    const auto a = is_vertex_minor_bruteforce(g, target);
    const auto b = is_vertex_minor_bruteforce(g, target, {true, std::nullopt});
    const auto c = is_vertex_minor_bruteforce(g, target, {false, static_cast<std::uint64_t>(t)});
    EXPECT_EQ(a.found, b.found);
    EXPECT_EQ(a.found, c.found);
    for (const auto* r : {&a, &b, &c})
      if (r->found) {
        EXPECT_EQ(apply_sequence(g, r->witness), target);
      }
  }
}

TEST(Orbit, SizeOfSmallOrbits) {
  EXPECT_EQ(lc_orbit(Graph(3)).size(), 1U);
  // The labeled path has three possible centers, plus the triangle.
  EXPECT_EQ(lc_orbit(path3()).size(), 4U);
  EXPECT_EQ(lc_orbit(k2()).size(), 1U);
}

TEST(CheckVmu, K2FailsOnTheEmptyTarget) {
  CheckOptions opt;
  opt.bruteforce = true;
  const auto r = check_vmu_exhaustive(k2(), 2, opt);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample);
  EXPECT_TRUE(r.counterexample->target.empty());
  EXPECT_EQ(r.counterexample->k, (std::vector<Vertex>{0, 1}));
}

TEST(CheckVmu, SingleVertexIsOneUniversal) {
  CheckOptions opt;
  opt.bruteforce = true;
  const auto r = check_vmu_exhaustive(Graph(1), 1, opt);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.targets, 1U);
}

TEST(CheckVmu, HeawoodIsTwoUniversal) {
  const Graph g = build_incidence_graph(2);
  CheckOptions opt;
  opt.require_checks = true;
  opt.threads = 2;
  opt.method = Method::OneSide;
  for (Vertex side : {0U, 7U}) {
    std::vector<Vertex> pool;
    for (Vertex v = side; v < side + 7; ++v) pool.push_back(v);
    opt.pool = pool;
    const auto r = check_vmu_exhaustive(g, 2, opt);
    EXPECT_TRUE(r.pass) << (r.counterexample ? r.counterexample->reason : "");
    EXPECT_EQ(r.subsets, 21U);
    EXPECT_EQ(r.targets, 42U);
  }
  // Mixed point-line pairs lie outside the proven range of the mixed-side
  // construction at q = 2, so the default sweep reports a counterexample.
  opt.pool.reset();
  opt.method = Method::Auto;
  EXPECT_FALSE(check_vmu_exhaustive(g, 2, opt).pass);
}

TEST(CheckVmu, TwoUniversalHostsAreOnePairable) {
  Rng rng(62);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(rng, 6);
    CheckOptions brute;
    brute.bruteforce = true;
    const auto a = check_vmu_exhaustive(g, 2, brute);
    const auto p = check_pairable_exhaustive(g, 1, brute);
    if (a.pass) {
      EXPECT_TRUE(p.pass);
    }
    EXPECT_EQ(a.subsets, 15U);
  }
}

TEST(CheckPair, PathOnTwoVertices) {
  CheckOptions opt;
  opt.bruteforce = true;
  EXPECT_TRUE(check_pairable_exhaustive(k2(), 1, opt).pass);
}

TEST(CheckPair, UniversalityImpliesPairability) {
  Rng rng(63);
  int universal = 0;
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(rng, 7, 0.6);
    CheckOptions opt;
    opt.bruteforce = true;
    const auto u = check_vmu_exhaustive(g, 4, opt);
    if (!u.pass) continue;
    ++universal;
    EXPECT_TRUE(check_pairable_exhaustive(g, 2, opt).pass);
  }
  SUCCEED() << universal << " random graphs were 4-universal";
}

TEST(CheckPair, SampledGeometricSweep) {
  const Graph g = build_incidence_graph(7);
  CheckOptions opt;
  opt.samples = 300;
  opt.seed = 9;
  opt.require_checks = true;
  opt.method = Method::Pairing;
  std::vector<Vertex> points;
  for (Vertex v = 0; v < 57; ++v) points.push_back(v);
  opt.pool = points;
  const auto r = check_pairable_exhaustive(g, 2, opt);
  EXPECT_TRUE(r.pass) << (r.counterexample ? r.counterexample->reason : "");
  EXPECT_EQ(r.targets, 900U);
}

TEST(Check, ParallelMatchesSerial) {
  const Graph g = build_reduced_graph(4);
  CheckOptions one, many;
  many.threads = 3;
  const auto a = check_vmu_exhaustive(g, 2, one);
  const auto b = check_vmu_exhaustive(g, 2, many);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.targets, b.targets);
  EXPECT_TRUE(a.pass);
}

TEST(Check, BadPoolAndK) {
  CheckOptions opt;
  opt.pool = std::vector<Vertex>{99};
  EXPECT_THROW(check_vmu_exhaustive(build_incidence_graph(2), 2, opt), InputError);
  EXPECT_THROW(check_vmu_exhaustive(Graph(2), 0), InputError);
}

}  // namespace
}  // namespace vmu
