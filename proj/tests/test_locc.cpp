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

#include <cmath>
#include <set>
#include <vector>

#include "support.hpp"
#include "vmu/json_io.hpp"
#include "vmu/measurement.hpp"
#include "vmu/protocol.hpp"
#include "vmu/synth.hpp"

namespace vmu {
namespace {

using vmu::testing::path3;
using vmu::testing::random_graph;

void apply_all(Statevector& s, const std::vector<Correction>& cs) {
  for (const auto& c : cs) s.apply(c.qubit, c.op);
}

TEST(Statevector, SmallExamples) {
  const Statevector one = statevector(Graph(1));
  ASSERT_EQ(one.amp.size(), 2U);
  EXPECT_NEAR(one.amp[0].real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(one.amp[1].real(), 1 / std::sqrt(2.0), 1e-12);

  Graph k2(2);
  k2.add_edge_in_place(0, 1);
  const Statevector s = statevector(k2);
  const double want[4] = {0.5, 0.5, 0.5, -0.5};
  for (int x = 0; x < 4; ++x) EXPECT_NEAR(s.amp[x].real(), want[x], 1e-12);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  EXPECT_THROW(statevector(Graph(kMaxStatevectorQubits + 1)), Error);
}

TEST(Statevector, GraphStateIsStabilized) {
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, 6);
    const Statevector s = statevector(g);
    for (Vertex u : g.vertices()) {
      Statevector k = s;
      k.apply_word(u, "X");
      for (Vertex w : g.neighbors(u)) k.apply_word(w, "Z");
      // The stabilizer fixes the state exactly, not only up to phase.
      for (std::size_t x = 0; x < s.amp.size(); ++x) EXPECT_NEAR(std::abs(k.amp[x] - s.amp[x]), 0.0, 1e-12);
    }
  }
}

TEST(Statevector, LocalComplementIsLocalClifford) {
  Rng rng(52);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 5;
    const Graph g = random_graph(rng, n);
    for (Vertex v : g.vertices()) {
      Statevector s = statevector(g);
      apply_all(s, lc_unitary(g, v));
      EXPECT_TRUE(equal_up_to_phase(s, statevector(local_complement(g, v))));
    }
  }
}

TEST(Clifford, GroupStructure) {
  std::set<int> seen;
  for (int i = 0; i < 24; ++i) {
    const Clifford c = Clifford::from_index(i);
    seen.insert(c.index());
    EXPECT_EQ(Clifford::from_word(c.word()), c);
    EXPECT_TRUE(c.then(c.inverse()).is_identity());
    for (int j = 0; j < 24; ++j) {
      const Clifford d = Clifford::from_index(j);
      EXPECT_EQ(c.then(d), Clifford::from_word(c.word() + d.word()));
    }
  }
  EXPECT_EQ(seen.size(), 24U);
  EXPECT_TRUE(Clifford::from_word("HH").is_identity());
  EXPECT_TRUE(Clifford::from_word("SSSS").is_identity());
  EXPECT_EQ(Clifford::from_word("SS"), Clifford::from_word("Z"));
  EXPECT_EQ(Clifford::from_word("HZH"), Clifford::from_word("X"));
  // (I + iZ)/sqrt2 is S-dagger up to phase.
  EXPECT_EQ(Clifford::from_matrix(sqrt_pauli('Z', +1)), Clifford::from_word("SSS"));
  EXPECT_EQ(Clifford::from_matrix(sqrt_pauli('Z', -1)), Clifford::from_word("S"));
  EXPECT_THROW(Clifford::from_word("T"), Error);
  EXPECT_THROW(Clifford::from_index(24), InputError);
}

TEST(Measurement, HandExamples) {
  Graph k2(2);
  k2.add_edge_in_place(0, 1);
  const auto z = measure_graph(k2, 0, Basis::Z, 0);
  EXPECT_EQ(z.graph.vertices(), std::vector<Vertex>{1});
  EXPECT_EQ(z.graph.edge_count(), 0U);
  EXPECT_TRUE(z.corrections.empty());
  EXPECT_EQ(measure_graph(k2, 0, Basis::Z, 1).corrections.size(), 1U);

  const auto y = measure_graph(path3(), 2, Basis::Y, 0);
  EXPECT_EQ(y.graph.vertices(), (std::vector<Vertex>{1, 3}));
  EXPECT_TRUE(y.graph.adjacent(1, 3));

  EXPECT_THROW(measure_graph(path3(), 1, Basis::X, 0, Vertex{3}), InputError);
  EXPECT_THROW(measure_graph(path3(), 2, Basis::Y, 0, Vertex{1}), InputError);
  EXPECT_THROW(measure_graph(path3(), 9, Basis::Z, 0), InputError);
  EXPECT_FALSE(measure_graph(Graph(1), 0, Basis::X, 1).possible);
}

TEST(Measurement, RulesAgreeWithProjection) {
  Rng rng(53);
  int cases = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 8;
    const Graph g = random_graph(rng, n, 0.4 + 0.1 * (t % 3));
    const Statevector s = statevector(g);
    for (Vertex v : g.vertices())
      for (Basis b : {Basis::X, Basis::Y, Basis::Z})
        for (int o = 0; o < 2; ++o) {
          const auto res = measure_graph(g, v, b, o);
          Statevector post = project_out(s, v, basis_char(b), o);
          const double prob = post.norm() * post.norm();
          if (!res.possible) {
            EXPECT_LT(prob, 1e-12);
            continue;
          }
          ASSERT_GT(prob, 1e-12);
          post.normalize();
          apply_all(post, res.corrections);
          ASSERT_TRUE(equal_up_to_phase(post, statevector(res.graph)))
              << "n=" << n << " v=" << v << " basis=" << basis_char(b) << " outcome=" << o;
          ++cases;
        }
  }
  EXPECT_GT(cases, 3000);
}

TEST(Measurement, EverySpecialNeighbourWorks) {
  Rng rng(54);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(rng, 6);
    const Statevector s = statevector(g);
    for (Vertex v : g.vertices())
      for (Vertex b0 : g.neighbors(v))
        for (int o = 0; o < 2; ++o) {
          const auto res = measure_graph(g, v, Basis::X, o, b0);
          EXPECT_EQ(res.special, b0);
          Statevector post = project_out(s, v, 'X', o);
          post.normalize();
          apply_all(post, res.corrections);
          EXPECT_TRUE(equal_up_to_phase(post, statevector(res.graph)));
        }
  }
}

TEST(Measurement, NonAdjacentZMeasurementsCommute) {
  Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, 7);
    for (Vertex u : g.vertices())
      for (Vertex w : g.vertices()) {
        if (u >= w || g.adjacent(u, w)) continue;
        for (int ou = 0; ou < 2; ++ou)
          for (int ow = 0; ow < 2; ++ow) {
            const auto a1 = measure_graph(g, u, Basis::Z, ou);
            const auto a2 = measure_graph(a1.graph, w, Basis::Z, ow);
            const auto b1 = measure_graph(g, w, Basis::Z, ow);
            const auto b2 = measure_graph(b1.graph, u, Basis::Z, ou);
            EXPECT_EQ(a2.graph, b2.graph);
            std::multiset<std::pair<Vertex, int>> ra, rb;
            for (const auto* r : {&a1, &a2})
              for (const auto& c : r->corrections) ra.insert({c.qubit, c.op.index()});
            for (const auto* r : {&b1, &b2})
              for (const auto& c : r->corrections) rb.insert({c.qubit, c.op.index()});
            EXPECT_EQ(ra, rb);
          }
      }
  }
}

TEST(Protocol, DeletionMapsToMeasurement) {
  const Graph g = path3();
  const auto p = emit_protocol(g, StepSequence{TransformStep::del(2)});
  ASSERT_EQ(p.instructions.size(), 4U);
  EXPECT_EQ(p.measurement_count(), 1U);
  EXPECT_EQ(p.instructions[0].kind, InstrKind::Measure);
  EXPECT_EQ(p.instructions[1].kind, InstrKind::Broadcast);
  EXPECT_EQ(p.instructions[2].kind, InstrKind::Correct);
  EXPECT_EQ(p.instructions[3].kind, InstrKind::Correct);
  Graph target(std::vector<Vertex>{1, 3});
  const auto rep = verify_protocol(g, p, target);
  EXPECT_TRUE(rep.pass) << rep.message;
  EXPECT_EQ(rep.branches, 2U);
}

TEST(Protocol, EmptyProtocolOnTarget) {
  const Graph g = path3();
  EXPECT_TRUE(verify_protocol(g, Protocol{}, g).pass);
  EXPECT_FALSE(verify_protocol(g, Protocol{}, local_complement(g, 2)).pass);
}

TEST(Protocol, RandomSequencesVerify) {
  Rng rng(56);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + t % 5;
    const Graph g = random_graph(rng, n);
    StepSequence steps;
    Graph cur = g;
    for (int s = 0; s < 6 && cur.size() > 1; ++s) {
      const auto vs = cur.vertices();
      const Vertex v = vs[uniform_below(rng, vs.size())];
      const auto choice = uniform_below(rng, 3);
      if (choice == 0) steps.push_back(TransformStep::lc(v));
      else if (choice == 1) steps.push_back(TransformStep::del(v));
      else if (!cur.neighbors(v).empty()) steps.push_back(TransformStep::pivot(v, cur.neighbors(v).front()));
      else continue;
      apply_in_place(cur, steps.back());
    }
    const auto p = emit_protocol(g, steps);
    const auto rep = verify_protocol(g, p, cur);
    ASSERT_TRUE(rep.pass) << rep.message << "\n" << format_protocol(p);
  }
}

TEST(Protocol, EmissionErrorsCarryTheStepIndex) {
  try {
    emit_protocol(path3(), StepSequence{TransformStep::lc(1), TransformStep::pivot(1, 3)});
    FAIL() << "expected a SequenceError";
  } catch (const SequenceError& e) {
    EXPECT_EQ(e.index(), 1U);
  }
}

// K2 to the empty graph on both parties: measure X on each qubit, keep the
// qubits, and undo a minus outcome with Z.
Protocol k2_to_empty() {
  Protocol p;
  p.instructions = {Instruction::measure(0, Basis::X, 0, false), Instruction::broadcast(0, 0),
                    Instruction::measure(1, Basis::X, 1, false), Instruction::broadcast(1, 1),
                    Instruction::correct(0, "Z", {0}), Instruction::correct(1, "Z", {1})};
  return p;
}

TEST(Protocol, K2ToEmptyViaX) {
  Graph k2(2);
  k2.add_edge_in_place(0, 1);
  const auto rep = verify_protocol(k2, k2_to_empty(), Graph(2));
  EXPECT_TRUE(rep.pass) << rep.message;
  EXPECT_EQ(rep.branches, 4U);
}

TEST(Protocol, CorruptedCorrectionFails) {
  Graph k2(2);
  k2.add_edge_in_place(0, 1);
  Protocol p = k2_to_empty();
  p.instructions[5].word = "X";
  const auto rep = verify_protocol(k2, p, Graph(2));
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.failing_branch.size(), 2U);
  EXPECT_EQ(rep.failing_branch[1], 1);
}

TEST(Protocol, StructuralRules) {
  Graph g = path3();
  Protocol twice;
  twice.instructions = {Instruction::measure(1, Basis::Z, 0), Instruction::measure(1, Basis::Z, 1)};
  EXPECT_FALSE(verify_protocol(g, twice, Graph(std::vector<Vertex>{2, 3})).pass);
  Protocol early;
  early.instructions = {Instruction::measure(1, Basis::Z, 0), Instruction::correct(2, "Z", {0})};
  EXPECT_NE(protocol_structure_error(early).find("unbroadcast"), std::string::npos);
  Protocol foreign;
  foreign.instructions = {Instruction::measure(1, Basis::Z, 0), Instruction::broadcast(2, 0)};
  EXPECT_NE(protocol_structure_error(foreign).find("another party"), std::string::npos);
  Protocol stranger;
  stranger.instructions = {Instruction::clifford(9, "H")};
  EXPECT_FALSE(verify_protocol(g, stranger, g).pass);
  EXPECT_FALSE(verify_protocol(Graph(11), Protocol{}, Graph(11)).pass);
}

TEST(Protocol, TextAndJsonRoundTrip) {
  Rng rng(57);
  const Graph g = random_graph(rng, 6);
  StepSequence steps{TransformStep::lc(0), TransformStep::del(3), TransformStep::lc(1)};
  Protocol p = emit_protocol(g, steps);
  p.instructions.push_back(Instruction::measure(5, Basis::X, 7, false, Vertex{4}));
  const std::string text = format_protocol(p, {"generated for a test"});
  EXPECT_EQ(parse_protocol(text), p);
  EXPECT_EQ(parse_protocol_any(text), p);
  const std::string js = protocol_to_json(p).dump();
  EXPECT_EQ(protocol_from_json(Json::parse(js)), p);
  EXPECT_EQ(parse_protocol_any(js), p);
  EXPECT_THROW(parse_protocol("0\tclifford\tT\n"), InputError);
  EXPECT_THROW(parse_protocol("0\tmeasure\tQ m0\n"), InputError);
  EXPECT_THROW(parse_protocol("0 measure Z m0\n"), InputError);
  EXPECT_THROW(parse_protocol("0\tteleport\tm0\n"), InputError);
}

TEST(Protocol, CertificateMeasuresExactlyTheComplement) {
  const ProjectivePlane pl(2);
  const Graph host = build_incidence_graph(pl);
  auto cert = synth_vmu_oneside(pl, TargetGraph({0, 3}, {{0, 3}}));
  ASSERT_TRUE(cert);
  const auto p = emit_protocol(host, cert->steps);
  std::vector<Vertex> rest;
  for (Vertex v : host.vertices())
    if (v != 0 && v != 3) rest.push_back(v);
  EXPECT_EQ(p.measured_parties(), rest);
  const auto small = restrict_to_support(host, *cert);
  ASSERT_LE(small.host.size(), kMaxProtocolQubits);
  const auto rep = verify_protocol(small.host, emit_protocol(small.host, small.steps), Graph::from_edges(cert->k, cert->target_edges));
  EXPECT_TRUE(rep.pass) << rep.message;
}

}  // namespace
}  // namespace vmu
