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


// LOCC protocols on graph states: emission from transform sequences, a
// tab-separated text form, and exhaustive statevector verification over all
// measurement-outcome branches.
//
// Text form, one instruction per line as party<TAB>kind<TAB>args:
//   3  clifford   HSH
//   3  measure    Z m0             (X measurements may add "neighbor W";
//                                   a trailing "keep" makes it non-destructive)
//   3  broadcast  m0
//   5  correct    Z m0 m2          (apply the word iff m0 xor m2 is 1)
// Lines starting with '#' are comments.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vmu/error.hpp"
#include "vmu/graph.hpp"
#include "vmu/io.hpp"
#include "vmu/measurement.hpp"
#include "vmu/statevector.hpp"

namespace vmu {

enum class InstrKind { Clifford, Measure, Broadcast, Correct };

inline std::string instr_kind_name(InstrKind k) {
  switch (k) {
    case InstrKind::Clifford: return "clifford";
    case InstrKind::Measure: return "measure";
    case InstrKind::Broadcast: return "broadcast";
    case InstrKind::Correct: return "correct";
  }
  return {};
}

struct Instruction {
  InstrKind kind = InstrKind::Clifford;
  Vertex party = 0;
  std::string word;          // clifford, correct
  Basis basis = Basis::Z;    // measure
  bool destructive = true;   // measure
  std::optional<Vertex> neighbor;  // measure X: special neighbour used for bookkeeping
  int id = -1;               // measure, broadcast: outcome reference
  std::vector<int> depends;  // correct: outcome references, applied on odd parity

  static Instruction clifford(Vertex p, std::string w) {
    Instruction i;
    i.kind = InstrKind::Clifford;
    i.party = p;
    i.word = std::move(w);
    return i;
  }
  static Instruction measure(Vertex p, Basis b, int id, bool destructive = true,
                             std::optional<Vertex> nb = std::nullopt) {
    Instruction i;
    i.kind = InstrKind::Measure;
    i.party = p;
    i.basis = b;
    i.id = id;
    i.destructive = destructive;
    i.neighbor = nb;
    return i;
  }
  static Instruction broadcast(Vertex p, int id) {
    Instruction i;
    i.kind = InstrKind::Broadcast;
    i.party = p;
    i.id = id;
    return i;
  }
  static Instruction correct(Vertex p, std::string w, std::vector<int> deps) {
    Instruction i;
    i.kind = InstrKind::Correct;
    i.party = p;
    i.word = std::move(w);
    i.depends = std::move(deps);
    return i;
  }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Protocol {
  std::vector<Instruction> instructions;

  /// Parties measured destructively, ascending.
  std::vector<Vertex> measured_parties() const {
    std::vector<Vertex> out;
    for (const auto& i : instructions)
      if (i.kind == InstrKind::Measure && i.destructive) out.push_back(i.party);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t measurement_count() const {
    return static_cast<std::size_t>(std::count_if(instructions.begin(), instructions.end(),
                                                  [](const Instruction& i) { return i.kind == InstrKind::Measure; }));
  }

  friend bool operator==(const Protocol&, const Protocol&) = default;
};

// ---------------------------------------------------------------------------
// Emission

/// Translates a transform sequence on g into LOCC instructions. LC becomes
/// local Cliffords on v and its neighbours, a pivot becomes three LCs, and a
/// deletion becomes a destructive Z measurement, its broadcast, and
/// conditional Z corrections on the neighbours.
inline Protocol emit_protocol(const Graph& g, std::span<const TransformStep> steps) {
  Protocol p;
  Graph cur = g;
  int next_id = 0;
  auto emit_lc = [&](Vertex v) {
    for (const auto& c : lc_unitary(cur, v)) p.instructions.push_back(Instruction::clifford(c.qubit, c.op.word()));
    cur.local_complement_in_place(v);
  };
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    try {
      switch (st.kind) {
        case StepKind::LocalComplement:
          emit_lc(st.a);
          break;
        case StepKind::Pivot:
          if (!cur.adjacent(st.a, st.b))
            throw PreconditionError("pivot on non-edge " + std::to_string(st.a) + "-" + std::to_string(st.b));
          emit_lc(st.a);
          emit_lc(st.b);
          emit_lc(st.a);
          break;
        case StepKind::DeleteVertex: {
          const auto nb = cur.neighbors(st.a);
          const int id = next_id++;
          p.instructions.push_back(Instruction::measure(st.a, Basis::Z, id));
          p.instructions.push_back(Instruction::broadcast(st.a, id));
          for (Vertex u : nb) p.instructions.push_back(Instruction::correct(u, "Z", {id}));
          cur.delete_vertex_in_place(st.a);
          break;
        }
      }
    } catch (const SequenceError&) {
      throw;
    } catch (const Error& e) {
      throw SequenceError(s, e.what());
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Text form

inline std::string format_protocol(const Protocol& p, const std::vector<std::string>& header = {}) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  for (const auto& i : p.instructions) {
    os << i.party << '\t' << instr_kind_name(i.kind) << '\t';
    switch (i.kind) {
      case InstrKind::Clifford: os << i.word; break;
      case InstrKind::Measure:
        os << basis_char(i.basis) << " m" << i.id;
        if (i.neighbor) os << " neighbor " << *i.neighbor;
        if (!i.destructive) os << " keep";
        break;
      case InstrKind::Broadcast: os << 'm' << i.id; break;
      case InstrKind::Correct:
        os << i.word;
        for (int d : i.depends) os << " m" << d;
        break;
    }
    os << '\n';
  }
  return os.str();
}

namespace detail {

inline int parse_ref(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'm') throw InputError("expected an outcome reference like m0, got '" + tok + "'");
  return static_cast<int>(to_uint(tok.substr(1), "outcome reference"));
}

inline void check_word(const std::string& w) {
  if (w.empty()) throw InputError("empty Clifford word");
  (void)Clifford::from_word(w);
}

}  // namespace detail

inline Protocol parse_protocol(std::string_view text) {
  Protocol p;
  std::size_t line_no = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      const auto t1 = line.find('\t');
      const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
      if (t2 == std::string::npos) throw InputError("expected party<TAB>kind<TAB>args");
      Instruction ins;
      ins.party = detail::to_vertex(line.substr(0, t1));
      const std::string kind = line.substr(t1 + 1, t2 - t1 - 1);
      const auto args = detail::tokens(line.substr(t2 + 1));
      if (args.empty()) throw InputError("missing arguments");
      if (kind == "clifford") {
        if (args.size() != 1) throw InputError("clifford takes one word");
        detail::check_word(args[0]);
        ins = Instruction::clifford(ins.party, args[0]);
      } else if (kind == "measure") {
        if (args.size() < 2 || args[0].size() != 1) throw InputError("measure takes a basis and a reference");
        ins = Instruction::measure(ins.party, parse_basis(args[0][0]), detail::parse_ref(args[1]));
        for (std::size_t a = 2; a < args.size(); ++a) {
          if (args[a] == "keep") {
            ins.destructive = false;
          } else if (args[a] == "neighbor" && a + 1 < args.size()) {
            ins.neighbor = detail::to_vertex(args[++a]);
          } else {
            throw InputError("unexpected measure argument '" + args[a] + "'");
          }
        }
      } else if (kind == "broadcast") {
        if (args.size() != 1) throw InputError("broadcast takes one reference");
        ins = Instruction::broadcast(ins.party, detail::parse_ref(args[0]));
      } else if (kind == "correct") {
        if (args.size() < 2) throw InputError("correct takes a word and at least one reference");
        detail::check_word(args[0]);
        std::vector<int> deps;
        for (std::size_t a = 1; a < args.size(); ++a) deps.push_back(detail::parse_ref(args[a]));
        ins = Instruction::correct(ins.party, args[0], std::move(deps));
      } else {
        throw InputError("unknown instruction kind '" + kind + "'");
      }
      p.instructions.push_back(std::move(ins));
    } catch (const InputError& e) {
      throw InputError("protocol line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Verification

struct ProtocolReport {
  bool pass = false;
  std::size_t branches = 0;        // complete branches simulated
  std::vector<int> failing_branch; // outcomes by measurement id (-1 = not reached)
  std::string message;
};

/// Structural rules: unique outcome ids, at most one destructive
/// measurement per party, no operations on a party after it is measured
/// away, broadcasts only after their measurement, and corrections only on
/// outcomes already broadcast. Returns an empty string when all hold.
inline std::string protocol_structure_error(const Protocol& p) {
  std::map<int, Vertex> measured;  // outcome id -> measuring party
  std::set<int> broadcast;
  std::set<Vertex> gone;
  for (std::size_t n = 0; n < p.instructions.size(); ++n) {
    const auto& i = p.instructions[n];
    const std::string at = "instruction " + std::to_string(n) + ": ";
    // A measured-away party keeps its classical record and may still announce it.
    if (gone.count(i.party) && i.kind != InstrKind::Broadcast)
      return at + "party " + std::to_string(i.party) + " was already measured destructively";
    switch (i.kind) {
      case InstrKind::Measure:
        if (i.id < 0 || !measured.emplace(i.id, i.party).second)
          return at + "duplicate outcome id m" + std::to_string(i.id);
        if (i.destructive) gone.insert(i.party);
        break;
      case InstrKind::Broadcast: {
        auto it = measured.find(i.id);
        if (it == measured.end()) return at + "broadcast of unmeasured outcome m" + std::to_string(i.id);
        if (it->second != i.party) return at + "outcome m" + std::to_string(i.id) + " belongs to another party";
        broadcast.insert(i.id);
        break;
      }
      case InstrKind::Correct:
        for (int d : i.depends)
          if (!broadcast.count(d)) return at + "correction depends on unbroadcast outcome m" + std::to_string(d);
        break;
      case InstrKind::Clifford: break;
    }
  }
  return {};
}

namespace detail {

struct BranchRunner {
  const Protocol& p;
  const Statevector& want;
  std::size_t max_branches;
  ProtocolReport report;
  std::map<int, int> outcomes;

  std::vector<int> branch_vector() const {
    int top = -1;
    for (const auto& i : p.instructions)
      if (i.kind == InstrKind::Measure) top = std::max(top, i.id);
    std::vector<int> v(static_cast<std::size_t>(top + 1), -1);
    for (auto [id, o] : outcomes) v[static_cast<std::size_t>(id)] = o;
    return v;
  }

  // Returns false to stop the search.
  bool run(Statevector s, std::size_t from) {
    for (std::size_t n = from; n < p.instructions.size(); ++n) {
      const auto& i = p.instructions[n];
      switch (i.kind) {
        case InstrKind::Clifford: s.apply_word(i.party, i.word); break;
        case InstrKind::Broadcast: break;
        case InstrKind::Correct: {
          int parity = 0;
          for (int d : i.depends) parity ^= outcomes.at(d);
          if (parity) s.apply_word(i.party, i.word);
          break;
        }
        case InstrKind::Measure: {
          for (int o = 0; o < 2; ++o) {
            const char b = basis_char(i.basis);
            Statevector next = i.destructive ? project_out(s, i.party, b, o) : project_keep(s, i.party, b, o);
            const double prob = next.norm() * next.norm();
            if (prob < 1e-12) continue;  // outcome cannot occur
            next.normalize();
            outcomes[i.id] = o;
            if (!run(std::move(next), n + 1)) return false;
          }
          outcomes.erase(i.id);
          return true;
        }
      }
    }
    ++report.branches;
    if (!equal_up_to_phase(s, want)) {
      report.pass = false;
      report.failing_branch = branch_vector();
      report.message = s.qubits != want.qubits ? "surviving parties differ from the target vertex set"
                                               : "final state differs from the target graph state";
      return false;
    }
    if (report.branches >= max_branches) {
      report.pass = false;
      report.message = "branch limit reached";
      return false;
    }
    return true;
  }
};

}  // namespace detail

inline constexpr std::size_t kMaxProtocolQubits = 10;

/// Simulates every outcome branch of p on |g> and checks that each ends in
/// |target> up to global phase.
inline ProtocolReport verify_protocol(const Graph& g, const Protocol& p, const Graph& target,
                                      std::size_t max_qubits = kMaxProtocolQubits,
                                      std::size_t max_branches = std::size_t{1} << 20) {
  ProtocolReport rep;
  if (g.size() > max_qubits) {
    rep.message = "host has " + std::to_string(g.size()) + " qubits, above the verifier limit of " +
                  std::to_string(max_qubits);
    return rep;
  }
  if (auto err = protocol_structure_error(p); !err.empty()) {
    rep.message = err;
    return rep;
  }
  for (const auto& i : p.instructions)
    if (!g.has_vertex(i.party)) {
      rep.message = "instruction on unknown party " + std::to_string(i.party);
      return rep;
    }
  const Statevector want = statevector(target);
  detail::BranchRunner runner{p, want, max_branches, {}, {}};
  runner.report.pass = true;
  runner.run(statevector(g), 0);
  if (runner.report.pass && runner.report.branches == 0) {
    runner.report.pass = false;
    runner.report.message = "no branch has nonzero probability";
  }
  return runner.report;
}

}  // namespace vmu
