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


// JSON forms of certificates and protocols (nlohmann::json). Both
// round-trip: from_json(to_json(x)) == x.

#pragma once

#include <string>

#include <json.hpp>

#include "vmu/certificate.hpp"
#include "vmu/io.hpp"
#include "vmu/protocol.hpp"

namespace vmu {

using Json = nlohmann::ordered_json;

inline CertificateKind parse_certificate_kind(const std::string& s) {
  for (auto k : {CertificateKind::RankBasis, CertificateKind::Pairing, CertificateKind::OneSideVMU,
                 CertificateKind::FullVMU, CertificateKind::ReducedVMU})
    if (kind_name(k) == s) return k;
  throw InputError("unknown certificate kind '" + s + "'");
}

inline Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

inline std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return out;
}

inline Json certificate_to_json(const SynthesisCertificate& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  j["q"] = c.q;
  j["k"] = c.k;
  j["target_edges"] = edges_json(c.target_edges);
  Json el = Json::object();
  for (const auto& [role, items] : c.elements) {
    Json a = Json::array();
    for (const auto& it : items) a.push_back({it.i, it.j, it.v});
    el[role] = a;
  }
  j["elements"] = el;
  Json inter = Json::object();
  for (const auto& [name, vs] : c.intersections) inter[name] = vs;
  j["intersections"] = inter;
  Json checks = Json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"label", ch.label},
                      {"excluded", ch.excluded},
                      {"avoid_size", ch.avoid_size},
                      {"cap", ch.cap},
                      {"available", ch.available},
                      {"holds", ch.holds()}});
  j["checks"] = checks;
  j["relocations"] = edges_json(c.relocations);
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(s.to_string());
  j["steps"] = steps;
  return j;
}

inline SynthesisCertificate certificate_from_json(const Json& j) {
  try {
    SynthesisCertificate c;
    c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
    c.q = j.value("q", 0U);
    c.k = j.at("k").get<std::vector<Vertex>>();
    c.target_edges = edges_from_json(j.at("target_edges"));
    if (j.contains("elements"))
      for (const auto& [role, items] : j.at("elements").items())
        for (const auto& it : items) c.add(role, it.at(0).get<int>(), it.at(1).get<int>(), it.at(2).get<Vertex>());
    if (j.contains("intersections"))
      for (const auto& [name, vs] : j.at("intersections").items()) c.intersections[name] = vs.get<std::vector<Vertex>>();
    if (j.contains("checks"))
      for (const auto& ch : j.at("checks"))
        c.checks.push_back({ch.at("label").get<std::string>(), ch.at("excluded").get<std::size_t>(),
                            ch.at("avoid_size").get<std::size_t>(), ch.at("cap").get<std::size_t>(),
                            ch.at("available").get<std::size_t>()});
    if (j.contains("relocations")) c.relocations = edges_from_json(j.at("relocations"));
    std::string steps;
    for (const auto& s : j.at("steps")) steps += s.get<std::string>() + "\n";
    c.steps = parse_steps(steps);
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
}

inline Json protocol_to_json(const Protocol& p) {
  Json a = Json::array();
  for (const auto& i : p.instructions) {
    Json o;
    o["party"] = i.party;
    o["kind"] = instr_kind_name(i.kind);
    switch (i.kind) {
      case InstrKind::Clifford: o["word"] = i.word; break;
      case InstrKind::Measure:
        o["basis"] = std::string(1, basis_char(i.basis));
        o["id"] = i.id;
        o["destructive"] = i.destructive;
        if (i.neighbor) o["neighbor"] = *i.neighbor;
        break;
      case InstrKind::Broadcast: o["id"] = i.id; break;
      case InstrKind::Correct:
        o["word"] = i.word;
        o["depends"] = i.depends;
        break;
    }
    a.push_back(o);
  }
  return Json{{"instructions", a}};
}

inline Protocol protocol_from_json(const Json& j) {
  try {
    Protocol p;
    for (const auto& o : j.at("instructions")) {
      const auto party = o.at("party").get<Vertex>();
      const auto kind = o.at("kind").get<std::string>();
      if (kind == "clifford") {
        p.instructions.push_back(Instruction::clifford(party, o.at("word").get<std::string>()));
        (void)Clifford::from_word(p.instructions.back().word);
      } else if (kind == "measure") {
        const auto b = o.at("basis").get<std::string>();
        if (b.size() != 1) throw InputError("basis must be one letter");
        std::optional<Vertex> nb;
        if (o.contains("neighbor")) nb = o.at("neighbor").get<Vertex>();
        p.instructions.push_back(
            Instruction::measure(party, parse_basis(b[0]), o.at("id").get<int>(), o.value("destructive", true), nb));
      } else if (kind == "broadcast") {
        p.instructions.push_back(Instruction::broadcast(party, o.at("id").get<int>()));
      } else if (kind == "correct") {
        p.instructions.push_back(
            Instruction::correct(party, o.at("word").get<std::string>(), o.at("depends").get<std::vector<int>>()));
        (void)Clifford::from_word(p.instructions.back().word);
      } else {
        throw InputError("unknown instruction kind '" + kind + "'");
      }
    }
    return p;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed protocol JSON: ") + e.what());
  }
}

/// Accepts either protocol form: JSON when the first non-space character
/// is '{', tab-separated text otherwise.
inline Protocol parse_protocol_any(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    try {
      return protocol_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("protocol JSON does not parse: ") + e.what());
    }
  }
  return parse_protocol(text);
}

}  // namespace vmu
