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

// Text interchange formats.
//
// Edge list:
//
//   # free-form header lines (optional, only before the size line)
//   # tag projective 3        (optional provenance tag)
//   n m [bipartite l]
//   labels v0 v1 ... v(n-1)   (optional; default labels are 0..n-1)
//   u v                       (m lines)
//
// With `bipartite l` the first l labels form the left side. Output always
// uses single spaces and LF line endings.
//
// Step list: one step per line, `LC v`, `DEL v` or `PIVOT a b`; lines that
// start with `#` and blank lines are ignored.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vmu/error.hpp"
#include "vmu/graph.hpp"

namespace vmu {

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> header;  // comment lines without the leading "# "
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') throw InputError("CR line endings are not accepted");
    out.push_back(std::move(line));
    start = end + 1;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::uint64_t to_uint(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError(std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError(std::string("integer out of range for ") + what + ": '" + s + "'");
  }
}

inline Vertex to_vertex(const std::string& s) {
  auto v = to_uint(s, "vertex label");
  if (v > 0xffffffffULL) throw InputError("vertex label too large: " + s);
  return static_cast<Vertex>(v);
}

inline std::string tag_name(Provenance p) {
  switch (p) {
    case Provenance::Projective: return "projective";
    case Provenance::Reduced: return "reduced";
    case Provenance::RandomBipartite: return "random-bipartite";
    case Provenance::None: break;
  }
  return "none";
}

}  // namespace detail

inline ParsedGraph parse_edge_list(std::string_view text) {
  auto lines = detail::split_lines(text);
  ParsedGraph out;
  std::size_t li = 0;
  GraphTag tag;
  for (; li < lines.size() && !lines[li].empty() && lines[li][0] == '#'; ++li) {
    std::string body = lines[li].substr(1);
    if (!body.empty() && body[0] == ' ') body.erase(0, 1);
    auto tk = detail::tokens(body);
    if (tk.size() == 3 && tk[0] == "tag") {
      if (tk[1] == "projective") tag.kind = Provenance::Projective;
      else if (tk[1] == "reduced") tag.kind = Provenance::Reduced;
      else if (tk[1] == "random-bipartite") tag.kind = Provenance::RandomBipartite;
      else throw InputError("unknown graph tag '" + tk[1] + "'");
      tag.parameter = detail::to_uint(tk[2], "tag parameter");
      continue;  // carried by the graph itself
    }
    out.header.push_back(std::move(body));
  }
  if (li >= lines.size()) throw InputError("edge list: missing size line");
  auto head = detail::tokens(lines[li++]);
  if (head.size() != 2 && !(head.size() == 4 && head[2] == "bipartite"))
    throw InputError("edge list: size line must be 'n m' or 'n m bipartite l'");
  const auto n = detail::to_uint(head[0], "n");
  const auto m = detail::to_uint(head[1], "m");
  std::optional<std::uint64_t> l;
  if (head.size() == 4) {
    l = detail::to_uint(head[3], "l");
    if (*l > n) throw InputError("edge list: left side larger than n");
  }
  if (n > kMaxVertices)
    throw ConstructionError("edge list with " + std::to_string(n) + " vertices exceeds the maximum");

  std::vector<Vertex> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Vertex>(i);
  if (li < lines.size()) {
    auto tk = detail::tokens(lines[li]);
    if (!tk.empty() && tk[0] == "labels") {
      if (tk.size() != n + 1) throw InputError("edge list: labels line must list exactly n labels");
      for (std::size_t i = 0; i < n; ++i) labels[i] = detail::to_vertex(tk[i + 1]);
      ++li;
    }
  }
  std::vector<Vertex> left_side;
  if (l) left_side.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(*l));

  Graph g(labels);
  if (lines.size() - li != m)
    throw InputError("edge list: expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - li));
  for (; li < lines.size(); ++li) {
    auto tk = detail::tokens(lines[li]);
    if (tk.size() != 2) throw InputError("edge list: bad edge line '" + lines[li] + "'");
    const Vertex u = detail::to_vertex(tk[0]), v = detail::to_vertex(tk[1]);
    if (g.adjacent(u, v)) throw InputError("edge list: duplicate edge " + lines[li]);
    g.add_edge_in_place(u, v);
  }
  if (l) g.set_bipartition(left_side);
  g.set_tag(tag);
  out.graph = std::move(g);
  return out;
}

/// Serializes the live vertices of `g`. `header` lines are written as
/// comments first; a provenance tag line is added when `g` carries one.
inline std::string format_edge_list(const Graph& g, const std::vector<std::string>& header = {}) {
  std::ostringstream out;
  for (const auto& h : header) out << "# " << h << '\n';
  if (g.tag().kind != Provenance::None)
    out << "# tag " << detail::tag_name(g.tag().kind) << ' ' << g.tag().parameter << '\n';

  std::vector<Vertex> order;
  if (g.has_bipartition()) {
    order = g.left();
    auto r = g.right();
    order.insert(order.end(), r.begin(), r.end());
  } else {
    order = g.vertices();
  }
  const auto edges = g.edges();
  out << order.size() << ' ' << edges.size();
  if (g.has_bipartition()) out << " bipartite " << g.left().size();
  out << '\n';
  bool default_labels = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != i) default_labels = false;
  if (!default_labels) {
    out << "labels";
    for (Vertex v : order) out << ' ' << v;
    out << '\n';
  }
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

inline StepSequence parse_steps(std::string_view text) {
  StepSequence out;
  std::size_t lineno = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tk = detail::tokens(line);
    auto bad = [&] { return InputError("steps line " + std::to_string(lineno) + ": '" + line + "'"); };
    if (tk.size() == 2 && tk[0] == "LC") out.push_back(TransformStep::lc(detail::to_vertex(tk[1])));
    else if (tk.size() == 2 && tk[0] == "DEL") out.push_back(TransformStep::del(detail::to_vertex(tk[1])));
    else if (tk.size() == 3 && tk[0] == "PIVOT")
      out.push_back(TransformStep::pivot(detail::to_vertex(tk[1]), detail::to_vertex(tk[2])));
    else throw bad();
  }
  return out;
}

inline std::string format_steps(std::span<const TransformStep> steps,
                                const std::vector<std::string>& header = {}) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  for (const auto& s : steps) out += s.to_string() + "\n";
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace vmu
