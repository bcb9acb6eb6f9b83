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

#include <memory>
#include <string>

#include "vmu/certificate.hpp"
#include "vmu/synth_geometric.hpp"
#include "vmu/synth_rank.hpp"

namespace vmu {

enum class Method { Auto, Rank, Pairing, OneSide, Full, Reduced };

inline Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "rank") return Method::Rank;
  if (s == "pairing") return Method::Pairing;
  if (s == "oneside") return Method::OneSide;
  if (s == "full") return Method::Full;
  if (s == "reduced") return Method::Reduced;
  throw InputError("unknown method '" + s + "'");
}

/// The pairs of a target that is a perfect matching on its vertices.
inline std::vector<Edge> matching_pairs(const TargetGraph& t) {
  std::vector<int> deg(t.size(), 0);
  auto pos = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) - t.vertices.begin());
  };
  for (auto [a, b] : t.edges) {
    ++deg[pos(a)];
    ++deg[pos(b)];
  }
  for (int d : deg)
    if (d != 1) throw InputError("pairing target must be a perfect matching");
  return t.edges;
}

/// Dispatches targets on a tagged host to the matching construction. The
/// projective plane behind a geometric host is built once.
class Synthesizer {
 public:
  explicit Synthesizer(const Graph& host, GeometricOptions opt = {}) : host_(host), opt_(opt) {
    const auto tag = host.tag();
    if (tag.kind == Provenance::Projective || tag.kind == Provenance::Reduced) {
      plane_ = std::make_shared<ProjectivePlane>(tag.parameter);
      const std::size_t expect = tag.kind == Provenance::Projective ? 2 * plane_->size() : plane_->size();
      if (host.capacity() != expect)
        throw InputError("host size does not match its tag q=" + std::to_string(tag.parameter));
    }
  }

  const Graph& host() const noexcept { return host_; }
  const ProjectivePlane* plane() const noexcept { return plane_.get(); }

  CertificateOutcome operator()(const TargetGraph& t, Method m = Method::Auto) const {
    switch (m) {
      case Method::Rank: return synth_bipartite(host_, t);
      case Method::Pairing: return synth_pairing_projective(need_plane(Provenance::Projective), matching_pairs(t), opt_);
      case Method::OneSide: return synth_vmu_oneside(need_plane(Provenance::Projective), t, opt_);
      case Method::Full: return synth_vmu_full(need_plane(Provenance::Projective), t, opt_);
      case Method::Reduced: return synth_vmu_reduced(need_plane(Provenance::Reduced), t, opt_);
      case Method::Auto: break;
    }
    switch (host_.tag().kind) {
      case Provenance::Projective: return projective_auto(t);
      case Provenance::Reduced: return synth_vmu_reduced(*plane_, t, opt_);
      case Provenance::RandomBipartite: return synth_bipartite(host_, t);
      case Provenance::None: break;
    }
    throw InputError("host graph carries no provenance tag; choose a method explicitly");
  }

 private:
  const ProjectivePlane& need_plane(Provenance kind) const {
    if (!plane_ || host_.tag().kind != kind)
      throw InputError(std::string("method needs a ") + (kind == Provenance::Projective ? "projective" : "reduced") +
                       " host");
    return *plane_;
  }

  CertificateOutcome projective_auto(const TargetGraph& t) const {
    const auto n = static_cast<Vertex>(plane_->size());
    bool points = true, lines = true;
    for (Vertex v : t.vertices) (v < n ? lines : points) = false;
    const long long k = static_cast<long long>(t.size());
    if (points || lines) {
      if (oneside_bound_holds(k, plane_->q())) return synth_vmu_oneside(*plane_, t, opt_);
      if (!opt_.enforce_bound) {
        auto one = synth_vmu_oneside(*plane_, t, opt_);
        if (one) return one;
      }
    }
    return synth_vmu_full(*plane_, t, opt_);
  }

  Graph host_;
  GeometricOptions opt_;
  std::shared_ptr<const ProjectivePlane> plane_;
};

inline CertificateOutcome synth_auto(const Graph& host, const TargetGraph& t, GeometricOptions opt = {}) {
  return Synthesizer(host, opt)(t);
}

}  // namespace vmu
