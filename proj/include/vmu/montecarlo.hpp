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


// Empirical success rate of pivot relocation plus rank synthesis on random
// bipartite hosts. Each graph is an independent task with its own stream;
// the aggregate is reduced in graph order so reruns are bit-identical for
// any worker count.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "vmu/parallel.hpp"
#include "vmu/random.hpp"
#include "vmu/synth_rank.hpp"

namespace vmu {

struct WilsonInterval {
  double center = 0;
  double low = 0;
  double high = 0;
  double half_width = 0;
};

inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96) {
  if (trials == 0) return {0.0, 0.0, 1.0, 0.5};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {center, std::max(0.0, center - half), std::min(1.0, center + half), half};
}

struct McConfig {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t k = 0;
  std::size_t graphs = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct GraphTrials {
  std::uint64_t graph_seed = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t pivot_failures = 0;
  std::uint64_t rank_failures = 0;
  std::uint64_t replay_mismatches = 0;  // certificate found but replay differs; a defect if nonzero
};

struct McResult {
  std::vector<GraphTrials> per_graph;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t replay_mismatches = 0;
  double rate = 0;
  WilsonInterval interval;
};

/// Uniformly random graph on the (sorted) vertex set `k`.
inline TargetGraph random_target(Rng& rng, const std::vector<Vertex>& k) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b)
      if (rng() & 1U) edges.emplace_back(k[a], k[b]);
  return TargetGraph(k, std::move(edges));
}

/// Runs `trials` uniform (K, target) draws against one host.
inline GraphTrials run_trials(const Graph& host, std::size_t k, std::size_t trials, Rng& rng) {
  if (!host.has_bipartition()) throw InputError("Monte Carlo host needs a bipartition");
  if (k < 2 || k > host.size()) throw InputError("k must lie in [2, |V|]");
  const auto labels = host.vertices();
  GraphTrials out;
  out.graph_seed = host.tag().parameter;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Vertex> kset;
    for (auto i : sample_subset(rng, labels.size(), k)) kset.push_back(labels[i]);
    const TargetGraph target = random_target(rng, kset);
    ++out.trials;
    auto cert = synth_bipartite(host, target);
    if (!cert) {
      // Only the relocation phase reports a blocking vertex.
      ++(cert.failure.stuck ? out.pivot_failures : out.rank_failures);
      continue;
    }
    if (replay_matches(host, *cert))
      ++out.successes;
    else
      ++out.replay_mismatches;
  }
  return out;
}

inline McResult summarize(std::vector<GraphTrials> per_graph) {
  McResult res;
  res.per_graph = std::move(per_graph);
  for (const auto& g : res.per_graph) {
    res.successes += g.successes;
    res.trials += g.trials;
    res.replay_mismatches += g.replay_mismatches;
  }
  res.rate = res.trials ? static_cast<double>(res.successes) / static_cast<double>(res.trials) : 0.0;
  res.interval = wilson_interval(res.successes, res.trials);
  return res;
}

inline McResult monte_carlo_vmu(const McConfig& cfg) {
  if (cfg.left < 1 || cfg.right < 1 || cfg.graphs < 1 || cfg.trials < 1)
    throw InputError("Monte Carlo counts must be at least 1");
  std::vector<GraphTrials> per_graph(cfg.graphs);
  parallel_for(cfg.graphs, cfg.threads, [&](std::size_t g) {
    Rng rng = make_rng(cfg.seed, g);
    const std::uint64_t graph_seed = rng();
    const Graph host = sample_bipartite(cfg.left, cfg.right, graph_seed);
    per_graph[g] = run_trials(host, cfg.k, cfg.trials, rng);
  });
  return summarize(std::move(per_graph));
}

/// Same statistics against a fixed host, one stream per trial batch.
inline McResult monte_carlo_on_host(const Graph& host, std::size_t k, std::size_t trials, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0);
  return summarize({run_trials(host, k, trials, rng)});
}

}  // namespace vmu
