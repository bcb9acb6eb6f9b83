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


// Command-line entry point. Exit codes: 0 success, 1 a verification or
// synthesis failed, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vmu/vmu.hpp"

namespace {

using namespace vmu;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Provenance header shared by every output: tool version, the command line
// (minus the program name) and the seed.
struct RunInfo {
  std::string command;
  std::uint64_t seed = 0;

  std::vector<std::string> header(std::vector<std::string> extra = {}) const {
    std::vector<std::string> h{std::string("vmu ") + kVersion, "command: " + command, "seed: " + std::to_string(seed)};
    h.insert(h.end(), extra.begin(), extra.end());
    return h;
  }
};

std::string comment_block(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += "# " + l + "\n";
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_text_file(path)).graph; }

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(static_cast<Vertex>(std::stoul(tok)));
  return out;
}

std::vector<Edge> parse_edge_arg(const std::string& s) {
  std::vector<Edge> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw InputError("edge '" + tok + "' must look like u-v");
    out.emplace_back(static_cast<Vertex>(std::stoul(tok.substr(0, dash))),
                     static_cast<Vertex>(std::stoul(tok.substr(dash + 1))));
  }
  return out;
}

// "3..15,20,25" -> {3, 4, ..., 15, 20, 25}
std::vector<std::int64_t> parse_k_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoll(tok));
    } else {
      const auto lo = std::stoll(tok.substr(0, dots)), hi = std::stoll(tok.substr(dots + 2));
      if (hi < lo) throw InputError("empty range '" + tok + "'");
      for (auto k = lo; k <= hi; ++k) out.push_back(k);
    }
  }
  if (out.empty()) throw InputError("no k values given");
  return out;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string out;
  for (auto [u, v] : edges) out += (out.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return out.empty() ? "(none)" : out;
}

std::string vertices_text(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::vector<Vertex> pool_for(const Graph& g, const std::string& which) {
  if (which == "all") return g.vertices();
  if (!g.has_bipartition()) throw InputError("--pool " + which + " needs a bipartite graph");
  if (which == "left") return g.left();
  if (which == "right") return g.right();
  throw InputError("--pool must be all, left or right");
}

int report_check(const CheckResult& r, const std::string& what, const RunInfo& info) {
  std::cout << comment_block(info.header());
  std::cout << what << ": " << (r.pass ? "pass" : "fail") << "\n";
  std::cout << "subsets " << r.subsets << "\ntargets " << r.targets << "\n";
  if (r.counterexample) {
    std::cout << "counterexample k " << vertices_text(r.counterexample->k) << "\n";
    std::cout << "counterexample target " << edges_text(r.counterexample->target) << "\n";
    std::cout << "counterexample reason " << r.counterexample->reason << "\n";
  }
  return r.pass ? kOk : kFailed;
}

std::string certificate_document(const SynthesisCertificate& c, const RunInfo& info) {
  std::vector<std::string> h = info.header();
  h.push_back("kind: " + kind_name(c.kind));
  if (c.q) h.push_back("q: " + std::to_string(c.q));
  h.push_back("k: " + vertices_text(c.k));
  h.push_back("target: " + edges_text(c.target_edges));
  for (const auto& [name, vs] : c.named_sets()) h.push_back("set " + name + ": " + vertices_text(vs));
  for (const auto& ch : c.checks) {
    std::ostringstream os;
    os << "check " << ch.label << ": excluded " << ch.excluded << " avoid " << ch.avoid_size << " cap " << ch.cap
       << " available " << ch.available << (ch.holds() ? " ok" : " VIOLATED");
    h.push_back(os.str());
  }
  for (auto [a, b] : c.relocations) h.push_back("relocated " + std::to_string(a) + " via " + std::to_string(b));
  h.push_back("steps: " + std::to_string(c.steps.size()));
  return format_steps(c.steps, h);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-minor universal graphs: construction, synthesis, bounds and LOCC protocols"};
  app.require_subcommand(1);
  app.fallthrough();  // global options such as --threads may follow the subcommand
  app.set_version_flag("--version", std::string("vmu ") + kVersion);

  RunInfo info;
  for (int i = 1; i < argc; ++i) info.command += (i > 1 ? " " : "") + std::string(argv[i]);

  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: VMU_THREADS or all cores)")->check(CLI::PositiveNumber);

  // construct ---------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build a host graph as an edge list");
  std::optional<std::uint64_t> c_proj, c_red;
  std::vector<std::size_t> c_rand;
  std::string c_out, c_coords;
  std::uint64_t c_seed = 0;
  auto* o_proj = construct->add_option("--projective", c_proj, "incidence graph of PG(2,q)");
  auto* o_red = construct->add_option("--reduced", c_red, "reduced graph on the points of PG(2,q)");
  auto* o_rand = construct->add_option("--random", c_rand, "random bipartite graph with L R vertices")->expected(2);
  o_proj->excludes(o_red)->excludes(o_rand);
  o_red->excludes(o_rand);
  construct->add_option("--seed", c_seed, "seed for --random");
  construct->add_option("-o,--output", c_out, "edge-list output (default stdout)");
  construct->add_option("--coords", c_coords, "write the index,x,y,z coordinate CSV here");

  // synth -------------------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "synthesize a sequence inducing a target graph");
  std::string s_graph, s_target, s_k, s_edges, s_method = "auto", s_out, s_json;
  bool s_no_enforce = false;
  synth->add_option("--graph", s_graph, "host edge list")->required();
  auto* o_target = synth->add_option("--target", s_target, "target edge list over host labels");
  auto* s_k_opt = synth->add_option("--k", s_k, "target vertices, comma separated");
  synth->add_option("--edges", s_edges, "target edges like 0-1,2-3 (with --k)")->needs(s_k_opt);
  o_target->excludes(s_k_opt);
  synth->add_option("--method", s_method, "rank|pairing|oneside|full|reduced|auto");
  synth->add_flag("--no-enforce", s_no_enforce, "attempt geometric constructions outside their proven range");
  synth->add_option("-o,--output", s_out, "certificate document with steps (default stdout)");
  synth->add_option("--json", s_json, "machine-readable certificate");

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "sweep a host with a synthesizer, or replay a certificate");
  verify->require_subcommand(1);
  std::string v_graph, v_method = "auto", v_pool = "all", v_cert;
  std::size_t v_k = 2, v_sample = 0;
  std::uint64_t v_seed = 0;
  bool v_no_enforce = false, v_checks = false;
  auto add_sweep_flags = [&](CLI::App* sc) {
    sc->add_option("--graph", v_graph, "host edge list")->required();
    sc->add_option("--k", v_k, "subset size (pairs for pair)")->required();
    sc->add_option("--method", v_method, "synthesizer method");
    sc->add_option("--pool", v_pool, "candidate vertices: all|left|right");
    sc->add_option("--sample", v_sample, "check this many seeded random subsets instead of all");
    sc->add_option("--seed", v_seed, "seed for --sample");
    sc->add_flag("--no-enforce", v_no_enforce, "attempt constructions outside their proven range");
    sc->add_flag("--require-checks", v_checks, "also require every avoidance check to hold");
  };
  auto* v_vmu = verify->add_subcommand("vmu", "every graph on every k-subset");
  add_sweep_flags(v_vmu);
  auto* v_pair = verify->add_subcommand("pair", "every pairing on every 2k-subset");
  add_sweep_flags(v_pair);
  auto* v_cert_cmd = verify->add_subcommand("cert", "replay a JSON certificate on a host");
  v_cert_cmd->add_option("--graph", v_graph, "host edge list")->required();
  v_cert_cmd->add_option("--cert", v_cert, "certificate JSON")->required();

  // bound -------------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "probability that a random bipartite host is k-VMU");
  std::int64_t b_k = 0, b_l = 0, b_r = 0;
  bool b_exact = false, b_csv = false;
  double b_pstep = 0.25;
  bound->add_option("--k", b_k, "subset size k")->required();
  bound->add_option("--left", b_l, "left side size L")->required();
  bound->add_option("--right", b_r, "right side size R")->required();
  bound->add_flag("--exact", b_exact, "exact binomial tail instead of the Chernoff form");
  bound->add_option("--pstep", b_pstep, "per-vertex rank-increase probability for --exact");
  bound->add_flag("--csv", b_csv, "one CSV row instead of the report");

  // table -------------------------------------------------------------------
  auto* table = app.add_subcommand("table", "smallest certified host sizes per k");
  std::string t_k = "3..15", t_mode = "exists", t_eval = "chernoff", t_out;
  double t_pstep = 0.25;
  std::int64_t t_cap = 100000;
  table->add_option("--k", t_k, "k values, e.g. 3..15,20,25");
  table->add_option("--mode", t_mode, "exists | prob:P");
  table->add_option("--evaluator", t_eval, "chernoff | exact");
  table->add_option("--pstep", t_pstep, "per-vertex rank-increase probability for exact");
  table->add_option("--max-total", t_cap, "give up above this many vertices");
  table->add_option("-o,--output", t_out, "CSV output (default stdout)");

  // mc ----------------------------------------------------------------------
  auto* mc = app.add_subcommand("mc", "Monte Carlo success rate of relocation + rank synthesis");
  McConfig m_cfg;
  bool m_per_graph = false;
  mc->add_option("--left", m_cfg.left, "left side size L")->required();
  mc->add_option("--right", m_cfg.right, "right side size R")->required();
  mc->add_option("--k", m_cfg.k, "subset size k")->required();
  mc->add_option("--graphs", m_cfg.graphs, "number of sampled hosts")->required();
  mc->add_option("--trials", m_cfg.trials, "trials per host")->required();
  mc->add_option("--seed", m_cfg.seed, "base seed")->required();
  mc->add_flag("--per-graph", m_per_graph, "also list per-graph counts");

  // oracle ------------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "brute-force vertex-minor decisions (at most 8 vertices)");
  oracle->require_subcommand(1);
  std::string o_g, o_h, o_method = "bruteforce";
  std::size_t o_k = 2;
  bool o_interleaved = false;
  auto* o_vm = oracle->add_subcommand("vm", "is h a vertex-minor of g");
  o_vm->set_help_flag("--help", "print this help");  // frees -h for --h
  o_vm->add_option("--g", o_g, "host edge list")->required();
  o_vm->add_option("--h", o_h, "candidate vertex-minor edge list")->required();
  o_vm->add_flag("--interleaved", o_interleaved, "explore deletions as moves");
  auto* o_vmu = oracle->add_subcommand("vmu", "exhaustive k-VMU check");
  o_vmu->add_option("--g", o_g, "host edge list")->required();
  o_vmu->add_option("--k", o_k, "subset size k")->required();
  o_vmu->add_option("--method", o_method, "bruteforce or a synthesizer method");
  auto* o_pair = oracle->add_subcommand("pair", "exhaustive k-pairability check");
  o_pair->add_option("--g", o_g, "host edge list")->required();
  o_pair->add_option("--k", o_k, "number of pairs k")->required();
  o_pair->add_option("--method", o_method, "bruteforce or a synthesizer method");

  // protocols ---------------------------------------------------------------
  auto* emitp = app.add_subcommand("emit-protocol", "LOCC protocol for a step sequence");
  std::string e_graph, e_steps, e_out;
  bool e_json = false;
  emitp->add_option("--graph", e_graph, "host edge list")->required();
  emitp->add_option("--steps", e_steps, "step sequence, one LC v, DEL v or PIVOT u v per line")->required();
  emitp->add_flag("--json", e_json, "structured JSON instead of tab-separated text");
  emitp->add_option("-o,--output", e_out, "protocol output (default stdout)");

  auto* verp = app.add_subcommand("verify-protocol", "simulate every outcome branch of a protocol");
  std::string p_graph, p_proto, p_target;
  verp->add_option("--graph", p_graph, "host edge list")->required();
  verp->add_option("--protocol", p_proto, "protocol file (text or JSON)")->required();
  verp->add_option("--target", p_target, "target edge list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) {
      info.seed = c_seed;
      Graph g;
      std::optional<ProjectivePlane> plane;
      if (c_proj) {
        plane.emplace(*c_proj);
        g = build_incidence_graph(*plane);
      } else if (c_red) {
        plane.emplace(*c_red);
        g = build_reduced_graph(*plane);
      } else if (c_rand.size() == 2) {
        g = sample_bipartite(c_rand[0], c_rand[1], c_seed);
      } else {
        throw InputError("construct needs one of --projective, --reduced, --random");
      }
      emit(c_out, format_edge_list(g, info.header()));
      if (!c_coords.empty()) {
        if (!plane) throw InputError("--coords applies to projective and reduced graphs");
        write_text_file(c_coords, comment_block(info.header()) + coordinate_csv(*plane, c_proj.has_value()));
      }
      return kOk;
    }

    if (*synth) {
      const Graph host = load_graph(s_graph);
      TargetGraph target;
      if (!s_target.empty())
        target = TargetGraph::from_graph(load_graph(s_target));
      else if (!s_k.empty())
        target = TargetGraph(parse_vertex_list(s_k), parse_edge_arg(s_edges));
      else
        throw InputError("synth needs --target or --k");
      GeometricOptions opt;
      opt.enforce_bound = !s_no_enforce;
      auto out = Synthesizer(host, opt)(target, parse_method(s_method));
      if (!out) {
        std::cerr << "synthesis failed: " << out.failure.reason;
        if (out.failure.stuck) std::cerr << " (at vertex " << *out.failure.stuck << ")";
        std::cerr << "\n";
        return kFailed;
      }
      if (!replay_matches(host, *out)) {
        std::cerr << "internal error: certificate does not replay\n";
        return kFailed;
      }
      emit(s_out, certificate_document(*out, info));
      if (!s_json.empty()) {
        Json j = certificate_to_json(*out);
        j["provenance"] = info.header();
        write_text_file(s_json, j.dump(2) + "\n");
      }
      return kOk;
    }

    if (*verify) {
      const Graph host = load_graph(v_graph);
      if (*v_cert_cmd) {
        const auto j = Json::parse(read_text_file(v_cert));
        const auto cert = certificate_from_json(j);
        const bool ok = replay_matches(host, cert);
        const bool checks = cert.all_checks_hold();
        std::cout << comment_block(info.header());
        std::cout << "replay " << (ok ? "pass" : "fail") << "\nchecks " << (checks ? "pass" : "fail") << "\n";
        return ok && checks ? kOk : kFailed;
      }
      info.seed = v_seed;
      CheckOptions opt;
      opt.method = parse_method(v_method);
      opt.geometric.enforce_bound = !v_no_enforce;
      opt.require_checks = v_checks;
      opt.threads = threads;
      opt.pool = pool_for(host, v_pool);
      opt.samples = v_sample;
      opt.seed = v_seed;
      if (*v_vmu) return report_check(check_vmu_exhaustive(host, v_k, opt), "vmu k=" + std::to_string(v_k), info);
      return report_check(check_pairable_exhaustive(host, v_k, opt), "pair k=" + std::to_string(v_k), info);
    }

    if (*bound) {
      BoundParams bp{b_k, b_l, b_r, b_pstep};
      const auto rep = evaluate_bound(bp, b_exact ? Evaluator::ExactTail : Evaluator::Chernoff);
      std::ostringstream os;
      os << std::setprecision(10);
      if (b_csv) {
        os << comment_block(info.header());
        os << "k,left,right,evaluator,rank_term,pivot_term,log_union,log_failure,lower_bound\n";
        os << b_k << ',' << b_l << ',' << b_r << ',' << evaluator_name(rep.evaluator) << ',' << rep.rank_term() << ','
           << rep.pivot_term() << ',' << rep.log_union << ',' << rep.log_failure << ',' << rep.lower_bound << '\n';
      } else {
        os << comment_block(info.header());
        os << "k " << b_k << "  |L| " << b_l << "  |R| " << b_r << "  n " << b_l + b_r << "\n";
        os << "evaluator " << evaluator_name(rep.evaluator);
        if (b_exact) os << " (p_step " << b_pstep << ")";
        os << "\n";
        os << "C(k,2)            " << bp.pairs() << "\n";
        os << "mu                " << rep.mu << "\n";
        os << "delta             " << rep.delta << "\n";
        os << "rank term         " << rep.rank_term() << "  (ln " << rep.log_rank_term << ")\n";
        os << "pivot term        " << rep.pivot_term() << "  (ln " << rep.log_pivot_term << ")\n";
        os << "C(n,k)            " << rep.union_multiplier << "  (ln " << rep.log_union << ")\n";
        os << "n H(k/n)          " << rep.log2_entropy_bound << "  (C(n,k) <= 2^this)\n";
        os << "ln failure bound  " << rep.log_failure << "\n";
        os << "lower bound       " << rep.lower_bound << (rep.lower_bound <= 0 ? "  (vacuous)" : "") << "\n";
      }
      std::cout << os.str();
      return kOk;
    }

    if (*table) {
      TableQuery q;
      q.ks = parse_k_list(t_k);
      q.evaluator = parse_evaluator(t_eval);
      q.p_step = t_pstep;
      q.max_total = t_cap;
      if (t_mode.rfind("prob:", 0) == 0)
        q.target_prob = std::stod(t_mode.substr(5));
      else if (t_mode != "exists")
        throw InputError("--mode must be exists or prob:P");
      std::ostringstream os;
      os << comment_block(info.header()) << "k,total,left,right,bound\n" << std::setprecision(6);
      for (const auto& row : table_search(q)) {
        if (row.found)
          os << row.k << ',' << row.total() << ',' << row.left << ',' << row.right << ',' << row.lower_bound << '\n';
        else
          os << row.k << ",NA,NA,NA,NA\n";
      }
      emit(t_out, os.str());
      return kOk;
    }

    if (*mc) {
      info.seed = m_cfg.seed;
      m_cfg.threads = threads;
      const auto res = monte_carlo_vmu(m_cfg);
      std::ostringstream os;
      os << comment_block(info.header()) << std::setprecision(6);
      os << "graphs " << m_cfg.graphs << "\ntrials " << res.trials << "\nsuccesses " << res.successes << "\n";
      os << "rate " << res.rate << "\nwilson95 " << res.interval.low << " " << res.interval.high << "\n";
      if (m_per_graph) {
        os << "graph,seed,successes,trials,pivot_failures,rank_failures\n";
        for (std::size_t g = 0; g < res.per_graph.size(); ++g) {
          const auto& pg = res.per_graph[g];
          os << g << ',' << pg.graph_seed << ',' << pg.successes << ',' << pg.trials << ',' << pg.pivot_failures << ','
             << pg.rank_failures << '\n';
        }
      }
      std::cout << os.str();
      return res.replay_mismatches == 0 ? kOk : kFailed;
    }

    if (*oracle) {
      const Graph g = load_graph(o_g);
      if (*o_vm) {
        const Graph h = load_graph(o_h);
        OracleOptions oo;
        oo.interleaved = o_interleaved;
        const auto res = is_vertex_minor_bruteforce(g, h, oo);
        std::cout << comment_block(info.header({"explored " + std::to_string(res.explored)}));
        std::cout << "vertex-minor " << (res.found ? "yes" : "no") << "\n";
        if (res.found) std::cout << format_steps(res.witness);
        return res.found ? kOk : kFailed;
      }
      CheckOptions opt;
      opt.threads = threads;
      if (o_method == "bruteforce")
        opt.bruteforce = true;
      else
        opt.method = parse_method(o_method);
      if (*o_vmu) return report_check(check_vmu_exhaustive(g, o_k, opt), "vmu k=" + std::to_string(o_k), info);
      return report_check(check_pairable_exhaustive(g, o_k, opt), "pair k=" + std::to_string(o_k), info);
    }

    if (*emitp) {
      const Graph g = load_graph(e_graph);
      const auto steps = parse_steps(read_text_file(e_steps));
      const auto p = emit_protocol(g, steps);
      if (e_json) {
        Json j = protocol_to_json(p);
        j["provenance"] = info.header();
        emit(e_out, j.dump(2) + "\n");
      } else {
        emit(e_out, format_protocol(p, info.header()));
      }
      return kOk;
    }

    if (*verp) {
      const Graph g = load_graph(p_graph);
      const Graph target = load_graph(p_target);
      const auto p = parse_protocol_any(read_text_file(p_proto));
      const auto rep = verify_protocol(g, p, target);
      std::cout << comment_block(info.header());
      std::cout << "protocol " << (rep.pass ? "pass" : "fail") << "\nbranches " << rep.branches << "\n";
      if (!rep.pass) {
        std::cout << "reason " << rep.message << "\n";
        if (!rep.failing_branch.empty()) {
          std::cout << "branch";
          for (std::size_t i = 0; i < rep.failing_branch.size(); ++i)
            std::cout << " m" << i << "=" << (rep.failing_branch[i] < 0 ? "-" : std::to_string(rep.failing_branch[i]));
          std::cout << "\n";
        }
      }
      return rep.pass ? kOk : kFailed;
    }
  } catch (const SequenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
