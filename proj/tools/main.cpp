// hyped: build and query landmark-based s-distance oracles for hypergraphs.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyped/connectivity.hpp"
#include "hyped/eval.hpp"
#include "hyped/generator.hpp"
#include "hyped/hypergraph.hpp"
#include "hyped/line_graph.hpp"
#include "hyped/oracle.hpp"

using nlohmann::json;
using namespace hyped;

namespace {

std::string fmt_dist(double d, bool round_display) {
  if (std::isinf(d)) return "inf";
  char buf[32];
  if (round_display) {
    std::snprintf(buf, sizeof buf, "%.0f", std::round(d));
  } else {
    std::snprintf(buf, sizeof buf, "%g", d);
  }
  return buf;
}

struct PairList {
  std::vector<std::pair<std::string, std::string>> pairs;
};

PairList load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pairs file: " + path);
  PairList out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a >> b)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected `src TAB dst`");
    }
    out.pairs.emplace_back(a, b);
  }
  return out;
}

EdgeId parse_edge_id(const std::string& tok, std::size_t n_edges) {
  std::size_t pos = 0;
  unsigned long v = std::stoul(tok, &pos);
  if (pos != tok.size() || v >= n_edges) {
    throw std::runtime_error("unknown hyperedge id: " + tok);
  }
  return static_cast<EdgeId>(v);
}

VertexId parse_vertex(const Hypergraph& h, const std::string& tok) {
  VertexId v = h.vertex_id(tok);
  if (v == kNone) throw std::runtime_error("unknown vertex token: " + tok);
  return v;
}

AssignStrategy parse_assign(const std::string& name) {
  if (name == "sampling") return AssignStrategy::Sampling;
  if (name == "rankagg") return AssignStrategy::RankAgg;
  throw CLI::ValidationError("--assign", "must be sampling or rankagg");
}

SelectStrategy parse_select(const std::string& name) {
  if (name == "random") return SelectStrategy::Random;
  if (name == "degree") return SelectStrategy::Degree;
  if (name == "farthest") return SelectStrategy::Farthest;
  if (name == "bestcover") return SelectStrategy::BestCover;
  if (name == "betweenness") return SelectStrategy::Betweenness;
  throw CLI::ValidationError("--select", "unknown selection strategy");
}

// Dense label ids for the topk candidate filter; kNone = unlabeled.
std::vector<std::uint32_t> dense_labels(
    const std::unordered_map<std::string, std::string>& raw,
    const std::function<std::optional<std::string>(std::uint32_t)>& token_of,
    std::size_t universe) {
  std::unordered_map<std::string, std::uint32_t> label_id;
  std::vector<std::uint32_t> out(universe, kNone);
  for (std::uint32_t i = 0; i < universe; ++i) {
    auto tok = token_of(i);
    if (!tok) continue;
    auto it = raw.find(*tok);
    if (it == raw.end()) continue;
    auto [slot, inserted] =
        label_id.try_emplace(it->second, static_cast<std::uint32_t>(label_id.size()));
    out[i] = slot->second;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landmark-based s-distance oracles for hypergraphs"};
  app.require_subcommand(1);

  std::string input, oracle_path, out_path, pairs_path, labels_path;
  std::uint32_t s_max = 10, d_min = 4, s = 1, k = 10, per_s = 10;
  std::uint64_t budget_q = 0, seed = 0;
  double budget_l = 0, alpha = 0.2, beta = 0.6, cross_frac = 0.2;
  std::string assign = "sampling", select = "degree", type = "hh";
  unsigned threads = 0;
  bool augmented = false, exact = false, round_display = false, dedupe = false;
  bool query_vertex = false;
  std::string rows_path, kind = "edge";

  auto* c_components = app.add_subcommand("components", "s-connected components");
  c_components->add_option("--input", input, "hypergraph file")->required();
  c_components->add_option("--s-max", s_max, "largest overlap level to report");
  c_components->add_flag("--dedupe", dedupe, "drop duplicate hyperedges on load");

  auto* c_linegraph = app.add_subcommand("linegraph", "(s-)line graph edges");
  c_linegraph->add_option("--input", input, "hypergraph file")->required();
  c_linegraph->add_option("--s", s, "keep only pairs overlapping in >= s vertices");
  c_linegraph->add_flag("--augmented", augmented,
                        "add vertex nodes and membership edges");

  auto* c_build = app.add_subcommand("build", "build an oracle");
  c_build->add_option("--input", input, "hypergraph file")->required();
  c_build->add_option("--out", out_path, "oracle output file")->required();
  c_build->add_option("--s-max", s_max, "largest overlap level indexed");
  c_build->add_option("--d-min", d_min,
                      "components this small use the average-distance table");
  c_build->add_option("--budget-q", budget_q,
                      "max stored distance pairs (overrides --budget-l)");
  c_build->add_option("--budget-l", budget_l,
                      "budget as a multiple of the hyperedge count");
  c_build->add_option("--alpha", alpha, "sampling weight of component size");
  c_build->add_option("--beta", beta, "sampling weight of the overlap level");
  c_build->add_option("--assign", assign, "landmark assignment: sampling|rankagg");
  c_build->add_option("--select", select,
                      "landmark selection: random|degree|farthest|bestcover|betweenness");
  c_build->add_option("--seed", seed, "random seed");
  c_build->add_option("--threads", threads, "flood threads (0 = hardware)");
  c_build->add_flag("--dedupe", dedupe, "drop duplicate hyperedges on load");

  auto* c_query = app.add_subcommand("query", "estimate pair distances");
  c_query->add_option("--oracle", oracle_path, "oracle file")->required();
  c_query->add_option("--input", input,
                      "hypergraph file (required for vv/ve queries)");
  c_query->add_option("--type", type, "query kind")
      ->check(CLI::IsMember({"hh", "vv", "ve"}));
  c_query->add_option("--s", s, "overlap level")->required();
  c_query->add_option("--pairs", pairs_path, "file of src/dst pairs, one per line")
      ->required();
  c_query->add_flag("--round", round_display, "print rounded integer estimates");

  auto* c_profile = app.add_subcommand("profile", "per-s distance profiles");
  c_profile->add_option("--oracle", oracle_path, "oracle file")->required();
  c_profile->add_option("--pairs", pairs_path, "file of hyperedge id pairs")
      ->required();
  c_profile->add_flag("--round", round_display, "print rounded integer estimates");

  auto* c_topk = app.add_subcommand("topk", "label-filtered nearest neighbors");
  c_topk->add_option("--oracle", oracle_path, "oracle file")->required();
  c_topk->add_option("--input", input, "hypergraph file")->required();
  c_topk->add_option("--labels", labels_path, "entity-label TSV")->required();
  c_topk->add_option("--query", out_path, "query id/token")->required();
  c_topk->add_option("--k", k, "neighbors to return");
  c_topk->add_option("--s", s, "overlap level")->required();
  c_topk->add_flag("--vertex", query_vertex, "query id names a vertex");
  c_topk->add_flag("--exact", exact, "rank by BFS ground truth");

  auto* c_sample = app.add_subcommand("sample-queries", "stratified query batch");
  c_sample->add_option("--input", input, "hypergraph file")->required();
  c_sample->add_option("--s-max", s_max, "largest overlap level sampled");
  c_sample->add_option("--per-s", per_s, "same-component pairs per level");
  c_sample->add_option("--cross-frac", cross_frac,
                       "cross-component pairs as a fraction of --per-s");
  c_sample->add_option("--seed", seed, "random seed");
  c_sample->add_option("--out", out_path, "query batch output file")->required();

  auto* c_eval = app.add_subcommand("eval", "accuracy/timing report (JSON)");
  c_eval->add_option("--oracle", oracle_path, "oracle file")->required();
  c_eval->add_option("--input", input, "hypergraph file")->required();
  c_eval->add_option("--per-s", per_s, "same-component pairs per level");
  c_eval->add_option("--cross-frac", cross_frac,
                     "cross-component pairs as a fraction of --per-s");
  c_eval->add_option("--seed", seed, "random seed");
  c_eval->add_option("--rows", rows_path, "optional per-query TSV");
  c_eval->add_option("--off-seconds", budget_l,
                     "build time to echo into the report");

  auto* c_centrality = app.add_subcommand("centrality", "s-closeness centrality");
  c_centrality->add_option("--oracle", oracle_path, "oracle file")->required();
  c_centrality->add_option("--input", input, "hypergraph file")->required();
  c_centrality->add_option("--s", s, "overlap level")->required();
  c_centrality->add_option("--kind", kind, "entities to score")
      ->check(CLI::IsMember({"edge", "vertex", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    LoadOptions lo{dedupe};
    if (*c_components) {
      Hypergraph h = load_hypergraph(input, lo);
      std::uint32_t cap = std::min(s_max, h.max_edge_size());
      auto [cc, ledger] = find_connected_components(h, cap);
      for (std::uint32_t level = 1; level <= cap; ++level) {
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
          if (cc.comp_of[level - 1][e] != kNone) {
            std::cout << level << "\t" << e << "\t" << cc.comp_of[level - 1][e]
                      << "\n";
          }
        }
      }
      std::cerr << "edges=" << h.num_edges() << " s_max=" << cap
                << " overlap_increments=" << ledger.overlap_increments << "\n";
    } else if (*c_linegraph) {
      Hypergraph h = load_hypergraph(input, lo);
      if (augmented) {
        AugmentedLineGraph alg = build_augmented_line_graph(h);
        for (const auto& e : alg.weighted_edges) {
          std::cout << e.e << "\t" << e.f << "\t" << e.weight << "\n";
        }
        for (const auto& [v, e] : alg.membership_edges) {
          std::cout << "v" << v << "\t" << e << "\t0\n";
        }
      } else {
        LineGraph lg = build_line_graph(h);
        if (s >= 2) lg = s_line_graph(lg, s);
        for (const auto& e : lg.edges) {
          std::cout << e.e << "\t" << e.f << "\t" << e.weight << "\n";
        }
      }
    } else if (*c_build) {
      Hypergraph h = load_hypergraph(input, lo);
      AssignmentConfig cfg;
      cfg.budget_q = budget_q;
      cfg.budget_l = budget_l;
      cfg.d_min = d_min;
      cfg.alpha = alpha;
      cfg.beta = beta;
      cfg.strategy = parse_assign(assign);
      cfg.selection = parse_select(select);
      cfg.seed = seed;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      std::uint32_t cap = std::min(s_max, std::max(1u, h.max_edge_size()));
      BuildReport report;
      Oracle o = build_oracle(h, cfg, cap, &report, threads);
      save_oracle(o, out_path);
      std::cerr << "config input=" << input << " s_max=" << cap
                << " d_min=" << d_min << " assign=" << assign
                << " select=" << select << " seed=" << seed << "\n";
      std::cerr << "off_seconds=" << report.off_seconds
                << " landmarks=" << report.n_landmarks
                << " label_triples=" << report.label_triples
                << " q_est=" << report.q_est << "\n";
    } else if (*c_query) {
      Oracle o = load_oracle(oracle_path);
      std::optional<Hypergraph> h;
      if (type != "hh") {
        if (input.empty()) {
          std::cerr << "error: --input is required for vv/ve queries\n";
          return 2;
        }
        h = load_hypergraph(input, lo);
      }
      for (const auto& [a, b] : load_pairs(pairs_path).pairs) {
        DistanceEstimate est;
        if (type == "hh") {
          est = estimate_h2h(o, parse_edge_id(a, o.n_edges),
                             parse_edge_id(b, o.n_edges), s);
        } else if (type == "vv") {
          est = estimate_v2v(o, *h, parse_vertex(*h, a), parse_vertex(*h, b), s);
        } else {
          est = estimate_v2e(o, *h, parse_vertex(*h, a),
                             parse_edge_id(b, o.n_edges), s);
        }
        std::cout << a << "\t" << b << "\t" << fmt_dist(est.lb, round_display)
                  << "\t" << fmt_dist(est.ub, round_display) << "\t"
                  << fmt_dist(est.estimate, round_display) << "\t"
                  << to_string(est.status) << "\n";
      }
    } else if (*c_profile) {
      Oracle o = load_oracle(oracle_path);
      for (const auto& [a, b] : load_pairs(pairs_path).pairs) {
        EdgeId e = parse_edge_id(a, o.n_edges), f = parse_edge_id(b, o.n_edges);
        DistanceProfile profile = profile_h2h(o, e, f);
        for (const auto& est : profile.entries) {
          std::cout << a << "\t" << b << "\t" << est.s << "\t"
                    << fmt_dist(est.lb, round_display) << "\t"
                    << fmt_dist(est.ub, round_display) << "\t"
                    << fmt_dist(est.estimate, round_display) << "\t"
                    << to_string(est.status) << "\n";
        }
      }
    } else if (*c_topk) {
      Oracle o = load_oracle(oracle_path);
      Hypergraph h = load_hypergraph(input, lo);
      auto raw = load_labels(labels_path);
      TopKQuery q;
      q.query_is_vertex = query_vertex;
      std::vector<std::uint32_t> entity_labels;
      if (query_vertex) {
        q.id = parse_vertex(h, out_path);
        entity_labels = dense_labels(
            raw,
            [&](std::uint32_t v) -> std::optional<std::string> {
              return h.vertex_tokens().empty() ? std::to_string(v)
                                               : h.vertex_tokens()[v];
            },
            h.num_vertices());
      } else {
        q.id = parse_edge_id(out_path, o.n_edges);
        entity_labels = dense_labels(
            raw,
            [&](std::uint32_t e) -> std::optional<std::string> {
              return std::to_string(e);
            },
            h.num_edges());
      }
      std::optional<AdjacencyCache> cache;
      if (exact) cache.emplace(h);
      auto ranked = top_k_neighbors(o, h, q, s, k, entity_labels,
                                    exact ? &*cache : nullptr);
      for (const auto& r : ranked) {
        std::cout << r.id << "\t" << fmt_dist(r.distance, false) << "\n";
      }
    } else if (*c_sample) {
      Hypergraph h = load_hypergraph(input, lo);
      std::uint32_t cap = std::min(s_max, std::max(1u, h.max_edge_size()));
      auto [cc, ledger] = find_connected_components(h, cap);
      QueryBatch batch = sample_queries(h, cc, per_s, cross_frac, seed);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write: " + out_path);
      for (const Query& q : batch.queries) {
        out << q.src << "\t" << q.dst << "\t" << q.s << "\n";
      }
      std::cerr << "queries=" << batch.queries.size()
                << " empty_levels=" << batch.empty_levels.size() << "\n";
    } else if (*c_eval) {
      Oracle o = load_oracle(oracle_path);
      Hypergraph h = load_hypergraph(input, lo);
      AdjacencyCache cache(h);
      auto [cc, ledger] = find_connected_components(h, o.s_max);
      QueryBatch batch = sample_queries(h, cc, per_s, cross_frac, seed);
      EvalReport report = evaluate(o, h, batch, cache);
      report.off_seconds = budget_l;
      json j{{"mae", report.mae},
             {"rmse", report.rmse},
             {"time_per_query_us", report.time_per_query_us},
             {"off_seconds", report.off_seconds},
             {"l1_quantiles",
              {{"p50", report.l1_p50},
               {"p90", report.l1_p90},
               {"p99", report.l1_p99},
               {"max", report.l1_max}}},
             {"coverage_rate", report.coverage_rate},
             {"reach_error_rate", report.reach_error_rate},
             {"n_queries", report.n_queries},
             {"n_scored", report.n_scored}};
      if (report.n_scored == 0) {
        std::cerr << "warning: no finite-finite pairs; error metrics are NaN\n";
      }
      std::cout << j.dump(2) << "\n";
      if (!rows_path.empty()) {
        std::ofstream rows(rows_path);
        if (!rows) throw std::runtime_error("cannot write: " + rows_path);
        for (const auto& r : report.rows) {
          rows << r.q.src << "\t" << r.q.dst << "\t" << r.q.s << "\t"
               << fmt_dist(r.truth, false) << "\t" << fmt_dist(r.est.lb, false)
               << "\t" << fmt_dist(r.est.ub, false) << "\t"
               << fmt_dist(r.est.estimate, false) << "\t"
               << to_string(r.est.status) << "\n";
        }
      }
    } else if (*c_centrality) {
      Oracle o = load_oracle(oracle_path);
      Hypergraph h = load_hypergraph(input, lo);
      AdjacencyCache cache(h);
      auto [cc, ledger] = find_connected_components(h, o.s_max);
      std::vector<double> ests, truths;
      auto emit = [&](const char* what, std::uint32_t id,
                      std::optional<double> ex, std::optional<double> est) {
        if (!ex || !est) return;
        std::cout << what << "\t" << id << "\t" << s << "\t"
                  << fmt_dist(*ex, false) << "\t" << fmt_dist(*est, false)
                  << "\n";
        truths.push_back(*ex);
        ests.push_back(*est);
      };
      if (kind != "vertex") {
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
          emit("edge", e, s_closeness_exact(h, cache, cc, e, s),
               s_closeness_estimated(o, cc, e, s));
        }
      }
      if (kind != "edge") {
        for (VertexId v = 0; v < h.num_vertices(); ++v) {
          emit("vertex", v, vertex_s_closeness_exact(h, cache, cc, v, s),
               vertex_s_closeness_estimated(o, h, cc, v, s));
        }
      }
      MapeLar agg = mape_lar(ests, truths);
      std::cerr << "mape=" << agg.mape << " lar=" << agg.lar
                << " n=" << agg.n_mape << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OracleFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
