// Command-line front end: detect, seeds, eval, gen-planted.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qoce/community_io.hpp"
#include "qoce/errors.hpp"
#include "qoce/eval.hpp"
#include "qoce/graph.hpp"
#include "qoce/pipeline.hpp"
#include "qoce/seeding.hpp"

namespace {

void write_profiles(const std::string& path, const qoce::DetectionReport& report) {
  std::ofstream out(path);
  if (!out) throw qoce::Error("cannot write '" + path + "'");
  out << "seed,k,conductance\n";
  for (std::size_t i = 0; i < report.diagnostics.size(); ++i) {
    for (const auto& p : report.diagnostics[i].profile) {
      out << i << ',' << p.k << ',' << p.conductance << '\n';
    }
  }
}

void write_scores(const std::string& path, const qoce::DetectionReport& report) {
  std::ofstream out(path);
  if (!out) throw qoce::Error("cannot write '" + path + "'");
  for (std::size_t i = 0; i < report.diagnostics.size(); ++i) {
    const auto& d = report.diagnostics[i];
    out << "# seed " << i << ':';
    for (const auto& t : d.seed) out << ' ' << t;
    out << '\n';
    for (const auto& [token, score] : d.scores) out << token << ' ' << score << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping community detection grown from seed cliques"};
  app.require_subcommand(1);

  qoce::DetectionConfig cfg;
  std::string graph_path, output_path, profile_path, scores_path;
  auto* detect = app.add_subcommand("detect", "Detect overlapping communities");
  detect->add_option("--graph", graph_path, "Edge-list file")->required();
  detect->add_option("--output", output_path, "Community output file")->required();
  detect->add_option("--t0", cfg.t0, "Lazy random walk steps")->capture_default_str();
  detect->add_option("--mu", cfg.mu, "Walk mass threshold for sampling")->capture_default_str();
  detect->add_option("--alpha", cfg.alpha, "Trade-off weight of the size term")->capture_default_str();
  detect->add_option("--window", cfg.window, "Sweep window size")->capture_default_str();
  detect->add_option("--min-clique", cfg.min_clique, "Minimum seed clique size")->capture_default_str();
  detect->add_option("--overlap-threshold", cfg.overlap_threshold, "Seed overlap filter threshold")
      ->capture_default_str();
  detect->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  detect->add_option("--profile-csv", profile_path, "Write per-seed sweep profiles as CSV");
  detect->add_option("--scores", scores_path, "Write per-seed affiliation scores");

  std::string seeds_graph;
  std::size_t seeds_min = 4;
  double seeds_threshold = 0.75;
  auto* seeds = app.add_subcommand("seeds", "Dump the filtered seed cliques");
  seeds->add_option("--graph", seeds_graph, "Edge-list file")->required();
  seeds->add_option("--min-clique", seeds_min, "Minimum clique size")->capture_default_str();
  seeds->add_option("--overlap-threshold", seeds_threshold, "Overlap filter threshold")->capture_default_str();

  std::string detected_path, truth_path, eval_graph;
  auto* eval = app.add_subcommand("eval", "Average F1 of detected communities against ground truth");
  eval->add_option("--detected", detected_path, "Detected community file")->required();
  eval->add_option("--truth", truth_path, "Ground-truth community file")->required();
  eval->add_option("--graph", eval_graph, "Clean the ground truth against this graph first");

  int cliques = 0, size = 0, bridges = 0;
  std::uint64_t seed = 0;
  std::string out_graph, out_truth;
  auto* gen = app.add_subcommand("gen-planted", "Generate bridged cliques with ground truth");
  gen->add_option("--cliques", cliques, "Number of cliques")->required();
  gen->add_option("--size", size, "Clique size")->required();
  gen->add_option("--bridges", bridges, "Inter-clique edges")->required();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--out-graph", out_graph, "Edge-list output")->required();
  gen->add_option("--out-truth", out_truth, "Community output")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*detect) {
      cfg.keep_diagnostics = !profile_path.empty() || !scores_path.empty();
      cfg.validate();
      const qoce::Graph g = qoce::load_edge_list_file(graph_path);
      const auto result = qoce::detect_parallel(g, cfg);
      const auto sets = result.member_sets();
      qoce::write_communities_file(output_path, sets);
      if (!profile_path.empty()) write_profiles(profile_path, result.report);
      if (!scores_path.empty()) write_scores(scores_path, result.report);
      for (const auto& w : result.report.warnings) std::cerr << "warning: " << w << '\n';
      std::cerr << result.report.seeds << " seeds, " << sets.size() << " communities\n";
    } else if (*seeds) {
      const qoce::Graph g = qoce::load_edge_list_file(seeds_graph);
      for (const auto& c : qoce::build_seeds(g, seeds_min, seeds_threshold)) {
        for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << g.label(c[i]);
        std::cout << '\n';
      }
    } else if (*eval) {
      const auto detected = qoce::read_communities_file(detected_path);
      auto truth = qoce::read_communities_file(truth_path);
      if (!eval_graph.empty()) {
        truth = qoce::clean_ground_truth(qoce::load_edge_list_file(eval_graph), truth).truth;
      }
      std::vector<std::string> warnings;
      const double score = qoce::avg_f1(detected, truth, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
      std::printf("%.4f\n", score);
    } else if (*gen) {
      const auto data = qoce::gen_planted(cliques, size, bridges, seed);
      std::ofstream g_out(out_graph);
      if (!g_out) throw qoce::Error("cannot write '" + out_graph + "'");
      qoce::write_edge_list(g_out, data.graph);
      qoce::write_communities_file(out_truth, data.truth);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
