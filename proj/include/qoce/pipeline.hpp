#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qoce/community_io.hpp"
#include "qoce/graph.hpp"
#include "qoce/seeding.hpp"
#include "qoce/sweeper.hpp"

namespace qoce {

unsigned default_workers();

struct DetectionConfig {
  int t0 = 3;                        // lazy walk steps
  double mu = 0.0;                   // walk mass threshold for sampling
  double alpha = 0.2;                // size penalty in the affiliation QP
  std::size_t window = 5;            // sweep window
  std::size_t min_clique = 4;
  double overlap_threshold = 0.75;
  unsigned workers = default_workers();
  bool keep_diagnostics = false;     // retain per-seed profiles and scores

  /// Throws ParameterError on out-of-range values.
  void validate() const;
};

struct Community {
  TokenSet members;
  TokenSet seed;  // the clique this community grew from
};

struct SeedDiagnostics {
  TokenSet seed;
  std::vector<SweepPoint> profile;
  std::vector<std::pair<std::string, double>> scores;  // descending by score
};

struct DetectionReport {
  std::size_t seeds = 0;
  std::size_t skipped = 0;         // sampling or solver failures
  std::size_t seed_truncated = 0;  // sweep stopped before covering the seed
  std::size_t disconnected = 0;    // emitted communities not connected in the graph
  std::size_t duplicates = 0;      // exact duplicates dropped
  std::vector<std::string> warnings;
  std::vector<SeedDiagnostics> diagnostics;  // seed order, only with keep_diagnostics
};

struct CommunitySet {
  std::vector<Community> communities;  // canonical order
  DetectionReport report;

  std::vector<TokenSet> member_sets() const;
};

/// Runs sampling, extraction and sweep for every seed of `g` on one thread.
CommunitySet detect(const Graph& g, const DetectionConfig& cfg);

/// Same output as detect(), with seeds handed to `cfg.workers` threads as
/// they become free.
CommunitySet detect_parallel(const Graph& g, const DetectionConfig& cfg);

/// Expansion stage alone, for a precomputed seed list. `workers` <= 1 runs inline.
CommunitySet expand_seeds(const Graph& g, std::span<const Clique> seeds, const DetectionConfig& cfg,
                          unsigned workers);

}  // namespace qoce
