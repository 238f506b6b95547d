#include "qoce/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <thread>

#include "qoce/errors.hpp"
#include "qoce/extractor.hpp"
#include "qoce/sampler.hpp"

namespace qoce {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void DetectionConfig::validate() const {
  if (t0 < 1) throw ParameterError("t0 must be >= 1");
  if (!(mu >= 0.0)) throw ParameterError("mu must be >= 0");
  if (!(alpha >= 0.0)) throw ParameterError("alpha must be >= 0");
  if (window < 1) throw ParameterError("window must be >= 1");
  if (min_clique < 2) throw ParameterError("min-clique must be >= 2");
  if (!(overlap_threshold > 0.0 && overlap_threshold <= 1.0)) {
    throw ParameterError("overlap threshold must be in (0, 1]");
  }
  if (workers < 1) throw ParameterError("workers must be >= 1");
}

std::vector<TokenSet> CommunitySet::member_sets() const {
  std::vector<TokenSet> out;
  out.reserve(communities.size());
  for (const auto& c : communities) out.push_back(c.members);
  return out;
}

namespace {

TokenSet tokens_of(const Graph& g, std::span<const Vertex> vs) {
  std::vector<std::string> t;
  t.reserve(vs.size());
  for (Vertex v : vs) t.push_back(g.label(v));
  return make_token_set(std::move(t));
}

struct SeedOutcome {
  std::optional<Community> community;
  std::vector<std::string> warnings;
  bool skipped = false;
  bool seed_truncated = false;
  bool disconnected = false;
  std::optional<SeedDiagnostics> diagnostics;
};

std::string seed_name(const Graph& g, const Clique& seed) {
  std::string s = "{";
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (i) s += ' ';
    s += g.label(seed[i]);
  }
  return s + "}";
}

SeedOutcome expand_seed(const Graph& g, const Clique& seed, const DetectionConfig& cfg) {
  SeedOutcome out;
  try {
    const SampledSubgraph gs = sample(g, seed, cfg.t0, cfg.mu);
    if (gs.size() < 2) {
      out.skipped = true;
      out.warnings.push_back("seed " + seed_name(g, seed) + ": sample too small to sweep");
      return out;
    }
    const AffiliationVector y = solve_affiliation(build_problem(gs, cfg.alpha));
    std::vector<double> scores(y.scores.size());
    std::transform(y.scores.begin(), y.scores.end(), scores.begin(),
                   [](double v) { return std::clamp(v, 0.0, 1.0); });
    const SweepResult swept = sweep(gs, scores, cfg.window);

    std::vector<Vertex> members;
    members.reserve(swept.community_local.size());
    for (Vertex v : swept.community_local) members.push_back(gs.to_parent[v]);
    const VertexSet parent_members = VertexSet::from_sorted(std::move(members));

    if (intersection_size(swept.community_local, gs.seed_local) != gs.seed_local.size()) {
      out.seed_truncated = true;
      out.warnings.push_back("seed " + seed_name(g, seed) + ": community does not contain the whole seed");
    }
    if (!is_connected(g, parent_members)) {
      out.disconnected = true;
      out.warnings.push_back("seed " + seed_name(g, seed) + ": community is not connected");
    }

    out.community = Community{tokens_of(g, parent_members.span()), tokens_of(g, seed.span())};

    if (cfg.keep_diagnostics) {
      SeedDiagnostics d;
      d.seed = out.community->seed;
      d.profile = swept.profile;
      for (Vertex v : swept.order) d.scores.emplace_back(g.label(gs.to_parent[v]), scores[v]);
      out.diagnostics = std::move(d);
    }
  } catch (const std::exception& e) {
    out.community.reset();
    out.skipped = true;
    out.warnings.push_back("seed " + seed_name(g, seed) + " skipped: " + e.what());
  }
  return out;
}

CommunitySet aggregate(std::vector<SeedOutcome>&& outcomes) {
  CommunitySet result;
  DetectionReport& report = result.report;
  report.seeds = outcomes.size();
  std::set<TokenSet> seen;
  for (auto& o : outcomes) {
    report.skipped += o.skipped;
    report.seed_truncated += o.seed_truncated;
    report.disconnected += o.disconnected;
    for (auto& w : o.warnings) report.warnings.push_back(std::move(w));
    if (o.diagnostics) report.diagnostics.push_back(std::move(*o.diagnostics));
    if (!o.community) continue;
    if (!seen.insert(o.community->members).second) {
      ++report.duplicates;
      continue;
    }
    result.communities.push_back(std::move(*o.community));
  }
  std::stable_sort(result.communities.begin(), result.communities.end(),
                   [](const Community& a, const Community& b) {
                     return canonical_community_less(a.members, b.members);
                   });
  return result;
}

}  // namespace

CommunitySet expand_seeds(const Graph& g, std::span<const Clique> seeds, const DetectionConfig& cfg,
                          unsigned workers) {
  cfg.validate();
  std::vector<SeedOutcome> outcomes(seeds.size());
  const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), seeds.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) outcomes[i] = expand_seed(g, seeds[i], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < seeds.size();) {
        try {
          outcomes[i] = expand_seed(g, seeds[i], cfg);
        } catch (...) {
          outcomes[i] = SeedOutcome{};
          outcomes[i].skipped = true;
          outcomes[i].warnings.push_back("seed " + seed_name(g, seeds[i]) + " skipped: worker failure");
        }
      }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return aggregate(std::move(outcomes));
}

CommunitySet detect(const Graph& g, const DetectionConfig& cfg) {
  cfg.validate();
  const auto seeds = build_seeds(g, cfg.min_clique, cfg.overlap_threshold);
  return expand_seeds(g, seeds, cfg, 1);
}

CommunitySet detect_parallel(const Graph& g, const DetectionConfig& cfg) {
  cfg.validate();
  const auto seeds = build_seeds(g, cfg.min_clique, cfg.overlap_threshold);
  return expand_seeds(g, seeds, cfg, cfg.workers);
}

}  // namespace qoce
