#include "qoce/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "qoce/errors.hpp"

namespace qoce {

double ProbabilityVector::at(Vertex v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Vertex x) { return e.first < x; });
  return (it != entries_.end() && it->first == v) ? it->second : 0.0;
}

double ProbabilityVector::total_mass() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

VertexSet ProbabilityVector::support() const {
  std::vector<Vertex> vs;
  vs.reserve(entries_.size());
  for (const auto& e : entries_) vs.push_back(e.first);
  return VertexSet::from_sorted(std::move(vs));
}

ProbabilityVector initial_distribution(const Graph& g, const VertexSet& seed) {
  if (seed.empty()) throw DomainError(DomainError::Kind::EmptySet, "empty seed set");
  const auto vol = static_cast<double>(g.volume(seed));
  if (vol == 0.0) throw DomainError(DomainError::Kind::ZeroVolume, "seed set has zero volume");
  std::vector<ProbabilityVector::Entry> entries;
  for (Vertex v : seed) {
    if (g.degree(v) > 0) entries.emplace_back(v, static_cast<double>(g.degree(v)) / vol);
  }
  return ProbabilityVector(std::move(entries));
}

ProbabilityVector lazy_step(const Graph& g, const ProbabilityVector& p, WalkStats* stats) {
  std::unordered_map<Vertex, double> next;
  next.reserve(p.size() * 4);
  std::size_t pushes = 0;
  for (auto [u, mass] : p.entries()) {
    auto nb = g.neighbors(u);
    const double share = mass / static_cast<double>(nb.size() + 1);
    next[u] += share;
    for (Vertex v : nb) next[v] += share;
    pushes += nb.size();
  }

  std::vector<ProbabilityVector::Entry> entries(next.begin(), next.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (stats) {
    stats->peak_entries = std::max(stats->peak_entries, next.size());
    stats->edge_pushes += pushes;
  }
  return ProbabilityVector(std::move(entries));
}

ProbabilityVector lazy_walk(const Graph& g, const VertexSet& seed, int steps, WalkStats* stats) {
  ProbabilityVector p = initial_distribution(g, seed);
  if (stats) stats->peak_entries = std::max(stats->peak_entries, p.size());
  for (int t = 0; t < steps; ++t) p = lazy_step(g, p, stats);
  return p;
}

SampledSubgraph sample(const Graph& g, const VertexSet& seed, int t0, double mu, WalkStats* stats) {
  if (t0 < 1) throw std::invalid_argument("sample: t0 must be >= 1");
  if (mu < 0.0) throw std::invalid_argument("sample: mu must be >= 0");

  const ProbabilityVector p = lazy_walk(g, seed, t0, stats);
  std::vector<Vertex> kept;
  kept.reserve(p.size());
  for (auto [v, mass] : p.entries()) {
    if (mass > mu) kept.push_back(v);
  }
  const VertexSet vs = VertexSet::from_sorted(std::move(kept));

  std::vector<Vertex> seed_local;
  seed_local.reserve(seed.size());
  for (Vertex s : seed) {
    auto pos = vs.position(s);
    if (!pos) throw SeedExcludedError(g.label(s));
    seed_local.push_back(static_cast<Vertex>(*pos));
  }

  SampledSubgraph sub = induced_subgraph(g, vs);
  sub.seed_local = VertexSet::from_sorted(std::move(seed_local));
  return sub;
}

}  // namespace qoce
