#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qoce/graph.hpp"

namespace qoce {

/// Sparse probability distribution over vertices: (vertex, mass) pairs in
/// ascending vertex order, zero entries omitted.
class ProbabilityVector {
 public:
  using Entry = std::pair<Vertex, double>;

  ProbabilityVector() = default;
  /// `entries` must be vertex-ascending without duplicates.
  explicit ProbabilityVector(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Mass at `v`, 0 when absent.
  double at(Vertex v) const;
  double total_mass() const;
  VertexSet support() const;

 private:
  std::vector<Entry> entries_;
};

/// Seed vertices weighted by degree: p0(v) = d(v) / Vol(seed).
/// Throws DomainError when the seed is empty or has zero volume.
ProbabilityVector initial_distribution(const Graph& g, const VertexSet& seed);

/// Counters describing how much memory and work a walk touched.
struct WalkStats {
  std::size_t peak_entries = 0;  // largest accumulator size over all steps
  std::size_t edge_pushes = 0;   // neighbor contributions added
};

/// One step of the lazy walk with transition (D + I)^-1 (A + I), done by
/// pushing each support vertex's mass evenly to itself and its neighbors.
ProbabilityVector lazy_step(const Graph& g, const ProbabilityVector& p, WalkStats* stats = nullptr);

/// `steps` lazy steps from the seed's initial distribution.
ProbabilityVector lazy_walk(const Graph& g, const VertexSet& seed, int steps,
                            WalkStats* stats = nullptr);

/// Induced subgraph on {v : p_t0(v) > mu}. Throws SeedExcludedError when a
/// seed vertex does not survive the threshold.
SampledSubgraph sample(const Graph& g, const VertexSet& seed, int t0, double mu,
                       WalkStats* stats = nullptr);

}  // namespace qoce
