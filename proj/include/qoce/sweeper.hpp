#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qoce/graph.hpp"

namespace qoce {

/// Incremental first-local-minimum detector over a conductance profile.
///
/// Values are fed for k = 1, 2, ... up to `max_k`. k* is the smallest k with
/// Φ(i) > Φ(k) for every i in (k, k + window]. When no such k exists with
/// k + window <= max_k, k* falls back to the argmin over the whole profile
/// (smallest k on ties).
class LocalMinimumScan {
 public:
  LocalMinimumScan(std::size_t max_k, std::size_t window);

  /// Feeds Φ for the next k. Returns true once k* is decided.
  bool push(double phi);

  bool decided() const noexcept { return k_star_ != 0; }
  std::size_t k_star() const noexcept { return k_star_; }
  bool fell_back() const noexcept { return fell_back_; }
  const std::vector<double>& values() const noexcept { return phi_; }

 private:
  std::size_t max_k_;
  std::size_t window_;
  std::vector<double> phi_;  // phi_[k - 1] = Φ(Ĉ_k)
  std::size_t k_star_ = 0;
  bool fell_back_ = false;
};

/// Convenience over a fully known profile (`phi[k - 1]` = Φ(Ĉ_k)).
std::size_t windowed_first_minimum(std::span<const double> phi, std::size_t window);

struct SweepPoint {
  std::size_t k;
  double conductance;
};

struct SweepResult {
  VertexSet community_local;      // first k_star vertices of `order`
  std::size_t k_star = 0;
  double conductance_at_k = 0.0;
  std::vector<SweepPoint> profile;  // every prefix actually evaluated
  std::vector<Vertex> order;        // local vertices by score, non-ascending
  bool fell_back = false;
};

/// Vertices by score, non-ascending; ties put seed vertices first, then
/// ascending local index.
std::vector<Vertex> sweep_order(const SampledSubgraph& gs, std::span<const double> scores);

/// Rounds `scores` to a community by scanning prefix conductances in score
/// order and stopping at the first windowed local minimum. Prefixes are capped
/// at |V_s| - 1. Requires window >= 1 and |V_s| >= 2.
SweepResult sweep(const SampledSubgraph& gs, std::span<const double> scores, std::size_t window = 5);

}  // namespace qoce
