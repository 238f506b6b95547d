#include "qoce/sweeper.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qoce {

LocalMinimumScan::LocalMinimumScan(std::size_t max_k, std::size_t window)
    : max_k_(max_k), window_(window) {
  if (window == 0) throw std::invalid_argument("LocalMinimumScan: window must be >= 1");
  if (max_k == 0) throw std::invalid_argument("LocalMinimumScan: empty profile");
  phi_.reserve(std::min<std::size_t>(max_k, 64));
}

bool LocalMinimumScan::push(double phi) {
  if (decided()) return true;
  if (phi_.size() >= max_k_) throw std::logic_error("LocalMinimumScan: profile longer than max_k");
  phi_.push_back(phi);
  const std::size_t j = phi_.size();

  // The window of candidate c = j - w closes with this value.
  if (j > window_) {
    const std::size_t c = j - window_;
    const double base = phi_[c - 1];
    bool is_min = true;
    for (std::size_t i = c + 1; i <= j; ++i) {
      if (!(phi_[i - 1] > base)) {
        is_min = false;
        break;
      }
    }
    if (is_min) {
      k_star_ = c;
      return true;
    }
  }
  if (j == max_k_) {
    auto it = std::min_element(phi_.begin(), phi_.end());
    k_star_ = static_cast<std::size_t>(it - phi_.begin()) + 1;
    fell_back_ = true;
    return true;
  }
  return false;
}

std::size_t windowed_first_minimum(std::span<const double> phi, std::size_t window) {
  LocalMinimumScan scan(phi.size(), window);
  for (double v : phi) {
    if (scan.push(v)) break;
  }
  return scan.k_star();
}

std::vector<Vertex> sweep_order(const SampledSubgraph& gs, std::span<const double> scores) {
  std::vector<Vertex> order(gs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    const bool sa = gs.seed_local.contains(a);
    const bool sb = gs.seed_local.contains(b);
    if (sa != sb) return sa;
    return a < b;
  });
  return order;
}

SweepResult sweep(const SampledSubgraph& gs, std::span<const double> scores, std::size_t window) {
  const std::size_t n = gs.size();
  if (n < 2) throw std::invalid_argument("sweep: sampled subgraph needs at least 2 vertices");
  if (scores.size() != n) throw std::invalid_argument("sweep: score vector size mismatch");
  if (window == 0) throw std::invalid_argument("sweep: window must be >= 1");

  const Graph& g = gs.graph;
  SweepResult result;
  result.order = sweep_order(gs, scores);

  const std::uint64_t total = g.total_volume();
  std::vector<char> inside(n, 0);
  std::uint64_t vol = 0;
  std::int64_t cut = 0;

  LocalMinimumScan scan(n - 1, window);
  for (std::size_t k = 1; k <= n - 1; ++k) {
    const Vertex v = result.order[k - 1];
    std::int64_t internal = 0;
    for (Vertex u : g.neighbors(v)) internal += inside[u];
    inside[v] = 1;
    cut += static_cast<std::int64_t>(g.degree(v)) - 2 * internal;
    vol += g.degree(v);

    const std::uint64_t denom = std::min(vol, total - vol);
    // Zero-volume sides only occur in disconnected samples; treat as no boundary.
    const double phi = denom == 0 ? std::numeric_limits<double>::infinity()
                                  : static_cast<double>(cut) / static_cast<double>(denom);
    result.profile.push_back({k, phi});
    if (scan.push(phi)) break;
  }

  result.k_star = scan.k_star();
  result.fell_back = scan.fell_back();
  result.conductance_at_k = result.profile[result.k_star - 1].conductance;
  result.community_local =
      VertexSet(std::vector<Vertex>(result.order.begin(), result.order.begin() + result.k_star));
  return result;
}

}  // namespace qoce
