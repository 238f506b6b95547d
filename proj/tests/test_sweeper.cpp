#include <doctest.h>

#include <cmath>
#include <limits>

#include "qoce/extractor.hpp"
#include "qoce/sampler.hpp"
#include "qoce/sweeper.hpp"
#include "support.hpp"

using namespace qoce;
using namespace qoce::testing;

namespace {

SampledSubgraph whole(const Graph& g, VertexSet seed) {
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  SampledSubgraph s = induced_subgraph(g, VertexSet::from_sorted(all));
  s.seed_local = std::move(seed);
  return s;
}

// Smallest k whose next w values all exceed Φ(k), else the first argmin.
std::size_t brute_k_star(const std::vector<double>& phi, std::size_t w) {
  for (std::size_t k = 1; k + w <= phi.size(); ++k) {
    bool ok = true;
    for (std::size_t i = k + 1; i <= k + w; ++i) ok = ok && phi[i - 1] > phi[k - 1];
    if (ok) return k;
  }
  return static_cast<std::size_t>(std::min_element(phi.begin(), phi.end()) - phi.begin()) + 1;
}

}  // namespace

TEST_CASE("windowed first minimum") {
  const std::vector<double> dip{0.9, 0.4, 0.6, 0.7, 0.8, 0.85, 0.9, 0.3, 0.95};
  CHECK(windowed_first_minimum(dip, 5) == 2);
  CHECK(windowed_first_minimum(dip, 6) == 8);  // the late dip breaks every window; argmin fallback

  const std::vector<double> rising{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  CHECK(windowed_first_minimum(rising, 5) == 1);

  const std::vector<double> falling{0.9, 0.8, 0.7, 0.6};
  CHECK(windowed_first_minimum(falling, 2) == 4);

  const std::vector<double> plateau{0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  CHECK(windowed_first_minimum(plateau, 2) == 1);  // ties never win a window

  const std::vector<double> tie_later{0.5, 0.6, 0.5, 0.7, 0.8};
  CHECK(windowed_first_minimum(tie_later, 2) == 3);

  LocalMinimumScan scan(10, 2);
  CHECK_FALSE(scan.push(0.3));
  CHECK_FALSE(scan.push(0.4));
  CHECK(scan.push(0.5));
  CHECK(scan.k_star() == 1);
  CHECK_FALSE(scan.fell_back());
  CHECK(scan.values().size() == 3);  // stops reading once decided

  CHECK_THROWS(LocalMinimumScan(5, 0));
}

TEST_CASE("windowed minimum matches the definition on random profiles") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> level(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> phi(1 + trial % 20);
    for (double& v : phi) v = level(rng) / 6.0;
    const std::size_t w = 1 + trial % 7;
    CHECK(windowed_first_minimum(phi, w) == brute_k_star(phi, w));
  }
}

TEST_CASE("sweep order") {
  Graph g = path(5);
  auto gs = whole(g, {3});
  const std::vector<double> scores{0.2, 0.5, 0.5, 0.5, 0.1};
  CHECK(sweep_order(gs, scores) == std::vector<Vertex>{3, 1, 2, 0, 4});
}

TEST_CASE("sweep on two bridged K6 recovers the seed clique") {
  Graph g = bridged_cliques(6);
  auto gs = sample(g, {0, 1, 2, 3, 4, 5}, 3, 0.0);
  auto y = solve_affiliation(build_problem(gs, 0.2));
  auto r = sweep(gs, y.scores, 5);
  std::vector<Vertex> parent;
  for (Vertex v : r.community_local) parent.push_back(gs.to_parent[v]);
  CHECK(parent == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(r.k_star == 6);
  CHECK(r.conductance_at_k == doctest::Approx(1.0 / 31.0));
  CHECK_FALSE(r.fell_back);
}

TEST_CASE("incremental profile equals recomputed conductance") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 25;
    Graph g = random_connected_graph(n, 0.2, rng);
    auto gs = whole(g, {0});
    std::vector<double> scores(n);
    for (double& v : scores) v = std::round(unit(rng) * 4) / 4;  // force ties
    const std::size_t w = 1 + trial % 6;
    auto r = sweep(gs, scores, w);

    std::vector<char> member(n, 0);
    std::vector<double> full;
    for (std::size_t k = 1; k <= n - 1; ++k) {
      member[r.order[k - 1]] = 1;
      full.push_back(brute_conductance(g, member));
    }
    REQUIRE(r.profile.size() <= full.size());
    for (const auto& pt : r.profile) CHECK(std::abs(pt.conductance - full[pt.k - 1]) <= 1e-12);
    CHECK(r.k_star == brute_k_star(full, w));
    CHECK(r.community_local.size() == r.k_star);
    CHECK(r.k_star >= 1);
    CHECK(r.k_star < n);

    auto again = sweep(gs, scores, w);
    CHECK(again.order == r.order);
    CHECK(again.community_local == r.community_local);
  }
}

TEST_CASE("disconnected sample: zero-volume prefixes score as infinite") {
  Graph g = make_graph(4, {{0, 1}});
  auto gs = whole(g, {2});
  const std::vector<double> scores{0.1, 0.1, 0.9, 0.8};
  auto r = sweep(gs, scores, 1);
  CHECK(std::isinf(r.profile[0].conductance));
  CHECK(std::isinf(r.profile[1].conductance));
  CHECK(r.fell_back);
  CHECK(r.k_star == 3);
}

TEST_CASE("sweep argument checks") {
  Graph g = complete(3);
  auto gs = whole(g, {0});
  const std::vector<double> ok{1, 0, 0}, short_scores{1, 0};
  CHECK_THROWS(sweep(gs, short_scores, 5));
  CHECK_THROWS(sweep(gs, ok, 0));
  CHECK_THROWS(sweep(whole(complete(1), {0}), std::vector<double>{1.0}, 5));
}
