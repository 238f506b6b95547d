#include <doctest.h>

#include <cmath>

#include "qoce/errors.hpp"
#include "qoce/sampler.hpp"
#include "support.hpp"

using namespace qoce;
using namespace qoce::testing;

TEST_CASE("initial distribution") {
  Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto p = initial_distribution(star, {0});
  REQUIRE(p.size() == 1);
  CHECK(p.at(0) == 1.0);

  auto tri = initial_distribution(complete(4), {0, 1, 2});
  for (Vertex v : {0u, 1u, 2u}) CHECK(tri.at(v) == doctest::Approx(1.0 / 3.0));
  CHECK(tri.at(3) == 0.0);

  auto uniform = initial_distribution(complete(4), {0, 1, 2, 3});
  for (Vertex v = 0; v < 4; ++v) CHECK(uniform.at(v) == doctest::Approx(0.25));

  Graph lonely = make_graph(2, {});
  CHECK_THROWS_AS(initial_distribution(lonely, {0}), DomainError);
  CHECK_THROWS_AS(initial_distribution(lonely, {}), DomainError);
}

TEST_CASE("lazy step examples") {
  Graph isolated = make_graph(2, {});
  auto same = lazy_step(isolated, ProbabilityVector({{1, 1.0}}));
  CHECK(same.entries() == std::vector<ProbabilityVector::Entry>{{1, 1.0}});

  auto half = lazy_step(complete(2), ProbabilityVector({{0, 1.0}}));
  CHECK(half.at(0) == 0.5);
  CHECK(half.at(1) == 0.5);
}

TEST_CASE("push walk equals the dense transition oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + trial % 16;
    Graph g = random_connected_graph(n, 0.2, rng);
    std::vector<Vertex> seed{static_cast<Vertex>(rng() % n)};
    if (n > 3) seed.push_back(static_cast<Vertex>((seed[0] + 1 + rng() % (n - 1)) % n));
    VertexSet s(seed);
    const auto n_rw = lazy_transition(g);
    auto dense = dense_initial(g, s.vertices());
    ProbabilityVector p = initial_distribution(g, s);
    for (int t = 1; t <= 5; ++t) {
      const VertexSet before = p.support();
      p = lazy_step(g, p);
      dense = dense_step(n_rw, dense);
      for (Vertex v = 0; v < n; ++v) CHECK(std::abs(p.at(v) - dense[v]) <= 1e-12);
      CHECK(std::abs(p.total_mass() - 1.0) <= 1e-12);
      for (Vertex v : before) CHECK(p.support().contains(v));
      for (auto [v, mass] : p.entries()) CHECK(mass > 0.0);
    }
  }
}

TEST_CASE("sampling") {
  SUBCASE("mu = 0 keeps every vertex within t0 hops") {
    Graph g = path(12);
    auto s = sample(g, {5}, 3, 0.0);
    CHECK(s.to_parent == std::vector<Vertex>{2, 3, 4, 5, 6, 7, 8});
    CHECK(s.seed_local == VertexSet{3});
    CHECK(s.graph.num_edges() == 6);
  }
  SUBCASE("bridged K6 from one side reaches everything") {
    Graph g = bridged_cliques(6);
    auto s = sample(g, {0, 1, 2, 3, 4, 5}, 3, 0.0);
    CHECK(s.size() == 12);
    CHECK(s.graph.num_edges() == g.num_edges());
    CHECK(s.seed_local == VertexSet{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("threshold matches the dense oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 8 + trial % 13;
      Graph g = random_connected_graph(n, 0.15, rng);
      const VertexSet seed{static_cast<Vertex>(trial % n)};
      const auto n_rw = lazy_transition(g);
      auto dense = dense_initial(g, seed.vertices());
      const int t0 = 1 + trial % 4;
      for (int t = 0; t < t0; ++t) dense = dense_step(n_rw, dense);
      const double mu = (trial % 3) * 0.02;
      std::vector<Vertex> expected;
      for (Vertex v = 0; v < n; ++v) {
        if (dense[v] > mu) expected.push_back(v);
      }
      try {
        auto s = sample(g, seed, t0, mu);
        CHECK(s.to_parent == expected);
      } catch (const SeedExcludedError&) {
        CHECK_FALSE(std::find(expected.begin(), expected.end(), seed[0]) != expected.end());
      }
    }
  }
  SUBCASE("a seed below mu is an error naming the vertex") {
    Graph g = make_graph(3, {{0, 1}, {0, 2}});
    try {
      sample(g, {1}, 3, 0.5);
      FAIL("expected SeedExcludedError");
    } catch (const SeedExcludedError& e) {
      CHECK(e.vertex() == "v1");
    }
  }
  SUBCASE("work stays local on a large graph") {
    Graph g = path(200000);
    WalkStats stats;
    auto s = sample(g, {100000}, 3, 0.0, &stats);
    CHECK(s.size() == 7);
    CHECK(stats.peak_entries == 7);
    CHECK(stats.edge_pushes <= 2 * (1 + 3 + 5));
  }
  CHECK_THROWS(sample(complete(4), {0}, 0, 0.0));
  CHECK_THROWS(sample(complete(4), {0}, 1, -1.0));
}
