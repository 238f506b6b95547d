// Fixtures and brute-force oracles shared by the test binaries. Nothing in
// here calls into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qoce/graph.hpp"

namespace qoce::testing {

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
  return Graph::from_edges(n, edges, labels);
}

inline void add_clique(std::vector<Edge>& edges, Vertex first, Vertex size) {
  for (Vertex a = first; a < first + size; ++a) {
    for (Vertex b = a + 1; b < first + size; ++b) edges.emplace_back(a, b);
  }
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  add_clique(e, 0, static_cast<Vertex>(n));
  return make_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return make_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

/// Two K_k on [0, k) and [k, 2k) joined by the edge (k-1, k).
inline Graph bridged_cliques(std::size_t k) {
  std::vector<Edge> e;
  add_clique(e, 0, static_cast<Vertex>(k));
  add_clique(e, static_cast<Vertex>(k), static_cast<Vertex>(k));
  e.emplace_back(static_cast<Vertex>(k - 1), static_cast<Vertex>(k));
  return make_graph(2 * k, e);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) e.emplace_back(a, b);
    }
  }
  return make_graph(n, e);
}

/// Connected random graph: a random spanning tree plus G(n, p) edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex b = 1; b < n; ++b) e.emplace_back(static_cast<Vertex>(rng() % b), b);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) e.emplace_back(a, b);
    }
  }
  return make_graph(n, e);
}

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// Every maximal clique with at least `min_size` vertices, by checking all
/// 2^n vertex subsets. Cliques are returned as sorted vertex lists, sorted.
inline std::vector<std::vector<Vertex>> brute_force_maximal_cliques(const Graph& g, std::size_t min_size) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_matrix(g);
  std::vector<std::vector<Vertex>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    if (s.size() < min_size) continue;
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = a[s[i]][s[j]];
    }
    if (!clique) continue;
    bool maximal = true;
    for (Vertex w = 0; w < n && maximal; ++w) {
      if (mask >> w & 1) continue;
      bool all = true;
      for (Vertex v : s) all = all && a[v][w];
      if (all) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Dense lazy-walk transition N = (D + I)^-1 (A + I), row-major.
inline std::vector<std::vector<double>> lazy_transition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_matrix(g);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0;
    for (std::size_t j = 0; j < n; ++j) deg += a[i][j];
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (a[i][j] + (i == j ? 1.0 : 0.0)) / (deg + 1.0);
  }
  return m;
}

/// p_{t+1} = Nᵀ p_t, dense.
inline std::vector<double> dense_step(const std::vector<std::vector<double>>& n_rw, const std::vector<double>& p) {
  const std::size_t n = p.size();
  std::vector<double> q(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[j] += n_rw[i][j] * p[i];
  }
  return q;
}

inline std::vector<double> dense_initial(const Graph& g, const std::vector<Vertex>& seed) {
  std::vector<double> p(g.num_vertices(), 0.0);
  double vol = 0;
  for (Vertex v : seed) vol += static_cast<double>(g.degree(v));
  for (Vertex v : seed) p[v] = static_cast<double>(g.degree(v)) / vol;
  return p;
}

/// Edges with exactly one endpoint in `members`, counted over the edge list.
inline std::uint64_t brute_cut(const Graph& g, const std::vector<char>& member) {
  std::uint64_t c = 0;
  for (auto [u, v] : g.edges()) c += member[u] != member[v];
  return c;
}

/// Conductance recomputed from the edge list.
inline double brute_conductance(const Graph& g, const std::vector<char>& member) {
  double vol_in = 0, vol_out = 0;
  for (auto [u, v] : g.edges()) {
    (member[u] ? vol_in : vol_out) += 1;
    (member[v] ? vol_in : vol_out) += 1;
  }
  return static_cast<double>(brute_cut(g, member)) / std::min(vol_in, vol_out);
}

}  // namespace qoce::testing
