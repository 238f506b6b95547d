#include "qoce/seeding.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace qoce {

bool canonical_clique_less(const Clique& a, const Clique& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

void sort_canonical(std::vector<Clique>& cliques) {
  std::sort(cliques.begin(), cliques.end(), canonical_clique_less);
}

std::vector<Vertex> degeneracy_order(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bin[deg[v] + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];

  std::vector<Vertex> order(n);
  std::vector<std::size_t> pos(n);
  {
    auto next = bin;
    for (Vertex v = 0; v < n; ++v) {
      pos[v] = next[deg[v]]++;
      order[pos[v]] = v;
    }
  }
  // bin[d] is now the start of the bucket for degree d.
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        std::size_t du = deg[u];
        std::size_t pu = pos[u];
        std::size_t pw = bin[du];
        Vertex w = order[pw];
        if (u != w) {
          std::swap(order[pu], order[pw]);
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return order;
}

namespace {

class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, std::size_t min_size, std::vector<Clique>& out)
      : g_(g), min_size_(min_size), out_(out) {}

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty() && r.size() >= min_size_) out_.emplace_back(r);
      return;
    }
    if (r.size() + p.size() < min_size_) return;

    Vertex pivot = choose_pivot(p, x);
    std::vector<Vertex> candidates;
    auto pn = g_.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));

    std::vector<Vertex> np, nx;
    for (Vertex v : candidates) {
      auto vn = g_.neighbors(v);
      np.clear();
      nx.clear();
      std::set_intersection(p.begin(), p.end(), vn.begin(), vn.end(), std::back_inserter(np));
      std::set_intersection(x.begin(), x.end(), vn.begin(), vn.end(), std::back_inserter(nx));
      r.push_back(v);
      expand(r, np, nx);
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

 private:
  std::size_t common(std::span<const Vertex> a, std::span<const Vertex> b) const {
    std::size_t c = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++c, ++i, ++j;
      }
    }
    return c;
  }

  Vertex choose_pivot(const std::vector<Vertex>& p, const std::vector<Vertex>& x) const {
    Vertex best = p.front();
    std::size_t best_count = 0;
    bool first = true;
    for (const auto* set : {&p, &x}) {
      for (Vertex u : *set) {
        std::size_t c = common(p, g_.neighbors(u));
        if (first || c > best_count) {
          best = u;
          best_count = c;
          first = false;
        }
      }
    }
    return best;
  }

  const Graph& g_;
  std::size_t min_size_;
  std::vector<Clique>& out_;
};

}  // namespace

std::vector<Clique> enumerate_maximal_cliques(const Graph& g, std::size_t min_size) {
  const std::size_t n = g.num_vertices();
  std::vector<Clique> out;
  auto order = degeneracy_order(g);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  CliqueEnumerator bk(g, min_size, out);
  std::vector<Vertex> r;
  for (Vertex v : order) {
    std::vector<Vertex> p, x;
    for (Vertex u : g.neighbors(v)) (rank[u] > rank[v] ? p : x).push_back(u);
    if (p.size() + 1 < min_size) continue;
    r.assign(1, v);
    bk.expand(r, std::move(p), std::move(x));
  }
  // `r` is emitted in recursion order; VertexSet sorts each clique.
  sort_canonical(out);
  return out;
}

std::vector<Clique> filter_cliques(std::vector<Clique> cliques, double overlap_threshold) {
  sort_canonical(cliques);
  std::vector<Clique> kept;
  std::unordered_map<Vertex, std::vector<std::size_t>> owners;  // vertex -> kept cliques
  std::unordered_map<std::size_t, std::size_t> shared;
  for (auto& q : cliques) {
    shared.clear();
    for (Vertex v : q) {
      if (auto it = owners.find(v); it != owners.end()) {
        for (std::size_t k : it->second) ++shared[k];
      }
    }
    bool dominated = false;
    for (auto [k, count] : shared) {
      if (static_cast<double>(count) / static_cast<double>(q.size()) >= overlap_threshold) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    for (Vertex v : q) owners[v].push_back(kept.size());
    kept.push_back(std::move(q));
  }
  return kept;
}

std::vector<Clique> build_seeds(const Graph& g, std::size_t min_size, double overlap_threshold) {
  const std::size_t k = min_size > 0 ? min_size - 1 : 0;
  const VertexSet core = k_core(g, k);
  if (core.empty()) return {};

  const SampledSubgraph core_graph = induced_subgraph(g, core);
  std::vector<Clique> all;
  for (const VertexSet& comp : connected_components(core_graph.graph)) {
    if (comp.size() < min_size) continue;
    const SampledSubgraph part = induced_subgraph(core_graph.graph, comp);
    for (const Clique& c : enumerate_maximal_cliques(part.graph, min_size)) {
      std::vector<Vertex> parent;
      parent.reserve(c.size());
      // local -> component -> core -> g; every map is ascending.
      for (Vertex v : c) parent.push_back(core_graph.to_parent[part.to_parent[v]]);
      all.push_back(VertexSet::from_sorted(std::move(parent)));
    }
  }
  return filter_cliques(std::move(all), overlap_threshold);
}

}  // namespace qoce
