#include "qoce/eval.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "qoce/errors.hpp"

namespace qoce {

double f1(const TokenSet& a, const TokenSet& b) {
  if (a.empty() || b.empty()) throw DomainError(DomainError::Kind::EmptySet, "F1 of an empty community");
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common, ++i, ++j;
    }
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() + b.size());
}

namespace {

using IdSet = std::vector<std::uint32_t>;

class Interner {
 public:
  IdSet intern(const TokenSet& s) {
    IdSet out;
    out.reserve(s.size());
    for (const auto& t : s) {
      auto [it, inserted] = ids_.emplace(t, static_cast<std::uint32_t>(ids_.size()));
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
};

// Mean over `from` of the best F1 against any member of `to`.
double mean_best_f1(const std::vector<IdSet>& from, const std::vector<IdSet>& to, std::size_t universe) {
  std::vector<std::vector<std::uint32_t>> owners(universe);
  for (std::uint32_t j = 0; j < to.size(); ++j) {
    for (auto t : to[j]) owners[t].push_back(j);
  }
  double total = 0.0;
  std::unordered_map<std::uint32_t, std::size_t> overlap;
  for (const IdSet& c : from) {
    if (c.empty()) throw DomainError(DomainError::Kind::EmptySet, "F1 of an empty community");
    overlap.clear();
    for (auto t : c) {
      for (auto j : owners[t]) ++overlap[j];
    }
    double best = 0.0;
    for (auto [j, common] : overlap) {
      best = std::max(best, 2.0 * static_cast<double>(common) / static_cast<double>(c.size() + to[j].size()));
    }
    total += best;
  }
  return total / static_cast<double>(from.size());
}

}  // namespace

double avg_f1(std::span<const TokenSet> detected, std::span<const TokenSet> truth,
              std::vector<std::string>* warnings) {
  if (detected.empty() || truth.empty()) {
    if (warnings) {
      warnings->push_back(detected.empty() ? "no detected communities; average F1 is 0"
                                           : "no ground-truth communities; average F1 is 0");
    }
    return 0.0;
  }
  Interner interner;
  std::vector<IdSet> d, t;
  for (const auto& c : detected) d.push_back(interner.intern(c));
  for (const auto& c : truth) t.push_back(interner.intern(c));
  const std::size_t universe = interner.size();
  return 0.5 * mean_best_f1(t, d, universe) + 0.5 * mean_best_f1(d, t, universe);
}

LabeledDataset clean_ground_truth(const Graph& raw_graph, std::span<const TokenSet> raw_communities) {
  LabeledDataset out;
  const auto comps = connected_components(raw_graph);
  if (comps.empty()) return out;
  const VertexSet* largest = &comps.front();
  for (const auto& c : comps) {
    if (c.size() > largest->size()) largest = &c;
  }

  const Graph lcc_graph = restrict_to(raw_graph, *largest);
  std::vector<std::string> labels;
  if (!raw_graph.has_labels()) {
    // Keep the raw tokens (decimal indices) so communities still resolve.
    labels.reserve(largest->size());
    for (Vertex v : *largest) labels.push_back(raw_graph.label(v));
    out.graph = lcc_graph.with_labels(std::move(labels));
  } else {
    out.graph = lcc_graph;
  }

  for (const TokenSet& community : raw_communities) {
    std::vector<Vertex> members;
    for (const auto& token : community) {
      if (auto v = out.graph.find(token)) members.push_back(*v);
    }
    const VertexSet inside(std::move(members));
    if (inside.size() < 3) continue;
    const SampledSubgraph part = induced_subgraph(out.graph, inside);
    for (const VertexSet& piece : connected_components(part.graph)) {
      if (piece.size() < 3) continue;
      std::vector<std::string> tokens;
      tokens.reserve(piece.size());
      for (Vertex v : piece) tokens.push_back(out.graph.label(part.to_parent[v]));
      out.truth.push_back(make_token_set(std::move(tokens)));
    }
  }
  return out;
}

namespace {

// Unbiased draw from [0, n) that does not depend on the standard library's
// distribution implementations, so files are identical across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

LabeledDataset gen_planted(int num_cliques, int clique_size, int bridges, std::uint64_t seed) {
  if (num_cliques < 1) throw ParameterError("gen_planted: need at least one clique");
  if (clique_size < 4) throw ParameterError("gen_planted: clique size must be >= 4");
  if (bridges < num_cliques - 1) {
    throw ParameterError("gen_planted: need at least cliques - 1 bridges to connect the graph");
  }
  const auto k = static_cast<std::uint64_t>(num_cliques);
  const auto m = static_cast<std::uint64_t>(clique_size);
  const std::uint64_t capacity = k * (k - 1) / 2 * m * m;
  if (static_cast<std::uint64_t>(bridges) > capacity) {
    throw ParameterError("gen_planted: more bridges than distinct inter-clique vertex pairs");
  }

  const std::size_t n = k * m;
  std::vector<Edge> edges;
  for (std::uint64_t c = 0; c < k; ++c) {
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::uint64_t b = a + 1; b < m; ++b) {
        edges.emplace_back(static_cast<Vertex>(c * m + a), static_cast<Vertex>(c * m + b));
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::set<Edge> chosen;
  auto add_bridge = [&](std::uint64_t ca, std::uint64_t cb) {
    Vertex u = static_cast<Vertex>(ca * m + draw_below(rng, m));
    Vertex v = static_cast<Vertex>(cb * m + draw_below(rng, m));
    if (u > v) std::swap(u, v);
    return chosen.insert({u, v}).second;
  };
  // Random spanning tree over cliques first, so the graph is connected.
  for (std::uint64_t c = 1; c < k; ++c) add_bridge(c, draw_below(rng, c));
  auto remaining = static_cast<std::uint64_t>(bridges) - (k - 1);
  if (remaining > 0 && 2 * static_cast<std::uint64_t>(bridges) <= capacity) {
    while (remaining > 0) {
      std::uint64_t ca = draw_below(rng, k);
      std::uint64_t cb = draw_below(rng, k - 1);
      if (cb >= ca) ++cb;
      if (add_bridge(ca, cb)) --remaining;
    }
  } else if (remaining > 0) {
    // Dense request: sample without replacement from the explicit pool.
    std::vector<Edge> pool;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (u / m != v / m && !chosen.count({u, v})) pool.emplace_back(u, v);
      }
    }
    for (std::uint64_t i = 0; i < remaining; ++i) {
      std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
      chosen.insert(pool[i]);
    }
  }
  edges.insert(edges.end(), chosen.begin(), chosen.end());

  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);

  LabeledDataset out;
  out.graph = Graph::from_edges(n, edges, labels);
  for (std::uint64_t c = 0; c < k; ++c) {
    std::vector<std::string> members(labels.begin() + c * m, labels.begin() + (c + 1) * m);
    out.truth.push_back(make_token_set(std::move(members)));
  }
  return out;
}

}  // namespace qoce
