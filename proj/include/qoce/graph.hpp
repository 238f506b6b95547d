#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qoce {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> vs);

  /// Adopts an already strictly ascending sequence; throws std::invalid_argument otherwise.
  static VertexSet from_sorted(std::vector<Vertex> vs);

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  bool contains(Vertex v) const;
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  std::span<const Vertex> span() const noexcept { return v_; }
  const std::vector<Vertex>& vertices() const noexcept { return v_; }

  /// Position of `v` in the sorted sequence, if present.
  std::optional<std::size_t> position(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> v_;
};

std::size_t intersection_size(const VertexSet& a, const VertexSet& b);

struct SampledSubgraph;

/// Immutable undirected simple graph in CSR form. Vertices are dense indices
/// [0, n); each may carry an external text label.
class Graph {
 public:
  Graph() = default;

  /// Self-loops are dropped and parallel edges collapsed. `labels` is either
  /// empty or has exactly `n` distinct entries.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adj_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Sum of degrees over `vs`.
  std::uint64_t volume(const VertexSet& vs) const;
  std::uint64_t total_volume() const noexcept { return adj_.size(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External token of `v`; the decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  /// Returns a copy carrying `labels` (size must equal n, entries distinct).
  Graph with_labels(std::vector<std::string> labels) const;

  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

 private:
  friend SampledSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

  void set_labels(std::vector<std::string> labels);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
};

/// Induced subgraph together with its local <-> parent index mapping. Local
/// index i corresponds to parent vertex `to_parent[i]`, and `to_parent` is
/// ascending. `seed_local` marks the seed vertices in local indices (empty when
/// the subgraph was not cut around a seed).
struct SampledSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  VertexSet seed_local;

  std::size_t size() const noexcept { return to_parent.size(); }
  /// Local index of parent vertex `v`, if sampled.
  std::optional<Vertex> to_local(Vertex parent) const;
};

/// Parses an edge list: two whitespace-separated tokens per line, `#` comments
/// and blank lines ignored. Tokens are numbered in first-appearance order.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes one `u v` line per edge using external tokens.
void write_edge_list(std::ostream& out, const Graph& g);

/// Edges with exactly one endpoint in `c`.
std::uint64_t cut_size(const Graph& g, const VertexSet& c);

/// cut(c, V \ c) / min(Vol(c), Vol(V \ c)). Throws DomainError for an empty
/// set, the full vertex set, or a side with zero volume.
double conductance(const Graph& g, const VertexSet& c);

/// Unlabeled induced subgraph on `vs`, with the local <-> parent mapping.
SampledSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

/// Induced subgraph on `vs` keeping the parent's labels.
Graph restrict_to(const Graph& g, const VertexSet& vs);

/// Maximal vertex set in which every vertex has at least `k` neighbors inside.
VertexSet k_core(const Graph& g, std::size_t k);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// True if the subgraph induced by `vs` is connected (the empty set is not).
bool is_connected(const Graph& g, const VertexSet& vs);

}  // namespace qoce
