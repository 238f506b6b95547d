#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qoce/community_io.hpp"
#include "qoce/graph.hpp"

namespace qoce {

/// 2|a ∩ b| / (|a| + |b|). Throws DomainError if either set is empty.
double f1(const TokenSet& a, const TokenSet& b);

/// Symmetric best-match average:
///   ½·mean_{t ∈ truth} max_d F1(t, d) + ½·mean_{d ∈ detected} max_t F1(d, t).
/// Returns 0 (and appends a warning when `warnings` is given) if either side is empty.
double avg_f1(std::span<const TokenSet> detected, std::span<const TokenSet> truth,
              std::vector<std::string>* warnings = nullptr);

struct LabeledDataset {
  Graph graph;
  std::vector<TokenSet> truth;
};

/// Restricts the graph to its largest connected component, confines each raw
/// community to it, splits communities into connected pieces and keeps the
/// pieces with at least three vertices.
LabeledDataset clean_ground_truth(const Graph& raw_graph, std::span<const TokenSet> raw_communities);

/// `num_cliques` disjoint cliques of `clique_size` vertices joined into one
/// component by `bridges` distinct random inter-clique edges. Vertices are
/// labeled "0" .. "n-1", clique i owning the i-th block. Deterministic in `seed`.
LabeledDataset gen_planted(int num_cliques, int clique_size, int bridges, std::uint64_t seed);

}  // namespace qoce
