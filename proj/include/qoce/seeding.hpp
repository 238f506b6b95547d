#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qoce/graph.hpp"

namespace qoce {

/// A clique used as an expansion seed, in parent-graph indices.
using Clique = VertexSet;

/// Size non-ascending, then lexicographic on the sorted vertex sequence.
bool canonical_clique_less(const Clique& a, const Clique& b);
void sort_canonical(std::vector<Clique>& cliques);

/// Vertices in a degeneracy (smallest-last) order.
std::vector<Vertex> degeneracy_order(const Graph& g);

/// All maximal cliques with at least `min_size` vertices, canonically ordered.
/// Bron-Kerbosch with Tomita pivoting under a degeneracy-ordered outer loop.
std::vector<Clique> enumerate_maximal_cliques(const Graph& g, std::size_t min_size = 4);

/// Greedy overlap filter. Cliques are scanned in canonical order and a
/// candidate Q is dropped as soon as some already kept P has
/// |Q ∩ P| / |Q| >= `overlap_threshold`.
std::vector<Clique> filter_cliques(std::vector<Clique> cliques, double overlap_threshold = 0.75);

/// Seed cliques of `g`: (min_size - 1)-core, per-component clique
/// enumeration, canonical merge, overlap filter.
std::vector<Clique> build_seeds(const Graph& g, std::size_t min_size = 4,
                                double overlap_threshold = 0.75);

}  // namespace qoce
