#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qoce/graph.hpp"

namespace qoce {

/// Sparse graph Laplacian L = D - A. Off-diagonal entries are all -1, so only
/// the pattern and the diagonal are stored.
class Laplacian {
 public:
  Laplacian() = default;
  static Laplacian from_graph(const Graph& g);

  std::size_t size() const noexcept { return degree_.size(); }
  double diagonal(std::size_t i) const { return degree_[i]; }

  /// out = L y
  void apply(std::span<const double> y, std::span<double> out) const;
  /// yᵀ L y
  double quadratic_form(std::span<const double> y) const;
  /// Row-major dense copy; intended for small checks.
  std::vector<double> dense() const;

 private:
  std::vector<double> degree_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> cols_;
};

/// min yᵀLy + alpha·Σy  subject to  lower <= y <= 1.
/// `lower` is 1/|S| on seed vertices and 0 elsewhere.
struct QpProblem {
  Laplacian laplacian;
  double alpha = 0.2;
  std::vector<double> lower;

  std::size_t size() const noexcept { return lower.size(); }
  double objective(std::span<const double> y) const;
  /// g = 2 L y + alpha e
  void gradient(std::span<const double> y, std::span<double> g) const;
  /// Euclidean norm of the gradient projected onto the feasible box at `y`.
  double projected_gradient_norm(std::span<const double> y) const;
  /// Seeds at their lower bound, everything else at 0.
  std::vector<double> start_point() const { return lower; }
};

QpProblem build_problem(const SampledSubgraph& gs, double alpha = 0.2);

struct SolverOptions {
  int max_iterations = 10000;
  double tolerance = 1e-6;
};

/// Solution of the affiliation QP, one score per local vertex.
struct AffiliationVector {
  std::vector<double> scores;
  double objective = 0.0;
  double residual = 0.0;  // projected gradient norm at `scores`
  int iterations = 0;
};

/// Gradient projection with conjugate-gradient acceleration on the free face.
/// Throws SolverError when the projected gradient norm does not reach
/// `options.tolerance` within the iteration cap.
AffiliationVector solve_affiliation(const QpProblem& problem, const SolverOptions& options = {});

/// cut(C, V \ C) / min(|C|, |V \ C|). Throws DomainError for the empty or full set.
double cheeger_cut_value(const Graph& g, const VertexSet& c);

}  // namespace qoce
