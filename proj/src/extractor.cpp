#include "qoce/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qoce/errors.hpp"

namespace qoce {

Laplacian Laplacian::from_graph(const Graph& g) {
  Laplacian l;
  const std::size_t n = g.num_vertices();
  l.degree_.resize(n);
  l.offsets_.assign(n + 1, 0);
  l.cols_.reserve(2 * g.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    l.degree_[v] = static_cast<double>(g.degree(v));
    auto nb = g.neighbors(v);
    l.cols_.insert(l.cols_.end(), nb.begin(), nb.end());
    l.offsets_[v + 1] = l.cols_.size();
  }
  return l;
}

void Laplacian::apply(std::span<const double> y, std::span<double> out) const {
  for (std::size_t i = 0; i < size(); ++i) {
    double acc = degree_[i] * y[i];
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) acc -= y[cols_[k]];
    out[i] = acc;
  }
}

double Laplacian::quadratic_form(std::span<const double> y) const {
  std::vector<double> ly(size());
  apply(y, ly);
  return std::inner_product(y.begin(), y.end(), ly.begin(), 0.0);
}

std::vector<double> Laplacian::dense() const {
  const std::size_t n = size();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = degree_[i];
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) m[i * n + cols_[k]] = -1.0;
  }
  return m;
}

double QpProblem::objective(std::span<const double> y) const {
  return laplacian.quadratic_form(y) + alpha * std::accumulate(y.begin(), y.end(), 0.0);
}

void QpProblem::gradient(std::span<const double> y, std::span<double> g) const {
  laplacian.apply(y, g);
  for (double& gi : g) gi = 2.0 * gi + alpha;
}

namespace {

constexpr double kUpper = 1.0;

// Component of the projected gradient: blocked directions at an active bound vanish.
double projected_component(double y, double lo, double g) {
  if (y <= lo) return std::min(g, 0.0);
  if (y >= kUpper) return std::max(g, 0.0);
  return g;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

class BoxQpSolver {
 public:
  BoxQpSolver(const QpProblem& qp, const SolverOptions& opt)
      : qp_(qp), opt_(opt), n_(qp.size()), y_(qp.start_point()), g_(n_), work_(n_), trial_(n_),
        dir_(n_) {}

  AffiliationVector run() {
    for (std::size_t i = 0; i < n_; ++i) y_[i] = std::clamp(y_[i], qp_.lower[i], kUpper);
    int iter = 0;
    double residual = refresh();
    while (residual > opt_.tolerance) {
      if (iter >= opt_.max_iterations) throw SolverError(residual, iter);
      ++iter;
      const bool moved_pg = gradient_projection_phase();
      const bool moved_cg = subspace_phase();
      residual = refresh();
      if (!moved_pg && !moved_cg && residual > opt_.tolerance) throw SolverError(residual, iter);
    }
    AffiliationVector out;
    out.scores = y_;
    out.objective = f_;
    out.residual = residual;
    out.iterations = iter;
    return out;
  }

 private:
  // Recomputes gradient and objective at y_; returns the projected gradient norm.
  double refresh() {
    qp_.laplacian.apply(y_, work_);
    f_ = dot(y_, work_);
    double s = 0.0;
    double pg2 = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      g_[i] = 2.0 * work_[i] + qp_.alpha;
      s += y_[i];
      double p = projected_component(y_[i], qp_.lower[i], g_[i]);
      pg2 += p * p;
    }
    f_ += qp_.alpha * s;
    return std::sqrt(pg2);
  }

  double objective_at(std::span<const double> y) {
    qp_.laplacian.apply(y, work_);
    return dot(y, work_) + qp_.alpha * std::accumulate(y.begin(), y.end(), 0.0);
  }

  // Projected Armijo search from y_ along dir_, starting at step `s`. On
  // success y_ and f_ are updated (gradient is stale).
  bool projected_search(double s) {
    constexpr double kArmijo = 1e-4;
    for (int tries = 0; tries < 80; ++tries, s *= 0.5) {
      double predicted = 0.0;
      bool changed = false;
      for (std::size_t i = 0; i < n_; ++i) {
        trial_[i] = std::clamp(y_[i] + s * dir_[i], qp_.lower[i], kUpper);
        predicted += g_[i] * (trial_[i] - y_[i]);
        changed |= trial_[i] != y_[i];
      }
      if (!changed) return false;
      if (predicted >= 0.0) continue;
      const double f_trial = objective_at(trial_);
      if (f_trial <= f_ + kArmijo * predicted) {
        y_.swap(trial_);
        f_ = f_trial;
        return true;
      }
    }
    return false;
  }

  // Steepest-descent steps on the projected gradient until the active set settles.
  bool gradient_projection_phase() {
    bool moved = false;
    for (int step = 0; step < 8; ++step) {
      if (step > 0) refresh();
      double pp = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        dir_[i] = -projected_component(y_[i], qp_.lower[i], g_[i]);
        pp += dir_[i] * dir_[i];
      }
      if (pp == 0.0) break;
      qp_.laplacian.apply(dir_, work_);
      const double curvature = 2.0 * dot(dir_, work_);
      const double s0 = curvature > 0.0 ? pp / curvature : 1.0 / std::sqrt(pp);
      const auto before = active_pattern();
      if (!projected_search(s0)) break;
      moved = true;
      if (active_pattern() == before) break;
    }
    if (moved) refresh();
    return moved;
  }

  std::vector<char> active_pattern() const {
    std::vector<char> a(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      a[i] = y_[i] <= qp_.lower[i] ? 1 : (y_[i] >= kUpper ? 2 : 0);
    }
    return a;
  }

  // Conjugate gradients on the face of strictly free variables, followed by a
  // projected search along the resulting direction.
  bool subspace_phase() {
    std::vector<char> free(n_);
    double gf2 = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      free[i] = y_[i] > qp_.lower[i] && y_[i] < kUpper;
      if (free[i]) gf2 += g_[i] * g_[i];
    }
    if (gf2 == 0.0) return false;

    std::vector<double> r(n_, 0.0), p(n_, 0.0), hp(n_);
    std::fill(dir_.begin(), dir_.end(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (free[i]) r[i] = -g_[i];
    }
    p = r;
    double rr = gf2;
    const double stop = std::max(1e-3 * std::sqrt(gf2), 0.1 * opt_.tolerance);
    const std::size_t cap = 2 * n_ + 10;
    bool unbounded = false;
    for (std::size_t k = 0; k < cap && std::sqrt(rr) > stop; ++k) {
      qp_.laplacian.apply(p, hp);
      double php = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        hp[i] = free[i] ? 2.0 * hp[i] : 0.0;
        php += p[i] * hp[i];
      }
      if (php <= 1e-14 * dot(p, p)) {
        // Flat direction on this face; the box stops it.
        if (k == 0) {
          dir_ = p;
          unbounded = true;
        }
        break;
      }
      const double a = rr / php;
      double rr_next = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        dir_[i] += a * p[i];
        r[i] -= a * hp[i];
        rr_next += r[i] * r[i];
      }
      const double beta = rr_next / rr;
      rr = rr_next;
      for (std::size_t i = 0; i < n_; ++i) p[i] = r[i] + beta * p[i];
    }

    double s0 = 1.0;
    if (unbounded) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (dir_[i] > 0.0) s0 = std::max(s0, (kUpper - y_[i]) / dir_[i]);
        if (dir_[i] < 0.0) s0 = std::max(s0, (qp_.lower[i] - y_[i]) / dir_[i]);
      }
    }
    return projected_search(s0);
  }

  const QpProblem& qp_;
  const SolverOptions& opt_;
  std::size_t n_;
  std::vector<double> y_, g_, work_, trial_, dir_;
  double f_ = 0.0;
};

}  // namespace

double QpProblem::projected_gradient_norm(std::span<const double> y) const {
  std::vector<double> g(size());
  gradient(y, g);
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    double p = projected_component(y[i], lower[i], g[i]);
    s += p * p;
  }
  return std::sqrt(s);
}

QpProblem build_problem(const SampledSubgraph& gs, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("build_problem: alpha must be >= 0");
  QpProblem qp;
  qp.laplacian = Laplacian::from_graph(gs.graph);
  qp.alpha = alpha;
  qp.lower.assign(gs.size(), 0.0);
  if (!gs.seed_local.empty()) {
    const double lb = 1.0 / static_cast<double>(gs.seed_local.size());
    for (Vertex v : gs.seed_local) qp.lower[v] = lb;
  }
  return qp;
}

AffiliationVector solve_affiliation(const QpProblem& problem, const SolverOptions& options) {
  if (problem.laplacian.size() != problem.lower.size()) {
    throw std::invalid_argument("solve_affiliation: bound vector size mismatch");
  }
  for (double lo : problem.lower) {
    if (!(lo >= 0.0 && lo <= kUpper)) throw std::invalid_argument("solve_affiliation: lower bound outside [0, 1]");
  }
  return BoxQpSolver(problem, options).run();
}

double cheeger_cut_value(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw DomainError(DomainError::Kind::EmptySet, "Cheeger cut of the empty set");
  if (c.size() >= g.num_vertices()) {
    throw DomainError(DomainError::Kind::FullSet, "Cheeger cut of the full vertex set");
  }
  const std::size_t smaller = std::min(c.size(), g.num_vertices() - c.size());
  return static_cast<double>(cut_size(g, c)) / static_cast<double>(smaller);
}

}  // namespace qoce
