#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hyla/hypergraph.hpp"
#include "hyla/rng.hpp"
#include "hyla/spectral.hpp"

namespace hyla {

struct ArcccCandidate {
  std::vector<int> vertices;  // sorted hyperedge
  double cost = 1.0;
};

struct ArcccInstance {
  int n = 0;
  int edge_size = 3;
  std::vector<ArcccCandidate> candidates;
  double budget = 0.0;

  void validate() const {
    if (n < 2) throw std::invalid_argument("ArcccInstance: n >= 2 required");
    if (!(budget >= 0.0)) throw std::invalid_argument("ArcccInstance: budget >= 0");
    std::vector<std::vector<int>> seen;
    for (const auto& c : candidates) {
      if (!(c.cost > 0.0) || !std::isfinite(c.cost))
        throw std::invalid_argument("ArcccInstance: costs must be positive finite");
      auto s = c.vertices;
      std::sort(s.begin(), s.end());
      if (static_cast<int>(s.size()) != edge_size)
        throw std::invalid_argument("ArcccInstance: candidate arity mismatch");
      if (std::find(seen.begin(), seen.end(), s) != seen.end())
        throw std::invalid_argument("ArcccInstance: duplicate candidate");
      seen.push_back(std::move(s));
    }
  }
};

struct ArcccSolution {
  std::vector<double> weights;   // in [0,1], per candidate
  double lambda2 = 0.0;          // lambda_2 of sum w_i phi(L_i) at `weights`
  int iterations = 0;
  double feasibility_gap = 0.0;  // max(box, budget) violation of the iterate
  double ascent_gap = 0.0;       // best feasible linearized ascent headroom
  bool converged = false;
};

struct ArcccOptions {
  int max_iters = 2000;
  double tol = 1e-6;        // improvement threshold over a 50-iteration window
  double step_scale = 0.1;  // alpha_0 = step_scale * U / sum(c)
};

namespace detail {

/// phi(sum_i w_i L_{E_i}) assembled from candidates.
inline Eigen::MatrixXd weighted_laplacian(const ArcccInstance& inst,
                                          const std::vector<double>& w) {
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(inst.n, inst.n);
  const double m = inst.edge_size - 1;
  for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
    if (w[i] == 0.0) continue;
    for (int a : inst.candidates[i].vertices) {
      lap(a, a) += m * w[i];
      for (int b : inst.candidates[i].vertices)
        if (a != b) lap(a, b) -= w[i];
    }
  }
  return lap;
}

/// Alternating projections onto the box and the budget halfspace until the
/// joint violation drops below 1e-10. The halfspace step is the Euclidean
/// projection onto c^T w = U, so weak coordinates get pushed through zero
/// and clamped away rather than merely shrunk.
inline void project_feasible(const ArcccInstance& inst, std::vector<double>& w) {
  double c2 = 0.0;
  for (const auto& c : inst.candidates) c2 += c.cost * c.cost;
  for (int round = 0; round < 10000; ++round) {
    for (auto& v : w) v = std::clamp(v, 0.0, 1.0);
    double spend = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
      spend += w[i] * inst.candidates[i].cost;
    if (spend <= inst.budget + 1e-10) return;
    const double shift = (spend - inst.budget) / c2;
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] -= shift * inst.candidates[i].cost;
  }
}

}  // namespace detail

/// lambda_2(sum w_i phi(L_i)) = min of the quadratic form on the all-ones
/// complement (exposed for the grid oracle in tests).
inline double arccc_lambda2(const ArcccInstance& inst, const std::vector<double>& w) {
  const Eigen::MatrixXd lap = detail::weighted_laplacian(inst, w);
  const Eigen::MatrixXd basis = ones_complement_basis(inst.n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(basis.transpose() * lap *
                                                        basis);
  if (solver.info() != Eigen::Success)
    throw NumericError("arccc_lambda2: eigensolver failed");
  return solver.eigenvalues()[0];
}

// Projected supergradient ascent on the concave map w -> lambda_2(sum w L_i)
// over the box-and-budget polytope. The supergradient component for
// candidate i is q2' L_i q2, averaged over an orthonormal basis of the
// near-degenerate lambda_2 eigenspace; steps diminish as alpha_0/sqrt(t);
// the best feasible iterate is kept.
inline ArcccSolution solve(const ArcccInstance& inst, const ArcccOptions& opt = {}) {
  inst.validate();
  const std::size_t k = inst.candidates.size();
  double total_cost = 0.0;
  for (const auto& c : inst.candidates) total_cost += c.cost;

  ArcccSolution sol;
  sol.weights.assign(k, 0.0);
  if (k == 0 || inst.budget == 0.0) {
    sol.lambda2 = arccc_lambda2(inst, sol.weights);
    sol.converged = true;
    return sol;
  }

  const Eigen::MatrixXd basis = ones_complement_basis(inst.n);
  std::vector<double> w(k, 1.0);
  detail::project_feasible(inst, w);

  std::vector<double> best_w = w;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<double> window;
  const double alpha0 = opt.step_scale * inst.budget / total_cost;
  Eigen::VectorXd grad(k);

  int iter = 0;
  for (; iter < opt.max_iters; ++iter) {
    const Eigen::MatrixXd lap = detail::weighted_laplacian(inst, w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(basis.transpose() * lap *
                                                          basis);
    if (solver.info() != Eigen::Success)
      throw NumericError("arccc solve: eigensolver failed");
    const double lambda2 = solver.eigenvalues()[0];
    if (lambda2 > best_val) {
      best_val = lambda2;
      best_w = w;
    }

    // Eigenvectors within 1e-8 of lambda_2, mapped back to n-space.
    std::vector<Eigen::VectorXd> eigvecs;
    for (int j = 0; j < solver.eigenvalues().size(); ++j)
      if (solver.eigenvalues()[j] - lambda2 <= 1e-8)
        eigvecs.push_back(basis * solver.eigenvectors().col(j));
    for (std::size_t i = 0; i < k; ++i) {
      double gsum = 0.0;
      const Hyperedge e{inst.candidates[i].vertices, -1};
      for (const auto& q : eigvecs) gsum += hyperedge_quadratic(q, e);
      grad[i] = gsum / double(eigvecs.size());
    }

    // Convergence: best-value improvement over the trailing window.
    window.push_back(best_val);
    if (window.size() > 50) {
      if (best_val - window[window.size() - 51] < opt.tol) {
        ++iter;
        sol.converged = true;
        break;
      }
    }

    const double alpha = alpha0 / std::sqrt(double(iter + 1));
    for (std::size_t i = 0; i < k; ++i) w[i] += alpha * grad[i];
    detail::project_feasible(inst, w);
  }

  sol.weights = best_w;
  sol.lambda2 = best_val;
  sol.iterations = iter;

  // Feasibility of the returned iterate.
  double spend = 0.0, box = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    spend += best_w[i] * inst.candidates[i].cost;
    box = std::max({box, -best_w[i], best_w[i] - 1.0});
  }
  sol.feasibility_gap = std::max(box, spend - inst.budget);

  // Certificate: largest feasible ascent along the final supergradient
  // (fractional-knapsack LP over the polytope), reported as a gap.
  {
    const Eigen::MatrixXd lap = detail::weighted_laplacian(inst, best_w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(basis.transpose() * lap *
                                                          basis);
    const double lambda2 = solver.eigenvalues()[0];
    std::vector<Eigen::VectorXd> eigvecs;
    for (int j = 0; j < solver.eigenvalues().size(); ++j)
      if (solver.eigenvalues()[j] - lambda2 <= 1e-8)
        eigvecs.push_back(basis * solver.eigenvectors().col(j));
    for (std::size_t i = 0; i < k; ++i) {
      double gsum = 0.0;
      const Hyperedge e{inst.candidates[i].vertices, -1};
      for (const auto& q : eigvecs) gsum += hyperedge_quadratic(q, e);
      grad[i] = gsum / double(eigvecs.size());
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return grad[a] / inst.candidates[a].cost > grad[b] / inst.candidates[b].cost;
    });
    double budget_left = inst.budget;
    double lp = 0.0;
    for (std::size_t idx : order) {
      if (grad[idx] <= 0.0 || budget_left <= 0.0) continue;
      const double take =
          std::min(1.0, budget_left / inst.candidates[idx].cost);
      lp += take * grad[idx];
      budget_left -= take * inst.candidates[idx].cost;
    }
    double cur = 0.0;
    for (std::size_t i = 0; i < k; ++i) cur += best_w[i] * grad[i];
    sol.ascent_gap = std::max(0.0, lp - cur);
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Weight-recovery experiment: multiplicities -> weights/costs -> solve ->
// threshold and rescale -> compare against the true support.

struct RecoveryReport {
  ArcccInstance instance;
  ArcccSolution solution;
  std::vector<std::vector<int>> true_edges;   // distinct, sorted
  std::vector<double> true_weights;           // cube-root normalized multiplicity
  std::vector<double> recovered;              // post-processed, aligned w/ candidates
  bool support_recovered = false;
  double median_rel_error = 0.0;              // over true edges
  double max_below_threshold = 0.0;           // largest rejected raw weight
  double min_above_threshold = 0.0;           // smallest kept raw weight
};

// Builds the paper-style recovery instance from a multiset hypergraph:
// distinct edge multiplicities w', weight w = cbrt(w'/max), cost
// c = sqrt(max/w'); absent candidates cost absent_cost_factor * max(w);
// budget U = sum over true edges of w*c. Absent candidates default to every
// other r-subset; `max_absent` caps that with a seeded sample for large n.
inline RecoveryReport weight_recovery_experiment(const Hypergraph& multi,
                                                 double absent_cost_factor = 2.0,
                                                 long long max_absent = -1,
                                                 std::uint64_t seed = 12345,
                                                 const ArcccOptions& opt = {}) {
  if (multi.directed())
    throw std::invalid_argument("weight_recovery_experiment: undirected only");
  const int r = multi.edge_size();
  std::map<std::vector<int>, int> mult;
  for (const auto& e : multi.edges()) ++mult[e.vertices];
  if (mult.empty())
    throw std::invalid_argument("weight_recovery_experiment: no edges");
  double max_mult = 0.0;
  for (const auto& [e, c] : mult) max_mult = std::max(max_mult, double(c));

  RecoveryReport rep;
  rep.instance.n = multi.n();
  rep.instance.edge_size = r;
  double budget = 0.0;
  double max_w = 0.0;
  for (const auto& [e, c] : mult) {
    const double w = std::cbrt(double(c) / max_mult);
    const double cost = std::sqrt(max_mult / double(c));
    rep.instance.candidates.push_back({e, cost});
    rep.true_edges.push_back(e);
    rep.true_weights.push_back(w);
    budget += w * cost;
    max_w = std::max(max_w, w);
  }
  rep.instance.budget = budget;

  // Absent candidates.
  const double absent_cost = absent_cost_factor * max_w;
  long long total = 1;
  for (int i = 0; i < r; ++i) total = total * (multi.n() - i) / (i + 1);
  const long long absent_total = total - (long long)mult.size();
  if (max_absent < 0 || absent_total <= max_absent) {
    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = i;
    while (true) {
      if (!mult.count(subset))
        rep.instance.candidates.push_back({subset, absent_cost});
      int pos = r - 1;
      while (pos >= 0 && subset[pos] == multi.n() - r + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < r; ++i) subset[i] = subset[i - 1] + 1;
    }
  } else {
    Rng rng(seed);
    std::map<std::vector<int>, bool> picked;
    while ((long long)picked.size() < max_absent) {
      auto s = rng.sample_distinct(multi.n(), r);
      std::sort(s.begin(), s.end());
      if (mult.count(s) || picked.count(s)) continue;
      picked[s] = true;
      rep.instance.candidates.push_back({s, absent_cost});
    }
  }

  rep.solution = solve(rep.instance, opt);

  // Post-processing: zero weights < 1e-4, rescale linearly so max = 1.
  const auto& raw = rep.solution.weights;
  rep.max_below_threshold = 0.0;
  rep.min_above_threshold = std::numeric_limits<double>::infinity();
  double maxw = 0.0;
  for (double v : raw) {
    if (v < 1e-4) {
      rep.max_below_threshold = std::max(rep.max_below_threshold, v);
    } else {
      rep.min_above_threshold = std::min(rep.min_above_threshold, v);
      maxw = std::max(maxw, v);
    }
  }
  rep.recovered.assign(raw.size(), 0.0);
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i] >= 1e-4 && maxw > 0.0) rep.recovered[i] = raw[i] / maxw;

  // Support comparison.
  rep.support_recovered = true;
  const std::size_t nt = rep.true_edges.size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const bool kept = rep.recovered[i] > 0.0;
    const bool is_true = i < nt;
    if (kept != is_true) rep.support_recovered = false;
  }

  std::vector<double> errs;
  for (std::size_t i = 0; i < nt; ++i)
    errs.push_back(std::abs(rep.recovered[i] - rep.true_weights[i]) /
                   rep.true_weights[i]);
  std::sort(errs.begin(), errs.end());
  if (!errs.empty()) {
    const std::size_t h = errs.size() / 2;
    rep.median_rel_error =
        errs.size() % 2 ? errs[h] : 0.5 * (errs[h - 1] + errs[h]);
  }
  return rep;
}

}  // namespace hyla
