#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyla/hypergraph.hpp"

namespace hyla {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kZeroEigTolFactor = 1e-8;  // shared zero-eigenvalue cutoff

// Eigenstructure of phi(L). Undirected: full symmetric spectrum, a(G) is
// the second smallest eigenvalue and `fiedler` its eigenvector. Directed:
// eigenvalues of B^T ((phi(L)+phi(L)^T)/2) B with B an orthonormal basis of
// the all-ones complement; a(G) is the smallest and `fiedler` the minimizer
// mapped back to n-space.
struct SpectralSummary {
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd fiedler;
  double algebraic_connectivity = 0.0;
  int zero_multiplicity = 0;
  int component_count = 0;
};

/// Sign convention: the entry of largest magnitude (lowest index on ties)
/// is made positive.
inline Eigen::VectorXd fix_sign(Eigen::VectorXd v) {
  int arg = 0;
  double best = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best + 1e-15) {
      best = a;
      arg = i;
    }
  }
  if (v[arg] < 0.0) v = -v;
  return v;
}

/// Orthonormal basis of the complement of span{u}, via the Householder
/// reflection mapping u/|u| to e_1 (columns 2..n of H).
inline Eigen::MatrixXd complement_basis(const Eigen::VectorXd& u_in) {
  const int n = static_cast<int>(u_in.size());
  if (n < 2) throw std::invalid_argument("complement_basis: n >= 2 required");
  Eigen::VectorXd u = u_in.normalized();
  u[0] -= 1.0;
  if (u.squaredNorm() < 1e-30)
    return Eigen::MatrixXd::Identity(n, n).rightCols(n - 1);
  const Eigen::MatrixXd h =
      Eigen::MatrixXd::Identity(n, n) - (2.0 / u.squaredNorm()) * (u * u.transpose());
  return h.rightCols(n - 1);
}

inline Eigen::MatrixXd ones_complement_basis(int n) {
  return complement_basis(Eigen::VectorXd::Ones(n));
}

namespace detail {

struct EigResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns matching values
};

inline EigResult symmetric_eig(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigensolver failed to converge");
  // Contract: relative residual <= 1e-9 * max(1, lambda_max).
  const double scale = std::max(1.0, std::abs(solver.eigenvalues()[m.rows() - 1]));
  const double residual =
      (m.selfadjointView<Eigen::Lower>() * solver.eigenvectors() -
       solver.eigenvectors() * solver.eigenvalues().asDiagonal())
          .norm();
  if (residual > 1e-9 * scale * std::sqrt(double(m.rows())))
    throw NumericError("eigensolver residual " + std::to_string(residual) +
                       " exceeds contract");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace detail

inline SpectralSummary spectrum(const Hypergraph& g) {
  SpectralSummary s;
  s.component_count = component_count(g);
  const int n = g.n();
  if (n == 1) {
    s.eigenvalues = Eigen::VectorXd::Zero(1);
    s.fiedler = Eigen::VectorXd::Zero(1);
    s.zero_multiplicity = 1;
    return s;
  }
  const Eigen::MatrixXd lap = laplacian_matrix(g);
  if (!g.directed()) {
    const auto eig = detail::symmetric_eig(lap);
    s.eigenvalues = eig.values;
    s.algebraic_connectivity = eig.values[1];
    const double tol = kZeroEigTolFactor * std::max(1.0, eig.values[n - 1]);
    for (int i = 0; i < n; ++i)
      if (eig.values[i] < tol) ++s.zero_multiplicity;
    // The minimizer over the all-ones complement; with a degenerate kernel
    // (disconnected hypergraph) the raw lambda_2 eigenvector need not be
    // orthogonal to ones, so deflate first.
    const Eigen::MatrixXd basis = ones_complement_basis(n);
    const auto deflated = detail::symmetric_eig(basis.transpose() * lap * basis);
    s.fiedler = fix_sign(basis * deflated.vectors.col(0));
  } else {
    const Eigen::MatrixXd sym = 0.5 * (lap + lap.transpose());
    const Eigen::MatrixXd basis = ones_complement_basis(n);
    const auto eig =
        detail::symmetric_eig(basis.transpose() * sym * basis);
    s.eigenvalues = eig.values;
    s.algebraic_connectivity = eig.values[0];
    s.fiedler = fix_sign(basis * eig.vectors.col(0));
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    for (int i = 0; i < n - 1; ++i)
      if (std::abs(eig.values[i]) < kZeroEigTolFactor * scale)
        ++s.zero_multiplicity;
  }
  return s;
}

/// x^T L_E x for a single unweighted hyperedge: sum_{i<j in E} (x_i - x_j)^2
/// undirected, sum_{t in tail} (x_h^2 - x_h x_t) directed.
inline double hyperedge_quadratic(const Eigen::VectorXd& x, const Hyperedge& e) {
  double q = 0.0;
  if (e.directed()) {
    const double xh = x[e.head];
    for (int t : e.vertices) q += xh * xh - xh * x[t];
  } else {
    for (std::size_t i = 0; i < e.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < e.vertices.size(); ++j) {
        const double d = x[e.vertices[i]] - x[e.vertices[j]];
        q += d * d;
      }
  }
  return q;
}

/// a(G) + q2^T L_{E0} q2: an upper bound for a(G + E0).
inline double add_edge_upper_bound(const Hypergraph& g, const Hyperedge& e0) {
  const auto s = spectrum(g);
  return s.algebraic_connectivity + hyperedge_quadratic(s.fiedler, e0);
}

struct LowerBoundResult {
  double root = 0.0;          // lower bound for a(G + E0)
  bool valid = false;         // a(G+E0) <= lambda_3 is certified
  bool condition_holds = false;
};

// Lower bound for a(G + E0) on a connected 3-uniform hypergraph: the unique
// zero in (lambda_2, lambda_3) of
//   g(t) = 1 + q2'L_{E0}q2/(lambda_2 - t) + 6/(lambda_3 - t) + 9/(lambda_3 - t)^2,
// found by bisection (g is increasing on the bracket). When the edge is
// invisible to the Fiedler vector (q2'L_{E0}q2 = 0), g has no zero there and
// the bound degenerates to lambda_2. `valid` certifies the hypothesis
// a(G+E0) <= lambda_3 via either the spectral-gap test or the lambda_3-side
// blowup condition with the embedded antisymmetric pattern.
inline LowerBoundResult add_edge_lower_bound(const Hypergraph& g,
                                             const Hyperedge& e0) {
  if (g.directed() || g.edge_size() != 3)
    throw std::invalid_argument("add_edge_lower_bound: undirected 3-uniform only");
  if (!is_connected(g))
    throw std::invalid_argument("add_edge_lower_bound: hypergraph must be connected");
  const auto eig = detail::symmetric_eig(laplacian_matrix(g));
  const double lambda2 = eig.values[1];
  const double lambda3 = eig.values[2];
  if (lambda3 - lambda2 < 1e-8)
    throw NumericError(
        "add_edge_lower_bound: lambda_2 ~ lambda_3 (gap " +
        std::to_string(lambda3 - lambda2) + "), theorem hypothesis fails");
  const Eigen::VectorXd q2 = eig.vectors.col(1);
  const Eigen::VectorXd q3 = eig.vectors.col(2);
  const double t2 = hyperedge_quadratic(q2, e0);

  LowerBoundResult res;
  // q2^T Lhat q3 with the antisymmetric 3x3 pattern embedded at E0 (sorted
  // vertices a < b < c): rows (0,1,-1; -1,0,1; 1,-1,0).
  const int a = e0.vertices[0], b = e0.vertices[1], c = e0.vertices[2];
  const double cross =
      q2[a] * (q3[b] - q3[c]) + q2[b] * (q3[c] - q3[a]) + q2[c] * (q3[a] - q3[b]);
  const double t3 = hyperedge_quadratic(q3, e0);
  res.condition_holds =
      t3 > 3.0 * std::sqrt(3.0) * cross * cross / (lambda3 - lambda2);
  res.valid = res.condition_holds || (lambda3 - lambda2 >= t2);

  const auto gfun = [&](double t) {
    const double d3 = lambda3 - t;
    return 1.0 + t2 / (lambda2 - t) + 6.0 / d3 + 9.0 / (d3 * d3);
  };
  const double eps = 1e-12 * std::max(1.0, lambda3);
  double lo = lambda2 + eps, hi = lambda3 - eps;
  if (t2 <= 0.0 || gfun(lo) >= 0.0) {
    res.root = lambda2;  // no zero in the bracket
    return res;
  }
  if (gfun(hi) <= 0.0) {
    res.root = hi;  // root crowds lambda_3; hi is still a valid bound
    return res;
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (gfun(mid) < 0.0 ? lo : hi) = mid;
  }
  res.root = lo;
  return res;
}

struct ConsensusResult {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<double> disagreement;  // ||x - mean * 1|| per sample
  double fitted_rate = 0.0;          // exponential decay rate of disagreement
  double mean_drift = 0.0;           // max |mean(x_t) - mean(x_0)|
};

// Consensus dynamics xdot^T = -x^T L, integrated as xdot = -phi(L)^T x with
// classic fourth-order Runge-Kutta. Requires dt * lambda_max < 2.
inline ConsensusResult consensus_simulate(const Hypergraph& g,
                                          const Eigen::VectorXd& x0, double dt,
                                          int steps) {
  if (x0.size() != g.n())
    throw std::invalid_argument("consensus_simulate: state length mismatch");
  if (steps < 1 || dt <= 0.0)
    throw std::invalid_argument("consensus_simulate: need steps >= 1, dt > 0");
  const Eigen::MatrixXd lap = laplacian_matrix(g);
  const Eigen::MatrixXd sys = -lap.transpose();
  {
    const Eigen::MatrixXd sym = 0.5 * (lap + lap.transpose());
    const auto eig = detail::symmetric_eig(sym);
    const double lmax = eig.values[g.n() - 1];
    if (dt * lmax >= 2.0)
      throw NumericError("consensus_simulate: dt * lambda_max = " +
                         std::to_string(dt * lmax) + " >= 2, unstable");
  }

  ConsensusResult res;
  res.times.reserve(steps + 1);
  res.states.reserve(steps + 1);
  Eigen::VectorXd x = x0;
  const double mean0 = x0.mean();
  auto record = [&](double t, const Eigen::VectorXd& state) {
    res.times.push_back(t);
    res.states.push_back(state);
    const double mu = state.mean();
    res.disagreement.push_back(
        (state - Eigen::VectorXd::Constant(state.size(), mu)).norm());
    res.mean_drift = std::max(res.mean_drift, std::abs(mu - mean0));
  };
  record(0.0, x);
  for (int i = 1; i <= steps; ++i) {
    const Eigen::VectorXd k1 = sys * x;
    const Eigen::VectorXd k2 = sys * (x + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = sys * (x + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = sys * (x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(i * dt, x);
  }

  // Least-squares slope of log(disagreement) over the trailing half, where
  // the slowest mode dominates.
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = res.times.size() / 2; i < res.times.size(); ++i)
    if (res.disagreement[i] > 1e-13)
      pts.emplace_back(res.times[i], std::log(res.disagreement[i]));
  if (pts.size() >= 2) {
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (const auto& [t, y] : pts) {
      st += t;
      sy += y;
      stt += t * t;
      sty += t * y;
    }
    const double k = pts.size();
    res.fitted_rate = -(k * sty - st * sy) / (k * stt - st * st);
  }
  return res;
}

}  // namespace hyla
