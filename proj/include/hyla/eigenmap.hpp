#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyla/eigenmap_types.hpp"
#include "hyla/hypergraph.hpp"
#include "hyla/rng.hpp"
#include "hyla/spectral.hpp"

namespace hyla {

/// Min-max normalization of each column to [0,1]; constant columns map to 0.
inline Eigen::MatrixXd minmax_normalize(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd out = x;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double lo = x.col(j).minCoeff(), hi = x.col(j).maxCoeff();
    if (hi > lo) {
      out.col(j) = (x.col(j).array() - lo) / (hi - lo);
    } else {
      out.col(j).setZero();
    }
  }
  return out;
}

/// Z-score normalization per column (alternative behind a flag).
inline Eigen::MatrixXd zscore_normalize(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd out = x;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double mu = x.col(j).mean();
    const double sd = std::sqrt((x.col(j).array() - mu).square().mean());
    if (sd > 0) {
      out.col(j) = (x.col(j).array() - mu) / sd;
    } else {
      out.col(j).setZero();
    }
  }
  return out;
}

namespace detail {

/// Indices of the m nearest rows to row i (self excluded, distance ties by
/// lower index).
inline std::vector<int> nearest_neighbors(const Eigen::MatrixXd& x, int i, int m) {
  const int n = static_cast<int>(x.rows());
  std::vector<std::pair<double, int>> dist;
  dist.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    dist.emplace_back((x.row(i) - x.row(j)).squaredNorm(), j);
  }
  std::sort(dist.begin(), dist.end());
  std::vector<int> out;
  for (int t = 0; t < m; ++t) out.push_back(dist[t].second);
  return out;
}

}  // namespace detail

/// One (m+1)-uniform hyperedge per point: the point plus its m nearest
/// neighbors. Exactly n hyperedges, duplicates kept with multiplicity.
inline Hypergraph knn_hypergraph(const Eigen::MatrixXd& x, int m) {
  const int n = static_cast<int>(x.rows());
  if (m < 2) throw std::invalid_argument("knn_hypergraph: m >= 2 required");
  if (m >= n) throw std::invalid_argument("knn_hypergraph: m < n required");
  Hypergraph g(n, m + 1, false);
  for (int i = 0; i < n; ++i) {
    auto edge = detail::nearest_neighbors(x, i, m);
    edge.push_back(i);
    g.add_edge(std::move(edge));
  }
  return g;
}

/// 0-1 kNN graph: {i, j} iff j is among i's m nearest or vice versa; simple
/// edges (a mutual pair still gets weight 1), as a 2-uniform hypergraph.
inline Hypergraph knn_graph(const Eigen::MatrixXd& x, int m) {
  const int n = static_cast<int>(x.rows());
  if (m < 1) throw std::invalid_argument("knn_graph: m >= 1 required");
  if (m >= n) throw std::invalid_argument("knn_graph: m < n required");
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j : detail::nearest_neighbors(x, i, m))
      pairs.insert({std::min(i, j), std::max(i, j)});
  Hypergraph g(n, 2, false);
  for (const auto& [a, b] : pairs) g.add_edge({a, b});
  return g;
}

// Columns = eigenvectors of phi(L) for the q smallest eigenvalues after the
// trivial all-ones direction is deflated away, each sign-fixed. The all-ones
// complement is an invariant subspace of phi(L), so the columns are exact
// eigenvectors, orthonormal and orthogonal to ones. On a connected
// hypergraph this is precisely "the q smallest nonzero eigenvalues"; on a
// disconnected one the remaining kernel directions (component indicators)
// are kept, which is what makes the embedding carry the component structure.
inline Embedding embed(const Hypergraph& g, int q) {
  if (q < 1) throw std::invalid_argument("embed: q >= 1 required");
  const int n = g.n();
  if (q > n - 1)
    throw std::invalid_argument("embed: q exceeds available eigenpairs");
  const Eigen::MatrixXd lap = laplacian_matrix(g);
  const Eigen::MatrixXd basis = ones_complement_basis(n);
  const auto eig = detail::symmetric_eig(basis.transpose() * lap * basis);
  const double scale = std::max(1.0, eig.values[n - 2]);
  Embedding emb;
  for (int j = 0; j < n - 1; ++j)
    if (eig.values[j] < kZeroEigTolFactor * scale) ++emb.skipped_zero_count;
  ++emb.skipped_zero_count;  // the deflated all-ones direction
  emb.coords.resize(n, q);
  emb.eigenvalues_used.resize(q);
  for (int j = 0; j < q; ++j) {
    emb.coords.col(j) = fix_sign(basis * eig.vectors.col(j));
    emb.eigenvalues_used[j] = eig.values[j];
  }
  return emb;
}

// Classic normalized eigenmap on a 2-uniform hypergraph (graph): solve
// L f = lambda D f via the symmetric form D^{-1/2} L D^{-1/2} with the
// trivial direction D^{1/2} 1 deflated, map back f = D^{-1/2} u.
inline Embedding embed_normalized_graph(const Hypergraph& g, int q) {
  if (g.edge_size() != 2)
    throw std::invalid_argument("embed_normalized_graph: 2-uniform only");
  const int n = g.n();
  if (q > n - 1)
    throw std::invalid_argument("embed: q exceeds available eigenpairs");
  const Eigen::MatrixXd lap = laplacian_matrix(g);
  Eigen::VectorXd deg = lap.diagonal();
  for (int i = 0; i < n; ++i)
    if (deg[i] <= 0.0)
      throw std::invalid_argument("embed_normalized_graph: isolated vertex");
  const Eigen::VectorXd dinv_sqrt = deg.array().rsqrt();
  const Eigen::MatrixXd nlap =
      dinv_sqrt.asDiagonal() * lap * dinv_sqrt.asDiagonal();
  const Eigen::MatrixXd basis =
      complement_basis(deg.array().sqrt().matrix());
  const auto eig = detail::symmetric_eig(
      basis.transpose() * (0.5 * (nlap + nlap.transpose())) * basis);
  const double scale = std::max(1.0, eig.values[n - 2]);
  Embedding emb;
  for (int j = 0; j < n - 1; ++j)
    if (eig.values[j] < kZeroEigTolFactor * scale) ++emb.skipped_zero_count;
  ++emb.skipped_zero_count;
  emb.coords.resize(n, q);
  emb.eigenvalues_used.resize(q);
  for (int j = 0; j < q; ++j) {
    emb.coords.col(j) =
        fix_sign(dinv_sqrt.asDiagonal() * (basis * eig.vectors.col(j)));
    emb.eigenvalues_used[j] = eig.values[j];
  }
  return emb;
}

// ---------------------------------------------------------------------------
// K-means and clustering metrics.

// Lloyd iterations with k-means++ seeding; 50 restarts, 300-iteration cap,
// best inertia kept. An emptied cluster is re-seeded from the point farthest
// from its centroid.
inline std::vector<int> kmeans(const Eigen::MatrixXd& y, int k, std::uint64_t seed,
                               int restarts = 50, int max_iters = 300) {
  const int n = static_cast<int>(y.rows());
  if (k < 1 || k > n) throw std::invalid_argument("kmeans: need 1 <= k <= n");
  Rng rng(seed);

  std::vector<int> best_labels(n, 0);
  double best_inertia = std::numeric_limits<double>::infinity();

  for (int rep = 0; rep < restarts; ++rep) {
    // k-means++ seeding
    Eigen::MatrixXd centers(k, y.cols());
    centers.row(0) = y.row(rng.uniform_int(0, n - 1));
    Eigen::VectorXd d2(n);
    for (int c = 1; c < k; ++c) {
      for (int i = 0; i < n; ++i) {
        double m = std::numeric_limits<double>::infinity();
        for (int cc = 0; cc < c; ++cc)
          m = std::min(m, (y.row(i) - centers.row(cc)).squaredNorm());
        d2[i] = m;
      }
      const double total = d2.sum();
      int pick = 0;
      if (total > 0) {
        double r = rng.uniform01() * total, acc = 0.0;
        for (int i = 0; i < n; ++i) {
          acc += d2[i];
          if (acc >= r) {
            pick = i;
            break;
          }
        }
      } else {
        pick = rng.uniform_int(0, n - 1);
      }
      centers.row(c) = y.row(pick);
    }

    std::vector<int> labels(n, -1);
    double inertia = 0.0;
    for (int it = 0; it < max_iters; ++it) {
      bool changed = false;
      inertia = 0.0;
      for (int i = 0; i < n; ++i) {
        int arg = 0;
        double m = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
          const double d = (y.row(i) - centers.row(c)).squaredNorm();
          if (d < m) {
            m = d;
            arg = c;
          }
        }
        if (labels[i] != arg) {
          labels[i] = arg;
          changed = true;
        }
        inertia += m;
      }
      if (!changed && it > 0) break;
      // update step
      Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, y.cols());
      std::vector<int> counts(k, 0);
      for (int i = 0; i < n; ++i) {
        sums.row(labels[i]) += y.row(i);
        ++counts[labels[i]];
      }
      for (int c = 0; c < k; ++c) {
        if (counts[c] > 0) {
          centers.row(c) = sums.row(c) / counts[c];
        } else {
          // re-seed from the globally farthest point
          int far = 0;
          double fm = -1.0;
          for (int i = 0; i < n; ++i) {
            const double d =
                (y.row(i) - centers.row(labels[i])).squaredNorm();
            if (d > fm) {
              fm = d;
              far = i;
            }
          }
          centers.row(c) = y.row(far);
        }
      }
    }
    if (inertia < best_inertia) {
      best_inertia = inertia;
      best_labels = labels;
    }
  }
  return best_labels;
}

namespace detail {

inline std::map<int, int> label_counts(const std::vector<int>& a) {
  std::map<int, int> c;
  for (int v : a) ++c[v];
  return c;
}

inline double entropy(const std::map<int, int>& counts, double n) {
  double h = 0.0;
  for (const auto& [k, c] : counts)
    if (c > 0) h -= (c / n) * std::log(c / n);
  return h;
}

}  // namespace detail

/// Normalized mutual information, mutual information over the arithmetic
/// mean of the entropies. Both-single-cluster agreement scores 1; a single
/// cluster against anything else scores 0 (zero-entropy convention).
inline double nmi(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("nmi: label vectors must match and be nonempty");
  const double n = double(a.size());
  const auto ca = detail::label_counts(a);
  const auto cb = detail::label_counts(b);
  if (ca.size() == 1 && cb.size() == 1) return 1.0;
  std::map<std::pair<int, int>, int> joint;
  for (std::size_t i = 0; i < a.size(); ++i) ++joint[{a[i], b[i]}];
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    const double pij = c / n;
    const double pi = ca.at(key.first) / n;
    const double pj = cb.at(key.second) / n;
    if (pij > 0) mi += pij * std::log(pij / (pi * pj));
  }
  const double hmean = 0.5 * (detail::entropy(ca, n) + detail::entropy(cb, n));
  if (hmean <= 0.0 || mi <= 0.0) return 0.0;
  return std::min(1.0, mi / hmean);
}

/// Adjusted Rand index via pair counting; 1 when both partitions are
/// trivially identical (degenerate zero denominator).
inline double ari(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("ari: label vectors must match and be nonempty");
  const auto comb2 = [](double x) { return x * (x - 1.0) / 2.0; };
  const auto ca = detail::label_counts(a);
  const auto cb = detail::label_counts(b);
  std::map<std::pair<int, int>, int> joint;
  for (std::size_t i = 0; i < a.size(); ++i) ++joint[{a[i], b[i]}];
  double sum_ij = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (const auto& [k, c] : joint) sum_ij += comb2(c);
  for (const auto& [k, c] : ca) sum_a += comb2(c);
  for (const auto& [k, c] : cb) sum_b += comb2(c);
  const double total = comb2(double(a.size()));
  const double expected = sum_a * sum_b / total;
  const double denom = 0.5 * (sum_a + sum_b) - expected;
  if (denom == 0.0) return 1.0;
  return (sum_ij - expected) / denom;
}

// ---------------------------------------------------------------------------
// Full pipeline.

enum class EigenmapVariant { kHypergraph, kGraph, kGraphUnnormalized };

struct PipelineOptions {
  int m = 7;
  int q = 2;
  int k = 2;
  EigenmapVariant variant = EigenmapVariant::kHypergraph;
  std::uint64_t seed = 0;
  bool zscore = false;  // min-max by default
};

struct PipelineResult {
  double nmi = 0.0;
  double ari = 0.0;
  Embedding embedding;
  std::vector<int> cluster_labels;
};

inline PipelineResult pipeline(const Dataset& ds, const PipelineOptions& opt) {
  if (!ds.has_labels)
    throw std::invalid_argument("pipeline: dataset labels required for scoring");
  const Eigen::MatrixXd x =
      opt.zscore ? zscore_normalize(ds.features) : minmax_normalize(ds.features);
  PipelineResult res;
  switch (opt.variant) {
    case EigenmapVariant::kHypergraph:
      res.embedding = embed(knn_hypergraph(x, opt.m), opt.q);
      break;
    case EigenmapVariant::kGraph:
      res.embedding = embed_normalized_graph(knn_graph(x, opt.m), opt.q);
      break;
    case EigenmapVariant::kGraphUnnormalized:
      res.embedding = embed(knn_graph(x, opt.m), opt.q);
      break;
  }
  res.cluster_labels = kmeans(res.embedding.coords, opt.k, opt.seed);
  res.nmi = nmi(res.cluster_labels, ds.labels);
  res.ari = ari(res.cluster_labels, ds.labels);
  return res;
}

}  // namespace hyla
