#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyla/hypergraph.hpp"
#include "hyla/spectral.hpp"

namespace hyla {

/// sum_{i<j in S} (x_i - x_j)^2 = |S| sum x_i^2 - (sum x_i)^2 for a vertex set.
inline double subset_score(const Eigen::VectorXd& x, const std::vector<int>& s) {
  double sum = 0.0, sq = 0.0;
  for (int v : s) {
    sum += x[v];
    sq += x[v] * x[v];
  }
  return double(s.size()) * sq - sum * sum;
}

namespace detail {

/// Candidate subsets of size r made of the k lowest plus r-k highest
/// vertices in x-order (k = 0..r); the score maximum over all r-subsets is
/// always attained among these.
inline std::vector<std::vector<int>> extreme_candidates(const Eigen::VectorXd& x,
                                                        int r) {
  const int n = static_cast<int>(x.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return a < b;
  });
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= r; ++k) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i) s.push_back(order[i]);
    for (int i = 0; i < r - k; ++i) s.push_back(order[n - 1 - i]);
    std::sort(s.begin(), s.end());
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

template <typename Fn>
inline void for_each_subset(int n, int r, Fn&& fn) {
  std::vector<int> subset(r);
  for (int i = 0; i < r; ++i) subset[i] = i;
  while (true) {
    fn(subset);
    int pos = r - 1;
    while (pos >= 0 && subset[pos] == n - r + pos) --pos;
    if (pos < 0) return;
    ++subset[pos];
    for (int i = pos + 1; i < r; ++i) subset[i] = subset[i - 1] + 1;
  }
}

}  // namespace detail

// Algorithm step "find E1 not in E maximizing x^T L_{E1} x". The argmax of
// the subset score lies among the sorted prefix/suffix unions, so those are
// scanned first; if every maximizing extreme candidate is already an edge
// (or the scores are all zero, where the tie-break must consider every
// subset) the scan falls back to exhaustive enumeration. Ties break to the
// lexicographically smallest vertex set.
inline Hyperedge best_addition(const Hypergraph& g, const Eigen::VectorXd& x) {
  if (g.directed())
    throw std::invalid_argument("best_addition: undirected hypergraphs only");
  const int r = g.edge_size();
  const auto extremes = detail::extreme_candidates(x, r);
  double global_max = -1.0;
  for (const auto& s : extremes) global_max = std::max(global_max, subset_score(x, s));

  if (global_max > 0.0) {
    std::vector<int> best;
    for (const auto& s : extremes) {
      if (subset_score(x, s) < global_max) continue;
      if (g.contains(make_edge(s))) continue;
      if (best.empty() || s < best) best = s;
    }
    if (!best.empty()) return make_edge(best);
  }

  // Exhaustive fallback over absent subsets; lexicographic enumeration makes
  // the first argmax the tie-break winner.
  std::vector<int> best;
  double best_score = -1.0;
  detail::for_each_subset(g.n(), r, [&](const std::vector<int>& s) {
    if (g.contains(make_edge(s))) return;
    const double sc = subset_score(x, s);
    if (sc > best_score) {
      best_score = sc;
      best = s;
    }
  });
  if (best.empty())
    throw std::invalid_argument("best_addition: no absent hyperedge exists");
  return make_edge(best);
}

/// Existing hyperedge minimizing x^T L_E x; ties break to the
/// lexicographically smallest canonical form.
inline Hyperedge worst_existing(const Hypergraph& g, const Eigen::VectorXd& x) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("worst_existing: edge set is empty");
  const Hyperedge* best = nullptr;
  double best_score = 0.0;
  for (const auto& e : g.edges()) {
    const double sc = hyperedge_quadratic(x, e);
    if (!best || sc < best_score || (sc == best_score && e < *best)) {
      best = &e;
      best_score = sc;
    }
  }
  return *best;
}

enum class RewireMode { kAdd, kRewire };

struct RewireStep {
  std::optional<Hyperedge> removed;
  Hyperedge added;
  double a_before = 0.0;
  double a_after = 0.0;
  double score_added = 0.0;
  std::optional<double> score_removed;
};

struct RewireReport {
  std::vector<RewireStep> steps;
  bool exhausted = false;  // stopped early: no addition candidate remained
};

// Greedy rewiring/adding loop: per iteration recompute the spectrum, pick
// the minimum-score existing edge (rewire mode) and the maximum-score absent
// edge from the pre-step edge set, apply both atomically, log the step.
inline std::pair<Hypergraph, RewireReport> rewire(const Hypergraph& g_in, int steps,
                                                  RewireMode mode) {
  if (steps < 0) throw std::invalid_argument("rewire: steps must be >= 0");
  Hypergraph g = g_in;
  RewireReport report;
  for (int i = 0; i < steps; ++i) {
    const auto spec = spectrum(g);
    RewireStep step;
    step.a_before = spec.algebraic_connectivity;
    if (mode == RewireMode::kRewire) {
      step.removed = worst_existing(g, spec.fiedler);
      step.score_removed = hyperedge_quadratic(spec.fiedler, *step.removed);
    }
    try {
      step.added = best_addition(g, spec.fiedler);
    } catch (const std::invalid_argument&) {
      report.exhausted = true;
      break;
    }
    step.score_added = subset_score(spec.fiedler, step.added.vertices);
    if (step.removed) g = g.with_edge_removed(*step.removed);
    g = g.with_edge_added(step.added);
    step.a_after = spectrum(g).algebraic_connectivity;
    report.steps.push_back(std::move(step));
  }
  return {std::move(g), std::move(report)};
}

}  // namespace hyla
