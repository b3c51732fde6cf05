#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyla/hypergraph.hpp"
#include "hyla/rng.hpp"

namespace hyla {

/// 3-uniform hyperring: n hyperedges {v_i, v_{i+1}, v_{i+2}} (indices mod n).
inline Hypergraph hyperring(int n) {
  if (n < 5) throw std::invalid_argument("hyperring: n >= 5 required");
  Hypergraph g(n, 3, false);
  for (int i = 0; i < n; ++i) g.add_edge({i, (i + 1) % n, (i + 2) % n});
  return g;
}

/// All C(n,r) r-subsets as hyperedges.
inline Hypergraph complete_hypergraph(int n, int r) {
  if (r < 2 || n < r)
    throw std::invalid_argument("complete_hypergraph: need n >= r >= 2");
  Hypergraph g(n, r, false);
  std::vector<int> subset(r);
  for (int i = 0; i < r; ++i) subset[i] = i;
  while (true) {
    g.add_edge(subset);
    int pos = r - 1;
    while (pos >= 0 && subset[pos] == n - r + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < r; ++i) subset[i] = subset[i - 1] + 1;
  }
  return g;
}

/// Complete 3-uniform star on n+1 vertices: {v_i, v_j, hub} for i < j <= n.
inline Hypergraph complete_star(int n) {
  if (n < 2) throw std::invalid_argument("complete_star: n >= 2 required");
  Hypergraph g(n + 1, 3, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge({i, j, n});
  return g;
}

namespace detail {
inline void add_ring_families(Hypergraph& g, int offset, int n) {
  for (int i = 0; i < n; ++i)
    g.add_edge({offset + i, offset + (i + 1) % n, offset + (i + 2) % n});
  for (int i = 0; i < n; ++i)
    g.add_edge({offset + i, offset + (i + 2) % n, offset + (i + 4) % n});
}
}  // namespace detail

// Multi-star family: two n-vertex halves, each carrying a step-1 and a
// step-2 ring, bridged through 1 or 2 hub vertices; every (first-half,
// second-half) pair forms a hyperedge with each hub.
inline Hypergraph multi_star(int n, int hubs) {
  if (n < 5) throw std::invalid_argument("multi_star: n >= 5 required");
  if (hubs != 1 && hubs != 2)
    throw std::invalid_argument("multi_star: hubs must be 1 or 2");
  Hypergraph g(2 * n + hubs, 3, false);
  for (int t = 0; t < hubs; ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.add_edge({i, n + j, 2 * n + t});
  detail::add_ring_families(g, 0, n);
  detail::add_ring_families(g, n, n);
  return g;
}

namespace detail {
inline std::vector<std::vector<int>> sample_subsets(int n, int r,
                                                    long long edge_count,
                                                    Rng& rng) {
  long long total = 1;
  for (int i = 0; i < r; ++i) {
    total = total * (n - i) / (i + 1);
    if (total > (1LL << 40)) break;  // plenty; avoid overflow
  }
  if (edge_count > total)
    throw std::invalid_argument("random hypergraph: edge_count exceeds C(n,r)");

  std::vector<std::vector<int>> out;
  if (total <= 200000) {
    // Enumerate all subsets, then take a seeded partial shuffle.
    std::vector<std::vector<int>> all;
    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = i;
    while (true) {
      all.push_back(subset);
      int pos = r - 1;
      while (pos >= 0 && subset[pos] == n - r + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < r; ++i) subset[i] = subset[i - 1] + 1;
    }
    for (long long i = 0; i < edge_count; ++i) {
      const int j = rng.uniform_int((int)i, (int)all.size() - 1);
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
  } else {
    while ((long long)out.size() < edge_count) {
      auto pick = rng.sample_distinct(n, r);
      std::sort(pick.begin(), pick.end());
      if (std::find(out.begin(), out.end(), pick) == out.end())
        out.push_back(pick);
    }
  }
  return out;
}
}  // namespace detail

/// Seeded uniform sample of `edge_count` distinct r-subsets.
inline Hypergraph random_uniform(int n, int r, long long edge_count,
                                 std::uint64_t seed) {
  if (r < 2 || n < r)
    throw std::invalid_argument("random_uniform: need n >= r >= 2");
  Rng rng(seed);
  Hypergraph g(n, r, false);
  for (auto& s : detail::sample_subsets(n, r, edge_count, rng)) g.add_edge(s);
  return g;
}

/// Seeded sample of distinct directed hyperedges: an r-subset with a random
/// member promoted to head.
inline Hypergraph random_directed(int n, int r, long long edge_count,
                                  std::uint64_t seed) {
  if (r < 2 || n < r)
    throw std::invalid_argument("random_directed: need n >= r >= 2");
  Rng rng(seed);
  Hypergraph g(n, r, true);
  std::vector<Hyperedge> chosen;
  long long total = r;  // C(n,r) * r possible directed edges
  for (int i = 0; i < r; ++i) total = total * (n - i) / (i + 1);
  total *= r;
  if (edge_count > total)
    throw std::invalid_argument("random_directed: edge_count exceeds C(n,r)*r");
  while ((long long)chosen.size() < edge_count) {
    auto pick = rng.sample_distinct(n, r);
    const int head = pick[rng.uniform_int(0, r - 1)];
    std::vector<int> tail;
    for (int v : pick)
      if (v != head) tail.push_back(v);
    const Hyperedge e = make_directed_edge(tail, head);
    if (std::find(chosen.begin(), chosen.end(), e) == chosen.end())
      chosen.push_back(e);
  }
  for (const auto& e : chosen) g.add_directed_edge(e.vertices, e.head);
  return g;
}

}  // namespace hyla
