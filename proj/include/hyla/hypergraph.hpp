#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyla/dense_tensor.hpp"

namespace hyla {

// One hyperedge in canonical form. Undirected: `vertices` holds all m+1 ids,
// sorted ascending, head == -1. Directed: `vertices` is the sorted m-vertex
// tail and `head` the single head vertex (never in the tail).
struct Hyperedge {
  std::vector<int> vertices;
  int head = -1;

  bool directed() const { return head >= 0; }
  int size() const {
    return static_cast<int>(vertices.size()) + (directed() ? 1 : 0);
  }
  /// All vertices incident to the edge (tail + head for directed).
  std::vector<int> incident() const {
    std::vector<int> v = vertices;
    if (directed()) v.push_back(head);
    return v;
  }
  friend bool operator==(const Hyperedge& a, const Hyperedge& b) {
    return a.head == b.head && a.vertices == b.vertices;
  }
  friend bool operator<(const Hyperedge& a, const Hyperedge& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.head < b.head;
  }
};

inline Hyperedge make_edge(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Hyperedge{std::move(vertices), -1};
}

inline Hyperedge make_directed_edge(std::vector<int> tail, int head) {
  std::sort(tail.begin(), tail.end());
  return Hyperedge{std::move(tail), head};
}

// Uniform hypergraph over vertices [0, n): a multiset of (m+1)-vertex
// hyperedges, optionally directed, with a positive weight per edge
// (default 1). Edges are canonicalized on insert; duplicates are kept and
// count with multiplicity. Instances are treated as immutable once built.
class Hypergraph {
 public:
  Hypergraph(int n, int edge_size, bool directed)
      : n_(n), edge_size_(edge_size), directed_(directed) {
    if (n < 1) throw std::invalid_argument("Hypergraph: n must be >= 1");
    if (edge_size < 2)
      throw std::invalid_argument("Hypergraph: edge size m+1 must be >= 2");
  }

  int n() const { return n_; }
  int edge_size() const { return edge_size_; }  // m + 1
  int m() const { return edge_size_ - 1; }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  bool weighted() const {
    return std::any_of(weights_.begin(), weights_.end(),
                       [](double w) { return w != 1.0; });
  }

  void add_edge(std::vector<int> vertices, double weight = 1.0) {
    if (directed_)
      throw std::invalid_argument("add_edge: hypergraph is directed");
    validate_vertices(vertices, edge_size_);
    push(make_edge(std::move(vertices)), weight);
  }

  void add_directed_edge(std::vector<int> tail, int head, double weight = 1.0) {
    if (!directed_)
      throw std::invalid_argument("add_directed_edge: hypergraph is undirected");
    validate_vertices(tail, edge_size_ - 1);
    if (head < 0 || head >= n_)
      throw std::invalid_argument("add_directed_edge: head out of range");
    if (std::find(tail.begin(), tail.end(), head) != tail.end())
      throw std::invalid_argument("add_directed_edge: head must not be in tail");
    push(make_directed_edge(std::move(tail), head), weight);
  }

  void add_edge(Hyperedge e, double weight = 1.0) {
    if (e.directed() != directed_)
      throw std::invalid_argument("add_edge: directedness mismatch");
    if (directed_) {
      add_directed_edge(std::move(e.vertices), e.head, weight);
    } else {
      add_edge(std::move(e.vertices), weight);
    }
  }

  /// Multiset membership: is any copy of `e` (canonical form) present?
  bool contains(const Hyperedge& e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
  }

  Hypergraph with_edge_added(const Hyperedge& e, double weight = 1.0) const {
    Hypergraph g = *this;
    g.add_edge(e, weight);
    return g;
  }

  /// Removes one copy of `e`; throws if absent.
  Hypergraph with_edge_removed(const Hyperedge& e) const {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end())
      throw std::invalid_argument("with_edge_removed: edge not present");
    Hypergraph g = *this;
    const std::size_t i = static_cast<std::size_t>(it - edges_.begin());
    g.edges_.erase(g.edges_.begin() + i);
    g.weights_.erase(g.weights_.begin() + i);
    return g;
  }

  /// Edges sorted canonically (used by the writer; order is not semantic).
  std::vector<std::size_t> canonical_order() const {
    std::vector<std::size_t> idx(edges_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return edges_[a] < edges_[b];
    });
    return idx;
  }

 private:
  void validate_vertices(const std::vector<int>& v, int expected) const {
    if (static_cast<int>(v.size()) != expected)
      throw std::invalid_argument("Hypergraph: wrong edge arity");
    for (int x : v)
      if (x < 0 || x >= n_)
        throw std::invalid_argument("Hypergraph: vertex id out of range");
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("Hypergraph: duplicate vertex in edge");
  }

  void push(Hyperedge e, double weight) {
    if (!(weight >= 0.0) || !std::isfinite(weight))
      throw std::invalid_argument("Hypergraph: weight must be finite and >= 0");
    edges_.push_back(std::move(e));
    weights_.push_back(weight);
  }

  int n_;
  int edge_size_;
  bool directed_;
  std::vector<Hyperedge> edges_;
  std::vector<double> weights_;
};

// ---------------------------------------------------------------------------
// Degrees and Laplacian assembly.

/// Undirected: deg(v) = m * sum of weights of incident edges.
/// Directed: indegree, deg_in(v) = m * sum of weights of edges with head v.
inline Eigen::VectorXd degrees(const Hypergraph& g) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(g.n());
  const double m = g.m();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const double w = g.weight(i);
    if (g.directed()) {
      d[e.head] += m * w;
    } else {
      for (int v : e.vertices) d[v] += m * w;
    }
  }
  return d;
}

/// Directed only: deg_out(v) = sum of weights of edges with v in the tail.
inline Eigen::VectorXd outdegrees(const Hypergraph& g) {
  if (!g.directed())
    throw std::invalid_argument("outdegrees: undirected hypergraph");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(g.n());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (int v : g.edge(i).vertices) d[v] += g.weight(i);
  return d;
}

// phi(L), assembled sparsely from pair co-occurrence: diag(degrees) minus
// M, where M[i][j] sums weights of edges containing both v_i and v_j
// (undirected) or containing v_i in the tail with head v_j (directed).
// Row-identical to linear_representation of the dense Laplacian tensor.
inline Eigen::MatrixXd laplacian_matrix(const Hypergraph& g) {
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.n(), g.n());
  const double m = g.m();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const double w = g.weight(i);
    if (g.directed()) {
      lap(e.head, e.head) += m * w;
      for (int t : e.vertices) lap(t, e.head) -= w;
    } else {
      for (int a : e.vertices) {
        lap(a, a) += m * w;
        for (int b : e.vertices)
          if (a != b) lap(a, b) -= w;
      }
    }
  }
  return lap;
}

// ---------------------------------------------------------------------------
// Dense oracle tensors (small n only).

/// Adjacency tensor: weight/m! at every tail permutation (head fixed last
/// for directed; all positions permuted for undirected). Oracle path, n <= 8.
inline DenseTensor adjacency_tensor(const Hypergraph& g) {
  if (g.n() > 8)
    throw std::invalid_argument("adjacency_tensor: oracle path requires n <= 8");
  DenseTensor a(g.edge_size(), g.n());
  double mfact = 1.0;
  for (int i = 2; i <= g.m(); ++i) mfact *= i;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const double val = g.weight(i) / mfact;
    if (g.directed()) {
      std::vector<int> idx = e.vertices;  // sorted tail
      do {
        std::vector<int> full = idx;
        full.push_back(e.head);
        a.at(full) += val;
      } while (std::next_permutation(idx.begin(), idx.end()));
    } else {
      std::vector<int> idx = e.vertices;
      do {
        a.at(idx) += val;
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  return a;
}

/// L = diag(degrees) - A as a dense tensor (oracle path, n <= 8).
inline DenseTensor laplacian_tensor(const Hypergraph& g) {
  DenseTensor a = adjacency_tensor(g);
  const Eigen::VectorXd d = degrees(g);
  std::vector<double> dv(d.data(), d.data() + d.size());
  DenseTensor lap = DenseTensor::diagonal(dv, g.edge_size());
  for (std::size_t i = 0; i < lap.values().size(); ++i)
    lap.values()[i] -= a.values()[i];
  return lap;
}

// ---------------------------------------------------------------------------
// Connectivity.

namespace detail {
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void merge(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};
}  // namespace detail

/// Component id per vertex (0-based, in order of first appearance). Directed
/// hypergraphs are measured on the base hypergraph (weak components).
inline std::vector<int> connected_components(const Hypergraph& g) {
  detail::UnionFind uf(g.n());
  for (const auto& e : g.edges()) {
    const auto inc = e.incident();
    for (std::size_t i = 1; i < inc.size(); ++i) uf.merge(inc[0], inc[i]);
  }
  std::vector<int> comp(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    const int root = uf.find(v);
    if (comp[root] < 0) comp[root] = next++;
    comp[v] = comp[root];
  }
  std::vector<int> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = comp[uf.find(v)];
  return out;
}

inline int component_count(const Hypergraph& g) {
  const auto comp = connected_components(g);
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

inline bool is_connected(const Hypergraph& g) { return component_count(g) <= 1; }

/// Directed access relation closure: reach[i][j] == true iff some hyperpath
/// starts with i in a tail and ends with head j.
inline std::vector<std::vector<bool>> reachability(const Hypergraph& g) {
  if (!g.directed())
    throw std::invalid_argument("reachability: directed hypergraphs only");
  const int n = g.n();
  // One-step arcs u -> h for every tail vertex u of an edge with head h.
  std::vector<std::vector<int>> succ(n);
  for (const auto& e : g.edges())
    for (int u : e.vertices) succ[u].push_back(e.head);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    for (int h : succ[s])
      if (!reach[s][h]) {
        reach[s][h] = true;
        q.push(h);
      }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int h : succ[u])
        if (!reach[s][h]) {
          reach[s][h] = true;
          q.push(h);
        }
    }
  }
  return reach;
}

enum class ConnectivityClass { kStrong, kOneWay, kWeak, kDisconnected };

inline Hypergraph base_hypergraph(const Hypergraph& g) {
  if (!g.directed()) return g;
  Hypergraph base(g.n(), g.edge_size(), false);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    base.add_edge(g.edge(i).incident(), g.weight(i));
  return base;
}

inline ConnectivityClass directed_connectivity_class(const Hypergraph& g) {
  if (!g.directed())
    throw std::invalid_argument("directed_connectivity_class: directed only");
  if (!is_connected(g)) return ConnectivityClass::kDisconnected;
  const auto reach = reachability(g);
  bool strong = true, oneway = true;
  for (int i = 0; i < g.n() && oneway; ++i)
    for (int j = 0; j < g.n() && oneway; ++j) {
      if (i == j) continue;
      if (!reach[i][j]) strong = false;
      if (!reach[i][j] && !reach[j][i]) oneway = false;
    }
  if (strong) return ConnectivityClass::kStrong;
  if (oneway) return ConnectivityClass::kOneWay;
  return ConnectivityClass::kWeak;
}

// ---------------------------------------------------------------------------
// Induced subhypergraphs and vertex connectivity.

struct InducedResult {
  Hypergraph sub;
  std::vector<int> original_ids;  // new id -> old id
};

/// Keeps exactly the hyperedges fully contained in `keep`; vertices are
/// relabeled densely in ascending original order.
inline InducedResult induced_subhypergraph(const Hypergraph& g,
                                           std::vector<int> keep) {
  if (keep.empty())
    throw std::invalid_argument("induced_subhypergraph: keep set empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("induced_subhypergraph: vertex out of range");
  std::vector<int> remap(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = (int)i;
  Hypergraph sub(static_cast<int>(keep.size()), g.edge_size(), g.directed());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    bool inside = true;
    for (int v : e.incident())
      if (remap[v] < 0) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::vector<int> verts;
    verts.reserve(e.vertices.size());
    for (int v : e.vertices) verts.push_back(remap[v]);
    if (g.directed()) {
      sub.add_directed_edge(std::move(verts), remap[e.head], g.weight(i));
    } else {
      sub.add_edge(std::move(verts), g.weight(i));
    }
  }
  return InducedResult{std::move(sub), std::move(keep)};
}

inline Hypergraph remove_vertex(const Hypergraph& g, int v) {
  std::vector<int> keep;
  keep.reserve(g.n() - 1);
  for (int u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subhypergraph(g, std::move(keep)).sub;
}

struct VertexConnectivity {
  int value = 0;
  bool no_cutset = false;  // no removal disconnects; value is the n-m cap
};

// Minimum |W| over vertex subsets whose removal (with all incident
// hyperedges) disconnects the remainder. Brute force by increasing
// cardinality. Directed hypergraphs are judged on weak connectivity.
// Returns 0 for disconnected input; when nothing disconnects, returns the
// n-(m+1)+1 cap with no_cutset set.
inline VertexConnectivity vertex_connectivity(const Hypergraph& g_in) {
  const Hypergraph g = g_in.directed() ? base_hypergraph(g_in) : g_in;
  if (g.n() > 30)
    throw std::invalid_argument("vertex_connectivity: brute-force path requires n <= 30");
  if (!is_connected(g)) return {0, false};
  const int n = g.n();

  auto disconnects = [&](const std::vector<int>& rem) {
    std::vector<char> gone(n, 0);
    for (int v : rem) gone[v] = 1;
    detail::UnionFind uf(n);
    for (const auto& e : g.edges()) {
      const auto inc = e.incident();
      if (std::any_of(inc.begin(), inc.end(), [&](int v) { return gone[v]; }))
        continue;
      for (std::size_t i = 1; i < inc.size(); ++i) uf.merge(inc[0], inc[i]);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      const int r = uf.find(v);
      if (root < 0) {
        root = r;
      } else if (r != root) {
        return true;
      }
    }
    return false;
  };

  std::vector<int> subset;
  // k-subset enumeration in lexicographic order.
  for (int k = 1; k <= n - 2; ++k) {
    subset.assign(k, 0);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (disconnects(subset)) return {k, false};
      int pos = k - 1;
      while (pos >= 0 && subset[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
  return {g.n() - g.edge_size() + 1, true};
}

// ---------------------------------------------------------------------------
// Reductions and cut functionals.

struct Multigraph {
  int n = 0;
  bool directed = false;
  std::vector<std::pair<int, int>> edges;  // multiset; undirected pairs sorted
};

/// Clique reduction: every undirected hyperedge contributes all C(m+1,2)
/// pairs; a directed hyperedge contributes the m arcs (tail vertex -> head).
inline Multigraph clique_reduction(const Hypergraph& g) {
  Multigraph r{g.n(), g.directed(), {}};
  for (const auto& e : g.edges()) {
    if (g.directed()) {
      for (int t : e.vertices) r.edges.emplace_back(t, e.head);
    } else {
      for (std::size_t i = 0; i < e.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
          r.edges.emplace_back(e.vertices[i], e.vertices[j]);
    }
  }
  return r;
}

/// Circle reduction: consecutive pairs of the ascending vertex order with
/// wraparound, one cycle per hyperedge.
inline Multigraph circle_reduction(const Hypergraph& g) {
  Multigraph r{g.n(), false, {}};
  for (const auto& e : g.edges()) {
    std::vector<int> v = e.incident();
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    for (std::size_t i = 0; i < k; ++i) {
      int a = v[i], b = v[(i + 1) % k];
      if (a > b) std::swap(a, b);
      r.edges.emplace_back(a, b);
    }
  }
  return r;
}

/// Multigraph as a 2-uniform hypergraph (shared machinery for spectra and
/// isoperimetric brute force).
inline Hypergraph as_hypergraph(const Multigraph& mg) {
  Hypergraph g(mg.n, 2, mg.directed);
  for (const auto& [a, b] : mg.edges) {
    if (mg.directed) {
      g.add_directed_edge({a}, b);
    } else {
      g.add_edge({a, b});
    }
  }
  return g;
}

/// f(S) = sum_E w_E |E ∩ S| |E ∩ S^c|  (the g ≡ 1 cut penalty).
inline double cut_value(const Hypergraph& g, const std::vector<bool>& in_s) {
  if (static_cast<int>(in_s.size()) != g.n())
    throw std::invalid_argument("cut_value: indicator length mismatch");
  double f = 0.0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    int inside = 0;
    const auto inc = g.edge(i).incident();
    for (int v : inc) inside += in_s[v] ? 1 : 0;
    f += g.weight(i) * inside * (static_cast<int>(inc.size()) - inside);
  }
  return f;
}

/// min over nonempty proper S of |{E : E meets S and S^c}| / min(|S|,|S^c|).
/// Brute force over subsets; n <= 20.
inline double isoperimetric_number(const Hypergraph& g) {
  const int n = g.n();
  if (n > 20)
    throw std::invalid_argument("isoperimetric_number: brute-force path requires n <= 20");
  if (n < 2) throw std::invalid_argument("isoperimetric_number: n >= 2 required");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    const int sz = std::popcount(mask);
    int crossing = 0;
    for (const auto& e : g.edges()) {
      bool in = false, out = false;
      for (int v : e.incident()) {
        if (mask >> v & 1u) {
          in = true;
        } else {
          out = true;
        }
      }
      crossing += (in && out) ? 1 : 0;
    }
    best = std::min(best, crossing / double(std::min(sz, n - sz)));
  }
  return best;
}

inline double isoperimetric_number(const Multigraph& mg) {
  return isoperimetric_number(as_hypergraph(mg));
}

// ---------------------------------------------------------------------------
// Sparsity and hypergraph product.

/// Max number of hyperedges sharing a vertex pair (undirected), or sharing a
/// (tail vertex, head) pair (directed). Multiplicity counts; weights do not.
inline int sparsity(const Hypergraph& g) {
  if (g.n() < 2) throw std::invalid_argument("sparsity: n >= 2 required");
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : g.edges()) {
    if (g.directed()) {
      for (int t : e.vertices) ++count[{t, e.head}];
    } else {
      for (std::size_t i = 0; i < e.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
          ++count[{e.vertices[i], e.vertices[j]}];
    }
  }
  int s = 0;
  for (const auto& [k, v] : count) s = std::max(s, v);
  return s;
}

struct SelfLoopRecord {
  std::vector<int> tail;  // sorted; contains `head`
  int head = -1;
  int multiplicity = 0;
};

struct ProductResult {
  Hypergraph product;                    // directed, multiset
  std::vector<SelfLoopRecord> self_loops;  // head ∈ tail cases, kept apart
};

namespace detail {
/// Undirected edge split into its m+1 directed orientations; directed edges
/// pass through.
inline std::vector<Hyperedge> directed_orientations(const Hypergraph& g) {
  std::vector<Hyperedge> out;
  for (const auto& e : g.edges()) {
    if (g.directed()) {
      out.push_back(e);
      continue;
    }
    for (std::size_t j = 0; j < e.vertices.size(); ++j) {
      std::vector<int> tail;
      for (std::size_t i = 0; i < e.vertices.size(); ++i)
        if (i != j) tail.push_back(e.vertices[i]);
      out.push_back(make_directed_edge(std::move(tail), e.vertices[j]));
    }
  }
  return out;
}
}  // namespace detail

// Product hypergraph: (T, h) with multiplicity equal to the number of
// length-2 hyperpaths <E1=(T,h1), h1, E2=(T2,h)> with E1 from g1, E2 from
// g2. Undirected inputs are split into m+1 directed hyperedges first.
// Outputs whose head lands inside the tail are the tensor product's
// self-loop entries and are reported separately.
inline ProductResult hypergraph_product(const Hypergraph& g1, const Hypergraph& g2) {
  if (g1.n() != g2.n() || g1.edge_size() != g2.edge_size())
    throw std::invalid_argument("hypergraph_product: shape mismatch");
  const auto e1 = detail::directed_orientations(g1);
  const auto e2 = detail::directed_orientations(g2);
  Hypergraph prod(g1.n(), g1.edge_size(), true);
  std::map<std::pair<std::vector<int>, int>, int> loops;
  for (const auto& a : e1) {
    for (const auto& b : e2) {
      // hyperpath <a, h_a, b>: a's head must lie in b's tail
      if (std::find(b.vertices.begin(), b.vertices.end(), a.head) ==
          b.vertices.end())
        continue;
      const bool self_loop =
          std::find(a.vertices.begin(), a.vertices.end(), b.head) !=
          a.vertices.end();
      if (self_loop) {
        ++loops[{a.vertices, b.head}];
      } else {
        prod.add_directed_edge(a.vertices, b.head);
      }
    }
  }
  ProductResult res{std::move(prod), {}};
  for (const auto& [key, mult] : loops)
    res.self_loops.push_back(SelfLoopRecord{key.first, key.second, mult});
  return res;
}

inline const char* to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::kStrong: return "strong";
    case ConnectivityClass::kOneWay: return "one-way";
    case ConnectivityClass::kWeak: return "weak";
    case ConnectivityClass::kDisconnected: return "disconnected";
  }
  return "?";
}

}  // namespace hyla
