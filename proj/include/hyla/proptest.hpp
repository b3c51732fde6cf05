#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hyla/arccc.hpp"
#include "hyla/generators.hpp"
#include "hyla/hypergraph.hpp"
#include "hyla/io.hpp"
#include "hyla/rewiring.hpp"
#include "hyla/rng.hpp"
#include "hyla/spectral.hpp"

namespace hyla {

// Randomized executable form of the theorem-shaped claims: every check runs
// `trials` times against fresh seeded hypergraphs and records the first
// counterexample verbatim.

struct PropCheckResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_counterexample;
};

struct PropReport {
  std::vector<PropCheckResult> checks;
  bool all_passed = true;
};

namespace prop_detail {

constexpr double kSlack = 1e-9;

inline std::string describe(const Hypergraph& g) {
  std::ostringstream os;
  write_hypergraph(g, os);
  return os.str();
}

inline Hypergraph random_hypergraph(Rng& rng, bool directed,
                                    bool allow_duplicates = true) {
  const int n = rng.uniform_int(5, 14);
  const int r = rng.uniform_int(3, 4);
  long long cap = 1;
  for (int i = 0; i < r; ++i) cap = cap * (n - i) / (i + 1);
  const long long count = rng.uniform_int(1, (int)std::min<long long>(cap, 3 * n));
  Hypergraph g = directed
                     ? random_directed(n, r, count, rng.next_u64())
                     : random_uniform(n, r, count, rng.next_u64());
  if (allow_duplicates && rng.uniform01() < 0.3 && g.edge_count() > 0) {
    // duplicate a random edge to exercise multiset semantics
    Hypergraph h(g.n(), g.edge_size(), g.directed());
    for (std::size_t i = 0; i < g.edge_count(); ++i) h.add_edge(g.edge(i));
    h.add_edge(g.edge(rng.uniform_int(0, (int)g.edge_count() - 1)));
    return h;
  }
  return g;
}

inline DenseTensor random_tensor(Rng& rng, int order, int dim) {
  DenseTensor t(order, dim);
  for (auto& v : t.values()) v = rng.uniform(-1.0, 1.0);
  return t;
}

using CheckFn = std::function<std::string(Rng&)>;  // empty string == pass

inline void run_check(PropReport& report, const std::string& name, int trials,
                      std::uint64_t seed, const CheckFn& fn) {
  PropCheckResult res;
  res.name = name;
  res.trials = trials;
  Rng rng(seed ^ std::hash<std::string>{}(name));
  for (int t = 0; t < trials; ++t) {
    std::string cex = fn(rng);
    if (!cex.empty()) {
      if (res.failures == 0)
        res.first_counterexample = "trial " + std::to_string(t) + ": " + cex;
      ++res.failures;
    }
  }
  if (res.failures > 0) report.all_passed = false;
  report.checks.push_back(std::move(res));
}

}  // namespace prop_detail

inline PropReport run_all(std::uint64_t seed, int trials) {
  using namespace prop_detail;
  PropReport report;

  run_check(report, "tensor product associativity", trials, seed, [](Rng& rng) -> std::string {
    const int dim = rng.uniform_int(2, 4);
    const auto a = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const auto b = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const auto c = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const auto lhs = tensor_product(tensor_product(a, b), c);
    const auto rhs = tensor_product(a, tensor_product(b, c));
    const double d = lhs.max_abs_diff(rhs);
    if (d > 1e-12)
      return "(A*B)*C vs A*(B*C) differ by " + std::to_string(d);
    return {};
  });

  run_check(report, "phi multiplicativity and vector action", trials, seed, [](Rng& rng) -> std::string {
    const int dim = rng.uniform_int(2, 4);
    const auto a = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const auto b = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const Eigen::MatrixXd pa = linear_representation(a);
    const Eigen::MatrixXd pb = linear_representation(b);
    const Eigen::MatrixXd pab = linear_representation(tensor_product(a, b));
    if ((pab - pa * pb).cwiseAbs().maxCoeff() > 1e-12)
      return "phi(A*B) != phi(A) phi(B)";
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.uniform(-1, 1);
    const Eigen::RowVectorXd lhs = vector_tensor_product(x, a);
    const Eigen::RowVectorXd rhs = x.transpose() * pa;
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12)
      return "x^T A != x^T phi(A)";
    if (std::abs(quadratic_form(x, a) - double(x.transpose() * pa * x)) > 1e-12)
      return "quadratic form mismatch";
    const auto ai = tensor_product(a, DenseTensor::identity(a.order(), dim));
    if (ai.max_abs_diff(a) > 1e-12) return "A*I != A";
    return {};
  });

  run_check(report, "sparse/dense Laplacian agreement (n<=6)", trials, seed, [](Rng& rng) -> std::string {
    const int n = rng.uniform_int(4, 6);
    const int r = 3;
    const bool directed = rng.uniform01() < 0.5;
    long long cap = (long long)n * (n - 1) * (n - 2) / 6;
    Hypergraph g = directed
                       ? random_directed(n, r, rng.uniform_int(1, (int)cap), rng.next_u64())
                       : random_uniform(n, r, rng.uniform_int(1, (int)cap), rng.next_u64());
    const Eigen::MatrixXd sparse = laplacian_matrix(g);
    const Eigen::MatrixXd dense = linear_representation(laplacian_tensor(g));
    if ((sparse - dense).cwiseAbs().maxCoeff() > 1e-12)
      return "phi(L) sparse/dense mismatch on\n" + describe(g);
    if (!directed && (sparse - sparse.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      return "undirected phi(L) not symmetric";
    if ((Eigen::RowVectorXd::Ones(n) * sparse).cwiseAbs().maxCoeff() > 1e-12)
      return "1^T phi(L) != 0 on\n" + describe(g);
    return {};
  });

  run_check(report, "quadratic form identity", trials, seed, [](Rng& rng) -> std::string {
    const bool directed = rng.uniform01() < 0.5;
    const Hypergraph g = random_hypergraph(rng, directed);
    Eigen::VectorXd x(g.n());
    for (int i = 0; i < g.n(); ++i) x[i] = rng.uniform(-2, 2);
    const Eigen::MatrixXd lap = laplacian_matrix(g);
    double direct = 0.0;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      direct += g.weight(i) * hyperedge_quadratic(x, g.edge(i));
    const double via_matrix = x.transpose() * lap * x;
    if (std::abs(direct - via_matrix) > 1e-9 * std::max(1.0, std::abs(direct)))
      return "x^T phi(L) x != sum of per-edge quadratics on\n" + describe(g);
    return {};
  });

  run_check(report, "multiset doubling", trials, seed, [](Rng& rng) -> std::string {
    const Hypergraph g = random_hypergraph(rng, false, false);
    if (g.edge_count() == 0) return {};
    const auto& e = g.edge(rng.uniform_int(0, (int)g.edge_count() - 1));
    const Hypergraph g2 = g.with_edge_added(e);
    const Eigen::VectorXd d1 = degrees(g), d2 = degrees(g2);
    for (int v : e.vertices)
      if (std::abs((d2[v] - d1[v]) - g.m()) > 1e-12)
        return "degree increment wrong under duplication";
    std::vector<bool> s(g.n());
    for (int i = 0; i < g.n(); ++i) s[i] = rng.uniform01() < 0.5;
    Eigen::VectorXd ind = Eigen::VectorXd::Zero(g.n());
    for (int i = 0; i < g.n(); ++i) ind[i] = s[i] ? 1.0 : 0.0;
    const double q = hyperedge_quadratic(ind, e);
    if (std::abs((cut_value(g2, s) - cut_value(g, s)) - q) > 1e-9)
      return "cut increment != edge quadratic under duplication";
    return {};
  });

  run_check(report, "undirected spectrum basics", trials, seed, [](Rng& rng) -> std::string {
    const Hypergraph g = random_hypergraph(rng, false);
    const auto s = spectrum(g);
    if (s.algebraic_connectivity < -kSlack)
      return "a(G) < 0 on\n" + describe(g);
    if (s.zero_multiplicity != s.component_count)
      return "zero multiplicity " + std::to_string(s.zero_multiplicity) +
             " != components " + std::to_string(s.component_count) + " on\n" +
             describe(g);
    if (std::abs(s.fiedler.sum()) > 1e-7)
      return "fiedler not orthogonal to ones";
    if (std::abs(s.fiedler.norm() - 1.0) > 1e-9)
      return "fiedler not unit norm";
    return {};
  });

  run_check(report, "monotonicity under edge addition", trials, seed, [](Rng& rng) -> std::string {
    const Hypergraph g = random_hypergraph(rng, false, false);
    Hypergraph g2 = g;
    const int extra = rng.uniform_int(1, 3);
    for (int i = 0; i < extra; ++i) {
      auto s = rng.sample_distinct(g.n(), g.edge_size());
      g2 = g2.with_edge_added(make_edge(s));
    }
    if (spectrum(g).algebraic_connectivity >
        spectrum(g2).algebraic_connectivity + kSlack)
      return "a decreased after adding edges on\n" + describe(g);
    return {};
  });

  run_check(report, "superadditivity over disjoint edge split", trials, seed, [](Rng& rng) -> std::string {
    const bool directed = rng.uniform01() < 0.5;
    const Hypergraph g = random_hypergraph(rng, directed);
    Hypergraph g1(g.n(), g.edge_size(), directed);
    Hypergraph g2(g.n(), g.edge_size(), directed);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      (rng.uniform01() < 0.5 ? g1 : g2).add_edge(g.edge(i), g.weight(i));
    const double a1 = spectrum(g1).algebraic_connectivity;
    const double a2 = spectrum(g2).algebraic_connectivity;
    const double a = spectrum(g).algebraic_connectivity;
    if (a1 + a2 > a + kSlack)
      return "a(G1)+a(G2) > a(G1 u G2) on\n" + describe(g);
    return {};
  });

  run_check(report, "vertex removal bound", trials, seed, [](Rng& rng) -> std::string {
    const bool directed = rng.uniform01() < 0.5;
    const Hypergraph g = random_hypergraph(rng, directed);
    if (g.edge_count() == 0) return {};
    const double a = spectrum(g).algebraic_connectivity;
    const int s = sparsity(g);
    const double per_vertex =
        directed ? 1.5 * g.m() * s : (2.0 * g.m() - 1.0) * s;
    const int v = rng.uniform_int(0, g.n() - 1);
    const double a1 = spectrum(remove_vertex(g, v)).algebraic_connectivity;
    if (a1 < a - per_vertex - kSlack)
      return "single-vertex removal bound violated at v=" +
             std::to_string(v + 1) + " on\n" + describe(g);
    // k-vertex corollary
    const int k = rng.uniform_int(1, std::min(3, g.n() - 2));
    auto keep_removed = rng.sample_distinct(g.n(), k);
    std::vector<int> keep;
    for (int u = 0; u < g.n(); ++u)
      if (std::find(keep_removed.begin(), keep_removed.end(), u) ==
          keep_removed.end())
        keep.push_back(u);
    const double ak =
        spectrum(induced_subhypergraph(g, keep).sub).algebraic_connectivity;
    if (ak < a - per_vertex * k - kSlack)
      return "k-vertex removal bound violated (k=" + std::to_string(k) +
             ") on\n" + describe(g);
    return {};
  });

  run_check(report, "main bound a <= factor * s * v", trials, seed, [](Rng& rng) -> std::string {
    const bool directed = rng.uniform01() < 0.5;
    const Hypergraph g = random_hypergraph(rng, directed);
    if (g.edge_count() == 0) return {};
    const double a = spectrum(g).algebraic_connectivity;
    const int s = sparsity(g);
    const auto vc = vertex_connectivity(g);
    const double factor = directed ? 1.5 * g.m() : 2.0 * g.m() - 1.0;
    if (a > factor * s * vc.value + kSlack)
      return "a = " + std::to_string(a) + " exceeds bound " +
             std::to_string(factor * s * vc.value) + " on\n" + describe(g);
    return {};
  });

  run_check(report, "directed: not weakly connected implies a <= 0", trials, seed, [](Rng& rng) -> std::string {
    Hypergraph g = random_hypergraph(rng, true);
    if (is_connected(g)) {
      // force a detached block by restricting edges away from vertex 0
      Hypergraph h(g.n() + 3, g.edge_size(), true);
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::vector<int> tail;
        for (int v : g.edge(i).vertices) tail.push_back(v + 3);
        h.add_directed_edge(tail, g.edge(i).head + 3, g.weight(i));
      }
      g = h;
    }
    if (is_connected(g)) return {};
    if (spectrum(g).algebraic_connectivity > kSlack)
      return "disconnected directed hypergraph with a > 0:\n" + describe(g);
    return {};
  });

  run_check(report, "partition min-bound", trials, seed, [](Rng& rng) -> std::string {
    const bool directed = rng.uniform01() < 0.5;
    const Hypergraph g = random_hypergraph(rng, directed);
    if (g.edge_count() == 0 || g.n() < 4) return {};
    const int n1 = rng.uniform_int(2, g.n() - 2);
    const auto part1 = rng.sample_distinct(g.n(), n1);
    std::vector<int> part2;
    for (int v = 0; v < g.n(); ++v)
      if (std::find(part1.begin(), part1.end(), v) == part1.end())
        part2.push_back(v);
    const double a = spectrum(g).algebraic_connectivity;
    const double a1 =
        spectrum(induced_subhypergraph(g, part1).sub).algebraic_connectivity;
    const double a2 =
        spectrum(induced_subhypergraph(g, part2).sub).algebraic_connectivity;
    const int s = sparsity(g);
    const double factor = directed ? 1.5 * g.m() : 2.0 * g.m() - 1.0;
    const double bound = std::min(a1 + factor * s * part2.size(),
                                  a2 + factor * s * part1.size());
    if (a > bound + kSlack)
      return "partition bound violated on\n" + describe(g);
    return {};
  });

  run_check(report, "cut value identity and reductions", trials, seed, [](Rng& rng) -> std::string {
    const Hypergraph g = random_hypergraph(rng, false);
    std::vector<bool> s(g.n());
    Eigen::VectorXd ind = Eigen::VectorXd::Zero(g.n());
    for (int i = 0; i < g.n(); ++i) {
      s[i] = rng.uniform01() < 0.5;
      ind[i] = s[i] ? 1.0 : 0.0;
    }
    const double f = cut_value(g, s);
    const double via = ind.transpose() * laplacian_matrix(g) * ind;
    if (std::abs(f - via) > 1e-9)
      return "cut != indicator quadratic form on\n" + describe(g);
    // clique reduction matches the off-diagonal assembly (unweighted case)
    if (!g.weighted()) {
      const auto cr = clique_reduction(g);
      Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(g.n(), g.n());
      for (const auto& [a, b] : cr.edges) {
        adj(a, b) += 1.0;
        adj(b, a) += 1.0;
      }
      Eigen::MatrixXd lap = laplacian_matrix(g);
      lap.diagonal().setZero();
      if ((adj + lap).cwiseAbs().maxCoeff() > 1e-12)
        return "clique reduction != -offdiag(phi(L))";
    }
    return {};
  });

  run_check(report, "isoperimetric circle identity (3-uniform)", trials, seed, [](Rng& rng) -> std::string {
    const int n = rng.uniform_int(5, 12);
    long long cap = (long long)n * (n - 1) * (n - 2) / 6;
    const Hypergraph g =
        random_uniform(n, 3, rng.uniform_int(1, (int)std::min<long long>(cap, 2 * n)),
                       rng.next_u64());
    const double ig = isoperimetric_number(g);
    const double ir = isoperimetric_number(circle_reduction(g));
    if (std::abs(ir - 2.0 * ig) > 1e-9)
      return "i(r(G)) = " + std::to_string(ir) + " != 2 i(G) = " +
             std::to_string(2.0 * ig) + " on\n" + describe(g);
    return {};
  });

  run_check(report, "product consistency with dense tensors (n<=6)", trials, seed, [](Rng& rng) -> std::string {
    const int n = rng.uniform_int(4, 6);
    const bool directed = rng.uniform01() < 0.5;
    auto mk = [&](std::uint64_t s) {
      const int count = rng.uniform_int(1, 2 * n);
      return directed ? random_directed(n, 3, std::min<long long>(count, n), s)
                      : random_uniform(n, 3, std::min<long long>(count, n), s);
    };
    const Hypergraph g1 = mk(rng.next_u64());
    const Hypergraph g2 = mk(rng.next_u64());
    const auto res = hypergraph_product(g1, g2);
    // dense route: product of orientation-split adjacency tensors
    auto orient = [](const Hypergraph& g) {
      if (g.directed()) return g;
      Hypergraph d(g.n(), g.edge_size(), true);
      for (const auto& e : detail::directed_orientations(g))
        d.add_directed_edge(e.vertices, e.head);
      return d;
    };
    const DenseTensor t =
        tensor_product(adjacency_tensor(orient(g1)), adjacency_tensor(orient(g2)));
    const double mfact = 2.0;  // m! with m = 2
    // count multiplicities from the product edge list
    std::map<std::pair<std::vector<int>, int>, int> mult;
    for (const auto& e : res.product.edges()) ++mult[{e.vertices, e.head}];
    for (const auto& rec : res.self_loops) mult[{rec.tail, rec.head}] = rec.multiplicity;
    std::vector<int> idx(3, 0);
    do {
      if (idx[0] == idx[1]) {
        if (t.at(idx) != 0.0) return "tensor entry at repeated tail index";
        continue;
      }
      std::vector<int> tail = {idx[0], idx[1]};
      std::sort(tail.begin(), tail.end());
      const int head = idx[2];
      const int k = mult.count({tail, head}) ? mult[{tail, head}] : 0;
      if (std::abs(t.at(idx) - k / mfact) > 1e-9)
        return "product multiplicity mismatch at (" + std::to_string(idx[0] + 1) +
               "," + std::to_string(idx[1] + 1) + "," + std::to_string(idx[2] + 1) +
               ")";
    } while (t.next_index(idx));
    return {};
  });

  run_check(report, "add-edge bound sandwich (3-uniform)", trials, seed, [](Rng& rng) -> std::string {
    const int n = rng.uniform_int(6, 10);
    long long cap = (long long)n * (n - 1) * (n - 2) / 6;
    const long long count = rng.uniform_int(n, (int)std::min<long long>(cap - 1, 2 * n));
    const Hypergraph g = random_uniform(n, 3, count, rng.next_u64());
    if (!is_connected(g)) return {};
    const auto spec = spectrum(g);
    if (spec.eigenvalues[2] - spec.eigenvalues[1] < 1e-4) return {};
    // a random absent triple
    Hyperedge e0;
    bool found = false;
    for (int tries = 0; tries < 50 && !found; ++tries) {
      auto s = rng.sample_distinct(n, 3);
      e0 = make_edge(s);
      found = !g.contains(e0);
    }
    if (!found) return {};
    const auto lb = add_edge_lower_bound(g, e0);
    const double ub = add_edge_upper_bound(g, e0);
    const double actual =
        spectrum(g.with_edge_added(e0)).algebraic_connectivity;
    if (actual > ub + kSlack)
      return "upper bound violated: a(G+E0) = " + std::to_string(actual) +
             " > " + std::to_string(ub) + " on\n" + describe(g);
    if (lb.valid && lb.root > actual + kSlack)
      return "lower bound violated: root = " + std::to_string(lb.root) +
             " > a(G+E0) = " + std::to_string(actual) + " on\n" + describe(g);
    return {};
  });

  run_check(report, "directed degree totals match", trials, seed, [](Rng& rng) -> std::string {
    const Hypergraph g = random_hypergraph(rng, true);
    if (std::abs(degrees(g).sum() - outdegrees(g).sum()) > 1e-9)
      return "total indegree != total outdegree";
    return {};
  });

  run_check(report, "hyperring regression", 1, seed, [](Rng&) -> std::string {
    const double a = spectrum(hyperring(6)).algebraic_connectivity;
    if (std::abs(a - 5.0) > 1e-9)
      return "a(hyperring(6)) = " + std::to_string(a);
    return {};
  });

  return report;
}

}  // namespace hyla
