#include <catch2/catch_amalgamated.hpp>

#include "hyla/generators.hpp"
#include "hyla/rng.hpp"
#include "hyla/spectral.hpp"

using namespace hyla;

TEST_CASE("hyperring spectra match the reference values", "[spectral]") {
  REQUIRE(spectrum(hyperring(6)).algebraic_connectivity ==
          Catch::Approx(5.0).margin(1e-9));
  REQUIRE(spectrum(hyperring(12)).algebraic_connectivity ==
          Catch::Approx(1.536).margin(1e-3));
  REQUIRE(spectrum(complete_hypergraph(10, 3)).algebraic_connectivity ==
          Catch::Approx(80.0).margin(1e-9));
}

TEST_CASE("disconnected hypergraph has a = 0 with zero multiplicity 2",
          "[spectral]") {
  Hypergraph g(6, 3, false);
  g.add_edge({0, 1, 2});
  g.add_edge({3, 4, 5});
  const auto s = spectrum(g);
  REQUIRE(s.algebraic_connectivity == Catch::Approx(0.0).margin(1e-10));
  REQUIRE(s.zero_multiplicity == 2);
  REQUIRE(s.component_count == 2);
}

TEST_CASE("fiedler vector conventions", "[spectral]") {
  const auto s = spectrum(hyperring(7));
  REQUIRE(s.fiedler.norm() == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(std::abs(s.fiedler.sum()) < 1e-8);
  int arg = 0;
  for (int i = 1; i < s.fiedler.size(); ++i)
    if (std::abs(s.fiedler[i]) > std::abs(s.fiedler[arg]) + 1e-15) arg = i;
  REQUIRE(s.fiedler[arg] > 0.0);
}

TEST_CASE("eigenvector residuals satisfy the solver contract", "[spectral]") {
  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    const Hypergraph g = random_uniform(10, 3, 14, rng.next_u64());
    const Eigen::MatrixXd lap = laplacian_matrix(g);
    const auto s = spectrum(g);
    const double scale = std::max(1.0, s.eigenvalues[g.n() - 1]);
    const Eigen::VectorXd r =
        lap * s.fiedler - s.algebraic_connectivity * s.fiedler;
    REQUIRE(r.norm() <= 1e-9 * scale);
  }
}

TEST_CASE("hyperedge quadratic", "[spectral]") {
  Eigen::VectorXd x(5);
  x << 1, 0, 0, 0.5, 0.5;
  const Hyperedge e = make_edge({0, 1, 2});
  REQUIRE(hyperedge_quadratic(x, e) == Catch::Approx(2.0));
  REQUIRE(hyperedge_quadratic(x, make_edge({1, 3, 4})) == Catch::Approx(0.5));
  Eigen::VectorXd c = Eigen::VectorXd::Constant(5, 0.7);
  REQUIRE(hyperedge_quadratic(c, e) == Catch::Approx(0.0).margin(1e-15));

  const Hyperedge d = make_directed_edge({0, 3}, 4);
  // sum over tail t of x_h^2 - x_h x_t with x_h = 0.5
  REQUIRE(hyperedge_quadratic(x, d) == Catch::Approx(0.25 - 0.5 + 0.25 - 0.25));
}

TEST_CASE("adding an edge respects the fiedler upper bound", "[spectral]") {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    Hypergraph g = random_uniform(8, 3, rng.uniform_int(6, 16), rng.next_u64());
    if (!is_connected(g)) continue;
    Hyperedge e0;
    bool found = false;
    for (int tries = 0; tries < 30 && !found; ++tries) {
      e0 = make_edge(rng.sample_distinct(8, 3));
      found = !g.contains(e0);
    }
    if (!found) continue;
    const double bound = add_edge_upper_bound(g, e0);
    const double actual = spectrum(g.with_edge_added(e0)).algebraic_connectivity;
    REQUIRE(actual <= bound + 1e-9);
  }
}

TEST_CASE("hyperring plus a chord stays below the bound", "[spectral]") {
  const Hypergraph g = hyperring(8);
  const Hyperedge chord = make_edge({0, 3, 6});
  REQUIRE(!g.contains(chord));
  const double bound = add_edge_upper_bound(g, chord);
  REQUIRE(spectrum(g.with_edge_added(chord)).algebraic_connectivity <=
          bound + 1e-9);
}

TEST_CASE("lower bound refuses a degenerate spectral gap", "[spectral]") {
  // circulant symmetry pairs lambda_2 with lambda_3 on every hyperring
  REQUIRE_THROWS_AS(add_edge_lower_bound(hyperring(6), make_edge({0, 2, 4})),
                    NumericError);
}

TEST_CASE("lower bound degenerates to lambda_2 for an invisible edge",
          "[spectral]") {
  // multi-star: the fiedler mode separates the halves, so a triple inside
  // one half with equal values scores zero
  const Hypergraph g = multi_star(7, 1);
  const auto eig = spectrum(g);
  Hyperedge e0;
  bool found = false;
  for (int a = 0; a < g.n() && !found; ++a)
    for (int b = a + 1; b < g.n() && !found; ++b)
      for (int c = b + 1; c < g.n() && !found; ++c) {
        const Hyperedge cand = make_edge({a, b, c});
        if (g.contains(cand)) continue;
        if (hyperedge_quadratic(eig.fiedler, cand) < 1e-12) {
          e0 = cand;
          found = true;
        }
      }
  REQUIRE(found);
  const auto lb = add_edge_lower_bound(g, e0);
  REQUIRE(lb.root == Catch::Approx(eig.eigenvalues[1]).margin(1e-9));
}

TEST_CASE("lower bound sandwich on random connected instances", "[spectral]") {
  Rng rng(47);
  int tested = 0;
  for (int t = 0; t < 200 && tested < 25; ++t) {
    const Hypergraph g =
        random_uniform(8, 3, rng.uniform_int(8, 20), rng.next_u64());
    if (!is_connected(g)) continue;
    const auto s = spectrum(g);
    if (s.eigenvalues[2] - s.eigenvalues[1] < 1e-4) continue;
    Hyperedge e0;
    bool found = false;
    for (int tries = 0; tries < 30 && !found; ++tries) {
      e0 = make_edge(rng.sample_distinct(8, 3));
      found = !g.contains(e0);
    }
    if (!found) continue;
    const auto lb = add_edge_lower_bound(g, e0);
    if (!lb.valid) continue;
    const double actual = spectrum(g.with_edge_added(e0)).algebraic_connectivity;
    REQUIRE(lb.root - 1e-9 <= actual);
    REQUIRE(lb.root >= s.eigenvalues[1] - 1e-12);
    ++tested;
  }
  REQUIRE(tested >= 25);
}

TEST_CASE("lower bound root increases with the fiedler score", "[spectral]") {
  Rng rng(53);
  // one fixed connected instance with a clear gap; rank absent triples
  Hypergraph g(1, 3, false);
  bool ok = false;
  while (!ok) {
    g = random_uniform(8, 3, 14, rng.next_u64());
    const auto s = spectrum(g);
    ok = is_connected(g) && s.eigenvalues[2] - s.eigenvalues[1] > 1e-2;
  }
  const auto s = spectrum(g);
  std::vector<std::pair<double, double>> score_root;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) {
        const Hyperedge e = make_edge({a, b, c});
        if (g.contains(e)) continue;
        score_root.emplace_back(hyperedge_quadratic(s.fiedler, e),
                                add_edge_lower_bound(g, e).root);
      }
  std::sort(score_root.begin(), score_root.end());
  for (std::size_t i = 1; i < score_root.size(); ++i)
    REQUIRE(score_root[i].second >= score_root[i - 1].second - 1e-9);
}

TEST_CASE("directed spectrum via the projected symmetrized matrix", "[spectral]") {
  const Hypergraph g = random_directed(7, 3, 9, 3);
  const auto s = spectrum(g);
  REQUIRE(s.eigenvalues.size() == 6);
  REQUIRE(std::abs(s.fiedler.sum()) < 1e-8);
  REQUIRE(s.fiedler.norm() == Catch::Approx(1.0).margin(1e-9));
  // a(G) = min over x ⊥ 1, |x| = 1 of x^T phi(L) x; spot check the minimizer
  const Eigen::MatrixXd lap = laplacian_matrix(g);
  REQUIRE(double(s.fiedler.transpose() * lap * s.fiedler) ==
          Catch::Approx(s.algebraic_connectivity).margin(1e-9));
  // no unit vector orthogonal to ones does better (random probes)
  Rng rng(59);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd x(g.n());
    for (int i = 0; i < g.n(); ++i) x[i] = rng.uniform(-1, 1);
    x.array() -= x.mean();
    if (x.norm() < 1e-12) continue;
    x /= x.norm();
    REQUIRE(double(x.transpose() * lap * x) >=
            s.algebraic_connectivity - 1e-9);
  }
}

TEST_CASE("consensus conserves the mean and decays at rate a", "[spectral]") {
  const Hypergraph g = hyperring(10);
  Rng rng(61);
  Eigen::VectorXd x0(10);
  for (int i = 0; i < 10; ++i) x0[i] = rng.uniform(-1, 1);
  const auto res = consensus_simulate(g, x0, 0.01, 600);
  const auto s = spectrum(g);
  REQUIRE(res.mean_drift < 1e-9);
  REQUIRE(res.fitted_rate ==
          Catch::Approx(s.algebraic_connectivity).epsilon(0.05));
}

TEST_CASE("consensus on a constant state stays constant", "[spectral]") {
  const Hypergraph g = hyperring(6);
  const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(6, 3.25);
  const auto res = consensus_simulate(g, x0, 0.05, 50);
  for (const auto& state : res.states)
    REQUIRE((state - x0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("consensus rejects an unstable step size", "[spectral]") {
  const Hypergraph g = complete_hypergraph(8, 3);
  REQUIRE_THROWS_AS(consensus_simulate(g, Eigen::VectorXd::Ones(8), 1.0, 10),
                    NumericError);
}
