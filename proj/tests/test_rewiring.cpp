#include <catch2/catch_amalgamated.hpp>

#include "hyla/generators.hpp"
#include "hyla/rewiring.hpp"
#include "hyla/rng.hpp"

using namespace hyla;

namespace {

// exhaustive argmax over absent subsets (independent of the production scan)
std::pair<std::vector<int>, double> brute_best(const Hypergraph& g,
                                               const Eigen::VectorXd& x) {
  std::vector<int> best;
  double best_score = -1.0;
  std::vector<int> subset(g.edge_size());
  const int r = g.edge_size();
  for (int i = 0; i < r; ++i) subset[i] = i;
  while (true) {
    if (!g.contains(make_edge(subset))) {
      const double sc = subset_score(x, subset);
      if (sc > best_score) {
        best_score = sc;
        best = subset;
      }
    }
    int pos = r - 1;
    while (pos >= 0 && subset[pos] == g.n() - r + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < r; ++i) subset[i] = subset[i - 1] + 1;
  }
  return {best, best_score};
}

}  // namespace

TEST_CASE("best addition matches the exhaustive oracle", "[rewiring]") {
  Rng rng(67);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform_int(5, 12);
    const int r = rng.uniform_int(3, 4);
    long long cap = 1;
    for (int i = 0; i < r; ++i) cap = cap * (n - i) / (i + 1);
    const Hypergraph g = random_uniform(
        n, r, rng.uniform_int(1, (int)std::min<long long>(cap - 1, 2 * n)),
        rng.next_u64());
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(-1, 1);
    const Hyperedge chosen = best_addition(g, x);
    REQUIRE(!g.contains(chosen));
    const auto [bs, bscore] = brute_best(g, x);
    REQUIRE(subset_score(x, chosen.vertices) ==
            Catch::Approx(bscore).margin(1e-12));
  }
}

TEST_CASE("specific vector from the scan example", "[rewiring]") {
  Eigen::VectorXd x(6);
  x << -1, -1, 0, 1, 1, 0;
  Hypergraph g(6, 3, false);  // empty of extremes
  const Hyperedge chosen = best_addition(g, x);
  const auto [bs, bscore] = brute_best(g, x);
  REQUIRE(subset_score(x, chosen.vertices) == Catch::Approx(bscore));
}

TEST_CASE("constant vector returns the lexicographically smallest absent subset",
          "[rewiring]") {
  Hypergraph g(6, 3, false);
  g.add_edge({0, 1, 2});
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(6, 0.4);
  const Hyperedge chosen = best_addition(g, x);
  REQUIRE(chosen.vertices == std::vector<int>{0, 1, 3});
}

TEST_CASE("best addition fails on the complete hypergraph", "[rewiring]") {
  const Hypergraph g = complete_hypergraph(5, 3);
  REQUIRE_THROWS_AS(best_addition(g, Eigen::VectorXd::Ones(5)),
                    std::invalid_argument);
}

TEST_CASE("hyperring chosen edge beats every existing edge", "[rewiring]") {
  const Hypergraph g = hyperring(8);
  const auto s = spectrum(g);
  const Hyperedge chosen = best_addition(g, s.fiedler);
  const double cscore = subset_score(s.fiedler, chosen.vertices);
  for (const auto& e : g.edges())
    REQUIRE(cscore >= hyperedge_quadratic(s.fiedler, e) - 1e-12);
}

TEST_CASE("worst existing edge", "[rewiring]") {
  Hypergraph g(6, 3, false);
  g.add_edge({0, 1, 2});
  g.add_edge({3, 4, 5});
  Eigen::VectorXd x(6);
  x << 1, 1, 1, 0, 1, 2;  // constant on {0,1,2} -> score 0, selected
  const Hyperedge w = worst_existing(g, x);
  REQUIRE(w.vertices == std::vector<int>{0, 1, 2});

  // scan agreement on a random instance
  Rng rng(71);
  const Hypergraph h = random_uniform(9, 3, 12, rng.next_u64());
  Eigen::VectorXd y(9);
  for (int i = 0; i < 9; ++i) y[i] = rng.uniform(-1, 1);
  const Hyperedge worst = worst_existing(h, y);
  for (const auto& e : h.edges())
    REQUIRE(hyperedge_quadratic(y, worst) <= hyperedge_quadratic(y, e) + 1e-15);

  REQUIRE_THROWS_AS(worst_existing(Hypergraph(5, 3, false), x),
                    std::invalid_argument);
}

TEST_CASE("duplicate edges tie-break deterministically", "[rewiring]") {
  Hypergraph g(6, 3, false);
  g.add_edge({3, 4, 5});
  g.add_edge({3, 4, 5});
  g.add_edge({0, 1, 2});
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(6, 1.0);
  // all scores zero; lexicographic tie-break picks {0,1,2}
  REQUIRE(worst_existing(g, x).vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("rewire N=0 is the identity", "[rewiring]") {
  const Hypergraph g = hyperring(7);
  const auto [result, report] = rewire(g, 0, RewireMode::kAdd);
  REQUIRE(result.edge_count() == g.edge_count());
  REQUIRE(report.steps.empty());
}

TEST_CASE("add mode never decreases the connectivity", "[rewiring]") {
  const auto [result, report] = rewire(hyperring(8), 4, RewireMode::kAdd);
  REQUIRE(report.steps.size() == 4);
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const auto& st = report.steps[i];
    REQUIRE(st.a_after >= st.a_before - 1e-9);
    REQUIRE(!st.removed.has_value());
  }
  REQUIRE(result.edge_count() == 12);
}

TEST_CASE("rewire mode reports faithful before/after values", "[rewiring]") {
  Hypergraph g(7, 3, false);
  g.add_edge({0, 1, 2});
  g.add_edge({2, 3, 4});
  g.add_edge({4, 5, 6});
  Hypergraph current = g;
  const auto [result, report] = rewire(g, 3, RewireMode::kRewire);
  REQUIRE(report.steps.size() == 3);
  for (const auto& st : report.steps) {
    REQUIRE(st.a_before ==
            Catch::Approx(spectrum(current).algebraic_connectivity).margin(1e-9));
    REQUIRE(st.removed.has_value());
    current = current.with_edge_removed(*st.removed).with_edge_added(st.added);
    REQUIRE(st.a_after ==
            Catch::Approx(spectrum(current).algebraic_connectivity).margin(1e-9));
    REQUIRE(!(st.added == *st.removed));
  }
  REQUIRE(result.edge_count() == g.edge_count());
}
