#include <catch2/catch_amalgamated.hpp>

#include "hyla/proptest.hpp"

using namespace hyla;

TEST_CASE("property suite passes with the default seed", "[proptest]") {
  const auto report = run_all(42, 40);
  for (const auto& c : report.checks) {
    INFO(c.name << ": " << c.first_counterexample);
    REQUIRE(c.failures == 0);
  }
  REQUIRE(report.all_passed);
}

TEST_CASE("a hand-built disconnected directed hypergraph trips the a<=0 check",
          "[proptest]") {
  Hypergraph g(8, 3, true);
  g.add_directed_edge({0, 1}, 2);
  g.add_directed_edge({1, 2}, 3);
  g.add_directed_edge({5, 6}, 7);
  REQUIRE(!is_connected(g));
  REQUIRE(spectrum(g).algebraic_connectivity <= 1e-9);
}

TEST_CASE("report order is deterministic", "[proptest]") {
  const auto r1 = run_all(7, 5);
  const auto r2 = run_all(7, 5);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i) {
    REQUIRE(r1.checks[i].name == r2.checks[i].name);
    REQUIRE(r1.checks[i].failures == r2.checks[i].failures);
  }
}
