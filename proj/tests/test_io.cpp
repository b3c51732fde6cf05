#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyla/io.hpp"

using namespace hyla;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

Hypergraph parse_str(const std::string& s) {
  std::istringstream in(s);
  return parse_hypergraph(in, "<mem>");
}

}  // namespace

TEST_CASE("parse a small undirected file", "[io]") {
  const Hypergraph g = parse_str("uniform 3 4 undirected\n1 2 3\n2 3 4\n");
  REQUIRE(g.n() == 4);
  REQUIRE(g.edge_size() == 3);
  REQUIRE(!g.directed());
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.edge(0).vertices == std::vector<int>{0, 1, 2});
  REQUIRE(g.edge(1).vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("write-read round trip is the identity on canonical form", "[io]") {
  Hypergraph g(5, 3, false);
  g.add_edge({4, 2, 0});
  g.add_edge({1, 2, 3});
  g.add_edge({1, 2, 3});  // duplicate kept
  std::ostringstream out;
  write_hypergraph(g, out);
  const Hypergraph r = parse_str(out.str());
  std::ostringstream out2;
  write_hypergraph(r, out2);
  REQUIRE(out.str() == out2.str());
  REQUIRE(r.edge_count() == 3);
}

TEST_CASE("weights round trip bit-faithfully", "[io]") {
  Hypergraph g(4, 3, false);
  g.add_edge({0, 1, 2}, 0.1);
  g.add_edge({1, 2, 3}, 1.0 / 3.0);
  std::ostringstream out;
  write_hypergraph(g, out);
  const Hypergraph r = parse_str(out.str());
  REQUIRE(r.weight(0) == 0.1);
  REQUIRE(r.weight(1) == 1.0 / 3.0);
}

TEST_CASE("directed files put the head last", "[io]") {
  const Hypergraph g = parse_str("uniform 3 5 directed\n1 2 3\n4 5 1\n");
  REQUIRE(g.directed());
  REQUIRE(g.edge(0).vertices == std::vector<int>{0, 1});
  REQUIRE(g.edge(0).head == 2);
  std::ostringstream out;
  write_hypergraph(g, out);
  REQUIRE(out.str() == "uniform 3 5 directed\n1 2 3\n4 5 1\n");
}

TEST_CASE("parser reports structured errors with line numbers", "[io]") {
  auto expect_line = [](const std::string& content, int line) {
    try {
      parse_str(content);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      REQUIRE(e.line_number == line);
    }
  };
  expect_line("uniform 3 4 undirected\n1 2 3\n1 1 2\n", 3);     // duplicate vertex
  expect_line("uniform 3 4 undirected\n1 2\n", 2);              // wrong arity
  expect_line("uniform 3 4 undirected\n1 2 9\n", 2);            // out of range
  expect_line("uniform 3 4 diagonal\n", 1);                     // bad direction
  expect_line("uniform x 4 undirected\n", 1);                   // bad edge size
  expect_line("hello\n", 1);                                    // bad header
  expect_line("uniform 3 4 undirected\n1 2 3 w=abc\n", 2);      // bad weight
  REQUIRE_THROWS_AS(parse_str(""), ParseError);
}

TEST_CASE("scholp ingestion keeps 3-vertex simplices with multiplicity", "[io]") {
  const auto dir = fs::temp_directory_path();
  temp_file("hyla_t1-nverts.txt", "3\n2\n3\n");
  temp_file("hyla_t1-simplices.txt", "1\n2\n3\n4\n5\n1\n2\n3\n");
  const auto res = read_scholp((dir / "hyla_t1").string());
  REQUIRE(res.simplices_total == 3);
  REQUIRE(res.kept == 2);
  REQUIRE(res.hypergraph.edge_count() == 2);  // {1,2,3} twice
  REQUIRE(res.hypergraph.edge(0) == res.hypergraph.edge(1));
  REQUIRE(res.original_ids == std::vector<long>{1, 2, 3});
}

TEST_CASE("scholp ingestion on empty input", "[io]") {
  const auto dir = fs::temp_directory_path();
  temp_file("hyla_t2-nverts.txt", "");
  temp_file("hyla_t2-simplices.txt", "");
  const auto res = read_scholp((dir / "hyla_t2").string());
  REQUIRE(res.hypergraph.edge_count() == 0);
}

TEST_CASE("scholp ingestion rejects stream length mismatch", "[io]") {
  const auto dir = fs::temp_directory_path();
  temp_file("hyla_t3-nverts.txt", "3\n3\n");
  temp_file("hyla_t3-simplices.txt", "1\n2\n3\n4\n");
  REQUIRE_THROWS(read_scholp((dir / "hyla_t3").string()));
}

TEST_CASE("csv dataset ingestion", "[io]") {
  const auto p = temp_file("hyla_t4.csv", "f1,f2,class\n1.5,2,b\n0.5,1,a\n2.5,3,b\n");
  const Dataset ds = read_csv_dataset(p.string(), "class");
  REQUIRE(ds.features.rows() == 3);
  REQUIRE(ds.features.cols() == 2);
  REQUIRE(ds.features(0, 0) == 1.5);
  REQUIRE(ds.has_labels);
  // first-appearance encoding: b -> 0, a -> 1
  REQUIRE(ds.labels == std::vector<int>{0, 1, 0});
  REQUIRE(ds.label_names == std::vector<std::string>{"b", "a"});
}

TEST_CASE("csv dataset errors", "[io]") {
  const auto p1 = temp_file("hyla_t5.csv", "f1,f2\n1,2\n");
  REQUIRE_THROWS_AS(read_csv_dataset(p1.string(), "class"), ParseError);
  const auto p2 = temp_file("hyla_t6.csv", "f1,class\n1,a\n2\n");
  REQUIRE_THROWS_AS(read_csv_dataset(p2.string(), "class"), ParseError);
  const auto p3 = temp_file("hyla_t7.csv", "f1,class\noops,a\n");
  REQUIRE_THROWS_AS(read_csv_dataset(p3.string(), "class"), ParseError);
}
