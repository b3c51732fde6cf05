#include <catch2/catch_amalgamated.hpp>

#include "hyla/dense_tensor.hpp"
#include "hyla/hypergraph.hpp"
#include "hyla/rng.hpp"

using namespace hyla;

namespace {

// Independent reference for the product definition: literal sum over all
// (j_1..j_k, t) with an explicit membership delta, no precomputation. Kept
// deliberately naive so it shares nothing with the production path.
DenseTensor def_reference_product(const DenseTensor& a, const DenseTensor& b) {
  const int n = a.dim();
  const int k = b.order() - 1;
  DenseTensor c(a.order(), n);
  std::vector<int> ci(a.order(), 0);
  do {
    double acc = 0.0;
    std::vector<int> bi(b.order(), 0);
    do {
      if (bi[k] != ci[a.order() - 1]) continue;
      for (int t = 0; t < n; ++t) {
        bool member = false;
        for (int pos = 0; pos < k; ++pos)
          if (bi[pos] == t) member = true;
        if (!member) continue;
        std::vector<int> ai(ci.begin(), ci.end());
        ai[a.order() - 1] = t;
        acc += a.at(ai) * b.at(bi);
      }
    } while (b.next_index(bi));
    c.at(ci) = acc;
  } while (a.next_index(ci));
  return c;
}

DenseTensor random_tensor(Rng& rng, int order, int dim) {
  DenseTensor t(order, dim);
  for (auto& v : t.values()) v = rng.uniform(-1.0, 1.0);
  return t;
}

Hypergraph single_edge_123(int n) {
  Hypergraph g(n, 3, false);
  g.add_edge({0, 1, 2});
  return g;
}

}  // namespace

TEST_CASE("order-2 product equals the matrix product", "[tensor]") {
  Rng rng(7);
  const int n = 4;
  DenseTensor a = random_tensor(rng, 2, n), b = random_tensor(rng, 2, n);
  const DenseTensor c = tensor_product(a, b);
  Eigen::MatrixXd ma(n, n), mb(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ma(i, j) = a.at({i, j});
      mb(i, j) = b.at({i, j});
    }
  const Eigen::MatrixXd mc = ma * mb;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      REQUIRE(c.at({i, j}) == Catch::Approx(mc(i, j)).margin(1e-12));
}

TEST_CASE("right identity", "[tensor]") {
  Rng rng(11);
  for (int order = 2; order <= 4; ++order) {
    const DenseTensor a = random_tensor(rng, order, 3);
    const DenseTensor ai = tensor_product(a, DenseTensor::identity(order, 3));
    REQUIRE(ai.max_abs_diff(a) < 1e-12);
  }
}

TEST_CASE("product matches the definition reference on random tensors", "[tensor]") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(2, 3);
    const DenseTensor a = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const DenseTensor b = random_tensor(rng, rng.uniform_int(2, 3), dim);
    REQUIRE(tensor_product(a, b).max_abs_diff(def_reference_product(a, b)) < 1e-12);
  }
}

TEST_CASE("product rejects dimension mismatch", "[tensor]") {
  const DenseTensor a(3, 2), b(3, 3);
  REQUIRE_THROWS_AS(tensor_product(a, b), std::invalid_argument);
}

TEST_CASE("vector action on a single hyperedge", "[tensor]") {
  const DenseTensor a = adjacency_tensor(single_edge_123(3));
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(3);
  e1[0] = 1.0;
  const Eigen::RowVectorXd out = vector_tensor_product(e1, a);
  REQUIRE(out[0] == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(out[1] == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(out[2] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("vector action: zero vector and ones against a Laplacian", "[tensor]") {
  Rng rng(17);
  const Hypergraph g = single_edge_123(4);
  const DenseTensor lap = laplacian_tensor(g);
  REQUIRE(vector_tensor_product(Eigen::VectorXd::Zero(4), lap).cwiseAbs().maxCoeff() <
          1e-12);
  REQUIRE(vector_tensor_product(Eigen::VectorXd::Ones(4), lap).cwiseAbs().maxCoeff() <
          1e-12);
  REQUIRE_THROWS_AS(vector_tensor_product(Eigen::VectorXd::Zero(3), lap),
                    std::invalid_argument);
}

TEST_CASE("quadratic form", "[tensor]") {
  const Hypergraph g = single_edge_123(4);
  const DenseTensor lap = laplacian_tensor(g);
  REQUIRE(quadratic_form(Eigen::VectorXd::Ones(4), lap) ==
          Catch::Approx(0.0).margin(1e-12));
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  x[0] = 1.0;
  REQUIRE(quadratic_form(x, lap) == Catch::Approx(2.0).margin(1e-12));

  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    const DenseTensor a = random_tensor(rng, 3, 4);
    Eigen::VectorXd y(4);
    for (int i = 0; i < 4; ++i) y[i] = rng.uniform(-1, 1);
    const Eigen::MatrixXd rep = linear_representation(a);
    REQUIRE(quadratic_form(y, a) ==
            Catch::Approx(double(y.transpose() * rep * y)).margin(1e-12));
  }
}

TEST_CASE("linear representation of a single hyperedge", "[tensor]") {
  const Eigen::MatrixXd rep =
      linear_representation(adjacency_tensor(single_edge_123(4)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool in_edge = i < 3 && j < 3 && i != j;
      REQUIRE(rep(i, j) == Catch::Approx(in_edge ? 1.0 : 0.0).margin(1e-12));
    }
  REQUIRE((rep - rep.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("linear representation of diagonal and identity tensors", "[tensor]") {
  const DenseTensor d = diagonal_tensor({2.0, -1.0, 0.5}, 3);
  const Eigen::MatrixXd rep = linear_representation(d);
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(3, 3);
  expect(0, 0) = 2.0;
  expect(1, 1) = -1.0;
  expect(2, 2) = 0.5;
  REQUIRE((rep - expect).cwiseAbs().maxCoeff() < 1e-12);

  REQUIRE((linear_representation(identity_tensor(3, 4)) -
           Eigen::MatrixXd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-12);

  const DenseTensor i32 = identity_tensor(3, 2);
  int nonzero = 0;
  for (double v : i32.values())
    if (v != 0.0) ++nonzero;
  REQUIRE(nonzero == 2);
  REQUIRE(i32.at({0, 0, 0}) == 1.0);
  REQUIRE(i32.at({1, 1, 1}) == 1.0);
}

TEST_CASE("non-commutativity witness", "[tensor]") {
  DenseTensor a(2, 2), b(2, 2);
  a.at({0, 1}) = 1.0;  // strictly upper
  b.at({1, 0}) = 1.0;  // strictly lower
  const DenseTensor ab = tensor_product(a, b);
  const DenseTensor ba = tensor_product(b, a);
  REQUIRE(ab.max_abs_diff(ba) > 0.5);
}

TEST_CASE("associativity across mixed orders", "[tensor]") {
  Rng rng(23);
  for (int t = 0; t < 25; ++t) {
    const int dim = rng.uniform_int(2, 4);
    const DenseTensor a = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const DenseTensor b = random_tensor(rng, rng.uniform_int(2, 3), dim);
    const DenseTensor c = random_tensor(rng, rng.uniform_int(2, 3), dim);
    REQUIRE(tensor_product(tensor_product(a, b), c)
                .max_abs_diff(tensor_product(a, tensor_product(b, c))) < 1e-12);
  }
}

TEST_CASE("order-1 left factor reproduces the vector action", "[tensor]") {
  Rng rng(29);
  const DenseTensor b = random_tensor(rng, 3, 3);
  DenseTensor x(1, 3);
  Eigen::VectorXd xv(3);
  for (int i = 0; i < 3; ++i) {
    xv[i] = rng.uniform(-1, 1);
    x.values()[i] = xv[i];
  }
  const DenseTensor prod = tensor_product(x, b);
  const Eigen::RowVectorXd direct = vector_tensor_product(xv, b);
  for (int j = 0; j < 3; ++j)
    REQUIRE(prod.values()[j] == Catch::Approx(direct[j]).margin(1e-12));
}
