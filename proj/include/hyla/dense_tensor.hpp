#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hyla {

// Dense order-k, dimension-n real tensor with flat row-major storage
// (last index fastest). This is the brute-force oracle representation: it
// only exists for small n, and every sparse computation in the library is
// validated against it.
class DenseTensor {
 public:
  DenseTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 1) throw std::invalid_argument("DenseTensor: order must be >= 1");
    if (dim < 1) throw std::invalid_argument("DenseTensor: dim must be >= 1");
    std::size_t entries = 1;
    for (int i = 0; i < order; ++i) {
      entries *= static_cast<std::size_t>(dim);
      if (entries > kMaxEntries)
        throw std::invalid_argument("DenseTensor: dim^order exceeds oracle size cap");
    }
    values_.assign(entries, 0.0);
  }

  /// diag(values): d_{i,...,i} = values[i], all other entries 0.
  static DenseTensor diagonal(const std::vector<double>& values, int order) {
    if (order < 2) throw std::invalid_argument("diagonal: order must be >= 2");
    DenseTensor t(order, static_cast<int>(values.size()));
    std::vector<int> idx(order);
    for (int i = 0; i < t.dim_; ++i) {
      std::fill(idx.begin(), idx.end(), i);
      t.at(idx) = values[i];
    }
    return t;
  }

  /// The right identity in T_{order,dim}: diag((1)_{i=1}^dim).
  static DenseTensor identity(int order, int dim) {
    return diagonal(std::vector<double>(dim, 1.0), order);
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }

  double& at(std::span<const int> idx) { return values_[flat(idx)]; }
  double at(std::span<const int> idx) const { return values_[flat(idx)]; }
  double& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  double at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  /// Odometer step over multi-indices; returns false after the last one.
  bool next_index(std::vector<int>& idx) const {
    for (int pos = order_ - 1; pos >= 0; --pos) {
      if (++idx[pos] < dim_) return true;
      idx[pos] = 0;
    }
    return false;
  }

  double max_abs_diff(const DenseTensor& other) const {
    if (order_ != other.order_ || dim_ != other.dim_)
      throw std::invalid_argument("max_abs_diff: shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
      d = std::max(d, std::abs(values_[i] - other.values_[i]));
    return d;
  }

 private:
  static constexpr std::size_t kMaxEntries = std::size_t(1) << 24;

  std::size_t flat(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw std::invalid_argument("DenseTensor: index arity mismatch");
    std::size_t f = 0;
    for (int i = 0; i < order_; ++i) {
      if (idx[i] < 0 || idx[i] >= dim_)
        throw std::out_of_range("DenseTensor: index out of range");
      f = f * dim_ + static_cast<std::size_t>(idx[i]);
    }
    return f;
  }

  int order_;
  int dim_;
  std::vector<double> values_;
};

// c_{i_1..i_m,r} = sum_{j_1..j_k,t} a_{i_1..i_m,t} b_{j_1..j_k,r} delta(t in {j_1..j_k}),
// by direct summation. A has order m+1, B order k+1, same dimension; the
// result keeps A's order. For two matrices this is the standard product.
inline DenseTensor tensor_product(const DenseTensor& a, const DenseTensor& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("tensor_product: dimension mismatch");
  const int n = a.dim();
  const int k = b.order() - 1;  // length of B's leading index block
  DenseTensor c(a.order(), n);

  // Precompute, for each trailing index r, the sum over B's leading tuples J
  // of b_{J,r} restricted by which t values appear in J. Equivalently:
  // s[t][r] = sum_J b_{J,r} * delta(t in J). Then c_{p,r} = sum_t a_{p,t} s[t][r].
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  {
    std::vector<int> bidx(b.order(), 0);
    std::vector<char> seen(n);
    do {
      const double v = b.at(bidx);
      if (v == 0.0) continue;
      const int r = bidx[b.order() - 1];
      std::fill(seen.begin(), seen.end(), 0);
      for (int pos = 0; pos < k; ++pos) {
        const int t = bidx[pos];
        if (!seen[t]) {
          seen[t] = 1;
          s(t, r) += v;  // each distinct t in J counts once
        }
      }
    } while (b.next_index(bidx));
  }

  std::vector<int> aidx(a.order(), 0);
  std::vector<int> cidx(a.order(), 0);
  do {
    const double av = a.at(aidx);
    if (av == 0.0) continue;
    const int t = aidx[a.order() - 1];
    std::copy(aidx.begin(), aidx.end(), cidx.begin());
    for (int r = 0; r < n; ++r) {
      cidx[a.order() - 1] = r;
      c.at(cidx) += av * s(t, r);
    }
  } while (a.next_index(aidx));
  return c;
}

// (x^T A)_j = sum_{i_1..i_m,t} x_t a_{i_1..i_m,j} delta(t in {i_1..i_m}).
// The delta sums x over the *distinct* values of the leading tuple; for
// tuples without repeats this is x_{i_1} + ... + x_{i_m}. The distinct-value
// reading is the one under which 1^T L = 0 holds for Laplacian tensors.
inline Eigen::RowVectorXd vector_tensor_product(const Eigen::VectorXd& x,
                                                const DenseTensor& a) {
  if (x.size() != a.dim())
    throw std::invalid_argument("vector_tensor_product: length mismatch");
  const int n = a.dim();
  const int m = a.order() - 1;
  Eigen::RowVectorXd out = Eigen::RowVectorXd::Zero(n);
  std::vector<int> idx(a.order(), 0);
  std::vector<char> seen(n);
  do {
    const double v = a.at(idx);
    if (v == 0.0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    double xs = 0.0;
    for (int pos = 0; pos < m; ++pos) {
      const int t = idx[pos];
      if (!seen[t]) {
        seen[t] = 1;
        xs += x[t];
      }
    }
    out[idx[m]] += v * xs;
  } while (a.next_index(idx));
  return out;
}

/// (x^T A) x = sum a_{i_1..i_{m+1}} x_{i_{m+1}} (x_{i_1} + ... + x_{i_m}).
inline double quadratic_form(const Eigen::VectorXd& x, const DenseTensor& a) {
  return vector_tensor_product(x, a).dot(x);
}

// Matrix of the linear map x^T -> x^T A on row vectors: row k is e_k^T A,
// so vector_tensor_product(x, A) == x^T * linear_representation(A) for all x.
inline Eigen::MatrixXd linear_representation(const DenseTensor& a) {
  if (a.order() < 2)
    throw std::invalid_argument("linear_representation: order must be >= 2");
  const int n = a.dim();
  const int m = a.order() - 1;
  Eigen::MatrixXd rep = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> idx(a.order(), 0);
  std::vector<char> seen(n);
  do {
    const double v = a.at(idx);
    if (v == 0.0) continue;
    const int j = idx[m];
    std::fill(seen.begin(), seen.end(), 0);
    for (int pos = 0; pos < m; ++pos) {
      const int k = idx[pos];
      if (!seen[k]) {
        seen[k] = 1;
        rep(k, j) += v;
      }
    }
  } while (a.next_index(idx));
  return rep;
}

inline DenseTensor diagonal_tensor(const std::vector<double>& values, int order) {
  return DenseTensor::diagonal(values, order);
}

inline DenseTensor identity_tensor(int order, int n) {
  return DenseTensor::identity(order, n);
}

}  // namespace hyla
