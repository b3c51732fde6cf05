#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace hyla {

struct Dataset {
  Eigen::MatrixXd features;  // n x p
  std::vector<int> labels;   // integer-encoded, first-appearance order
  std::vector<std::string> label_names;
  bool has_labels = false;
};

struct Embedding {
  Eigen::MatrixXd coords;          // n x q
  Eigen::VectorXd eigenvalues_used;
  int skipped_zero_count = 0;
};

}  // namespace hyla
