#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "slp/sparse.hpp"

namespace slp {

struct GbdtParams {
  std::size_t n_rounds = 100;
  std::size_t max_depth = 3;
  double learning_rate = 0.3;
  double l2_lambda = 1.0;
  double min_gain = 0.0;
};

/// Training labels contain a single class.
struct DegenerateLabelsError : std::runtime_error {
  DegenerateLabelsError();
};

/// Matrix width does not match the width the model was trained on.
struct WidthMismatchError : std::runtime_error {
  WidthMismatchError(std::size_t expected, std::size_t got);
};

struct TreeNode {
  bool leaf = true;
  std::size_t feature = 0;   // internal nodes
  double threshold = 0.0;    // go left when x[feature] < threshold
  int left = -1;
  int right = -1;
  double weight = 0.0;       // leaves
};

struct Tree {
  std::vector<TreeNode> nodes;  // root at index 0

  double eval(const std::vector<double>& features) const;
};

struct GbdtModel {
  double base_score = 0.0;
  double learning_rate = 0.3;
  std::size_t n_features = 0;
  std::vector<Tree> trees;
};

struct FitTrace {
  std::vector<double> train_loss;  // mean logistic loss after each round
};

double sigmoid(double x);
double mean_logistic_loss(const std::vector<int>& y, const std::vector<double>& margins);

/// Gradient-boosted trees for binary classification with logistic loss.
///
/// base_score = ln(p / (1 - p)) for the clamped label mean p; each round
/// fits one tree to gradients g = p_i - y_i and hessians h = p_i (1 - p_i),
/// leaf weight -G / (H + lambda), split gain
/// (G_L^2/(H_L+lambda) + G_R^2/(H_R+lambda) - G^2/(H+lambda)) / 2.
/// Candidate thresholds are midpoints between consecutive distinct feature
/// values in the node; left statistics accumulate in ascending (value, row)
/// order and ties in gain resolve to the lowest feature index, then the
/// lowest threshold, so training is bit-reproducible. Absent sparse entries
/// are literal zeros.
///
/// Throws DegenerateLabelsError when y has a single class and
/// std::invalid_argument on shape or parameter misuse.
GbdtModel fit(const SparseMatrix& x, const std::vector<int>& y, const GbdtParams& params,
              FitTrace* trace = nullptr);

/// base_score + learning_rate * sum of tree outputs, per row.
std::vector<double> predict_margin(const GbdtModel& model, const SparseMatrix& x);

/// sigmoid of the margin, per row. Throws WidthMismatchError when
/// x.n_cols differs from the trained width.
std::vector<double> predict_proba(const GbdtModel& model, const SparseMatrix& x);

/// JSON text with a leading "format": 1 version field, base_score,
/// learning_rate, n_features and trees as nested left/right nodes.
std::string save_model(const GbdtModel& model);

/// Parses save_model() output. Throws std::runtime_error on malformed
/// text or an unsupported format version. Round-trips predictions exactly.
GbdtModel load_model(const std::string& text);

}  // namespace slp
