#include "slp/gbdt.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "json.hpp"

namespace slp {

DegenerateLabelsError::DegenerateLabelsError()
    : std::runtime_error("training labels contain a single class") {}

WidthMismatchError::WidthMismatchError(std::size_t expected, std::size_t got)
    : std::runtime_error("matrix has " + std::to_string(got) + " columns, model expects " +
                         std::to_string(expected)) {}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double mean_logistic_loss(const std::vector<int>& y, const std::vector<double>& margins) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double m = margins[i];
    // ln(1 + e^m) - y*m without overflow
    total += std::max(m, 0.0) + std::log1p(std::exp(-std::abs(m))) - y[i] * m;
  }
  return total / static_cast<double>(y.size());
}

double Tree::eval(const std::vector<double>& features) const {
  std::size_t i = 0;
  while (!nodes[i].leaf) {
    i = features[nodes[i].feature] < nodes[i].threshold
            ? static_cast<std::size_t>(nodes[i].left)
            : static_cast<std::size_t>(nodes[i].right);
  }
  return nodes[i].weight;
}

namespace {

struct Split {
  bool found = false;
  std::size_t feature = 0;
  double threshold = 0.0;
  double gain = 0.0;
};

// Columns are dense for split finding; absent sparse entries are zeros.
using Columns = std::vector<std::vector<double>>;

Columns densify_columns(const SparseMatrix& x) {
  Columns cols(x.n_cols, std::vector<double>(x.n_rows, 0.0));
  for (std::size_t i = 0; i < x.n_rows; ++i) {
    for (const auto& entry : x.rows[i]) cols[entry.col][i] = entry.value;
  }
  return cols;
}

// Best split over all features and midpoint thresholds. Left statistics
// accumulate in ascending (value, row) order; ties in gain keep the
// earliest candidate, i.e. the lowest feature index then lowest threshold.
Split find_best_split(const Columns& cols, const std::vector<std::size_t>& rows,
                      const std::vector<double>& grad, const std::vector<double>& hess,
                      double lambda, double min_gain) {
  double g_total = 0.0, h_total = 0.0;
  for (const auto r : rows) {
    g_total += grad[r];
    h_total += hess[r];
  }
  const double parent_score = g_total * g_total / (h_total + lambda);

  Split best;
  std::vector<std::pair<double, std::size_t>> ordered;  // (value, row)
  ordered.reserve(rows.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    ordered.clear();
    for (const auto r : rows) ordered.emplace_back(cols[j][r], r);
    std::sort(ordered.begin(), ordered.end());
    double g_left = 0.0, h_left = 0.0;
    for (std::size_t k = 0; k + 1 < ordered.size(); ++k) {
      g_left += grad[ordered[k].second];
      h_left += hess[ordered[k].second];
      if (ordered[k].first == ordered[k + 1].first) continue;  // same value, no boundary
      const double threshold = (ordered[k].first + ordered[k + 1].first) / 2.0;
      const double g_right = g_total - g_left;
      const double h_right = h_total - h_left;
      const double gain = 0.5 * (g_left * g_left / (h_left + lambda) +
                                 g_right * g_right / (h_right + lambda) - parent_score);
      if (gain > min_gain && (!best.found || gain > best.gain)) {
        best = Split{true, j, threshold, gain};
      }
    }
  }
  return best;
}

int build_node(Tree& tree, const Columns& cols, std::vector<std::size_t> rows,
               std::size_t depth, const std::vector<double>& grad,
               const std::vector<double>& hess, const GbdtParams& params) {
  double g = 0.0, h = 0.0;
  for (const auto r : rows) {
    g += grad[r];
    h += hess[r];
  }
  const auto make_leaf = [&] {
    TreeNode node;
    node.leaf = true;
    node.weight = -g / (h + params.l2_lambda);
    tree.nodes.push_back(node);
    return static_cast<int>(tree.nodes.size() - 1);
  };
  if (depth >= params.max_depth || rows.size() < 2) return make_leaf();
  const Split split =
      find_best_split(cols, rows, grad, hess, params.l2_lambda, params.min_gain);
  if (!split.found) return make_leaf();

  std::vector<std::size_t> left_rows, right_rows;
  for (const auto r : rows) {
    (cols[split.feature][r] < split.threshold ? left_rows : right_rows).push_back(r);
  }
  const int self = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  const int left = build_node(tree, cols, std::move(left_rows), depth + 1, grad, hess, params);
  const int right = build_node(tree, cols, std::move(right_rows), depth + 1, grad, hess, params);
  TreeNode& node = tree.nodes[self];
  node.leaf = false;
  node.feature = split.feature;
  node.threshold = split.threshold;
  node.left = left;
  node.right = right;
  return self;
}

double eval_tree_on_columns(const Tree& tree, const Columns& cols, std::size_t row) {
  std::size_t i = 0;
  while (!tree.nodes[i].leaf) {
    const TreeNode& node = tree.nodes[i];
    i = cols[node.feature][row] < node.threshold ? static_cast<std::size_t>(node.left)
                                                 : static_cast<std::size_t>(node.right);
  }
  return tree.nodes[i].weight;
}

void validate_params(const GbdtParams& params) {
  if (params.n_rounds == 0) throw std::invalid_argument("n_rounds must be at least 1");
  if (params.max_depth == 0) throw std::invalid_argument("max_depth must be at least 1");
  if (!(params.learning_rate > 0.0) || params.learning_rate > 1.0) {
    throw std::invalid_argument("learning_rate must be in (0, 1]");
  }
  if (params.l2_lambda < 0.0) throw std::invalid_argument("l2_lambda must be >= 0");
  if (params.min_gain < 0.0) throw std::invalid_argument("min_gain must be >= 0");
}

}  // namespace

GbdtModel fit(const SparseMatrix& x, const std::vector<int>& y, const GbdtParams& params,
              FitTrace* trace) {
  validate_params(params);
  if (x.n_rows != y.size()) throw std::invalid_argument("row and label counts differ");
  if (x.n_rows < 2) throw std::invalid_argument("need at least 2 training rows");

  std::size_t positives = 0;
  for (const auto label : y) {
    if (label != 0 && label != 1) throw std::invalid_argument("labels must be 0 or 1");
    positives += label;
  }
  if (positives == 0 || positives == y.size()) throw DegenerateLabelsError();

  GbdtModel model;
  model.learning_rate = params.learning_rate;
  model.n_features = x.n_cols;
  const double prior = std::clamp(static_cast<double>(positives) / static_cast<double>(y.size()),
                                  1e-6, 1.0 - 1e-6);
  model.base_score = std::log(prior / (1.0 - prior));

  const Columns cols = densify_columns(x);
  const std::size_t n = x.n_rows;
  std::vector<double> margins(n, model.base_score);
  std::vector<double> grad(n), hess(n);
  std::vector<std::size_t> all_rows(n);
  for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;

  model.trees.reserve(params.n_rounds);
  for (std::size_t round = 0; round < params.n_rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sigmoid(margins[i]);
      grad[i] = p - y[i];
      hess[i] = p * (1.0 - p);
    }
    Tree tree;
    build_node(tree, cols, all_rows, 0, grad, hess, params);
    for (std::size_t i = 0; i < n; ++i) {
      margins[i] += params.learning_rate * eval_tree_on_columns(tree, cols, i);
    }
    model.trees.push_back(std::move(tree));
    if (trace) trace->train_loss.push_back(mean_logistic_loss(y, margins));
  }
  return model;
}

std::vector<double> predict_margin(const GbdtModel& model, const SparseMatrix& x) {
  if (x.n_cols != model.n_features) throw WidthMismatchError(model.n_features, x.n_cols);
  std::vector<double> margins(x.n_rows, model.base_score);
  std::vector<double> features(model.n_features, 0.0);
  for (std::size_t i = 0; i < x.n_rows; ++i) {
    for (const auto& entry : x.rows[i]) features[entry.col] = entry.value;
    double sum = 0.0;
    for (const auto& tree : model.trees) sum += tree.eval(features);
    margins[i] += model.learning_rate * sum;
    for (const auto& entry : x.rows[i]) features[entry.col] = 0.0;
  }
  return margins;
}

std::vector<double> predict_proba(const GbdtModel& model, const SparseMatrix& x) {
  std::vector<double> out = predict_margin(model, x);
  for (auto& value : out) value = sigmoid(value);
  return out;
}

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson node_to_json(const Tree& tree, std::size_t index) {
  const TreeNode& node = tree.nodes[index];
  OrderedJson out;
  if (node.leaf) {
    out["weight"] = node.weight;
    return out;
  }
  out["feature"] = node.feature;
  out["threshold"] = node.threshold;
  out["left"] = node_to_json(tree, static_cast<std::size_t>(node.left));
  out["right"] = node_to_json(tree, static_cast<std::size_t>(node.right));
  return out;
}

int node_from_json(const OrderedJson& j, Tree& tree) {
  const int self = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  if (j.contains("weight")) {
    tree.nodes[self].leaf = true;
    tree.nodes[self].weight = j.at("weight").get<double>();
    return self;
  }
  const std::size_t feature = j.at("feature").get<std::size_t>();
  const double threshold = j.at("threshold").get<double>();
  const int left = node_from_json(j.at("left"), tree);
  const int right = node_from_json(j.at("right"), tree);
  TreeNode& node = tree.nodes[self];
  node.leaf = false;
  node.feature = feature;
  node.threshold = threshold;
  node.left = left;
  node.right = right;
  return self;
}

}  // namespace

std::string save_model(const GbdtModel& model) {
  OrderedJson out;
  out["format"] = 1;
  out["base_score"] = model.base_score;
  out["learning_rate"] = model.learning_rate;
  out["n_features"] = model.n_features;
  OrderedJson trees = OrderedJson::array();
  for (const auto& tree : model.trees) trees.push_back(node_to_json(tree, 0));
  out["trees"] = std::move(trees);
  return out.dump(2) + "\n";
}

GbdtModel load_model(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("malformed model text: ") + e.what());
  }
  if (!j.contains("format") || !j.at("format").is_number_integer() ||
      j.at("format").get<int>() != 1) {
    throw std::runtime_error("unsupported model format");
  }
  GbdtModel model;
  model.base_score = j.at("base_score").get<double>();
  model.learning_rate = j.at("learning_rate").get<double>();
  model.n_features = j.at("n_features").get<std::size_t>();
  for (const auto& tree_json : j.at("trees")) {
    Tree tree;
    node_from_json(tree_json, tree);
    model.trees.push_back(std::move(tree));
  }
  return model;
}

}  // namespace slp
