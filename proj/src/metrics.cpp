#include "slp/metrics.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>

namespace slp {

SingleClassError::SingleClassError()
    : std::runtime_error("AUC is undefined: only one class is present") {}

double auc_score(const std::vector<int>& y, const std::vector<double>& scores) {
  if (y.size() != scores.size()) throw std::invalid_argument("label and score counts differ");
  std::size_t n_pos = 0;
  for (const auto label : y) n_pos += label != 0;
  const std::size_t n_neg = y.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) throw SingleClassError();

  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return a < b;
  });

  // Mann-Whitney rank sum with tied scores sharing their average rank.
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) {
      if (y[order[k]] != 0) positive_rank_sum += avg_rank;
    }
    i = j + 1;
  }
  const double min_rank_sum = static_cast<double>(n_pos) * static_cast<double>(n_pos + 1) / 2.0;
  return (positive_rank_sum - min_rank_sum) /
         (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

Metrics compute_metrics(const std::vector<int>& y, const std::vector<double>& scores,
                        double threshold) {
  if (y.size() != scores.size()) throw std::invalid_argument("label and score counts differ");
  if (y.empty()) throw std::invalid_argument("no samples");

  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool predicted = scores[i] >= threshold;
    const bool actual = y[i] != 0;
    if (predicted && actual) ++tp;
    else if (predicted && !actual) ++fp;
    else if (!predicted && actual) ++fn;
  }

  Metrics m;
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  try {
    m.auc = auc_score(y, scores);
  } catch (const SingleClassError&) {
    m.auc = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

}  // namespace slp
