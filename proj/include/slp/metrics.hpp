#pragma once

#include <stdexcept>
#include <vector>

namespace slp {

struct Metrics {
  double auc = 0.0;
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

/// AUC is undefined because only one class is present.
struct SingleClassError : std::runtime_error {
  SingleClassError();
};

/// Probability that a uniformly chosen positive outranks a uniformly
/// chosen negative, ties counted 1/2; computed via the rank statistic.
/// Throws SingleClassError unless both classes are present.
double auc_score(const std::vector<int>& y, const std::vector<double>& scores);

/// AUC plus precision/recall/F1 with positive class 1 and predictions
/// score >= threshold. Precision and recall are 0 when their denominator
/// is 0; F1 is 0 when precision + recall is 0. When only one class is
/// present the threshold metrics are still computed and auc is NaN.
Metrics compute_metrics(const std::vector<int>& y, const std::vector<double>& scores,
                        double threshold = 0.5);

}  // namespace slp
