#include "slp/cross_validation.hpp"

#include <algorithm>

namespace slp {

TooFewSamplesError::TooFewSamplesError()
    : std::runtime_error("every class needs at least as many samples as folds") {}

std::vector<std::size_t> stratified_fold_assignment(const std::vector<int>& y,
                                                    std::size_t folds) {
  if (folds < 2) throw std::invalid_argument("folds must be at least 2");
  std::vector<std::size_t> fold(y.size());
  std::size_t seen_pos = 0, seen_neg = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::size_t& seen = y[i] != 0 ? seen_pos : seen_neg;
    fold[i] = seen % folds;
    ++seen;
  }
  return fold;
}

Metrics cross_validate(const SparseMatrix& x, const std::vector<int>& y,
                       const GbdtParams& params, std::size_t folds) {
  if (x.n_rows != y.size()) throw std::invalid_argument("row and label counts differ");
  if (folds < 2) throw std::invalid_argument("folds must be at least 2");
  std::size_t n_pos = 0;
  for (const auto label : y) n_pos += label != 0;
  const std::size_t n_neg = y.size() - n_pos;
  if (n_pos < folds || n_neg < folds) throw TooFewSamplesError();

  const std::vector<std::size_t> fold = stratified_fold_assignment(y, folds);
  Metrics mean;
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t i = 0; i < y.size(); ++i) {
      (fold[i] == f ? test_idx : train_idx).push_back(i);
    }
    std::vector<int> train_y, test_y;
    train_y.reserve(train_idx.size());
    test_y.reserve(test_idx.size());
    for (const auto i : train_idx) train_y.push_back(y[i]);
    for (const auto i : test_idx) test_y.push_back(y[i]);

    const GbdtModel model = fit(select_rows(x, train_idx), train_y, params);
    const std::vector<double> scores = predict_proba(model, select_rows(x, test_idx));
    const Metrics m = compute_metrics(test_y, scores);
    mean.auc += m.auc;
    mean.f1 += m.f1;
    mean.precision += m.precision;
    mean.recall += m.recall;
  }
  const double k = static_cast<double>(folds);
  mean.auc /= k;
  mean.f1 /= k;
  mean.precision /= k;
  mean.recall /= k;
  return mean;
}

}  // namespace slp
