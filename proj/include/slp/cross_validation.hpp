#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "slp/gbdt.hpp"
#include "slp/metrics.hpp"
#include "slp/sparse.hpp"

namespace slp {

/// Some class has fewer members than there are folds.
struct TooFewSamplesError : std::runtime_error {
  TooFewSamplesError();
};

/// Stratified fold assignment: within each class, samples are dealt to
/// folds 0..folds-1 round-robin in input order. Deterministic.
std::vector<std::size_t> stratified_fold_assignment(const std::vector<int>& y, std::size_t folds);

/// K-fold cross-validation of the boosted-tree classifier: train on the
/// complement of each fold, evaluate on the fold, return the arithmetic
/// mean of each metric across folds. folds must be >= 2 and every class
/// needs at least `folds` members (TooFewSamplesError otherwise).
Metrics cross_validate(const SparseMatrix& x, const std::vector<int>& y,
                       const GbdtParams& params, std::size_t folds = 10);

}  // namespace slp
