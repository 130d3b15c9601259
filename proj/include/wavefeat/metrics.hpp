// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <span>
#include <vector>

namespace wavefeat {

/// Cross-tabulation of two labelings of the same samples. Label values are
/// arbitrary integers; rows follow sorted `truth` values, columns sorted `pred`.
struct ContingencyTable {
    std::vector<std::vector<long>> counts;
    std::vector<long> row_sums;
    std::vector<long> col_sums;
    long total = 0;

    static ContingencyTable build(std::span<const int> truth, std::span<const int> pred);
};

double accuracy(std::span<const int> truth, std::span<const int> pred);

/// Per-class F1 (0 when precision + recall is 0), weighted by true support.
double f1_weighted(std::span<const int> truth, std::span<const int> pred);

/// Chance-corrected Rand index; 1 when both labelings are all-singletons or
/// both a single cluster.
double adjusted_rand(std::span<const int> truth, std::span<const int> pred);

/// Mutual information in nats.
double mutual_info(const ContingencyTable& t);
/// Exact expectation of the mutual information under the hypergeometric
/// model with both marginals fixed.
double expected_mutual_info(const ContingencyTable& t);
double entropy(std::span<const long> counts);

/// (MI - E[MI]) / (mean(H(U), H(V)) - E[MI]), natural logs, arithmetic mean.
/// A vanishing denominator yields 1 for identical partitions and 0 otherwise.
double adjusted_mutual_info(std::span<const int> truth, std::span<const int> pred);

/// TP / sqrt((TP + FP)(TP + FN)) over sample pairs; 0 when a factor is 0.
double fowlkes_mallows(std::span<const int> truth, std::span<const int> pred);

/// Same partition up to relabeling.
bool same_partition(std::span<const int> a, std::span<const int> b);

}  // namespace wavefeat
