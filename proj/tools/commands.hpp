// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavefeat/dataset_io.hpp"
#include "wavefeat/harness.hpp"

namespace wavefeat::cli {

enum ExitCode { kOk = 0, kUsage = 2, kDataError = 3, kNumerical = 4 };

struct CommonOptions {
    std::string data;
    std::string format;  // empty: guess from the extension
    std::string config;  // empty: built-in default grid
    std::uint64_t seed = 7;
    std::string out_dir = ".";
    std::size_t jobs = 1;
    bool stratify = false;
    bool quiet = false;
};

/// Best config of one summary-table cell (model, feature space, derivative).
struct ClassificationCell {
    std::string model;
    std::string space;
    int derivative = 0;
    std::size_t grid_index = 0;
    double short_cv_score = 0.0;
    CvReport report;  // repeated CV of the winner
};

struct GridsearchOutcome {
    GridResult grid;
    std::vector<ClassificationCell> cells;
    CvReport best;  // repeated CV of the overall winner
};

struct ClusteringCell {
    std::string space;
    int derivative = 0;
    std::size_t grid_index = 0;
    double short_cv_score = 0.0;
    ClusteringResult result;  // full-data clustering of the winner
};

struct ClusterOutcome {
    GridResult grid;
    std::vector<ClusteringCell> cells;
    ClusteringResult best;
    /// WTT >= DWT >= original on full-data ARI (best over derivatives); empty
    /// when a feature space is missing from the grid.
    std::optional<bool> ordering_holds;
};

LabeledDataset load_input(const CommonOptions& o);

/// Grid search, then repeated CV of each cell winner. Writes leaderboard,
/// summary tables and a manifest to out_dir unless out_dir is empty.
GridsearchOutcome run_gridsearch(const CommonOptions& o, const LabeledDataset& data, std::size_t repeats,
                                 std::size_t folds);
/// Clustering grid search (leave-one-fold-out scheme), then full-data
/// clustering of each cell winner and of the overall winner.
ClusterOutcome run_cluster(const CommonOptions& o, const LabeledDataset& data, std::size_t folds);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, char** argv);

}  // namespace wavefeat::cli
