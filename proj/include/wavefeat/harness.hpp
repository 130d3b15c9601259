// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "wavefeat/pipeline.hpp"

namespace wavefeat {

using Fold = std::vector<std::size_t>;
using Folds = std::vector<Fold>;

/// Seeded shuffle, then contiguous chunks; the first n % k folds carry one
/// extra index. Indices inside each fold are sorted. With `stratify_by`, the
/// shuffled indices of each class are dealt round-robin over the folds instead.
Folds kfold_split(std::size_t n, std::size_t k, std::uint64_t seed, const std::vector<int>* stratify_by = nullptr);

/// All indices not in folds[i], sorted.
Fold complement(const Folds& folds, std::size_t i, std::size_t n);

/// One fit/score run. Classification fills the accuracy / F1 fields,
/// clustering the partition scores; the others stay NaN.
struct FoldScore {
    int repeat = 0;
    int fold = 0;
    double train_accuracy;
    double test_accuracy;
    double train_f1;
    double test_f1;
    double ari;
    double ami;
    double fm;
    FoldScore();
};

struct ScoreSummary {
    double mean = 0.0;
    double std = 0.0;  // population
    double min = 0.0;
    double max = 0.0;
};

struct CvReport {
    PipelineConfig config;
    std::uint64_t seed = 0;
    std::size_t repeats = 1;
    std::size_t folds = 0;
    std::vector<FoldScore> runs;
    std::map<std::string, ScoreSummary> summary;  // "test_accuracy", "ari", ...
    double runtime_seconds = 0.0;
    std::vector<std::string> warnings;

    std::size_t run_count() const { return runs.size(); }
    /// Mean test accuracy for classification, mean ARI for clustering.
    double selection_score() const;
    double mean(const std::string& metric) const;
};

/// Re-uses prepared signals and fitted decompositions across configs that only
/// differ after the decomposition. Not thread-safe; use one per worker.
class FeatureCache {
public:
    explicit FeatureCache(std::size_t capacity = 8) : capacity_(capacity) {}

    const LabeledDataset& prepared(const LabeledDataset& raw, const PipelineConfig& config);
    const FoldFeatures& fold(const LabeledDataset& raw, const PipelineConfig& config, const Fold& fit_rows);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    using Entry = std::pair<std::string, std::shared_ptr<const FoldFeatures>>;
    std::size_t capacity_;
    std::list<Entry> lru_;
    std::unordered_map<std::string, std::list<Entry>::iterator> index_;
    std::map<std::string, LabeledDataset> prepared_;
    const LabeledDataset* prepared_source_ = nullptr;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

/// Scores one config over the given folds.
/// Classification: fit on the complement of each fold, score train and test.
/// Clustering: each run clusters the complement of one fold (fitting the
/// decomposition on it) and scores against the known labels at k = number of
/// classes present.
CvReport evaluate_config(const PipelineConfig& config, const LabeledDataset& data, const Folds& folds,
                         FeatureCache* cache = nullptr);

struct CvOptions {
    std::size_t folds = 4;
    bool stratify = false;
    std::size_t jobs = 1;
};

struct LeaderboardEntry {
    std::size_t grid_index = 0;
    PipelineConfig config;
    std::optional<CvReport> report;  // empty when the config failed
    std::string error;

    double score() const;
};

struct GridResult {
    std::uint64_t seed = 0;
    std::vector<LeaderboardEntry> entries;  // grid enumeration order
    std::size_t best = 0;
    double runtime_seconds = 0.0;

    const LeaderboardEntry& best_entry() const { return entries.at(best); }
    /// Indices into `entries`, best first; ties keep grid order, failures last.
    std::vector<std::size_t> ranking() const;
};

/// Exhaustive search with one fixed fold split. Best = highest selection score,
/// first in grid order on ties. Throws InvalidConfig on an empty grid or when
/// classification and clustering configs are mixed.
GridResult grid_search(const std::vector<PipelineConfig>& grid, const LabeledDataset& data, std::uint64_t seed,
                       const CvOptions& options = {});

/// `repeats` independent fold splits (seeds seed+1 .. seed+repeats).
CvReport repeated_cv(const PipelineConfig& config, const LabeledDataset& data, std::size_t repeats, std::uint64_t seed,
                     const CvOptions& options = {});

struct ClusteringResult {
    PipelineConfig config;
    std::vector<int> labels;
    LinkageTree tree;
    double ari = 0.0;
    double ami = 0.0;
    double fm = 0.0;
    nlohmann::json dendrogram;
};

/// Fits the pipeline on all samples and cuts at the number of classes present.
ClusteringResult final_clustering(const PipelineConfig& config, const LabeledDataset& data);

/// Row label used when grouping winners into summary tables.
std::string feature_space_label(const PipelineConfig& config, bool split_sign);
std::string derivative_label(int order);

nlohmann::json to_json(const CvReport& r);
nlohmann::json to_json(const GridResult& g);

}  // namespace wavefeat
