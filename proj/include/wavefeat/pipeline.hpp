// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wavefeat/dwt.hpp"
#include "wavefeat/features.hpp"
#include "wavefeat/models.hpp"
#include "wavefeat/preprocess.hpp"
#include "wavefeat/wtt.hpp"

namespace wavefeat {

enum class DecompositionKind { None, Dwt, Wtt };

struct DecompositionConfig {
    DecompositionKind kind = DecompositionKind::None;
    std::string wavelet = "db4";  // DWT only
    PaddingMode mode = PaddingMode::Symmetric;
    std::size_t level = 0;  // 0 = maximal level for the signal length
    std::size_t rank = 1;   // WTT only

    bool operator==(const DecompositionConfig&) const = default;
};

/// Non-linearity after the decomposition. `quantile` picks tau as that
/// quantile of |coefficients| pooled over the rows the pipeline is fitted on.
struct TransformConfig {
    FeatureMap map = FeatureMap::None;
    ThresholdKind kind = ThresholdKind::Hard;
    double quantile = 0.9;

    bool operator==(const TransformConfig&) const = default;
};

enum class ModelKind { Lda, Lr, Hac };
enum class Task { Classification, Clustering };

struct ModelConfig {
    ModelKind kind = ModelKind::Lda;
    Penalty penalty = Penalty::L2;
    double c = 1.0;
    Affinity affinity = Affinity::Euclidean;
    Linkage linkage = Linkage::Ward;

    bool operator==(const ModelConfig&) const = default;
};

struct PipelineConfig {
    PreprocessConfig preprocess;
    DecompositionConfig decomposition;
    TransformConfig transform;
    ModelConfig model;

    Task task() const { return model.kind == ModelKind::Hac ? Task::Clustering : Task::Classification; }
    /// Throws InvalidConfig: contrast is clustering-only, sign is
    /// classification-only, non-linear maps need a decomposition, ward needs
    /// euclidean distances.
    void validate() const;
    /// Canonical one-line description, also used as a cache / table key.
    std::string key() const;
    /// Preprocessing + decomposition part of key().
    std::string feature_key() const;

    bool operator==(const PipelineConfig&) const = default;
};

nlohmann::json to_json(const PipelineConfig& c);
PipelineConfig pipeline_from_json(const nlohmann::json& j);

/// Signals after the row-local steps (derivative, and power-of-two
/// resampling when the decomposition is WTT). Nothing here is fitted.
LabeledDataset prepare_signals(const LabeledDataset& raw, const PreprocessConfig& pre, DecompositionKind kind);

/// Preprocessing + decomposition fitted on a set of rows, applied to all rows
/// of one prepared dataset.
struct FoldFeatures {
    Scaler scaler;
    std::optional<WttFilterBank> bank;
    std::shared_ptr<const LinearTransform> transform;  // null without decomposition
    Matrix signals;                   // scaled (and abs) signals, one row per sample
    Matrix coefficients;              // W applied to `signals`; equals signals without decomposition
    std::vector<double> fit_abs_sorted;  // |coefficients| over the fitted rows, ascending
};

FoldFeatures fit_fold_features(const PipelineConfig& config, const LabeledDataset& prepared,
                               std::span<const std::size_t> fit_rows);

/// tau for the transform's quantile over the fitted rows' coefficients.
double fitted_tau(const FoldFeatures& f, const TransformConfig& t);

/// Final feature rows for `rows` given fitted state and tau.
Matrix feature_rows(const FoldFeatures& f, const TransformConfig& t, double tau, std::span<const std::size_t> rows);

/// Everything fitted for one pipeline on one training set.
struct FittedPipeline {
    PipelineConfig config;
    Scaler scaler;
    std::optional<WttFilterBank> bank;
    double tau = 0.0;
    std::variant<std::monostate, LdaModel, LrModel> model;
    std::size_t signal_length = 0;  // prepared length the pipeline expects
    std::vector<std::string> class_names;

    /// Features for every row of a raw dataset on the training grid.
    Matrix features(const LabeledDataset& raw) const;
    std::vector<int> predict(const LabeledDataset& raw) const;
};

/// Fit preprocessing statistics, WTT filters, tau and (for classification)
/// the model on `train_rows` only.
FittedPipeline fit_pipeline(const PipelineConfig& config, const LabeledDataset& raw, std::span<const std::size_t> train_rows);

std::string_view decomposition_name(DecompositionKind k);
std::string_view feature_map_name(FeatureMap m);
std::string_view model_name(ModelKind k);

}  // namespace wavefeat
