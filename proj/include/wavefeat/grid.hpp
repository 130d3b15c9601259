// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wavefeat/pipeline.hpp"

namespace wavefeat {

/// Eight threshold quantiles; 1 - q is geometric from 0.5 down to 0.01.
std::vector<double> default_quantile_grid();

/// Expands a grid document into concrete configs. Enumeration order is
/// lexicographic over: derivative, center, scale, axis, abs, decomposition
/// entry (and its wavelet, mode, level / rank), transform entry (rule,
/// quantile), model entry (penalty, C / affinity, linkage). Combinations that
/// fail PipelineConfig::validate() and duplicates (e.g. the axis when neither
/// centering nor scaling is on) are dropped.
std::vector<PipelineConfig> expand_grid(const nlohmann::json& doc);

/// Built-in grid document used when no grid file is given: a desk-sized
/// lattice for the task (classification: LDA + LR, clustering: HAC).
nlohmann::json default_grid(Task task);

/// Reads and expands a grid file; ParseError on malformed JSON.
std::vector<PipelineConfig> load_grid(const std::string& path);

}  // namespace wavefeat
