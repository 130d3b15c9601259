// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "wavefeat/pipeline.hpp"

namespace wavefeat {

// Doubles are written in shortest round-trip form, so every record below
// parses back bit-identically.

nlohmann::json matrix_to_json(const Matrix& m);  // {"rows", "cols", "data" row-major}
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json bank_to_json(const WttFilterBank& bank);
WttFilterBank bank_from_json(const nlohmann::json& j);

nlohmann::json lda_to_json(const LdaModel& m);
LdaModel lda_from_json(const nlohmann::json& j);
nlohmann::json lr_to_json(const LrModel& m);
LrModel lr_from_json(const nlohmann::json& j);

nlohmann::json fitted_to_json(const FittedPipeline& p);
FittedPipeline fitted_from_json(const nlohmann::json& j);

/// Run record: command, seed, config, code version, input digest, wall time.
nlohmann::json make_manifest(const std::string& command, std::uint64_t seed, const std::string& input_path,
                             double wall_seconds);

/// 64-bit FNV-1a of a file's bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j, int indent = 1);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wavefeat
