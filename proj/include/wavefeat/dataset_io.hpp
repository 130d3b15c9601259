// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wavefeat/preprocess.hpp"

namespace wavefeat {

/// delimited: comma-separated text, optional '#' comment lines, a header row
/// `label,<wavenumber>...` and one sample per row.
/// structured: JSON {"schema", "wavenumbers", "classes", "samples": [{"label", "intensities"}]}.
enum class DataFormat { Delimited, Structured };

DataFormat parse_format(std::string_view name);
/// Guess from the extension: .json -> structured, anything else -> delimited.
DataFormat format_for_path(const std::string& path);

/// Errors: ParseError (malformed text, ragged rows, bad numbers),
/// InconsistentGrid (non-monotone grid or per-sample grid mismatch),
/// MissingLabel (empty / absent label).
LabeledDataset read_delimited(std::istream& in);
LabeledDataset read_structured(std::istream& in);
LabeledDataset load_dataset(const std::string& path, DataFormat format);

/// Full round-trip precision; the first line records schema and tool version.
void write_delimited(std::ostream& out, const LabeledDataset& data);
void write_structured(std::ostream& out, const LabeledDataset& data);
void save_dataset(const LabeledDataset& data, const std::string& path, DataFormat format);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace wavefeat
