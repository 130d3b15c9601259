// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <cstdint>
#include <vector>

#include "wavefeat/preprocess.hpp"

namespace wavefeat {

struct Peak {
    double position;   // cm^-1
    double width;      // Gaussian sigma, cm^-1
    double amplitude;  // absorbance units
};

/// Gaussian-band spectra on a shared grid:
///   s * sum_j a_j (1 + e_j) exp(-(nu - mu_j)^2 / (2 sigma_j^2)) + baseline(nu) + noise
/// with a per-sample scale s = 1 + U(-scale_jitter, scale_jitter), per-band
/// e_j ~ N(0, amplitude_jitter^2), band shifts ~ N(0, position_jitter^2) and a
/// random polynomial baseline over the normalized grid.
struct SyntheticSpec {
    std::vector<std::size_t> samples_per_class{12, 11, 12, 11, 14, 9, 11};
    double wavenumber_start = 2000.0;
    double wavenumber_end = 400.0;
    std::size_t points = 1600;
    std::vector<Peak> common_peaks;               // every class
    std::vector<std::vector<double>> common_gain;  // per class, per common peak multiplier
    std::vector<std::vector<Peak>> class_peaks;    // per class
    double amplitude_jitter = 0.05;
    double position_jitter = 0.5;
    double scale_jitter = 0.4;
    int baseline_degree = 2;
    double baseline_sigma = 0.1;
    double noise_sigma = 0.002;
    std::uint64_t seed = 7;

    std::size_t class_count() const { return samples_per_class.size(); }
    std::size_t sample_count() const;
    void validate() const;

    /// Seven classes with the sample counts above; peak tables are fixed.
    static SyntheticSpec defaults();
};

/// Deterministic in (spec, seed). Classes are named "c1".."cS"; samples are
/// grouped by class.
LabeledDataset synth_dataset(const SyntheticSpec& spec);

}  // namespace wavefeat
