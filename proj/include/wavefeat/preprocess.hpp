// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavefeat/numerics.hpp"

namespace wavefeat {

using numerics::Matrix;
using numerics::Vector;

/// One sampled signal. Wavenumbers in cm^-1, strictly monotone (either
/// direction); intensities in arbitrary absorbance units.
struct Spectrum {
    std::vector<double> wavenumbers;
    std::vector<double> intensities;

    void validate() const;
    std::size_t size() const { return intensities.size(); }
};

/// Spectra sharing one grid. Row i of `intensities` is sample i; labels are
/// indices into `class_names`.
struct LabeledDataset {
    std::vector<double> wavenumbers;
    Matrix intensities;
    std::vector<int> labels;
    std::vector<std::string> class_names;

    std::size_t sample_count() const { return static_cast<std::size_t>(intensities.rows()); }
    std::size_t length() const { return wavenumbers.size(); }
    std::size_t class_count() const { return class_names.size(); }
    Spectrum spectrum(std::size_t i) const;

    /// Rows `indices` in the given order; class names are kept as is.
    LabeledDataset subset(std::span<const std::size_t> indices) const;

    void validate() const;
};

enum class ScaleAxis { Feature, Sample };

struct PreprocessConfig {
    int derivative_order = 0;  // 0, 1 or 2
    bool center = false;
    bool scale = false;
    ScaleAxis axis = ScaleAxis::Feature;
    bool take_abs = false;

    void validate() const;
    bool operator==(const PreprocessConfig&) const = default;
};

/// Second-order finite differences on a uniform grid; one-sided second-order
/// stencils at both ends. Derivative is taken with respect to wavenumber.
Spectrum derivative(const Spectrum& x, int order);

/// Natural cubic spline onto 2^ceil(log2 n) uniformly spaced points spanning
/// the same range. Uniform power-of-two inputs are returned untouched.
Spectrum resample_pow2(const Spectrum& x);

Spectrum take_abs(const Spectrum& x);

bool is_uniform_grid(std::span<const double> grid, double rel_tol = 1e-6);

/// Centering / scaling statistics. For the feature axis they are fitted on a
/// training matrix and reused on held-out rows; for the sample axis each row
/// is standardized on its own and nothing is fitted.
class Scaler {
public:
    static Scaler fit(const Matrix& rows, const PreprocessConfig& cfg);
    Matrix apply(const Matrix& rows) const;
    /// Rebuilds a fitted scaler from stored statistics.
    static Scaler from_state(const PreprocessConfig& cfg, Vector means, Vector stds);

    const Vector& means() const { return means_; }
    const Vector& stds() const { return stds_; }
    bool operator==(const Scaler&) const = default;

private:
    bool center_ = false;
    bool scale_ = false;
    ScaleAxis axis_ = ScaleAxis::Feature;
    Vector means_;
    Vector stds_;
};

/// Fit-and-apply on the same data. Population standard deviation; zero-variance
/// positions are centered but not divided.
LabeledDataset standard_scale(const LabeledDataset& data, const PreprocessConfig& cfg);

/// Row-wise derivative of a whole dataset.
LabeledDataset derivative(const LabeledDataset& data, int order);

/// Row-wise resampling of a whole dataset onto the common power-of-two grid.
LabeledDataset resample_pow2(const LabeledDataset& data);

bool is_power_of_two(std::size_t n);

}  // namespace wavefeat
