// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/preprocess.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

bool strictly_monotone(std::span<const double> g) {
    if (g.size() < 2) return true;
    const bool up = g[1] > g[0];
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (up ? !(g[i] > g[i - 1]) : !(g[i] < g[i - 1])) return false;
    }
    return true;
}

std::vector<double> uniform_grid(double first, double last, std::size_t n) {
    std::vector<double> g(n);
    const double step = (last - first) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = first + step * static_cast<double>(i);
    g.back() = last;
    return g;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

void Spectrum::validate() const {
    if (wavenumbers.size() != intensities.size())
        throw InvalidInput("spectrum: wavenumber and intensity lengths differ");
    if (intensities.size() < 4) throw InvalidInput("spectrum: need at least 4 points");
    if (!strictly_monotone(wavenumbers)) throw InvalidInput("spectrum: wavenumbers not strictly monotone");
    for (std::size_t i = 0; i < intensities.size(); ++i) {
        if (!std::isfinite(intensities[i]) || !std::isfinite(wavenumbers[i]))
            throw InvalidInput("spectrum: non-finite value");
    }
}

Spectrum LabeledDataset::spectrum(std::size_t i) const {
    Spectrum s;
    s.wavenumbers = wavenumbers;
    s.intensities.resize(length());
    for (std::size_t j = 0; j < length(); ++j) s.intensities[j] = intensities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return s;
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> indices) const {
    LabeledDataset out;
    out.wavenumbers = wavenumbers;
    out.class_names = class_names;
    out.intensities.resize(static_cast<Eigen::Index>(indices.size()), intensities.cols());
    out.labels.reserve(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) {
        if (indices[r] >= sample_count()) throw InvalidInput("subset: index out of range");
        out.intensities.row(static_cast<Eigen::Index>(r)) = intensities.row(static_cast<Eigen::Index>(indices[r]));
        out.labels.push_back(labels[indices[r]]);
    }
    return out;
}

void LabeledDataset::validate() const {
    if (sample_count() < 2) throw InvalidInput("dataset: need at least 2 samples");
    if (class_names.empty()) throw InvalidInput("dataset: no classes");
    if (static_cast<std::size_t>(intensities.cols()) != wavenumbers.size())
        throw InvalidInput("dataset: grid length does not match sample length");
    if (labels.size() != sample_count()) throw InvalidInput("dataset: one label per sample required");
    if (wavenumbers.size() < 4) throw InvalidInput("dataset: need at least 4 grid points");
    if (!strictly_monotone(wavenumbers)) throw InvalidInput("dataset: wavenumbers not strictly monotone");
    if (!intensities.allFinite()) throw InvalidInput("dataset: non-finite intensity");
    for (int l : labels) {
        if (l < 0 || static_cast<std::size_t>(l) >= class_names.size()) throw InvalidInput("dataset: label out of range");
    }
}

void PreprocessConfig::validate() const {
    if (derivative_order < 0 || derivative_order > 2) throw InvalidConfig("derivative order must be 0, 1 or 2");
}

bool is_uniform_grid(std::span<const double> grid, double rel_tol) {
    if (grid.size() < 2) return true;
    const double h = grid[1] - grid[0];
    if (h == 0.0) return false;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (std::abs((grid[i] - grid[i - 1]) - h) > rel_tol * std::abs(h)) return false;
    }
    return true;
}

Spectrum derivative(const Spectrum& x, int order) {
    x.validate();
    if (order != 1 && order != 2) throw InvalidInput("derivative: order must be 1 or 2");
    const std::size_t n = x.size();
    if (n < 5) throw InvalidInput("derivative: need at least 5 points");
    if (!is_uniform_grid(x.wavenumbers)) throw InvalidInput("derivative: grid is not uniform");
    const double h = (x.wavenumbers.back() - x.wavenumbers.front()) / static_cast<double>(n - 1);
    const auto& f = x.intensities;
    Spectrum out{x.wavenumbers, std::vector<double>(n)};
    auto& d = out.intensities;
    if (order == 1) {
        for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
        d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
        d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    } else {
        const double h2 = h * h;
        for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
        d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
        d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    }
    return out;
}

Spectrum resample_pow2(const Spectrum& x) {
    x.validate();
    const std::size_t n = x.size();
    if (is_power_of_two(n) && is_uniform_grid(x.wavenumbers)) return x;

    // GSL wants increasing abscissae.
    std::vector<double> xs = x.wavenumbers;
    std::vector<double> ys = x.intensities;
    const bool descending = xs.front() > xs.back();
    if (descending) {
        std::reverse(xs.begin(), xs.end());
        std::reverse(ys.begin(), ys.end());
    }

    gsl_set_error_handler_off();
    std::unique_ptr<gsl_interp_accel, decltype(&gsl_interp_accel_free)> acc(gsl_interp_accel_alloc(),
                                                                             &gsl_interp_accel_free);
    std::unique_ptr<gsl_spline, decltype(&gsl_spline_free)> spline(gsl_spline_alloc(gsl_interp_cspline, n),
                                                                   &gsl_spline_free);
    if (!acc || !spline) throw NumericalError("resample_pow2: allocation failed");
    if (gsl_spline_init(spline.get(), xs.data(), ys.data(), n) != GSL_SUCCESS)
        throw NumericalError("resample_pow2: spline setup failed");

    const std::size_t m = next_pow2(n);
    Spectrum out;
    out.wavenumbers = uniform_grid(x.wavenumbers.front(), x.wavenumbers.back(), m);
    out.intensities.resize(m);
    const double lo = xs.front();
    const double hi = xs.back();
    for (std::size_t i = 0; i < m; ++i) {
        const double at = std::clamp(out.wavenumbers[i], lo, hi);
        double v = 0.0;
        if (gsl_spline_eval_e(spline.get(), at, acc.get(), &v) != GSL_SUCCESS)
            throw NumericalError("resample_pow2: spline evaluation failed");
        out.intensities[i] = v;
    }
    return out;
}

Spectrum take_abs(const Spectrum& x) {
    Spectrum out = x;
    for (double& v : out.intensities) v = std::abs(v);
    return out;
}

Scaler Scaler::fit(const Matrix& rows, const PreprocessConfig& cfg) {
    Scaler s;
    s.center_ = cfg.center;
    s.scale_ = cfg.scale;
    s.axis_ = cfg.axis;
    if (cfg.axis == ScaleAxis::Sample || !(cfg.center || cfg.scale)) return s;
    if (rows.rows() < 2) throw InvalidInput("scaler: feature axis needs at least 2 samples");
    const double m = static_cast<double>(rows.rows());
    s.means_ = rows.colwise().mean().transpose();
    s.stds_ = ((rows.rowwise() - s.means_.transpose()).array().square().colwise().sum() / m).sqrt().transpose();
    return s;
}

Scaler Scaler::from_state(const PreprocessConfig& cfg, Vector means, Vector stds) {
    if (means.size() != stds.size()) throw InvalidInput("scaler: mean and std lengths differ");
    Scaler s;
    s.center_ = cfg.center;
    s.scale_ = cfg.scale;
    s.axis_ = cfg.axis;
    s.means_ = std::move(means);
    s.stds_ = std::move(stds);
    return s;
}

Matrix Scaler::apply(const Matrix& rows) const {
    if (!(center_ || scale_)) return rows;
    Matrix out = rows;
    if (axis_ == ScaleAxis::Feature) {
        if (out.cols() != means_.size()) throw InvalidInput("scaler: feature count differs from fitted data");
        for (Eigen::Index c = 0; c < out.cols(); ++c) {
            const bool divide = scale_ && stds_(c) > 0.0;
            for (Eigen::Index r = 0; r < out.rows(); ++r) {
                if (center_) out(r, c) -= means_(c);
                if (divide) out(r, c) /= stds_(c);
            }
        }
        return out;
    }
    const double n = static_cast<double>(out.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        const double mean = out.row(r).mean();
        const double sd = std::sqrt((out.row(r).array() - mean).square().sum() / n);
        if (center_) out.row(r).array() -= mean;
        if (scale_ && sd > 0.0) out.row(r) /= sd;
    }
    return out;
}

LabeledDataset standard_scale(const LabeledDataset& data, const PreprocessConfig& cfg) {
    LabeledDataset out = data;
    out.intensities = Scaler::fit(data.intensities, cfg).apply(data.intensities);
    return out;
}

LabeledDataset derivative(const LabeledDataset& data, int order) {
    LabeledDataset out = data;
    for (std::size_t i = 0; i < data.sample_count(); ++i) {
        const Spectrum d = derivative(data.spectrum(i), order);
        out.intensities.row(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vector>(d.intensities.data(), static_cast<Eigen::Index>(d.size())).transpose();
    }
    return out;
}

LabeledDataset resample_pow2(const LabeledDataset& data) {
    if (is_power_of_two(data.length()) && is_uniform_grid(data.wavenumbers)) return data;
    LabeledDataset out = data;
    for (std::size_t i = 0; i < data.sample_count(); ++i) {
        const Spectrum r = resample_pow2(data.spectrum(i));
        if (i == 0) {
            out.wavenumbers = r.wavenumbers;
            out.intensities.resize(data.intensities.rows(), static_cast<Eigen::Index>(r.size()));
        }
        out.intensities.row(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vector>(r.intensities.data(), static_cast<Eigen::Index>(r.size())).transpose();
    }
    return out;
}

}  // namespace wavefeat
