// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/synth.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

// Own uniform / normal draws so datasets are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

std::size_t SyntheticSpec::sample_count() const {
    return std::accumulate(samples_per_class.begin(), samples_per_class.end(), std::size_t{0});
}

void SyntheticSpec::validate() const {
    if (samples_per_class.empty()) throw InvalidInput("synth: need at least one class");
    for (std::size_t n : samples_per_class)
        if (n == 0) throw InvalidInput("synth: every class needs at least one sample");
    if (sample_count() < 2) throw InvalidInput("synth: need at least 2 samples");
    if (points < 5) throw InvalidInput("synth: need at least 5 grid points");
    if (!(wavenumber_start != wavenumber_end) || !std::isfinite(wavenumber_start) || !std::isfinite(wavenumber_end))
        throw InvalidInput("synth: empty wavenumber range");
    if (!class_peaks.empty() && class_peaks.size() != class_count())
        throw InvalidInput("synth: class_peaks must list one peak set per class");
    if (!common_gain.empty()) {
        if (common_gain.size() != class_count()) throw InvalidInput("synth: common_gain must have one row per class");
        for (const auto& g : common_gain)
            if (g.size() != common_peaks.size()) throw InvalidInput("synth: common_gain row length differs from peak count");
    }
    const double lo = std::min(wavenumber_start, wavenumber_end);
    const double hi = std::max(wavenumber_start, wavenumber_end);
    auto check = [&](const Peak& p) {
        if (!(p.position >= lo && p.position <= hi)) throw InvalidInput("synth: peak outside the grid range");
        if (!(p.width > 0.0)) throw InvalidInput("synth: peak width must be positive");
        if (!std::isfinite(p.amplitude)) throw InvalidInput("synth: non-finite peak amplitude");
    };
    for (const Peak& p : common_peaks) check(p);
    for (const auto& set : class_peaks)
        for (const Peak& p : set) check(p);
    if (amplitude_jitter < 0 || position_jitter < 0 || scale_jitter < 0 || scale_jitter >= 1 || baseline_sigma < 0 ||
        noise_sigma < 0)
        throw InvalidInput("synth: jitter and noise levels must be non-negative (scale jitter below 1)");
    if (baseline_degree < 0 || baseline_degree > 6) throw InvalidInput("synth: baseline degree must be in 0..6");
}

SyntheticSpec SyntheticSpec::defaults() {
    SyntheticSpec s;
    // broad bands loosely placed where plant tissue absorbs
    s.common_peaks = {{1735, 12, 0.35}, {1640, 25, 0.80}, {1545, 18, 0.45}, {1450, 14, 0.30}, {1375, 12, 0.28},
                      {1240, 20, 0.40}, {1155, 15, 0.45}, {1105, 14, 0.55}, {1050, 22, 1.00}, {1030, 16, 0.70},
                      {895, 10, 0.12},  {780, 18, 0.15},  {610, 25, 0.20},  {520, 20, 0.18}};
    // narrow, weak class markers
    Rng layout(20260101);
    const std::size_t classes = s.class_count();
    s.class_peaks.resize(classes);
    s.common_gain.resize(classes);
    for (std::size_t c = 0; c < classes; ++c) {
        const std::size_t count = 3 + c % 2;
        for (std::size_t j = 0; j < count; ++j) {
            s.class_peaks[c].push_back({layout.uniform(480.0, 1920.0), layout.uniform(2.5, 5.0), layout.uniform(0.02, 0.04)});
        }
        for (std::size_t j = 0; j < s.common_peaks.size(); ++j) s.common_gain[c].push_back(1.0 + 0.05 * layout.normal());
    }
    return s;
}

LabeledDataset synth_dataset(const SyntheticSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    LabeledDataset d;
    d.wavenumbers.resize(spec.points);
    const double step = (spec.wavenumber_end - spec.wavenumber_start) / static_cast<double>(spec.points - 1);
    for (std::size_t i = 0; i < spec.points; ++i) d.wavenumbers[i] = spec.wavenumber_start + step * static_cast<double>(i);
    d.wavenumbers.back() = spec.wavenumber_end;
    for (std::size_t c = 0; c < spec.class_count(); ++c) d.class_names.push_back("c" + std::to_string(c + 1));

    const double mid = 0.5 * (spec.wavenumber_start + spec.wavenumber_end);
    const double half = 0.5 * std::abs(spec.wavenumber_end - spec.wavenumber_start);
    d.intensities.resize(static_cast<Eigen::Index>(spec.sample_count()), static_cast<Eigen::Index>(spec.points));
    Eigen::Index row = 0;
    for (std::size_t c = 0; c < spec.class_count(); ++c) {
        for (std::size_t k = 0; k < spec.samples_per_class[c]; ++k, ++row) {
            const double scale = 1.0 + spec.scale_jitter * (2.0 * rng.uniform() - 1.0);
            std::vector<double> baseline(static_cast<std::size_t>(spec.baseline_degree) + 1);
            for (double& b : baseline) b = spec.baseline_sigma * rng.normal();
            std::vector<Peak> bands;
            for (std::size_t j = 0; j < spec.common_peaks.size(); ++j) {
                Peak p = spec.common_peaks[j];
                if (!spec.common_gain.empty()) p.amplitude *= spec.common_gain[c][j];
                bands.push_back(p);
            }
            if (!spec.class_peaks.empty())
                bands.insert(bands.end(), spec.class_peaks[c].begin(), spec.class_peaks[c].end());
            for (Peak& p : bands) {
                p.amplitude *= 1.0 + spec.amplitude_jitter * rng.normal();
                p.position += spec.position_jitter * rng.normal();
            }
            for (std::size_t i = 0; i < spec.points; ++i) {
                const double nu = d.wavenumbers[i];
                double v = 0.0;
                for (const Peak& p : bands) {
                    const double z = (nu - p.position) / p.width;
                    if (std::abs(z) < 40.0) v += p.amplitude * std::exp(-0.5 * z * z);
                }
                const double t = (nu - mid) / half;
                double base = 0.0;
                for (std::size_t q = baseline.size(); q-- > 0;) base = base * t + baseline[q];
                d.intensities(row, static_cast<Eigen::Index>(i)) = scale * v + base + spec.noise_sigma * rng.normal();
            }
            d.labels.push_back(static_cast<int>(c));
        }
    }
    return d;
}

}  // namespace wavefeat
