// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/features.hpp"

#include <algorithm>
#include <cmath>

#include "wavefeat/error.hpp"

namespace wavefeat {

std::vector<double> threshold(std::span<const double> v, const ThresholdRule& rule) {
    if (!(rule.tau >= 0.0)) throw InvalidInput("threshold: tau must be non-negative");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double c = v[i];
        if (rule.kind == ThresholdKind::Hard) {
            out[i] = std::abs(c) > rule.tau ? c : 0.0;
        } else {
            const double mag = std::max(std::abs(c) - rule.tau, 0.0);
            out[i] = c < 0.0 ? -mag : mag;
        }
    }
    return out;
}

std::vector<double> sign_quantize(std::span<const double> v, double tau) {
    if (!(tau >= 0.0)) throw InvalidInput("sign_quantize: tau must be non-negative");
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > tau) out[i] = v[i] > 0.0 ? 1.0 : -1.0;
    }
    return out;
}

DwtTransform::DwtTransform(WaveletSpec wavelet, PaddingMode mode, std::size_t level, std::size_t input_length)
    : length_(input_length) {
    // decompose zeros once to capture block sizes and bookkeeping
    const std::vector<double> zeros(input_length, 0.0);
    layout_ = wavedec(zeros, wavelet, mode, level);
}

std::vector<double> DwtTransform::forward(std::span<const double> x) const {
    if (x.size() != length_) throw InvalidInput("dwt transform: input length mismatch");
    return flatten(wavedec(x, layout_.wavelet, layout_.mode, layout_.levels()));
}

std::vector<double> DwtTransform::inverse(std::span<const double> coeffs) const {
    return waverec(unflatten(coeffs, layout_));
}

bool DwtTransform::orthogonal() const {
    return layout_.wavelet.orthogonal() && layout_.mode == PaddingMode::Periodization &&
           layout_.coefficient_count() == length_;
}

WttTransform::WttTransform(WttFilterBank bank) : bank_(std::move(bank)) {
    bank_.validate();
}

std::vector<double> WttTransform::forward(std::span<const double> x) const {
    return flatten_wtt(wtt_forward(x, bank_));
}

std::vector<double> WttTransform::inverse(std::span<const double> coeffs) const {
    return wtt_inverse(unflatten_wtt(coeffs, bank_), bank_);
}

std::vector<double> contrast(std::span<const double> x, const LinearTransform& w, double tau) {
    const std::vector<double> coeffs = w.forward(x);
    const std::vector<double> trend = w.inverse(threshold(coeffs, {ThresholdKind::Soft, tau}));
    if (trend.size() != x.size()) throw InvalidInput("contrast: transform does not round-trip the signal length");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - trend[i];
    return out;
}

std::vector<double> extract_features(std::span<const double> x, const LinearTransform* w, const FeatureSpec& spec) {
    if (w == nullptr) {
        if (spec.map != FeatureMap::None)
            throw InvalidConfig("threshold, sign and contrast need a decomposition");
        return {x.begin(), x.end()};
    }
    switch (spec.map) {
        case FeatureMap::None:
            return w->forward(x);
        case FeatureMap::Threshold:
            return threshold(w->forward(x), {spec.kind, spec.tau});
        case FeatureMap::Sign:
            return sign_quantize(w->forward(x), spec.tau);
        case FeatureMap::Contrast:
            return contrast(x, *w, spec.tau);
    }
    throw InvalidConfig("unknown feature map");
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidInput("quantile: empty input");
    if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("quantile: q must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

}  // namespace wavefeat
