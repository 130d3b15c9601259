// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wavefeat/dwt.hpp"
#include "wavefeat/wtt.hpp"

namespace wavefeat {

enum class ThresholdKind { Hard, Soft };

struct ThresholdRule {
    ThresholdKind kind = ThresholdKind::Hard;
    double tau = 0.0;
};

/// hard: c * [|c| > tau];  soft: sign(c) * max(|c| - tau, 0)
std::vector<double> threshold(std::span<const double> v, const ThresholdRule& rule);

/// sign of the hard-thresholded entries, with sign(0) = 0
std::vector<double> sign_quantize(std::span<const double> v, double tau);

/// Linear analysis operator with an exact left inverse.
class LinearTransform {
public:
    virtual ~LinearTransform() = default;
    virtual std::vector<double> forward(std::span<const double> x) const = 0;
    virtual std::vector<double> inverse(std::span<const double> coeffs) const = 0;
    virtual std::size_t input_length() const = 0;
    /// True when forward is a square orthogonal map (inverse == adjoint).
    virtual bool orthogonal() const = 0;
};

/// Multilevel DWT flattened as [approx, details coarsest..finest].
class DwtTransform final : public LinearTransform {
public:
    DwtTransform(WaveletSpec wavelet, PaddingMode mode, std::size_t level, std::size_t input_length);

    std::vector<double> forward(std::span<const double> x) const override;
    std::vector<double> inverse(std::span<const double> coeffs) const override;
    std::size_t input_length() const override { return length_; }
    bool orthogonal() const override;
    std::size_t level() const { return layout_.levels(); }

private:
    DwtCoeffs layout_;
    std::size_t length_;
};

/// WTT analysis with a fixed, already trained bank.
class WttTransform final : public LinearTransform {
public:
    explicit WttTransform(WttFilterBank bank);

    std::vector<double> forward(std::span<const double> x) const override;
    std::vector<double> inverse(std::span<const double> coeffs) const override;
    std::size_t input_length() const override { return bank_.signal_length; }
    bool orthogonal() const override { return true; }
    const WttFilterBank& bank() const { return bank_; }

private:
    WttFilterBank bank_;
};

/// x - W^-1[soft_tau(W x)]
std::vector<double> contrast(std::span<const double> x, const LinearTransform& w, double tau);

enum class FeatureMap { None, Threshold, Sign, Contrast };

struct FeatureSpec {
    FeatureMap map = FeatureMap::None;
    ThresholdKind kind = ThresholdKind::Hard;  // only read for Threshold
    double tau = 0.0;
};

/// One signal through decomposition and non-linearity.
///   no decomposition, None   -> x
///   W, None                  -> W x
///   W, Threshold             -> theta_tau(W x)
///   W, Sign                  -> sign(theta_hard_tau(W x))
///   W, Contrast              -> contrasted signal (signal domain)
/// Threshold, Sign and Contrast without a decomposition throw InvalidConfig.
std::vector<double> extract_features(std::span<const double> x, const LinearTransform* w, const FeatureSpec& spec);

/// Linearly interpolated empirical quantile, q in [0, 1].
double quantile(std::vector<double> values, double q);

}  // namespace wavefeat
