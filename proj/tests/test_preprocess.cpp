// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wavefeat/error.hpp"
#include "wavefeat/preprocess.hpp"

using namespace wavefeat;

namespace {

Spectrum ramp_spectrum(std::size_t n, double start, double step, double (*f)(double)) {
    Spectrum s;
    for (std::size_t i = 0; i < n; ++i) {
        const double nu = start + step * static_cast<double>(i);
        s.wavenumbers.push_back(nu);
        s.intensities.push_back(f(nu));
    }
    return s;
}

}  // namespace

TEST(Derivative, ConstantGivesZero) {
    for (int order : {1, 2}) {
        const auto d = derivative(ramp_spectrum(12, 0, 1, [](double) { return 4.5; }), order);
        for (double v : d.intensities) EXPECT_NEAR(v, 0.0, 1e-12);
    }
}

TEST(Derivative, LinearRampGivesSlope) {
    const auto d = derivative(ramp_spectrum(20, 100, 0.5, [](double nu) { return 3 * nu; }), 1);
    ASSERT_EQ(d.size(), 20u);
    for (double v : d.intensities) EXPECT_NEAR(v, 3.0, 1e-10);
}

TEST(Derivative, DescendingGridUsesSignedSpacing) {
    // 2000 -> 400 style grids: d/dnu of 3 nu is still 3
    const auto d = derivative(ramp_spectrum(15, 2000, -2, [](double nu) { return 3 * nu; }), 1);
    for (double v : d.intensities) EXPECT_NEAR(v, 3.0, 1e-9);
}

TEST(Derivative, QuadraticSecondDerivative) {
    const auto d = derivative(ramp_spectrum(16, 0, 1, [](double nu) { return nu * nu; }), 2);
    for (std::size_t i = 1; i + 1 < d.size(); ++i) EXPECT_NEAR(d.intensities[i], 2.0, 1e-10);
}

TEST(Derivative, QuadraticFirstDerivativeExactWithOneSidedEnds) {
    // second-order stencils are exact on quadratics, including endpoints
    const auto d = derivative(ramp_spectrum(10, 1, 0.25, [](double nu) { return nu * nu; }), 1);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(d.intensities[i], 2 * (1 + 0.25 * i), 1e-10);
}

TEST(Derivative, RejectsNonUniformGridAndShortInput) {
    Spectrum s = ramp_spectrum(8, 0, 1, [](double nu) { return nu; });
    s.wavenumbers[3] += 0.3;
    EXPECT_THROW(derivative(s, 1), InvalidInput);
    EXPECT_THROW(derivative(ramp_spectrum(4, 0, 1, [](double nu) { return nu; }), 1), InvalidInput);
}

TEST(StandardScale, FeatureAxisMeanZeroStdOne) {
    LabeledDataset d;
    d.wavenumbers = {1, 2, 3, 4};
    d.intensities.resize(5, 4);
    d.intensities << 1, 2, 5, 7, 2, 2, 1, 7, 3, 8, 1, 7, 4, 1, 0, 7, 9, 2, 3, 7;
    d.labels = {0, 0, 1, 1, 1};
    d.class_names = {"a", "b"};
    const auto out = standard_scale(d, {0, true, true, ScaleAxis::Feature, false});
    for (int j = 0; j < 3; ++j) {
        const auto col = out.intensities.col(j);
        const double mean = col.mean();
        EXPECT_NEAR(mean, 0.0, 1e-12);
        EXPECT_NEAR(std::sqrt((col.array() - mean).square().mean()), 1.0, 1e-12);
    }
    // constant column -> all zeros
    for (int i = 0; i < 5; ++i) EXPECT_EQ(out.intensities(i, 3), 0.0);
}

TEST(StandardScale, SampleAxisHandExample) {
    LabeledDataset d;
    d.wavenumbers = {1, 2, 3};
    d.intensities.resize(1, 3);
    d.intensities << 1, 2, 3;
    d.labels = {0};
    d.class_names = {"a"};
    const auto out = standard_scale(d, {0, true, true, ScaleAxis::Sample, false});
    const double s = std::sqrt(2.0 / 3.0);
    EXPECT_NEAR(out.intensities(0, 0), -1 / s, 1e-12);
    EXPECT_NEAR(out.intensities(0, 1), 0.0, 1e-12);
    EXPECT_NEAR(out.intensities(0, 2), 1 / s, 1e-12);
    EXPECT_NEAR(out.intensities(0, 2), 1.2247, 1e-4);
}

TEST(StandardScale, NoFlagsIsIdentity) {
    LabeledDataset d;
    d.wavenumbers = {1, 2, 3};
    d.intensities = Matrix::Random(4, 3);
    d.labels = {0, 0, 0, 0};
    d.class_names = {"a"};
    EXPECT_EQ(standard_scale(d, {}).intensities, d.intensities);
}

TEST(Scaler, HeldOutRowsUseFittedStatistics) {
    Matrix train(3, 2);
    train << 1, 10, 2, 20, 3, 30;
    const PreprocessConfig cfg{0, true, true, ScaleAxis::Feature, false};
    const Scaler sc = Scaler::fit(train, cfg);
    Matrix test(1, 2);
    test << 2, 40;
    const Matrix out = sc.apply(test);
    EXPECT_NEAR(out(0, 0), 0.0, 1e-12);
    EXPECT_NEAR(out(0, 1), 20.0 / std::sqrt(200.0 / 3.0), 1e-12);
}

TEST(Resample, PowerOfTwoUniformUnchanged) {
    const auto s = ramp_spectrum(1024, 400, 1.5, [](double nu) { return std::sin(nu); });
    const auto r = resample_pow2(s);
    EXPECT_EQ(r.wavenumbers, s.wavenumbers);
    EXPECT_EQ(r.intensities, s.intensities);
}

TEST(Resample, LinearStaysLinear) {
    for (std::size_t n : {5u, 37u, 1000u}) {
        const auto r = resample_pow2(ramp_spectrum(n, 10, -0.7, [](double nu) { return 2 * nu - 1; }));
        EXPECT_TRUE(is_power_of_two(r.size()));
        EXPECT_GE(r.size(), n);
        EXPECT_TRUE(is_uniform_grid(r.wavenumbers));
        for (std::size_t i = 0; i < r.size(); ++i) EXPECT_NEAR(r.intensities[i], 2 * r.wavenumbers[i] - 1, 1e-9);
    }
}

TEST(Resample, SineInterpolationError) {
    // 1000 samples, 32 samples per period
    const double step = 2 * std::numbers::pi / 32;
    const auto s = ramp_spectrum(1000, 0, step, [](double nu) { return std::sin(nu); });
    const auto r = resample_pow2(s);
    ASSERT_EQ(r.size(), 1024u);
    EXPECT_DOUBLE_EQ(r.wavenumbers.front(), s.wavenumbers.front());
    EXPECT_NEAR(r.wavenumbers.back(), s.wavenumbers.back(), 1e-9);
    double err = 0;
    for (std::size_t i = 0; i < r.size(); ++i) err = std::max(err, std::abs(r.intensities[i] - std::sin(r.wavenumbers[i])));
    EXPECT_LE(err, 1e-4);
}

TEST(Abs, Examples) {
    Spectrum s{{1, 2, 3, 4}, {-1, 2, -3, 0}};
    const auto a = take_abs(s);
    EXPECT_EQ(a.intensities, (std::vector<double>{1, 2, 3, 0}));
    EXPECT_EQ(take_abs(a).intensities, a.intensities);
}

TEST(SpectrumValidate, RejectsBadInput) {
    EXPECT_THROW((Spectrum{{1, 2, 3}, {1, 2, 3}}.validate()), InvalidInput);
    EXPECT_THROW((Spectrum{{1, 2, 2, 3}, {1, 2, 3, 4}}.validate()), InvalidInput);
    EXPECT_THROW((Spectrum{{1, 2, 3, 4}, {1, 2, 3}}.validate()), InvalidInput);
    EXPECT_THROW((Spectrum{{1, 2, 3, 4}, {1, NAN, 3, 4}}.validate()), InvalidInput);
    EXPECT_NO_THROW((Spectrum{{4, 3, 2, 1}, {1, 2, 3, 4}}.validate()));
}
