// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "test_util.hpp"
#include "wavefeat/dwt.hpp"
#include "wavefeat/error.hpp"

using namespace wavefeat;
using test_util::max_abs_diff;
using test_util::random_signal;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double energy(const DwtCoeffs& c) {
    double e = 0;
    for (double v : flatten(c)) e += v * v;
    return e;
}

}  // namespace

TEST(Registry, HaarAndErrors) {
    const auto& haar = lookup_wavelet(WaveletFamily::Daubechies, "1");
    ASSERT_EQ(haar.dec_lo.size(), 2u);
    EXPECT_NEAR(haar.dec_lo[0], kInvSqrt2, 1e-15);
    EXPECT_NEAR(haar.dec_lo[1], kInvSqrt2, 1e-15);
    EXPECT_EQ(lookup_wavelet("haar").name(), "db1");
    EXPECT_THROW(lookup_wavelet(WaveletFamily::Coiflet, "99"), UnsupportedWavelet);
    EXPECT_THROW(lookup_wavelet("db42"), UnsupportedWavelet);
}

TEST(Registry, SupportedSetIsComplete) {
    EXPECT_EQ(wavelet_registry().size(), 8u + 7u + 5u + 11u + 11u);
    for (const char* o : {"1.1", "1.3", "1.5", "2.2", "2.4", "2.6", "2.8", "3.1", "3.3", "3.5", "3.7"}) {
        EXPECT_NO_THROW(lookup_wavelet(WaveletFamily::Biorthogonal, o));
        EXPECT_NO_THROW(lookup_wavelet(WaveletFamily::ReverseBiorthogonal, o));
    }
}

TEST(Registry, OrthogonalAdmissibility) {
    for (const auto& w : wavelet_registry()) {
        EXPECT_GE(w.filter_length(), 2u);
        EXPECT_EQ(w.dec_hi.size(), w.filter_length());
        if (!w.orthogonal()) {
            // biorthogonal low-pass filters still have unit DC gain sqrt(2)
            EXPECT_NEAR(std::accumulate(w.dec_lo.begin(), w.dec_lo.end(), 0.0), std::sqrt(2.0), 1e-10) << w.name();
            continue;
        }
        double sum = 0, norm = 0, dot = 0;
        for (std::size_t i = 0; i < w.filter_length(); ++i) {
            sum += w.dec_lo[i];
            norm += w.dec_lo[i] * w.dec_lo[i];
            dot += w.dec_lo[i] * w.dec_hi[i];
        }
        EXPECT_NEAR(sum, std::sqrt(2.0), 1e-10) << w.name();
        EXPECT_NEAR(norm, 1.0, 1e-10) << w.name();
        EXPECT_NEAR(dot, 0.0, 1e-10) << w.name();
        // double-shift orthogonality
        for (std::size_t s = 2; s < w.filter_length(); s += 2) {
            double acc = 0;
            for (std::size_t i = s; i < w.filter_length(); ++i) acc += w.dec_lo[i] * w.dec_lo[i - s];
            EXPECT_NEAR(acc, 0.0, 1e-10) << w.name() << " shift " << s;
        }
    }
}

TEST(Pad, ModeExamples) {
    const std::vector<double> x{1, 2, 3};
    EXPECT_EQ(pad(x, PaddingMode::Zero, 2, 2), (std::vector<double>{0, 0, 1, 2, 3, 0, 0}));
    EXPECT_EQ(pad(x, PaddingMode::Constant, 2, 2), (std::vector<double>{1, 1, 1, 2, 3, 3, 3}));
    EXPECT_EQ(pad(x, PaddingMode::Symmetric, 2, 2), (std::vector<double>{2, 1, 1, 2, 3, 3, 2}));
    EXPECT_EQ(pad(x, PaddingMode::Reflect, 2, 2), (std::vector<double>{3, 2, 1, 2, 3, 2, 1}));
    EXPECT_EQ(pad(x, PaddingMode::Periodic, 2, 2), (std::vector<double>{2, 3, 1, 2, 3, 1, 2}));
    EXPECT_EQ(pad(x, PaddingMode::Smooth, 2, 2), (std::vector<double>{-1, 0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(pad(x, PaddingMode::Periodization, 1, 1), (std::vector<double>{3, 1, 2, 3, 3, 1}));
    EXPECT_THROW(pad(x, PaddingMode::Periodic, 4, 0), InvalidInput);
    EXPECT_THROW(pad(x, PaddingMode::Symmetric, 0, 4), InvalidInput);
}

TEST(DwtSingle, HaarExamples) {
    const auto& haar = lookup_wavelet("db1");
    const std::vector<double> c{2, 2, 2, 2};
    const auto pc = dwt_single(c, haar, PaddingMode::Periodization);
    EXPECT_LE(max_abs_diff(pc.approx, {2 * std::sqrt(2.0), 2 * std::sqrt(2.0)}), 1e-14);
    EXPECT_LE(max_abs_diff(pc.detail, {0, 0}), 1e-14);

    const std::vector<double> x{1, 2, 3, 4};
    const auto p = dwt_single(x, haar, PaddingMode::Periodization);
    EXPECT_LE(max_abs_diff(p.approx, {3 * kInvSqrt2, 7 * kInvSqrt2}), 1e-14);
    ASSERT_EQ(p.detail.size(), 2u);
    for (double d : p.detail) EXPECT_NEAR(std::abs(d), kInvSqrt2, 1e-14);

    const auto r = idwt_single(p.approx, p.detail, haar, PaddingMode::Periodization, 4);
    EXPECT_LE(max_abs_diff(r, x), 1e-14);
}

TEST(DwtSingle, HaarEnergy) {
    const auto& haar = lookup_wavelet("db1");
    for (std::size_t n : {2u, 7u, 64u, 1001u}) {
        auto x = random_signal(n, n);
        if (n % 2) x.push_back(x.back());  // periodization of odd input repeats the edge
        const auto p = dwt_single(x, haar, PaddingMode::Periodization);
        const double e = std::pow(test_util::norm2(p.approx), 2) + std::pow(test_util::norm2(p.detail), 2);
        EXPECT_NEAR(e, std::pow(test_util::norm2(x), 2), 1e-10 * std::max(1.0, e));
    }
}

TEST(DwtSingle, OutputLengths) {
    for (const auto& w : wavelet_registry()) {
        for (PaddingMode m : kAllPaddingModes) {
            for (std::size_t n : {w.filter_length(), w.filter_length() + 1, std::size_t{101}}) {
                const auto x = random_signal(n, 3);
                const auto p = dwt_single(x, w, m);
                const std::size_t expect = m == PaddingMode::Periodization ? (n + 1) / 2 : (n + w.filter_length() - 1) / 2;
                EXPECT_EQ(p.approx.size(), expect);
                EXPECT_EQ(p.detail.size(), expect);
                EXPECT_EQ(dwt_coeff_length(n, w.filter_length(), m), expect);
            }
        }
    }
    EXPECT_THROW(dwt_single(std::vector<double>{1, 2, 3}, lookup_wavelet("db4"), PaddingMode::Zero), InvalidInput);
}

TEST(Wavedec, LevelOneMatchesSingleStep) {
    const auto x = random_signal(50, 1);
    for (PaddingMode m : kAllPaddingModes) {
        const auto c = wavedec(x, lookup_wavelet("sym3"), m, 1);
        const auto p = dwt_single(x, lookup_wavelet("sym3"), m);
        EXPECT_EQ(c.approx, p.approx);
        ASSERT_EQ(c.details.size(), 1u);
        EXPECT_EQ(c.details[0], p.detail);
    }
}

TEST(Wavedec, MaxLevel) {
    EXPECT_EQ(dwt_max_level(1024, 2), 10u);
    EXPECT_EQ(dwt_max_level(64, 8), 3u);
    EXPECT_EQ(dwt_max_level(5, 8), 0u);
    const auto c = wavedec(random_signal(1024, 2), lookup_wavelet("haar"), PaddingMode::Periodization, 0);
    EXPECT_EQ(c.levels(), 10u);
    EXPECT_THROW(wavedec(random_signal(1024, 2), lookup_wavelet("haar"), PaddingMode::Symmetric, 11), InvalidInput);
}

TEST(Wavedec, Db4SymmetricRoundTrip) {
    const auto x = random_signal(64, 12345);
    const auto c = wavedec(x, lookup_wavelet(WaveletFamily::Daubechies, "4"), PaddingMode::Symmetric, 3);
    EXPECT_LE(max_abs_diff(waverec(c), x), 1e-10);
}

TEST(Waverec, ZeroCoefficientsGiveZero) {
    auto c = wavedec(random_signal(100, 4), lookup_wavelet("coif2"), PaddingMode::Smooth, 2);
    const auto zero = unflatten(std::vector<double>(c.coefficient_count(), 0.0), c);
    for (double v : waverec(zero)) EXPECT_EQ(v, 0.0);
}

TEST(Waverec, InconsistentLayoutRejected) {
    auto c = wavedec(random_signal(40, 4), lookup_wavelet("db2"), PaddingMode::Symmetric, 2);
    c.details[0].pop_back();
    EXPECT_THROW(waverec(c), InvalidInput);
}

TEST(Waverec, RoundTripSample) {
    // the full sweep lives in the acceptance binary; this is a cheap slice
    for (const auto& w : wavelet_registry()) {
        for (PaddingMode m : kAllPaddingModes) {
            const std::size_t n = 37 + w.filter_length();
            const auto x = random_signal(n, w.filter_length() * 7 + static_cast<int>(m));
            const std::size_t max = dwt_max_level(n, w.filter_length());
            for (std::size_t lvl = 1; lvl <= max; ++lvl) {
                EXPECT_LE(max_abs_diff(waverec(wavedec(x, w, m, lvl)), x), 1e-8)
                    << w.name() << " " << padding_name(m) << " level " << lvl;
            }
        }
    }
}

TEST(Flatten, LayoutAndInverse) {
    const std::vector<double> x{1, 2, 3, 4};
    const auto c = wavedec(x, lookup_wavelet("haar"), PaddingMode::Periodization, 1);
    const auto v = flatten(c);
    ASSERT_EQ(v.size(), 4u);
    EXPECT_NEAR(v[0], 3 * kInvSqrt2, 1e-14);
    EXPECT_NEAR(v[1], 7 * kInvSqrt2, 1e-14);

    const auto d = wavedec(random_signal(77, 5), lookup_wavelet("bior2.4"), PaddingMode::Reflect, 3);
    const auto f = flatten(d);
    std::size_t total = d.approx.size();
    for (const auto& b : d.details) total += b.size();
    EXPECT_EQ(f.size(), total);
    EXPECT_EQ(f.size(), d.coefficient_count());
    EXPECT_EQ(flatten(unflatten(f, d)), f);
    EXPECT_THROW(unflatten(std::vector<double>(f.size() + 1), d), InvalidInput);
}

TEST(Invariants, OrthogonalPeriodizationEnergyAndConstant) {
    const auto x = random_signal(256, 99);
    const std::vector<double> c(256, 1.7);
    for (const auto& w : wavelet_registry()) {
        if (!w.orthogonal()) continue;
        const auto cx = wavedec(x, w, PaddingMode::Periodization, 0);
        const double ex = std::pow(test_util::norm2(x), 2);
        EXPECT_NEAR(energy(cx), ex, 1e-9 * ex) << w.name();
        const auto cc = wavedec(c, w, PaddingMode::Periodization, 0);
        for (const auto& d : cc.details)
            for (double v : d) EXPECT_LE(std::abs(v), 1e-10) << w.name();
    }
}

TEST(Invariants, Linearity) {
    const auto x = random_signal(90, 1), y = random_signal(90, 2);
    std::vector<double> z(90);
    for (int i = 0; i < 90; ++i) z[i] = 2.5 * x[i] - 0.75 * y[i];
    for (PaddingMode m : kAllPaddingModes) {
        const auto& w = lookup_wavelet("rbio3.3");
        const auto fx = flatten(wavedec(x, w, m, 2)), fy = flatten(wavedec(y, w, m, 2)), fz = flatten(wavedec(z, w, m, 2));
        std::vector<double> comb(fx.size());
        for (std::size_t i = 0; i < fx.size(); ++i) comb[i] = 2.5 * fx[i] - 0.75 * fy[i];
        EXPECT_LE(max_abs_diff(comb, fz), 1e-10) << padding_name(m);
    }
}

TEST(Names, ParseRoundTrip) {
    for (PaddingMode m : kAllPaddingModes) EXPECT_EQ(parse_padding(padding_name(m)), m);
    for (auto f : {WaveletFamily::Daubechies, WaveletFamily::Symlet, WaveletFamily::Coiflet, WaveletFamily::Biorthogonal,
                   WaveletFamily::ReverseBiorthogonal})
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_padding("mirror"), InvalidInput);
}
