// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "wavefeat/error.hpp"
#include "wavefeat/numerics.hpp"
#include "wavefeat/wtt.hpp"

using namespace wavefeat;
using test_util::max_abs_diff;
using test_util::norm2;
using test_util::random_signal;

namespace {

double max_filter_diff(const WttFilterBank& a, const WttFilterBank& b) {
    if (a.filters.size() != b.filters.size()) return 1e300;
    double m = 0;
    for (std::size_t k = 0; k < a.filters.size(); ++k) {
        if (a.filters[k].rows() != b.filters[k].rows()) return 1e300;
        m = std::max(m, (a.filters[k] - b.filters[k]).cwiseAbs().maxCoeff());
    }
    return m;
}

}  // namespace

TEST(WttTrain, ConstantSignalRankOne) {
    const std::vector<double> x(8, 1.5);
    const auto bank = train_filters(x, 1);
    ASSERT_EQ(bank.filters.size(), 2u);
    EXPECT_EQ(bank.ranks, (std::vector<std::size_t>{1, 1}));
    for (const auto& u : bank.filters) {
        EXPECT_NEAR(u(0, 0), 1 / std::sqrt(2.0), 1e-12);
        EXPECT_NEAR(u(1, 0), 1 / std::sqrt(2.0), 1e-12);
    }
    const auto c = wtt_forward(x, bank);
    for (const auto& d : c.details)
        for (double v : d) EXPECT_NEAR(v, 0.0, 1e-12);
    EXPECT_LE(max_abs_diff(c.core, {3.0, 3.0}), 1e-12);
}

TEST(WttTrain, RankBookkeeping) {
    const auto bank = train_filters(random_signal(16, 11), 2);
    EXPECT_EQ(bank.ranks, (std::vector<std::size_t>{2, 2, 2}));
    ASSERT_EQ(bank.filters.size(), 3u);
    EXPECT_EQ(bank.filters[0].rows(), 2);
    EXPECT_EQ(bank.filters[1].rows(), 4);
    EXPECT_EQ(bank.filters[2].rows(), 4);
    EXPECT_EQ(bank.signal_length, 16u);
    EXPECT_EQ(bank.depth(), 4u);
}

TEST(WttTrain, EffectiveRanksClip) {
    const std::vector<std::size_t> modes(5, 2);
    EXPECT_EQ(wtt_effective_ranks(modes, 1), (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_EQ(wtt_effective_ranks(modes, 3), (std::vector<std::size_t>{2, 3, 3, 2}));
    EXPECT_EQ(wtt_effective_ranks(modes, 100), (std::vector<std::size_t>{2, 4, 4, 2}));
}

TEST(WttTrain, SaturatedRankIsFullChangeOfBasis) {
    const auto x = random_signal(32, 3);
    const auto bank = train_filters(x, 16);
    std::size_t total = 0;
    for (auto s : wtt_block_sizes(bank)) total += s;
    EXPECT_EQ(total, 32u);
    const auto y = random_signal(32, 4);
    EXPECT_NEAR(norm2(flatten_wtt(wtt_forward(y, bank))), norm2(y), 1e-10);
}

TEST(WttTrain, RejectsBadLength) {
    EXPECT_THROW(train_filters(random_signal(12, 1), 2), InvalidInput);
    EXPECT_THROW(train_filters(random_signal(2, 1), 1), InvalidInput);
    EXPECT_THROW(train_filters(random_signal(16, 1), 0), InvalidInput);
}

TEST(WttForward, RoundTripAndIsometryAllRanks) {
    for (std::size_t rank = 1; rank <= 6; ++rank) {
        const auto bank = train_filters(random_signal(256, 100 + rank), rank);
        for (const auto& u : bank.filters) EXPECT_LE(numerics::orthogonality_residual(u), 1e-10);
        for (int s = 0; s < 100; ++s) {
            const auto x = random_signal(256, 1000 * rank + s);
            const auto c = wtt_forward(x, bank);
            EXPECT_EQ(c.bank_id, bank.id());
            EXPECT_EQ(c.coefficient_count(), 256u);
            EXPECT_NEAR(norm2(flatten_wtt(c)), norm2(x), 1e-10);
            EXPECT_LE(max_abs_diff(wtt_inverse(c, bank), x), 1e-10);
        }
    }
}

TEST(WttForward, LengthMismatch) {
    const auto bank = train_filters(random_signal(64, 1), 2);
    EXPECT_THROW(wtt_forward(random_signal(32, 1), bank), InvalidInput);
    EXPECT_THROW(wtt_forward(random_signal(128, 1), bank), InvalidInput);
}

TEST(WttInverse, ZeroAndLinearity) {
    const auto bank = train_filters(random_signal(64, 8), 3);
    const auto zero = unflatten_wtt(std::vector<double>(64, 0.0), bank);
    for (double v : wtt_inverse(zero, bank)) EXPECT_EQ(v, 0.0);

    const auto a = random_signal(64, 1), b = random_signal(64, 2);
    std::vector<double> mix(64);
    for (int i = 0; i < 64; ++i) mix[i] = 3 * a[i] - 2 * b[i];
    const auto ia = wtt_inverse(unflatten_wtt(a, bank), bank);
    const auto ib = wtt_inverse(unflatten_wtt(b, bank), bank);
    const auto im = wtt_inverse(unflatten_wtt(mix, bank), bank);
    for (int i = 0; i < 64; ++i) EXPECT_NEAR(im[i], 3 * ia[i] - 2 * ib[i], 1e-10);
}

TEST(WttInverse, ForeignBankRejected) {
    const auto bank = train_filters(random_signal(64, 8), 3);
    const auto other = train_filters(random_signal(64, 9), 3);
    const auto c = wtt_forward(random_signal(64, 1), bank);
    EXPECT_THROW(wtt_inverse(c, other), InvalidInput);
}

TEST(WttFlatten, Layout) {
    const auto bank = train_filters(random_signal(128, 5), 4);
    const auto c = wtt_forward(random_signal(128, 6), bank);
    const auto v = flatten_wtt(c);
    EXPECT_EQ(v.size(), 128u);
    const auto sizes = wtt_block_sizes(bank);
    ASSERT_EQ(sizes.size(), c.details.size() + 1);
    std::size_t off = 0;
    for (std::size_t k = 0; k < c.details.size(); ++k) {
        EXPECT_EQ(sizes[k], c.details[k].size());
        for (std::size_t i = 0; i < c.details[k].size(); ++i) EXPECT_EQ(v[off + i], c.details[k][i]);
        off += sizes[k];
    }
    EXPECT_EQ(sizes.back(), c.core.size());
    EXPECT_EQ(flatten_wtt(unflatten_wtt(v, bank)), v);
    EXPECT_EQ(flatten_wtt(wtt_forward(random_signal(128, 6), bank)), v);
}

TEST(WttAdaptivity, LevelOneDetailIsMinimal) {
    const auto x = random_signal(64, 21);
    const auto bank = train_filters(x, 1);
    const double best = norm2(wtt_forward(x, bank).details.at(0));
    // level-1 unfolding is 2 x 32 with the first tensor index fastest
    for (int t = 0; t < 360; ++t) {
        const double a = t * std::numbers::pi / 180;
        const double c = std::cos(a), s = std::sin(a);
        double d = 0;
        for (int j = 0; j < 32; ++j) {
            const double v = -s * x[2 * j] + c * x[2 * j + 1];  // second column of a rotation, transposed
            d += v * v;
        }
        EXPECT_GE(std::sqrt(d), best - 1e-12);
    }
}

TEST(WttGroup, IdenticalSignalsMatchSingleBank) {
    const auto x = random_signal(32, 7);
    Matrix stack(5, 32);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 32; ++j) stack(i, j) = x[j];
    // Above rank 2 the group axis relaxes the last clip, so the layouts differ.
    // Null-space columns are arbitrary; compare what the banks do to x instead.
    for (std::size_t rank : {1u, 2u}) {
        const auto g = train_group_filters(stack, rank);
        const auto s = train_filters(x, rank);
        EXPECT_EQ(g.ranks, s.ranks);
        EXPECT_LE(max_abs_diff(flatten_wtt(wtt_forward(x, g)), flatten_wtt(wtt_forward(x, s))), 1e-10) << rank;
    }
}

TEST(WttGroup, SingleSampleEqualsTrainFilters) {
    const auto x = random_signal(64, 17);
    Matrix one(1, 64);
    for (int j = 0; j < 64; ++j) one(0, j) = x[j];
    for (std::size_t rank : {1u, 4u}) {
        const auto g = train_group_filters(one, rank);
        const auto s = train_filters(x, rank);
        EXPECT_EQ(g.ranks, s.ranks);
        EXPECT_LE(max_filter_diff(g, s), 1e-12);
    }
}

TEST(WttGroup, HeldOutApplicationAndShapeContract) {
    const Matrix train = test_util::random_matrix(6, 64, 2);
    const auto bank = train_group_filters(train, 3);
    EXPECT_EQ(bank.signal_length, 64u);
    const auto held = random_signal(64, 77);
    EXPECT_LE(max_abs_diff(wtt_inverse(wtt_forward(held, bank), bank), held), 1e-10);
    EXPECT_THROW(wtt_forward(random_signal(32, 1), bank), InvalidInput);
    EXPECT_THROW(wtt_forward(random_signal(128, 1), bank), InvalidInput);
    EXPECT_THROW(train_group_filters(test_util::random_matrix(3, 48, 2), 2), InvalidInput);
}

TEST(WttBank, ValidateRejectsBrokenBank) {
    auto bank = train_filters(random_signal(16, 1), 2);
    EXPECT_NO_THROW(bank.validate());
    bank.filters[1](0, 0) += 0.1;
    EXPECT_THROW(bank.validate(), InvalidInput);
}
