// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wavefeat/numerics.hpp"

namespace wavefeat {

using numerics::Matrix;

/// Adaptive orthogonal filter bank for signals of length 2^d.
///
/// The signal is viewed as a d-way 2 x 2 x ... x 2 tensor (first index
/// fastest). Level k holds a square orthogonal filter U_k of size
/// r_{k-1} * 2 with r_0 = 1; after applying U_k^T to the level-k unfolding the
/// first r_k rows are carried on to level k + 1 and the rest are emitted as
/// detail coefficients.
struct WttFilterBank {
    std::vector<Matrix> filters;        // U_1 .. U_{d-1}
    std::vector<std::size_t> ranks;     // r_1 .. r_{d-1}
    std::vector<std::size_t> mode_sizes;  // n_1 .. n_d, all 2
    std::size_t signal_length = 0;      // 2^d

    std::size_t depth() const { return mode_sizes.size(); }
    /// Content fingerprint used to match coefficients to the producing bank.
    std::uint64_t id() const;
    void validate() const;
};

struct WttCoeffs {
    std::vector<std::vector<double>> details;  // level 1 .. d-1
    std::vector<double> core;
    std::uint64_t bank_id = 0;

    std::size_t coefficient_count() const;
};

/// Per-level rank actually used: r_k = min(rank, r_{k-1} * n_k, prod_{i>k} n_i).
std::vector<std::size_t> wtt_effective_ranks(std::span<const std::size_t> mode_sizes, std::size_t rank);

/// Filters adapted to one signal (length must be a power of two, >= 4).
WttFilterBank train_filters(std::span<const double> x, std::size_t rank);

/// Joint filters for a group of equally long signals (rows of `samples`).
/// The group is stacked as an extra last tensor mode; the filter computed for
/// that mode is dropped, so the bank applies to single signals.
WttFilterBank train_group_filters(const Matrix& samples, std::size_t rank);

WttCoeffs wtt_forward(std::span<const double> x, const WttFilterBank& bank);
std::vector<double> wtt_inverse(const WttCoeffs& c, const WttFilterBank& bank);

/// [details level 1 .. d-1, core]
std::vector<double> flatten_wtt(const WttCoeffs& c);
WttCoeffs unflatten_wtt(std::span<const double> v, const WttFilterBank& bank);

/// Block sizes of wtt_forward output for a bank: one entry per level, then core.
std::vector<std::size_t> wtt_block_sizes(const WttFilterBank& bank);

}  // namespace wavefeat
