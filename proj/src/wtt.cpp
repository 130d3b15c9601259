// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/wtt.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <string>

#include "wavefeat/error.hpp"
#include "wavefeat/preprocess.hpp"

namespace wavefeat {

namespace {

std::size_t log2_exact(std::size_t n) {
    std::size_t d = 0;
    while ((std::size_t{1} << d) < n) ++d;
    return d;
}

// Runs the unfolding / SVD / cut recursion over all but the last mode and
// returns one filter per level.
struct TrainResult {
    std::vector<Matrix> filters;
    std::vector<std::size_t> ranks;
};

TrainResult run_tt_recursion(const double* data, std::size_t total, std::span<const std::size_t> modes, std::size_t rank) {
    const std::vector<std::size_t> ranks = wtt_effective_ranks(modes, rank);
    TrainResult out;
    std::size_t prev_rank = 1;
    std::size_t cols = total / modes[0];
    Matrix block = Eigen::Map<const Matrix>(data, static_cast<Eigen::Index>(modes[0]), static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k + 1 < modes.size(); ++k) {
        const numerics::LeftSvd f = numerics::left_svd(block);
        const std::size_t r = ranks[k];
        Matrix kept = (f.u.transpose() * block).topRows(static_cast<Eigen::Index>(r));
        out.filters.push_back(f.u);
        out.ranks.push_back(r);
        prev_rank = r;
        const std::size_t next_rows = prev_rank * modes[k + 1];
        cols /= modes[k + 1];
        // column-major reshape of the kept rows
        block = Eigen::Map<const Matrix>(kept.data(), static_cast<Eigen::Index>(next_rows), static_cast<Eigen::Index>(cols));
    }
    return out;
}

}  // namespace

std::uint64_t WttFilterBank::id() const {
    // FNV-1a over shape and filter bits
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* p, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
    };
    mix(&signal_length, sizeof signal_length);
    for (std::size_t r : ranks) mix(&r, sizeof r);
    for (const Matrix& u : filters) mix(u.data(), sizeof(double) * static_cast<std::size_t>(u.size()));
    return h;
}

void WttFilterBank::validate() const {
    const std::size_t d = depth();
    if (d < 2 || signal_length != (std::size_t{1} << d)) throw InvalidInput("wtt bank: bad signal length / depth");
    if (filters.size() != d - 1 || ranks.size() != d - 1) throw InvalidInput("wtt bank: need d - 1 filters and ranks");
    std::size_t prev = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (mode_sizes[k] != 2) throw InvalidInput("wtt bank: mode sizes must be 2");
        const auto n = static_cast<Eigen::Index>(prev * mode_sizes[k]);
        if (filters[k].rows() != n || filters[k].cols() != n) throw InvalidInput("wtt bank: filter size mismatch");
        if (ranks[k] < 1 || ranks[k] > prev * mode_sizes[k]) throw InvalidInput("wtt bank: rank out of range");
        if (numerics::orthogonality_residual(filters[k]) > 1e-8) throw InvalidInput("wtt bank: filter not orthogonal");
        prev = ranks[k];
    }
}

std::size_t WttCoeffs::coefficient_count() const {
    std::size_t n = core.size();
    for (const auto& d : details) n += d.size();
    return n;
}

std::vector<std::size_t> wtt_effective_ranks(std::span<const std::size_t> mode_sizes, std::size_t rank) {
    std::vector<std::size_t> ranks;
    std::size_t prev = 1;
    for (std::size_t k = 0; k + 1 < mode_sizes.size(); ++k) {
        std::size_t tail = 1;
        for (std::size_t i = k + 1; i < mode_sizes.size(); ++i) tail *= mode_sizes[i];
        const std::size_t r = std::min({rank, prev * mode_sizes[k], tail});
        ranks.push_back(r);
        prev = r;
    }
    return ranks;
}

WttFilterBank train_filters(std::span<const double> x, std::size_t rank) {
    if (rank < 1) throw InvalidInput("train_filters: rank must be >= 1");
    if (x.size() < 4 || !is_power_of_two(x.size()))
        throw InvalidInput("train_filters: signal length must be a power of two >= 4 (resample first)");
    const std::size_t d = log2_exact(x.size());
    WttFilterBank bank;
    bank.mode_sizes.assign(d, 2);
    bank.signal_length = x.size();
    TrainResult t = run_tt_recursion(x.data(), x.size(), bank.mode_sizes, rank);
    bank.filters = std::move(t.filters);
    bank.ranks = std::move(t.ranks);
    return bank;
}

WttFilterBank train_group_filters(const Matrix& samples, std::size_t rank) {
    if (rank < 1) throw InvalidInput("train_group_filters: rank must be >= 1");
    if (samples.rows() < 1) throw InvalidInput("train_group_filters: no samples");
    const auto n = static_cast<std::size_t>(samples.cols());
    if (n < 4 || !is_power_of_two(n))
        throw InvalidInput("train_group_filters: signal length must be a power of two >= 4 (resample first)");
    const std::size_t d = log2_exact(n);
    const auto m = static_cast<std::size_t>(samples.rows());
    // Each signal contiguous, group index slowest: the column-major n x m matrix.
    const Matrix stacked = samples.transpose();
    std::vector<std::size_t> modes(d, 2);
    modes.push_back(m);
    TrainResult t = run_tt_recursion(stacked.data(), n * m, modes, rank);
    // t holds filters for modes 1..d; the last one mixes the group axis.
    WttFilterBank bank;
    bank.mode_sizes.assign(d, 2);
    bank.signal_length = n;
    bank.filters.assign(t.filters.begin(), t.filters.begin() + static_cast<std::ptrdiff_t>(d - 1));
    bank.ranks.assign(t.ranks.begin(), t.ranks.begin() + static_cast<std::ptrdiff_t>(d - 1));
    return bank;
}

std::vector<std::size_t> wtt_block_sizes(const WttFilterBank& bank) {
    std::vector<std::size_t> sizes;
    std::size_t prev = 1;
    std::size_t cols = bank.signal_length / 2;
    for (std::size_t k = 0; k < bank.filters.size(); ++k) {
        sizes.push_back((prev * 2 - bank.ranks[k]) * cols);
        prev = bank.ranks[k];
        cols /= 2;
    }
    sizes.push_back(prev * 2);
    return sizes;
}

WttCoeffs wtt_forward(std::span<const double> x, const WttFilterBank& bank) {
    bank.validate();
    if (x.size() != bank.signal_length)
        throw InvalidInput("wtt_forward: signal length " + std::to_string(x.size()) + " does not match bank length " +
                           std::to_string(bank.signal_length));
    WttCoeffs c;
    c.bank_id = bank.id();
    std::size_t cols = x.size() / 2;
    Matrix block = Eigen::Map<const Matrix>(x.data(), 2, static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k < bank.filters.size(); ++k) {
        const Matrix rotated = bank.filters[k].transpose() * block;
        const auto r = static_cast<Eigen::Index>(bank.ranks[k]);
        const Matrix detail = rotated.bottomRows(rotated.rows() - r);
        c.details.emplace_back(detail.data(), detail.data() + detail.size());
        const Matrix kept = rotated.topRows(r);
        if (k + 1 == bank.filters.size()) {
            c.core.assign(kept.data(), kept.data() + kept.size());
        } else {
            cols /= 2;
            block = Eigen::Map<const Matrix>(kept.data(), r * 2, static_cast<Eigen::Index>(cols));
        }
    }
    return c;
}

std::vector<double> wtt_inverse(const WttCoeffs& c, const WttFilterBank& bank) {
    bank.validate();
    const std::vector<std::size_t> sizes = wtt_block_sizes(bank);
    if (c.details.size() != bank.filters.size() || c.core.size() != sizes.back())
        throw InvalidInput("wtt_inverse: coefficient layout does not match the bank");
    if (c.bank_id != 0 && c.bank_id != bank.id()) throw InvalidInput("wtt_inverse: coefficients come from another bank");
    for (std::size_t k = 0; k < c.details.size(); ++k) {
        if (c.details[k].size() != sizes[k]) throw InvalidInput("wtt_inverse: detail block size mismatch");
    }
    const std::size_t levels = bank.filters.size();
    // kept rows entering the deepest level: r_{d-1} x 2
    Matrix kept = Eigen::Map<const Matrix>(c.core.data(), static_cast<Eigen::Index>(bank.ranks.back()), 2);
    for (std::size_t k = levels; k-- > 0;) {
        const Matrix& u = bank.filters[k];
        const Eigen::Index cols = kept.cols();
        const Eigen::Index r = kept.rows();
        Matrix stacked(u.rows(), cols);
        stacked.topRows(r) = kept;
        stacked.bottomRows(u.rows() - r) =
            Eigen::Map<const Matrix>(c.details[k].data(), u.rows() - r, cols);
        const Matrix restored = u * stacked;
        // undo the column-major reshape from (r_{k-1} * 2) x cols to r_{k-1} x (2 * cols)
        const Eigen::Index prev_rank = u.rows() / 2;
        kept = Eigen::Map<const Matrix>(restored.data(), prev_rank, cols * 2);
    }
    return std::vector<double>(kept.data(), kept.data() + kept.size());
}

std::vector<double> flatten_wtt(const WttCoeffs& c) {
    std::vector<double> v;
    v.reserve(c.coefficient_count());
    for (const auto& d : c.details) v.insert(v.end(), d.begin(), d.end());
    v.insert(v.end(), c.core.begin(), c.core.end());
    return v;
}

WttCoeffs unflatten_wtt(std::span<const double> v, const WttFilterBank& bank) {
    const std::vector<std::size_t> sizes = wtt_block_sizes(bank);
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    if (v.size() != total) throw InvalidInput("unflatten_wtt: length does not match the bank");
    WttCoeffs c;
    c.bank_id = bank.id();
    auto it = v.begin();
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        c.details.emplace_back(it, it + static_cast<std::ptrdiff_t>(sizes[k]));
        it += static_cast<std::ptrdiff_t>(sizes[k]);
    }
    c.core.assign(it, v.end());
    return c;
}

}  // namespace wavefeat
