// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/dwt.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

using Index = std::int64_t;

Index positive_mod(Index a, Index m) {
    const Index r = a % m;
    return r < 0 ? r + m : r;
}

// Value of the extended signal at index i (any integer) for the padded modes.
double extended(std::span<const double> x, Index i, PaddingMode mode) {
    const Index n = static_cast<Index>(x.size());
    if (i >= 0 && i < n) return x[static_cast<std::size_t>(i)];
    switch (mode) {
        case PaddingMode::Zero:
            return 0.0;
        case PaddingMode::Constant:
            return i < 0 ? x.front() : x.back();
        case PaddingMode::Symmetric: {
            const Index r = positive_mod(i, 2 * n);
            return x[static_cast<std::size_t>(r < n ? r : 2 * n - 1 - r)];
        }
        case PaddingMode::Reflect: {
            if (n == 1) return x.front();
            const Index r = positive_mod(i, 2 * n - 2);
            return x[static_cast<std::size_t>(r < n ? r : 2 * n - 2 - r)];
        }
        case PaddingMode::Periodic:
            return x[static_cast<std::size_t>(positive_mod(i, n))];
        case PaddingMode::Smooth:
            if (n == 1) return x.front();
            if (i < 0) return x[0] + static_cast<double>(i) * (x[1] - x[0]);
            return x[n - 1] + static_cast<double>(i - n + 1) * (x[n - 1] - x[n - 2]);
        case PaddingMode::Periodization: {
            const Index np = n + (n % 2);
            const Index r = positive_mod(i, np);
            return x[static_cast<std::size_t>(r < n ? r : n - 1)];
        }
    }
    return 0.0;
}

void check_filters(const WaveletSpec& w) {
    const std::size_t L = w.filter_length();
    if (L < 2 || L % 2 != 0 || w.dec_hi.size() != L || w.rec_lo.size() != L || w.rec_hi.size() != L)
        throw InvalidInput("wavelet " + w.name() + ": filters must share one even length >= 2");
}

}  // namespace

std::vector<double> pad(std::span<const double> x, PaddingMode mode, std::size_t left, std::size_t right) {
    if (x.empty()) throw InvalidInput("pad: empty signal");
    const bool wraps = mode == PaddingMode::Periodic || mode == PaddingMode::Periodization ||
                       mode == PaddingMode::Symmetric || mode == PaddingMode::Reflect;
    if (wraps && (left > x.size() || right > x.size()))
        throw InvalidInput("pad: extension longer than the signal for mode " + std::string(padding_name(mode)));
    std::vector<double> out;
    Index n = static_cast<Index>(x.size());
    if (mode == PaddingMode::Periodization) n += n % 2;
    out.reserve(static_cast<std::size_t>(n) + left + right);
    for (Index i = -static_cast<Index>(left); i < n + static_cast<Index>(right); ++i) out.push_back(extended(x, i, mode));
    return out;
}

std::size_t dwt_coeff_length(std::size_t n, std::size_t filter_length, PaddingMode mode) {
    if (mode == PaddingMode::Periodization) return (n + 1) / 2;
    return (n + filter_length - 1) / 2;
}

std::size_t dwt_max_level(std::size_t n, std::size_t filter_length) {
    if (filter_length < 2 || n < filter_length - 1) return 0;
    std::size_t level = 0;
    // largest level with 2^level <= n / (L - 1)
    while ((std::size_t{2} << level) * (filter_length - 1) <= n) ++level;
    return level;
}

DwtPair dwt_single(std::span<const double> x, const WaveletSpec& w, PaddingMode mode) {
    check_filters(w);
    const std::size_t L = w.filter_length();
    if (x.size() < L) throw InvalidInput("dwt: signal shorter than the filter");
    const std::size_t K = dwt_coeff_length(x.size(), L, mode);
    DwtPair out{std::vector<double>(K, 0.0), std::vector<double>(K, 0.0)};
    // base offset: 2k + 1 for padded modes, 2k + L/2 for periodization
    const Index shift = mode == PaddingMode::Periodization ? static_cast<Index>(L / 2) : 1;
    for (std::size_t k = 0; k < K; ++k) {
        double lo = 0.0;
        double hi = 0.0;
        for (std::size_t j = 0; j < L; ++j) {
            const double v = extended(x, static_cast<Index>(2 * k) + shift - static_cast<Index>(j), mode);
            lo += w.dec_lo[j] * v;
            hi += w.dec_hi[j] * v;
        }
        out.approx[k] = lo;
        out.detail[k] = hi;
    }
    return out;
}

std::vector<double> idwt_single(std::span<const double> approx, std::span<const double> detail, const WaveletSpec& w,
                                PaddingMode mode, std::size_t out_length) {
    check_filters(w);
    if (approx.size() != detail.size()) throw InvalidInput("idwt: approximation and detail lengths differ");
    const std::size_t L = w.filter_length();
    if (dwt_coeff_length(out_length, L, mode) != approx.size())
        throw InvalidInput("idwt: coefficient length inconsistent with the requested output length");
    const std::size_t K = approx.size();
    std::vector<double> out(out_length, 0.0);
    if (mode == PaddingMode::Periodization) {
        const Index np = static_cast<Index>(2 * K);
        std::vector<double> full(static_cast<std::size_t>(np), 0.0);
        for (std::size_t k = 0; k < K; ++k) {
            for (std::size_t j = 0; j < L; ++j) {
                const Index idx = positive_mod(static_cast<Index>(2 * k + L / 2) - static_cast<Index>(j), np);
                full[static_cast<std::size_t>(idx)] += approx[k] * w.rec_lo[L - 1 - j] + detail[k] * w.rec_hi[L - 1 - j];
            }
        }
        std::copy_n(full.begin(), out_length, out.begin());
        return out;
    }
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j < L; ++j) {
            const Index idx = static_cast<Index>(2 * k + 1) - static_cast<Index>(j);
            if (idx < 0 || idx >= static_cast<Index>(out_length)) continue;
            out[static_cast<std::size_t>(idx)] += approx[k] * w.rec_lo[L - 1 - j] + detail[k] * w.rec_hi[L - 1 - j];
        }
    }
    return out;
}

std::size_t DwtCoeffs::coefficient_count() const {
    std::size_t total = approx.size();
    for (const auto& d : details) total += d.size();
    return total;
}

DwtCoeffs wavedec(std::span<const double> x, const WaveletSpec& w, PaddingMode mode, std::size_t level) {
    check_filters(w);
    const std::size_t max_level = dwt_max_level(x.size(), w.filter_length());
    if (level == 0) level = max_level;
    if (level < 1 || level > max_level)
        throw InvalidInput("wavedec: level " + std::to_string(level) + " outside [1, " + std::to_string(max_level) + "]");
    DwtCoeffs c;
    c.wavelet = w;
    c.mode = mode;
    c.original_length = x.size();
    std::vector<double> current(x.begin(), x.end());
    std::vector<std::vector<double>> finest_first;
    std::vector<std::size_t> lengths;
    for (std::size_t l = 0; l < level; ++l) {
        lengths.push_back(current.size());
        DwtPair step = dwt_single(current, w, mode);
        finest_first.push_back(std::move(step.detail));
        current = std::move(step.approx);
    }
    c.approx = std::move(current);
    c.details.assign(std::make_move_iterator(finest_first.rbegin()), std::make_move_iterator(finest_first.rend()));
    c.level_lengths.assign(lengths.rbegin(), lengths.rend());
    return c;
}

std::vector<double> waverec(const DwtCoeffs& c) {
    if (c.details.empty() || c.details.size() != c.level_lengths.size())
        throw InvalidInput("waverec: inconsistent level bookkeeping");
    if (c.level_lengths.back() != c.original_length) throw InvalidInput("waverec: inconsistent original length");
    std::vector<double> current = c.approx;
    for (std::size_t l = 0; l < c.details.size(); ++l) {
        current = idwt_single(current, c.details[l], c.wavelet, c.mode, c.level_lengths[l]);
    }
    return current;
}

std::vector<double> flatten(const DwtCoeffs& c) {
    std::vector<double> v;
    v.reserve(c.coefficient_count());
    v.insert(v.end(), c.approx.begin(), c.approx.end());
    for (const auto& d : c.details) v.insert(v.end(), d.begin(), d.end());
    return v;
}

DwtCoeffs unflatten(std::span<const double> v, const DwtCoeffs& layout) {
    if (v.size() != layout.coefficient_count()) throw InvalidInput("unflatten: length does not match layout");
    DwtCoeffs c = layout;
    auto it = v.begin();
    c.approx.assign(it, it + static_cast<std::ptrdiff_t>(layout.approx.size()));
    it += static_cast<std::ptrdiff_t>(layout.approx.size());
    for (std::size_t l = 0; l < layout.details.size(); ++l) {
        const auto len = static_cast<std::ptrdiff_t>(layout.details[l].size());
        c.details[l].assign(it, it + len);
        it += len;
    }
    return c;
}

}  // namespace wavefeat
