// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavefeat {

enum class WaveletFamily { Daubechies, Symlet, Coiflet, Biorthogonal, ReverseBiorthogonal };

enum class PaddingMode { Zero, Constant, Symmetric, Reflect, Periodic, Smooth, Periodization };

inline constexpr PaddingMode kAllPaddingModes[] = {
    PaddingMode::Zero,     PaddingMode::Constant, PaddingMode::Symmetric,    PaddingMode::Reflect,
    PaddingMode::Periodic, PaddingMode::Smooth,   PaddingMode::Periodization};

/// Analysis and synthesis filter quadruple. Taps are stored in the
/// convolution orientation of the usual published tables (dec_* are the
/// time-reversed analysis responses).
struct WaveletSpec {
    WaveletFamily family;
    std::string order;  // "4" for db4, "2.2" for bior2.2
    std::vector<double> dec_lo;
    std::vector<double> dec_hi;
    std::vector<double> rec_lo;
    std::vector<double> rec_hi;

    std::size_t filter_length() const { return dec_lo.size(); }
    bool orthogonal() const;
    std::string name() const;  // short name: db4, sym5, coif2, bior2.2, rbio3.1
};

std::string_view family_name(WaveletFamily f);
WaveletFamily parse_family(std::string_view name);
std::string_view padding_name(PaddingMode m);
PaddingMode parse_padding(std::string_view name);

/// Every registered wavelet, in family then order sequence.
std::span<const WaveletSpec> wavelet_registry();

/// Throws UnsupportedWavelet for pairs outside the registry.
const WaveletSpec& lookup_wavelet(WaveletFamily family, std::string_view order);
/// Short-name lookup ("db4", "haar", "bior2.2", ...).
const WaveletSpec& lookup_wavelet(std::string_view name);

/// Boundary extension of a signal by `left` / `right` samples.
///   zero           0 0 | x0 .. xn-1 | 0 0
///   constant       x0 x0 | ... | xn-1 xn-1
///   symmetric      x1 x0 | x0 x1 ... xn-1 | xn-1 xn-2   (half-sample mirror)
///   reflect        x2 x1 | x0 x1 ... xn-1 | xn-2 xn-3   (whole-sample mirror)
///   periodic       xn-2 xn-1 | x0 ... xn-1 | x0 x1
///   smooth         linear continuation with the edge slope
///   periodization  odd signals get xn-1 appended, then periodic
/// Throws InvalidInput if a mirrored or wrapped pad is longer than the signal.
std::vector<double> pad(std::span<const double> x, PaddingMode mode, std::size_t left, std::size_t right);

/// Number of coefficients one analysis step produces from n samples.
std::size_t dwt_coeff_length(std::size_t n, std::size_t filter_length, PaddingMode mode);

/// floor(log2(n / (L - 1))), 0 if the signal is shorter than L - 1.
std::size_t dwt_max_level(std::size_t n, std::size_t filter_length);

struct DwtPair {
    std::vector<double> approx;
    std::vector<double> detail;
};

/// One analysis step. Coefficient k is sum_j f[j] * x_ext[2k + 1 - j] for the
/// padded modes and sum_j f[j] * x[(2k + L/2 - j) mod n'] for periodization,
/// with n' the even-extended length.
DwtPair dwt_single(std::span<const double> x, const WaveletSpec& w, PaddingMode mode);

/// Synthesis step returning exactly `out_length` samples.
std::vector<double> idwt_single(std::span<const double> approx, std::span<const double> detail, const WaveletSpec& w,
                                PaddingMode mode, std::size_t out_length);

struct DwtCoeffs {
    std::vector<double> approx;                // coarsest approximation
    std::vector<std::vector<double>> details;  // coarsest first
    std::vector<std::size_t> level_lengths;    // input length at each level, coarsest first
    WaveletSpec wavelet;
    PaddingMode mode = PaddingMode::Symmetric;
    std::size_t original_length = 0;

    std::size_t levels() const { return details.size(); }
    std::size_t coefficient_count() const;
};

/// level == 0 selects dwt_max_level.
DwtCoeffs wavedec(std::span<const double> x, const WaveletSpec& w, PaddingMode mode, std::size_t level);
std::vector<double> waverec(const DwtCoeffs& c);

/// [approx, details coarsest..finest]
std::vector<double> flatten(const DwtCoeffs& c);
/// Inverse of flatten; `layout` supplies block sizes and bookkeeping.
DwtCoeffs unflatten(std::span<const double> v, const DwtCoeffs& layout);

}  // namespace wavefeat
