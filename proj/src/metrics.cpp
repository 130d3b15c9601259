// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

void check_pair(std::span<const int> truth, std::span<const int> pred, std::size_t min_len) {
    if (truth.size() != pred.size()) throw InvalidInput("metrics: label vectors differ in length");
    if (truth.size() < min_len) throw InvalidInput("metrics: too few samples");
}

double comb2(long n) {
    return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

}  // namespace

ContingencyTable ContingencyTable::build(std::span<const int> truth, std::span<const int> pred) {
    check_pair(truth, pred, 1);
    std::map<int, std::size_t> rows;
    std::map<int, std::size_t> cols;
    for (int v : truth) rows.emplace(v, 0);
    for (int v : pred) cols.emplace(v, 0);
    std::size_t i = 0;
    for (auto& [v, idx] : rows) idx = i++;
    i = 0;
    for (auto& [v, idx] : cols) idx = i++;
    ContingencyTable t;
    t.counts.assign(rows.size(), std::vector<long>(cols.size(), 0));
    t.row_sums.assign(rows.size(), 0);
    t.col_sums.assign(cols.size(), 0);
    for (std::size_t k = 0; k < truth.size(); ++k) {
        const std::size_t r = rows[truth[k]];
        const std::size_t c = cols[pred[k]];
        ++t.counts[r][c];
        ++t.row_sums[r];
        ++t.col_sums[c];
    }
    t.total = static_cast<long>(truth.size());
    return t;
}

double accuracy(std::span<const int> truth, std::span<const int> pred) {
    check_pair(truth, pred, 1);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hits += truth[i] == pred[i] ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double f1_weighted(std::span<const int> truth, std::span<const int> pred) {
    check_pair(truth, pred, 1);
    std::map<int, long> support;
    std::map<int, long> predicted;
    std::map<int, long> hits;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++support[truth[i]];
        ++predicted[pred[i]];
        if (truth[i] == pred[i]) ++hits[truth[i]];
    }
    double total = 0.0;
    for (const auto& [cls, n] : support) {
        const double tp = static_cast<double>(hits[cls]);
        const double np = static_cast<double>(predicted[cls]);
        const double precision = np > 0.0 ? tp / np : 0.0;
        const double recall = tp / static_cast<double>(n);
        const double f1 = precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
        total += f1 * static_cast<double>(n);
    }
    return total / static_cast<double>(truth.size());
}

double adjusted_rand(std::span<const int> truth, std::span<const int> pred) {
    check_pair(truth, pred, 2);
    const ContingencyTable t = ContingencyTable::build(truth, pred);
    const long n = t.total;
    const bool both_single = t.row_sums.size() == 1 && t.col_sums.size() == 1;
    const bool both_singletons =
        t.row_sums.size() == static_cast<std::size_t>(n) && t.col_sums.size() == static_cast<std::size_t>(n);
    if (both_single || both_singletons) return 1.0;
    double index = 0.0;
    for (const auto& row : t.counts) {
        for (long c : row) index += comb2(c);
    }
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (long a : t.row_sums) sum_a += comb2(a);
    for (long b : t.col_sums) sum_b += comb2(b);
    const double expected = sum_a * sum_b / comb2(n);
    const double max_index = 0.5 * (sum_a + sum_b);
    const double denom = max_index - expected;
    if (denom == 0.0) return 1.0;
    return (index - expected) / denom;
}

double entropy(std::span<const long> counts) {
    long n = 0;
    for (long c : counts) n += c;
    if (n == 0) return 0.0;
    double h = 0.0;
    for (long c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(n);
        h -= p * std::log(p);
    }
    return h;
}

double mutual_info(const ContingencyTable& t) {
    const double n = static_cast<double>(t.total);
    double mi = 0.0;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            const double nij = static_cast<double>(t.counts[i][j]);
            if (nij == 0.0) continue;
            mi += nij / n * std::log(n * nij / (static_cast<double>(t.row_sums[i]) * static_cast<double>(t.col_sums[j])));
        }
    }
    return std::max(mi, 0.0);
}

double expected_mutual_info(const ContingencyTable& t) {
    const long n = t.total;
    const double nd = static_cast<double>(n);
    const double lg_n = std::lgamma(nd + 1.0);
    double emi = 0.0;
    for (long a : t.row_sums) {
        for (long b : t.col_sums) {
            const long lo = std::max(1L, a + b - n);
            const long hi = std::min(a, b);
            // log of the hypergeometric normalizer a! b! (n-a)! (n-b)! / n!
            const double base = std::lgamma(a + 1.0) + std::lgamma(b + 1.0) + std::lgamma(nd - a + 1.0) +
                                std::lgamma(nd - b + 1.0) - lg_n;
            for (long k = lo; k <= hi; ++k) {
                const double kd = static_cast<double>(k);
                const double log_p = base - std::lgamma(kd + 1.0) - std::lgamma(a - kd + 1.0) -
                                     std::lgamma(b - kd + 1.0) - std::lgamma(nd - a - b + kd + 1.0);
                const double term = kd / nd * std::log(nd * kd / (static_cast<double>(a) * static_cast<double>(b)));
                emi += term * std::exp(log_p);
            }
        }
    }
    return emi;
}

bool same_partition(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) return false;
    std::map<int, int> ab;
    std::map<int, int> ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto [it1, new1] = ab.emplace(a[i], b[i]);
        const auto [it2, new2] = ba.emplace(b[i], a[i]);
        if (it1->second != b[i] || it2->second != a[i]) return false;
    }
    return true;
}

double adjusted_mutual_info(std::span<const int> truth, std::span<const int> pred) {
    check_pair(truth, pred, 2);
    // exactly 1 by the formula (MI = H(U) = H(V)); skip the rounding
    if (same_partition(truth, pred)) return 1.0;
    const ContingencyTable t = ContingencyTable::build(truth, pred);
    const double mi = mutual_info(t);
    const double emi = expected_mutual_info(t);
    const double mean_h = 0.5 * (entropy(t.row_sums) + entropy(t.col_sums));
    const double denom = mean_h - emi;
    if (std::abs(denom) < 1e-15) return same_partition(truth, pred) ? 1.0 : 0.0;
    return (mi - emi) / denom;
}

double fowlkes_mallows(std::span<const int> truth, std::span<const int> pred) {
    check_pair(truth, pred, 2);
    const ContingencyTable t = ContingencyTable::build(truth, pred);
    double tp = 0.0;
    for (const auto& row : t.counts) {
        for (long c : row) tp += comb2(c);
    }
    double pred_pairs = 0.0;
    double true_pairs = 0.0;
    for (long b : t.col_sums) pred_pairs += comb2(b);
    for (long a : t.row_sums) true_pairs += comb2(a);
    if (tp == 0.0 || pred_pairs == 0.0 || true_pairs == 0.0) return 0.0;
    return tp / std::sqrt(pred_pairs * true_pairs);
}

}  // namespace wavefeat
