// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "wavefeat/error.hpp"
#include "wavefeat/metrics.hpp"

namespace wavefeat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Unbiased draw from [0, bound) by rejection; std::uniform_int_distribution is
// implementation-defined and would make splits differ across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

void shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
}

std::string fold_id(const Fold& rows) {
    // FNV-1a over the indices
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t r : rows) {
        h ^= static_cast<std::uint64_t>(r);
        h *= 1099511628211ULL;
    }
    return std::to_string(rows.size()) + ":" + std::to_string(h);
}

std::string prepared_key(const PipelineConfig& c) {
    return std::to_string(c.preprocess.derivative_order) + (c.decomposition.kind == DecompositionKind::Wtt ? "p" : "n");
}

std::vector<int> pick(const std::vector<int>& labels, const Fold& rows) {
    std::vector<int> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) out.push_back(labels[r]);
    return out;
}

std::vector<int> predict_rows(const std::variant<std::monostate, LdaModel, LrModel>& model, const Matrix& x) {
    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    Vector row(x.cols());
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
        row = x.row(r).transpose();
        const std::span<const double> s(row.data(), static_cast<std::size_t>(row.size()));
        if (const auto* lda = std::get_if<LdaModel>(&model)) {
            out[static_cast<std::size_t>(r)] = lda_predict(*lda, s);
        } else {
            out[static_cast<std::size_t>(r)] = lr_predict(std::get<LrModel>(model), s);
        }
    }
    return out;
}

std::size_t distinct(const std::vector<int>& v) {
    return std::set<int>(v.begin(), v.end()).size();
}

void summarize(CvReport& r) {
    static const std::vector<std::pair<std::string, double FoldScore::*>> fields = {
        {"train_accuracy", &FoldScore::train_accuracy}, {"test_accuracy", &FoldScore::test_accuracy},
        {"train_f1", &FoldScore::train_f1},             {"test_f1", &FoldScore::test_f1},
        {"ari", &FoldScore::ari},                       {"ami", &FoldScore::ami},
        {"fm", &FoldScore::fm}};
    r.summary.clear();
    for (const auto& [name, member] : fields) {
        std::vector<double> v;
        for (const FoldScore& s : r.runs)
            if (!std::isnan(s.*member)) v.push_back(s.*member);
        if (v.empty()) continue;
        ScoreSummary sum;
        sum.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - sum.mean) * (x - sum.mean);
        sum.std = std::sqrt(ss / static_cast<double>(v.size()));
        sum.min = *std::min_element(v.begin(), v.end());
        sum.max = *std::max_element(v.begin(), v.end());
        // keep the mean inside [min, max] despite rounding
        sum.mean = std::clamp(sum.mean, sum.min, sum.max);
        r.summary[name] = sum;
    }
}

nlohmann::json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

FoldScore::FoldScore()
    : train_accuracy(kNaN), test_accuracy(kNaN), train_f1(kNaN), test_f1(kNaN), ari(kNaN), ami(kNaN), fm(kNaN) {}

Folds kfold_split(std::size_t n, std::size_t k, std::uint64_t seed, const std::vector<int>* stratify_by) {
    if (k < 2) throw InvalidInput("kfold_split: need at least 2 folds");
    if (k > n) throw InvalidInput("kfold_split: more folds than samples");
    if (stratify_by != nullptr && stratify_by->size() != n) throw InvalidInput("kfold_split: label count differs from n");
    std::mt19937_64 rng(seed);
    Folds folds(k);
    if (stratify_by == nullptr) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        shuffle(order, rng);
        std::size_t pos = 0;
        for (std::size_t f = 0; f < k; ++f) {
            const std::size_t size = n / k + (f < n % k ? 1 : 0);
            folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                            order.begin() + static_cast<std::ptrdiff_t>(pos + size));
            pos += size;
        }
    } else {
        std::map<int, std::vector<std::size_t>> by_class;
        for (std::size_t i = 0; i < n; ++i) by_class[(*stratify_by)[i]].push_back(i);
        // continue dealing where the previous class stopped so sizes stay within 1
        std::size_t next = 0;
        for (auto& [label, members] : by_class) {
            shuffle(members, rng);
            for (std::size_t idx : members) {
                folds[next].push_back(idx);
                next = (next + 1) % k;
            }
        }
    }
    for (Fold& f : folds) std::sort(f.begin(), f.end());
    return folds;
}

Fold complement(const Folds& folds, std::size_t i, std::size_t n) {
    std::vector<char> out_of(n, 0);
    for (std::size_t r : folds.at(i)) out_of.at(r) = 1;
    Fold rest;
    rest.reserve(n - folds[i].size());
    for (std::size_t r = 0; r < n; ++r)
        if (!out_of[r]) rest.push_back(r);
    return rest;
}

double CvReport::selection_score() const {
    return mean(config.task() == Task::Classification ? "test_accuracy" : "ari");
}

double CvReport::mean(const std::string& metric) const {
    const auto it = summary.find(metric);
    return it == summary.end() ? kNaN : it->second.mean;
}

const LabeledDataset& FeatureCache::prepared(const LabeledDataset& raw, const PipelineConfig& config) {
    if (prepared_source_ != &raw) {
        prepared_.clear();
        lru_.clear();
        index_.clear();
        prepared_source_ = &raw;
    }
    const std::string key = prepared_key(config);
    auto it = prepared_.find(key);
    if (it == prepared_.end())
        it = prepared_.emplace(key, prepare_signals(raw, config.preprocess, config.decomposition.kind)).first;
    return it->second;
}

const FoldFeatures& FeatureCache::fold(const LabeledDataset& raw, const PipelineConfig& config, const Fold& fit_rows) {
    const LabeledDataset& prep = prepared(raw, config);
    const std::string key = config.feature_key() + "#" + fold_id(fit_rows);
    if (const auto it = index_.find(key); it != index_.end()) {
        ++hits_;
        lru_.splice(lru_.begin(), lru_, it->second);
        return *it->second->second;
    }
    ++misses_;
    auto value = std::make_shared<const FoldFeatures>(fit_fold_features(config, prep, fit_rows));
    lru_.emplace_front(key, std::move(value));
    index_[key] = lru_.begin();
    while (lru_.size() > std::max<std::size_t>(capacity_, 1)) {
        index_.erase(lru_.back().first);
        lru_.pop_back();
    }
    return *lru_.front().second;
}

CvReport evaluate_config(const PipelineConfig& config, const LabeledDataset& data, const Folds& folds,
                         FeatureCache* cache) {
    config.validate();
    if (folds.empty()) throw InvalidInput("evaluate_config: no folds");
    const auto t0 = Clock::now();
    FeatureCache local(1);
    FeatureCache& fc = cache != nullptr ? *cache : local;
    const std::size_t n = data.sample_count();

    CvReport report;
    report.config = config;
    report.folds = folds.size();
    for (std::size_t i = 0; i < folds.size(); ++i) {
        const Fold fit_rows = complement(folds, i, n);
        const FoldFeatures& f = fc.fold(data, config, fit_rows);
        const double tau = fitted_tau(f, config.transform);
        FoldScore s;
        s.fold = static_cast<int>(i);
        const std::vector<int> y_fit = pick(data.labels, fit_rows);
        const Matrix x_fit = feature_rows(f, config.transform, tau, fit_rows);
        if (!numerics::all_finite(x_fit)) throw NumericalError("evaluate_config: non-finite features");
        if (config.task() == Task::Classification) {
            std::variant<std::monostate, LdaModel, LrModel> model;
            if (config.model.kind == ModelKind::Lda) {
                model = lda_fit(x_fit, y_fit);
            } else {
                LrModel lr = lr_fit(x_fit, y_fit, {config.model.penalty, config.model.c});
                for (const std::string& w : lr.warnings) report.warnings.push_back("fold " + std::to_string(i) + ": " + w);
                model = std::move(lr);
            }
            const std::vector<int> y_test = pick(data.labels, folds[i]);
            const Matrix x_test = feature_rows(f, config.transform, tau, folds[i]);
            const std::vector<int> p_fit = predict_rows(model, x_fit);
            const std::vector<int> p_test = predict_rows(model, x_test);
            s.train_accuracy = accuracy(y_fit, p_fit);
            s.test_accuracy = accuracy(y_test, p_test);
            s.train_f1 = f1_weighted(y_fit, p_fit);
            s.test_f1 = f1_weighted(y_test, p_test);
        } else {
            const LinkageTree tree = hac_fit_samples(x_fit, config.model.linkage, config.model.affinity);
            const std::vector<int> pred = cut_tree(tree, distinct(y_fit));
            s.ari = adjusted_rand(y_fit, pred);
            s.ami = adjusted_mutual_info(y_fit, pred);
            s.fm = fowlkes_mallows(y_fit, pred);
        }
        report.runs.push_back(s);
    }
    summarize(report);
    report.runtime_seconds = seconds_since(t0);
    return report;
}

double LeaderboardEntry::score() const {
    return report ? report->selection_score() : kNaN;
}

std::vector<std::size_t> GridResult::ranking() const {
    std::vector<std::size_t> idx(entries.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const double sa = entries[a].score();
        const double sb = entries[b].score();
        if (std::isnan(sb)) return !std::isnan(sa);
        if (std::isnan(sa)) return false;
        return sa > sb;
    });
    return idx;
}

GridResult grid_search(const std::vector<PipelineConfig>& grid, const LabeledDataset& data, std::uint64_t seed,
                       const CvOptions& options) {
    if (grid.empty()) throw InvalidConfig("grid_search: empty grid");
    const Task task = grid.front().task();
    for (const PipelineConfig& c : grid)
        if (c.task() != task) throw InvalidConfig("grid_search: grid mixes classification and clustering models");
    data.validate();
    const auto t0 = Clock::now();
    const Folds folds = kfold_split(data.sample_count(), options.folds, seed, options.stratify ? &data.labels : nullptr);

    GridResult result;
    result.seed = seed;
    result.entries.resize(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        FeatureCache cache(2 * options.folds);
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            LeaderboardEntry& e = result.entries[i];
            e.grid_index = i;
            e.config = grid[i];
            try {
                CvReport r = evaluate_config(grid[i], data, folds, &cache);
                r.seed = seed;
                e.report = std::move(r);
            } catch (const std::exception& ex) {
                e.error = ex.what();
            }
        }
    };
    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, grid.size());
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const std::vector<std::size_t> order = result.ranking();
    if (std::isnan(result.entries[order.front()].score()))
        throw NumericalError("grid_search: every config failed; first error: " + result.entries.front().error);
    result.best = order.front();
    result.runtime_seconds = seconds_since(t0);
    return result;
}

CvReport repeated_cv(const PipelineConfig& config, const LabeledDataset& data, std::size_t repeats, std::uint64_t seed,
                     const CvOptions& options) {
    if (repeats == 0) throw InvalidInput("repeated_cv: need at least one repeat");
    const auto t0 = Clock::now();
    CvReport out;
    out.config = config;
    out.seed = seed;
    out.repeats = repeats;
    out.folds = options.folds;
    FeatureCache cache(options.folds);
    for (std::size_t r = 0; r < repeats; ++r) {
        const Folds folds =
            kfold_split(data.sample_count(), options.folds, seed + 1 + r, options.stratify ? &data.labels : nullptr);
        CvReport one = evaluate_config(config, data, folds, &cache);
        for (FoldScore s : one.runs) {
            s.repeat = static_cast<int>(r);
            out.runs.push_back(s);
        }
        for (std::string& w : one.warnings) out.warnings.push_back("repeat " + std::to_string(r) + ", " + w);
    }
    summarize(out);
    out.runtime_seconds = seconds_since(t0);
    return out;
}

ClusteringResult final_clustering(const PipelineConfig& config, const LabeledDataset& data) {
    config.validate();
    if (config.task() != Task::Clustering) throw InvalidConfig("final_clustering: config has no clustering model");
    data.validate();
    const LabeledDataset prepared = prepare_signals(data, config.preprocess, config.decomposition.kind);
    Fold all(data.sample_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const FoldFeatures f = fit_fold_features(config, prepared, all);
    const Matrix x = feature_rows(f, config.transform, fitted_tau(f, config.transform), all);

    ClusteringResult out;
    out.config = config;
    out.tree = hac_fit_samples(x, config.model.linkage, config.model.affinity);
    out.labels = cut_tree(out.tree, distinct(data.labels));
    out.ari = adjusted_rand(data.labels, out.labels);
    out.ami = adjusted_mutual_info(data.labels, out.labels);
    out.fm = fowlkes_mallows(data.labels, out.labels);
    std::vector<std::string> names;
    names.reserve(data.sample_count());
    for (std::size_t i = 0; i < data.sample_count(); ++i) {
        const int l = data.labels[i];
        const std::string cls = l >= 0 && static_cast<std::size_t>(l) < data.class_names.size()
                                    ? data.class_names[static_cast<std::size_t>(l)]
                                    : std::to_string(l);
        names.push_back(cls + "#" + std::to_string(i));
    }
    out.dendrogram = dendrogram_export(out.tree, names);
    return out;
}

std::string feature_space_label(const PipelineConfig& config, bool split_sign) {
    std::string base;
    switch (config.decomposition.kind) {
        case DecompositionKind::None:
            return "original";
        case DecompositionKind::Dwt:
            base = "DWT";
            break;
        case DecompositionKind::Wtt:
            base = "WTT";
            break;
    }
    if (split_sign && config.transform.map == FeatureMap::Sign) return base + " (sign)";
    if (split_sign && config.transform.map == FeatureMap::Threshold) return base + " (thr)";
    return base;
}

std::string derivative_label(int order) {
    return order == 0 ? "f" : order == 1 ? "f'" : "f''";
}

nlohmann::json to_json(const CvReport& r) {
    nlohmann::json j;
    j["config"] = to_json(r.config);
    j["key"] = r.config.key();
    j["seed"] = r.seed;
    j["repeats"] = r.repeats;
    j["folds"] = r.folds;
    j["run_count"] = r.run_count();
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& [name, s] : r.summary)
        summary[name] = {{"mean", s.mean}, {"std", s.std}, {"min", s.min}, {"max", s.max}};
    j["summary"] = summary;
    nlohmann::json runs = nlohmann::json::array();
    for (const FoldScore& s : r.runs) {
        runs.push_back({{"repeat", s.repeat},
                        {"fold", s.fold},
                        {"train_accuracy", number_or_null(s.train_accuracy)},
                        {"test_accuracy", number_or_null(s.test_accuracy)},
                        {"train_f1", number_or_null(s.train_f1)},
                        {"test_f1", number_or_null(s.test_f1)},
                        {"ari", number_or_null(s.ari)},
                        {"ami", number_or_null(s.ami)},
                        {"fm", number_or_null(s.fm)}});
    }
    j["runs"] = runs;
    j["warnings"] = r.warnings;
    return j;
}

nlohmann::json to_json(const GridResult& g) {
    nlohmann::json j;
    j["seed"] = g.seed;
    j["best"] = g.best;
    nlohmann::json entries = nlohmann::json::array();
    for (const LeaderboardEntry& e : g.entries) {
        nlohmann::json row = {{"grid_index", e.grid_index}, {"key", e.config.key()}, {"config", to_json(e.config)}};
        row["score"] = number_or_null(e.score());
        if (e.report) {
            nlohmann::json means = nlohmann::json::object();
            for (const auto& [name, s] : e.report->summary) means[name] = s.mean;
            row["means"] = means;
            row["warnings"] = e.report->warnings.size();
        } else {
            row["error"] = e.error;
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

}  // namespace wavefeat
