// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "wavefeat/error.hpp"
#include "wavefeat/grid.hpp"
#include "wavefeat/metrics.hpp"
#include "wavefeat/serialize.hpp"
#include "wavefeat/synth.hpp"

namespace wavefeat::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string header_line(const std::string& schema, const std::string& extra = "") {
    std::string s = "# schema=" + schema + " tool=wavefeat/" + WAVEFEAT_VERSION;
    if (!extra.empty()) s += " " + extra;
    return s + "\n";
}

std::string fixed(double v, int digits = 3) {
    if (!std::isfinite(v)) return "";
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string path_in(const CommonOptions& o, const std::string& name) {
    return (fs::path(o.out_dir) / name).string();
}

void ensure_out_dir(const CommonOptions& o) {
    if (o.out_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(o.out_dir, ec);
    if (ec) throw DataError("cannot create output directory " + o.out_dir + ": " + ec.message());
}

void note(const CommonOptions& o, const std::string& msg) {
    if (!o.quiet) std::cerr << msg << '\n';
}

std::vector<PipelineConfig> grid_for(const CommonOptions& o, Task task) {
    std::vector<PipelineConfig> grid = o.config.empty() ? expand_grid(default_grid(task)) : load_grid(o.config);
    for (const PipelineConfig& c : grid)
        if (c.task() != task)
            throw InvalidConfig(task == Task::Classification ? "gridsearch needs a classification grid (lda / lr models)"
                                                             : "cluster needs a clustering grid (hac models)");
    return grid;
}

const std::vector<std::string> kMetricColumns = {"train_accuracy", "test_accuracy", "train_f1", "test_f1",
                                                 "ari",            "ami",           "fm"};

std::string leaderboard_csv(const GridResult& g) {
    std::ostringstream os;
    os << header_line("wavefeat.leaderboard/1", "seed=" + std::to_string(g.seed));
    os << "rank,grid_index,score";
    for (const auto& m : kMetricColumns) os << ',' << m;
    os << ",config,error\n";
    std::size_t rank = 1;
    for (std::size_t i : g.ranking()) {
        const LeaderboardEntry& e = g.entries[i];
        os << rank++ << ',' << e.grid_index << ',' << (e.report ? format_double(e.score()) : "");
        for (const auto& m : kMetricColumns) {
            const double v = e.report ? e.report->mean(m) : std::nan("");
            os << ',' << (std::isfinite(v) ? format_double(v) : "");
        }
        std::string err = e.error;
        for (char& c : err)
            if (c == ',' || c == '\n') c = ';';
        os << ',' << e.config.key() << ',' << err << '\n';
    }
    return os.str();
}

// Best entry per group, first in grid order on ties.
template <typename KeyFn>
std::map<std::string, std::size_t> winners(const GridResult& g, KeyFn key) {
    std::map<std::string, std::size_t> best;
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
        const double s = g.entries[i].score();
        if (std::isnan(s)) continue;
        const std::string k = key(g.entries[i].config);
        const auto it = best.find(k);
        if (it == best.end() || s > g.entries[it->second].score()) best[k] = i;
    }
    return best;
}

std::vector<std::string> space_rows(bool split_sign) {
    if (split_sign) return {"original", "DWT (thr)", "DWT (sign)", "WTT (thr)", "WTT (sign)"};
    return {"original", "DWT", "WTT"};
}

std::string classification_table(const std::vector<ClassificationCell>& cells, const std::string& model,
                                  std::size_t repeats, std::size_t folds) {
    const bool split = model == "lda";
    std::map<std::pair<std::string, int>, const ClassificationCell*> by;
    for (const auto& c : cells)
        if (c.model == model) by[{c.space, c.derivative}] = &c;
    std::ostringstream os;
    os << header_line("wavefeat.table/1", "model=" + model + " repeats=" + std::to_string(repeats) +
                                              " folds=" + std::to_string(folds));
    os << "feature_space,part";
    for (const char* metric : {"accuracy", "f1_weighted"})
        for (int d = 0; d < 3; ++d) os << ',' << metric << '_' << derivative_label(d);
    os << '\n';
    for (const std::string& space : space_rows(split)) {
        for (const char* part : {"train", "test"}) {
            os << space << ',' << part;
            for (const char* metric : {"accuracy", "f1"}) {
                for (int d = 0; d < 3; ++d) {
                    const auto it = by.find({space, d});
                    os << ',';
                    if (it != by.end()) os << fixed(it->second->report.mean(std::string(part) + "_" + metric));
                }
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string clustering_table(const std::vector<ClusteringCell>& cells) {
    std::map<std::pair<std::string, int>, const ClusteringCell*> by;
    for (const auto& c : cells) by[{c.space, c.derivative}] = &c;
    std::ostringstream os;
    os << header_line("wavefeat.table/1", "model=hac scored=full-dataset");
    os << "score,original,DWT,WTT\n";
    const std::vector<std::pair<std::string, double ClusteringResult::*>> rows = {
        {"adjusted_rand", &ClusteringResult::ari},
        {"adjusted_mutual_info", &ClusteringResult::ami},
        {"fowlkes_mallows", &ClusteringResult::fm}};
    for (const auto& [name, member] : rows) {
        os << name;
        for (const char* space : {"original", "DWT", "WTT"}) {
            os << ',';
            for (int d = 0; d < 3; ++d) {
                const auto it = by.find({space, d});
                os << (d ? "/" : "") << (it != by.end() ? fixed(it->second->result.*member) : "-");
            }
        }
        os << '\n';
    }
    return os.str();
}

json report_summary(const CvReport& r) {
    json s = json::object();
    for (const auto& [name, v] : r.summary) s[name] = {{"mean", v.mean}, {"std", v.std}};
    return s;
}

void write_manifest(const CommonOptions& o, const std::string& command, double wall, json extra) {
    if (o.out_dir.empty()) return;
    json m = make_manifest(command, o.seed, o.data, wall);
    m["options"] = {{"format", o.format}, {"config", o.config}, {"jobs", o.jobs}, {"stratify", o.stratify}};
    for (auto& [k, v] : extra.items()) m[k] = v;
    write_json_file(path_in(o, "manifest.json"), m);
}

SyntheticSpec spec_from(const CommonOptions& o) {
    SyntheticSpec spec = SyntheticSpec::defaults();
    spec.seed = o.seed;
    if (o.config.empty()) return spec;
    const json j = read_json_file(o.config);
    try {
        if (j.contains("samples_per_class")) {
            spec.samples_per_class = j.at("samples_per_class").get<std::vector<std::size_t>>();
            if (spec.samples_per_class.size() != spec.class_peaks.size()) {
                // peak tables are per class; rebuild them for the new class count
                SyntheticSpec fresh = SyntheticSpec::defaults();
                fresh.samples_per_class = spec.samples_per_class;
                const std::size_t s = spec.samples_per_class.size();
                fresh.class_peaks.resize(s);
                fresh.common_gain.resize(s);
                for (std::size_t c = 0; c < s; ++c) {
                    const std::size_t src = c % spec.class_peaks.size();
                    fresh.class_peaks[c] = spec.class_peaks[src];
                    for (Peak& p : fresh.class_peaks[c]) p.position -= 7.0 * static_cast<double>(c / spec.class_peaks.size());
                    fresh.common_gain[c] = spec.common_gain[src];
                }
                fresh.seed = spec.seed;
                spec = fresh;
            }
        }
        spec.points = j.value("points", spec.points);
        spec.wavenumber_start = j.value("wavenumber_start", spec.wavenumber_start);
        spec.wavenumber_end = j.value("wavenumber_end", spec.wavenumber_end);
        spec.amplitude_jitter = j.value("amplitude_jitter", spec.amplitude_jitter);
        spec.position_jitter = j.value("position_jitter", spec.position_jitter);
        spec.scale_jitter = j.value("scale_jitter", spec.scale_jitter);
        spec.baseline_degree = j.value("baseline_degree", spec.baseline_degree);
        spec.baseline_sigma = j.value("baseline_sigma", spec.baseline_sigma);
        spec.noise_sigma = j.value("noise_sigma", spec.noise_sigma);
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("synthetic spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

int cmd_synth(const CommonOptions& o, const std::string& out) {
    const LabeledDataset d = synth_dataset(spec_from(o));
    const DataFormat fmt = o.format.empty() ? format_for_path(out) : parse_format(o.format);
    if (const fs::path parent = fs::path(out).parent_path(); !parent.empty()) fs::create_directories(parent);
    save_dataset(d, out, fmt);
    note(o, "synth: wrote " + std::to_string(d.sample_count()) + " samples x " + std::to_string(d.length()) +
                " points, " + std::to_string(d.class_count()) + " classes to " + out);
    return kOk;
}

int cmd_gridsearch(const CommonOptions& o, std::size_t repeats, std::size_t folds) {
    const LabeledDataset data = load_input(o);
    run_gridsearch(o, data, repeats, folds);
    return kOk;
}

int cmd_cluster(const CommonOptions& o, std::size_t folds) {
    const LabeledDataset data = load_input(o);
    run_cluster(o, data, folds);
    return kOk;
}

int cmd_train(const CommonOptions& o, const std::string& predict_path) {
    const auto t0 = Clock::now();
    if (o.config.empty()) throw InvalidConfig("train needs --config with one pipeline record");
    const LabeledDataset data = load_input(o);
    json doc = read_json_file(o.config);
    if (doc.contains("best_config")) doc = doc.at("best_config");
    const PipelineConfig cfg = pipeline_from_json(doc.contains("config") ? doc.at("config") : doc);
    if (cfg.task() != Task::Classification) throw InvalidConfig("train fits classification pipelines only");
    std::vector<std::size_t> all(data.sample_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const FittedPipeline fitted = fit_pipeline(cfg, data, all);
    ensure_out_dir(o);
    write_json_file(path_in(o, "model.json"), fitted_to_json(fitted));
    const std::vector<int> pred = fitted.predict(data);
    const double acc = accuracy(data.labels, pred);
    note(o, "train: " + cfg.key() + "\ntrain: training accuracy " + fixed(acc, 4));
    json extra = {{"config", to_json(cfg)}, {"train_accuracy", acc}};
    if (!predict_path.empty()) {
        const LabeledDataset query =
            load_dataset(predict_path, o.format.empty() ? format_for_path(predict_path) : parse_format(o.format));
        if (query.wavenumbers != data.wavenumbers) throw InconsistentGrid("prediction data uses a different grid");
        const std::vector<int> qp = fitted.predict(query);
        std::ostringstream os;
        os << header_line("wavefeat.predictions/1") << "index,label,predicted\n";
        for (std::size_t i = 0; i < qp.size(); ++i)
            os << i << ',' << query.class_names[static_cast<std::size_t>(query.labels[i])] << ','
               << fitted.class_names.at(static_cast<std::size_t>(qp[i])) << '\n';
        write_text_file(path_in(o, "predictions.csv"), os.str());
    }
    write_manifest(o, "train", seconds_since(t0), extra);
    return kOk;
}

int cmd_report(const CommonOptions& o, const std::string& run_dir) {
    const fs::path dir = run_dir.empty() ? fs::path(o.out_dir) : fs::path(run_dir);
    const json m = read_json_file((dir / "manifest.json").string());
    std::ostringstream os;
    os << "wavefeat run report\n";
    os << "  command      " << m.value("command", "?") << "\n";
    os << "  version      " << m.value("version", "?") << "\n";
    os << "  seed         " << m.value("seed", 0) << "\n";
    if (m.contains("input")) os << "  input        " << m.at("input").get<std::string>() << " (" << m.value("input_digest", "") << ")\n";
    os << "  wall time    " << fixed(m.value("wall_seconds", 0.0), 1) << " s\n";
    if (m.contains("grid_size")) os << "  grid size    " << m.at("grid_size") << "\n";
    if (m.contains("best")) os << "  best config  " << m.at("best").value("key", "") << "\n";
    if (m.contains("best") && m.at("best").contains("summary")) {
        for (const auto& [name, v] : m.at("best").at("summary").items())
            os << "    " << std::left << std::setw(16) << name << fixed(v.at("mean").get<double>()) << " +- "
               << fixed(v.at("std").get<double>()) << "\n";
    }
    if (m.contains("ordering")) os << "  ARI ordering WTT >= DWT >= original: " << m.at("ordering").get<std::string>() << "\n";
    if (m.contains("files")) {
        for (const auto& f : m.at("files")) {
            const std::string name = f.get<std::string>();
            if (name.rfind("table_", 0) != 0) continue;
            std::ifstream in(dir / name);
            os << "\n" << name << ":\n";
            std::string line;
            while (std::getline(in, line))
                if (!line.empty() && line[0] != '#') os << "  " << line << "\n";
        }
    }
    // plot-ready series: leaderboard score by rank
    const fs::path lb = dir / "leaderboard.json";
    if (fs::exists(lb)) {
        const json g = read_json_file(lb.string());
        std::vector<std::pair<double, std::size_t>> scores;
        for (const auto& e : g.at("entries"))
            if (!e.at("score").is_null()) scores.emplace_back(e.at("score").get<double>(), e.at("grid_index").get<std::size_t>());
        std::stable_sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        std::ostringstream series;
        series << header_line("wavefeat.series/1") << "rank,grid_index,score\n";
        for (std::size_t i = 0; i < scores.size(); ++i)
            series << i + 1 << ',' << scores[i].second << ',' << format_double(scores[i].first) << '\n';
        write_text_file((dir / "series_scores.csv").string(), series.str());
        os << "\n  " << scores.size() << " scored configs; series written to series_scores.csv\n";
    }
    write_text_file((dir / "report.txt").string(), os.str());
    std::cout << os.str();
    return kOk;
}

int cmd_wavelets(const CommonOptions& o) {
    std::ostringstream os;
    os << header_line("wavefeat.wavelets/1") << "family,order,name,filter,taps\n";
    for (const WaveletSpec& w : wavelet_registry()) {
        const std::pair<const char*, const std::vector<double>*> filters[] = {
            {"dec_lo", &w.dec_lo}, {"dec_hi", &w.dec_hi}, {"rec_lo", &w.rec_lo}, {"rec_hi", &w.rec_hi}};
        for (const auto& [fname, taps] : filters) {
            os << family_name(w.family) << ',' << w.order << ',' << w.name() << ',' << fname << ',';
            for (std::size_t i = 0; i < taps->size(); ++i) os << (i ? " " : "") << format_double((*taps)[i]);
            os << '\n';
        }
    }
    if (o.out_dir.empty() || o.out_dir == "-") {
        std::cout << os.str();
    } else {
        ensure_out_dir(o);
        write_text_file(path_in(o, "wavelets.csv"), os.str());
        note(o, "wavelets: wrote " + path_in(o, "wavelets.csv"));
    }
    return kOk;
}

}  // namespace

LabeledDataset load_input(const CommonOptions& o) {
    if (o.data.empty()) throw InvalidConfig("--data is required");
    const DataFormat fmt = o.format.empty() ? format_for_path(o.data) : parse_format(o.format);
    LabeledDataset d = load_dataset(o.data, fmt);
    try {
        d.validate();
    } catch (const InvalidInput& e) {
        throw DataError(e.what());
    }
    return d;
}

GridsearchOutcome run_gridsearch(const CommonOptions& o, const LabeledDataset& data, std::size_t repeats,
                                 std::size_t folds) {
    const auto t0 = Clock::now();
    const std::vector<PipelineConfig> grid = grid_for(o, Task::Classification);
    const CvOptions cv{folds, o.stratify, o.jobs};
    note(o, "gridsearch: " + std::to_string(grid.size()) + " configs, " + std::to_string(folds) + "-fold CV, seed " +
                std::to_string(o.seed));
    GridsearchOutcome out;
    out.grid = grid_search(grid, data, o.seed, cv);
    note(o, "gridsearch: short CV done in " + fixed(out.grid.runtime_seconds, 1) + " s; best " +
                out.grid.best_entry().config.key() + " (" + fixed(out.grid.best_entry().score()) + ")");

    const auto cells = winners(out.grid, [](const PipelineConfig& c) {
        const std::string model(model_name(c.model.kind));
        return model + "|" + feature_space_label(c, model == "lda") + "|" + std::to_string(c.preprocess.derivative_order);
    });
    for (const auto& [key, idx] : cells) {
        const LeaderboardEntry& e = out.grid.entries[idx];
        ClassificationCell cell;
        cell.model = std::string(model_name(e.config.model.kind));
        cell.space = feature_space_label(e.config, cell.model == "lda");
        cell.derivative = e.config.preprocess.derivative_order;
        cell.grid_index = idx;
        cell.short_cv_score = e.score();
        cell.report = repeated_cv(e.config, data, repeats, o.seed, cv);
        note(o, "gridsearch: " + cell.model + " / " + cell.space + " / " + derivative_label(cell.derivative) +
                    ": test accuracy " + fixed(cell.report.mean("test_accuracy")) + " over " +
                    std::to_string(cell.report.run_count()) + " runs");
        out.cells.push_back(std::move(cell));
    }
    // the overall winner is one of the cell winners
    for (const auto& c : out.cells)
        if (c.grid_index == out.grid.best) out.best = c.report;

    if (!o.out_dir.empty()) {
        ensure_out_dir(o);
        write_text_file(path_in(o, "leaderboard.csv"), leaderboard_csv(out.grid));
        write_json_file(path_in(o, "leaderboard.json"), to_json(out.grid));
        json files = {"leaderboard.csv", "leaderboard.json", "summary.json", "best_cv.json"};
        std::set<std::string> models;
        for (const auto& c : out.cells) models.insert(c.model);
        for (const std::string& m : models) {
            write_text_file(path_in(o, "table_" + m + ".csv"), classification_table(out.cells, m, repeats, folds));
            files.push_back("table_" + m + ".csv");
        }
        json summary = {{"schema", "wavefeat.gridsearch/1"}, {"seed", o.seed}, {"repeats", repeats}, {"folds", folds}};
        summary["best_config"] = to_json(out.grid.best_entry().config);
        json jc = json::array();
        for (const auto& c : out.cells) {
            jc.push_back({{"model", c.model},
                          {"feature_space", c.space},
                          {"derivative", derivative_label(c.derivative)},
                          {"grid_index", c.grid_index},
                          {"short_cv_score", c.short_cv_score},
                          {"config", to_json(out.grid.entries[c.grid_index].config)},
                          {"summary", report_summary(c.report)},
                          {"warnings", c.report.warnings.size()}});
        }
        summary["cells"] = jc;
        write_json_file(path_in(o, "summary.json"), summary);
        write_json_file(path_in(o, "best_cv.json"), to_json(out.best));
        write_manifest(o, "gridsearch", seconds_since(t0),
                       {{"task", "classification"},
                        {"grid_size", grid.size()},
                        {"best", {{"key", out.best.config.key()}, {"summary", report_summary(out.best)}}},
                        {"files", files}});
    }
    return out;
}

ClusterOutcome run_cluster(const CommonOptions& o, const LabeledDataset& data, std::size_t folds) {
    const auto t0 = Clock::now();
    const std::vector<PipelineConfig> grid = grid_for(o, Task::Clustering);
    const CvOptions cv{folds, o.stratify, o.jobs};
    note(o, "cluster: " + std::to_string(grid.size()) + " configs, " + std::to_string(folds) + " leave-one-fold-out runs each");
    ClusterOutcome out;
    out.grid = grid_search(grid, data, o.seed, cv);
    note(o, "cluster: search done in " + fixed(out.grid.runtime_seconds, 1) + " s; best " +
                out.grid.best_entry().config.key() + " (ARI " + fixed(out.grid.best_entry().score()) + ")");

    const auto cells = winners(out.grid, [](const PipelineConfig& c) {
        return feature_space_label(c, false) + "|" + std::to_string(c.preprocess.derivative_order);
    });
    std::map<std::string, double> best_by_space;
    for (const auto& [key, idx] : cells) {
        const LeaderboardEntry& e = out.grid.entries[idx];
        ClusteringCell cell;
        cell.space = feature_space_label(e.config, false);
        cell.derivative = e.config.preprocess.derivative_order;
        cell.grid_index = idx;
        cell.short_cv_score = e.score();
        cell.result = final_clustering(e.config, data);
        auto [it, fresh] = best_by_space.emplace(cell.space, cell.result.ari);
        if (!fresh) it->second = std::max(it->second, cell.result.ari);
        note(o, "cluster: " + cell.space + " / " + derivative_label(cell.derivative) + ": ARI " + fixed(cell.result.ari) +
                    ", AMI " + fixed(cell.result.ami) + ", FM " + fixed(cell.result.fm));
        out.cells.push_back(std::move(cell));
    }
    out.best = final_clustering(out.grid.best_entry().config, data);
    if (best_by_space.count("original") && best_by_space.count("DWT") && best_by_space.count("WTT"))
        out.ordering_holds = best_by_space["WTT"] >= best_by_space["DWT"] && best_by_space["DWT"] >= best_by_space["original"];
    const std::string ordering = !out.ordering_holds ? "n/a" : *out.ordering_holds ? "pass" : "warn";
    note(o, "cluster: ARI ordering WTT >= DWT >= original: " + ordering);

    if (!o.out_dir.empty()) {
        ensure_out_dir(o);
        write_text_file(path_in(o, "leaderboard.csv"), leaderboard_csv(out.grid));
        write_json_file(path_in(o, "leaderboard.json"), to_json(out.grid));
        write_text_file(path_in(o, "table_hac.csv"), clustering_table(out.cells));
        write_json_file(path_in(o, "dendrogram.json"), out.best.dendrogram);
        std::ostringstream labels;
        labels << header_line("wavefeat.labels/1", "k=" + std::to_string(std::set<int>(out.best.labels.begin(), out.best.labels.end()).size()))
               << "index,label,cluster\n";
        for (std::size_t i = 0; i < out.best.labels.size(); ++i)
            labels << i << ',' << data.class_names[static_cast<std::size_t>(data.labels[i])] << ',' << out.best.labels[i] << '\n';
        write_text_file(path_in(o, "labels.csv"), labels.str());
        json summary = {{"schema", "wavefeat.cluster/1"}, {"seed", o.seed}, {"folds", folds}};
        summary["best_config"] = to_json(out.best.config);
        summary["best_scores"] = {{"ari", out.best.ari}, {"ami", out.best.ami}, {"fm", out.best.fm}};
        json jc = json::array();
        for (const auto& c : out.cells)
            jc.push_back({{"feature_space", c.space},
                          {"derivative", derivative_label(c.derivative)},
                          {"grid_index", c.grid_index},
                          {"short_cv_ari", c.short_cv_score},
                          {"config", to_json(c.result.config)},
                          {"ari", c.result.ari},
                          {"ami", c.result.ami},
                          {"fm", c.result.fm}});
        summary["cells"] = jc;
        summary["ordering"] = ordering;
        write_json_file(path_in(o, "summary.json"), summary);
        json best_summary = {{"ari", {{"mean", out.best.ari}, {"std", 0.0}}},
                             {"ami", {{"mean", out.best.ami}, {"std", 0.0}}},
                             {"fm", {{"mean", out.best.fm}, {"std", 0.0}}}};
        write_manifest(o, "cluster", seconds_since(t0),
                       {{"task", "clustering"},
                        {"grid_size", grid.size()},
                        {"best", {{"key", out.best.config.key()}, {"summary", best_summary}}},
                        {"ordering", ordering},
                        {"files", {"leaderboard.csv", "leaderboard.json", "table_hac.csv", "dendrogram.json", "labels.csv",
                                   "summary.json"}}});
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"wavefeat: wavelet feature extraction for 1-D spectra"};
    app.set_version_flag("--version", std::string(WAVEFEAT_VERSION));
    app.require_subcommand(1);

    CommonOptions o;
    auto add_common = [&o](CLI::App* sub, bool needs_data) {
        auto* data = sub->add_option("--data", o.data, "Input dataset file");
        if (needs_data) data->required();
        sub->add_option("--format", o.format, "delimited | structured (default: by extension)");
        sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
        sub->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
        sub->add_flag("--stratify", o.stratify, "Stratify folds by class");
        sub->add_flag("--quiet", o.quiet, "No progress output");
    };

    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "Write a synthetic labeled dataset");
    add_common(synth, false);
    synth->add_option("--config", o.config, "JSON overrides for the synthetic spec");
    synth->add_option("--out", synth_out, "Output file (default: <out-dir>/synthetic.csv)");

    std::size_t repeats = 25;
    std::size_t folds = 4;
    auto* gs = app.add_subcommand("gridsearch", "Grid search + repeated CV of the winners");
    add_common(gs, true);
    gs->add_option("--config", o.config, "Grid file (default: built-in grid)");
    gs->add_option("--repeats", repeats, "Repeated-CV rounds for the winners")->check(CLI::Range(1, 1000))->capture_default_str();
    gs->add_option("--folds", folds, "Folds per CV round")->check(CLI::Range(2, 100))->capture_default_str();

    auto* cl = app.add_subcommand("cluster", "Clustering grid search + full-data clustering");
    add_common(cl, true);
    cl->add_option("--config", o.config, "Grid file (default: built-in grid)");
    cl->add_option("--folds", folds, "Folds of the leave-one-fold-out scheme")->check(CLI::Range(2, 100))->capture_default_str();

    std::string predict_path;
    auto* tr = app.add_subcommand("train", "Fit one pipeline on a whole dataset and save it");
    add_common(tr, true);
    tr->add_option("--config", o.config, "Pipeline record (or a gridsearch summary.json)")->required();
    tr->add_option("--predict", predict_path, "Dataset to label with the fitted model");

    std::string run_dir;
    auto* rp = app.add_subcommand("report", "Render a run directory as text and plot-ready series");
    add_common(rp, false);
    rp->add_option("--run", run_dir, "Run directory (default: --out-dir)");

    auto* wl = app.add_subcommand("wavelets", "Dump the wavelet filter registry");
    add_common(wl, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (synth->parsed()) return cmd_synth(o, synth_out.empty() ? path_in(o, "synthetic.csv") : synth_out);
        if (gs->parsed()) return cmd_gridsearch(o, repeats, folds);
        if (cl->parsed()) return cmd_cluster(o, folds);
        if (tr->parsed()) return cmd_train(o, predict_path);
        if (rp->parsed()) return cmd_report(o, run_dir);
        if (wl->parsed()) return cmd_wavelets(o);
    } catch (const InvalidConfig& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsage;
}

}  // namespace wavefeat::cli
