// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/grid.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

using nlohmann::json;

// A scalar or a list of scalars, both accepted in grid files.
template <typename T>
std::vector<T> values(const json& node, const char* key, std::vector<T> fallback) {
    if (!node.contains(key)) return fallback;
    const json& v = node.at(key);
    std::vector<T> out;
    if (v.is_array()) {
        for (const json& e : v) out.push_back(e.get<T>());
    } else {
        out.push_back(v.get<T>());
    }
    if (out.empty()) throw InvalidConfig(std::string("grid: empty list for '") + key + "'");
    return out;
}

std::vector<double> quantiles(const json& node) {
    if (node.contains("quantile") && node.at("quantile").is_string()) {
        if (node.at("quantile").get<std::string>() != "default")
            throw InvalidConfig("grid: quantile must be a number, a list or \"default\"");
        return default_quantile_grid();
    }
    return values<double>(node, "quantile", default_quantile_grid());
}

std::vector<std::string> wavelet_names(const json& node) {
    std::vector<std::string> out;
    for (const std::string& name : values<std::string>(node, "wavelet", {"db4"})) {
        if (name == "all") {
            for (const WaveletSpec& w : wavelet_registry()) out.push_back(w.name());
        } else if (name == "db" || name == "sym" || name == "coif" || name == "bior" || name == "rbio") {
            // whole family
            for (const WaveletSpec& w : wavelet_registry()) {
                const std::string n = w.name();
                if (n.rfind(name, 0) == 0 && n.size() > name.size() &&
                    (std::isdigit(static_cast<unsigned char>(n[name.size()])) != 0))
                    out.push_back(n);
            }
        } else {
            out.push_back(lookup_wavelet(name).name());
        }
    }
    return out;
}

std::vector<DecompositionConfig> decompositions(const json& list) {
    std::vector<DecompositionConfig> out;
    for (const json& d : list) {
        const std::string kind = d.at("kind").get<std::string>();
        if (kind == "none") {
            out.push_back({});
        } else if (kind == "dwt") {
            const auto modes = values<std::string>(d, "mode", {"symmetric"});
            const auto levels = values<std::size_t>(d, "level", {0});
            for (const std::string& w : wavelet_names(d))
                for (const std::string& m : modes)
                    for (std::size_t level : levels) {
                        DecompositionConfig c;
                        c.kind = DecompositionKind::Dwt;
                        c.wavelet = w;
                        c.mode = parse_padding(m);
                        c.level = level;
                        out.push_back(c);
                    }
        } else if (kind == "wtt") {
            for (std::size_t r : values<std::size_t>(d, "rank", {1})) {
                DecompositionConfig c;
                c.kind = DecompositionKind::Wtt;
                c.rank = r;
                out.push_back(c);
            }
        } else {
            throw InvalidConfig("grid: unknown decomposition kind '" + kind + "'");
        }
    }
    return out;
}

std::vector<TransformConfig> transforms(const json& list) {
    std::vector<TransformConfig> out;
    for (const json& t : list) {
        const std::string kind = t.at("kind").get<std::string>();
        if (kind == "none") {
            out.push_back({});
        } else if (kind == "threshold") {
            for (const std::string& rule : values<std::string>(t, "rule", {"hard"})) {
                if (rule != "hard" && rule != "soft") throw InvalidConfig("grid: threshold rule must be hard or soft");
                for (double q : quantiles(t))
                    out.push_back({FeatureMap::Threshold, rule == "hard" ? ThresholdKind::Hard : ThresholdKind::Soft, q});
            }
        } else if (kind == "sign" || kind == "contrast") {
            const FeatureMap map = kind == "sign" ? FeatureMap::Sign : FeatureMap::Contrast;
            const ThresholdKind rule = kind == "sign" ? ThresholdKind::Hard : ThresholdKind::Soft;
            for (double q : quantiles(t)) out.push_back({map, rule, q});
        } else {
            throw InvalidConfig("grid: unknown transform kind '" + kind + "'");
        }
    }
    return out;
}

std::vector<ModelConfig> models(const json& list) {
    std::vector<ModelConfig> out;
    for (const json& m : list) {
        const std::string kind = m.at("kind").get<std::string>();
        if (kind == "lda") {
            out.push_back({});
        } else if (kind == "lr") {
            for (const std::string& p : values<std::string>(m, "penalty", {"l2"}))
                for (double c : values<double>(m, "C", {1.0})) {
                    ModelConfig mc;
                    mc.kind = ModelKind::Lr;
                    mc.penalty = parse_penalty(p);
                    mc.c = c;
                    out.push_back(mc);
                }
        } else if (kind == "hac") {
            for (const std::string& a : values<std::string>(m, "affinity", {"euclidean"}))
                for (const std::string& l : values<std::string>(m, "linkage", {"ward"})) {
                    ModelConfig mc;
                    mc.kind = ModelKind::Hac;
                    mc.affinity = parse_affinity(a);
                    mc.linkage = parse_linkage(l);
                    out.push_back(mc);
                }
        } else {
            throw InvalidConfig("grid: unknown model kind '" + kind + "'");
        }
    }
    return out;
}

}  // namespace

std::vector<double> default_quantile_grid() {
    std::vector<double> q(8);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = 1.0 - 0.5 * std::pow(0.02, static_cast<double>(i) / 7.0);
    q.back() = 0.99;
    return q;
}

std::vector<PipelineConfig> expand_grid(const json& doc) {
    try {
        const json& pre = doc.contains("preprocess") ? doc.at("preprocess") : json::object();
        const auto derivs = values<int>(pre, "derivative", {0});
        const auto centers = values<bool>(pre, "center", {false});
        const auto scales = values<bool>(pre, "scale", {false});
        const auto axes = values<std::string>(pre, "axis", {"feature"});
        const auto abses = values<bool>(pre, "abs", {false});
        const auto decs = decompositions(doc.at("decompositions"));
        const auto trs = transforms(doc.contains("transforms") ? doc.at("transforms") : json::array({{{"kind", "none"}}}));
        const auto mds = models(doc.at("models"));

        std::vector<PipelineConfig> out;
        std::set<std::string> seen;
        for (int d : derivs)
            for (bool c : centers)
                for (bool s : scales)
                    for (const std::string& axis : axes)
                        for (bool a : abses)
                            for (const auto& dec : decs)
                                for (const auto& tr : trs)
                                    for (const auto& md : mds) {
                                        if (axis != "feature" && axis != "sample")
                                            throw InvalidConfig("grid: axis must be feature or sample");
                                        PipelineConfig cfg;
                                        cfg.preprocess = {d, c, s, axis == "feature" ? ScaleAxis::Feature : ScaleAxis::Sample, a};
                                        // the axis means nothing without centering or scaling
                                        if (!c && !s) cfg.preprocess.axis = ScaleAxis::Feature;
                                        cfg.decomposition = dec;
                                        cfg.transform = tr;
                                        cfg.model = md;
                                        try {
                                            cfg.validate();
                                        } catch (const InvalidConfig&) {
                                            continue;
                                        } catch (const InvalidInput&) {
                                            continue;
                                        }
                                        if (seen.insert(cfg.key()).second) out.push_back(cfg);
                                    }
        if (out.empty()) throw InvalidConfig("grid: no valid configuration");
        return out;
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("grid: ") + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidConfig(std::string("grid: ") + e.what());
    }
}

json default_grid(Task task) {
    if (task == Task::Classification) {
        return json::parse(R"({
  "schema": "wavefeat.grid/1",
  "preprocess": {"derivative": [0, 1, 2], "center": true, "scale": true, "axis": "feature", "abs": false},
  "decompositions": [
    {"kind": "none"},
    {"kind": "dwt", "wavelet": ["db4", "sym5", "coif2", "bior2.2"], "mode": ["symmetric", "periodization"], "level": 0},
    {"kind": "wtt", "rank": [1, 2, 4]}
  ],
  "transforms": [
    {"kind": "none"},
    {"kind": "threshold", "rule": ["hard", "soft"], "quantile": [0.5, 0.8, 0.95]},
    {"kind": "sign", "quantile": [0.5, 0.8, 0.95]}
  ],
  "models": [
    {"kind": "lda"},
    {"kind": "lr", "penalty": "l2", "C": [0.1, 10, 1000]}
  ]
})");
    }
    return json::parse(R"({
  "schema": "wavefeat.grid/1",
  "preprocess": {"derivative": [0, 1, 2], "center": true, "scale": [false, true],
                 "axis": ["feature", "sample"], "abs": [false, true]},
  "decompositions": [
    {"kind": "none"},
    {"kind": "dwt", "wavelet": ["db4", "sym5"], "mode": "periodization", "level": 0},
    {"kind": "wtt", "rank": [2, 4, 6]}
  ],
  "transforms": [
    {"kind": "none"},
    {"kind": "threshold", "rule": "soft", "quantile": [0.8, 0.95]},
    {"kind": "contrast", "quantile": [0.5, 0.8, 0.9, 0.95]}
  ],
  "models": [
    {"kind": "hac", "affinity": "euclidean", "linkage": ["ward", "average"]},
    {"kind": "hac", "affinity": "cosine", "linkage": "average"}
  ]
})");
}

std::vector<PipelineConfig> load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open grid file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("grid file " + path + ": " + e.what());
    }
    return expand_grid(doc);
}

}  // namespace wavefeat
