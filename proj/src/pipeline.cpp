// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

std::shared_ptr<const LinearTransform> make_transform(const DecompositionConfig& d, const std::optional<WttFilterBank>& bank,
                                                      std::size_t length) {
    switch (d.kind) {
        case DecompositionKind::None:
            return nullptr;
        case DecompositionKind::Dwt:
            return std::make_shared<DwtTransform>(lookup_wavelet(d.wavelet), d.mode, d.level, length);
        case DecompositionKind::Wtt:
            if (!bank) throw InvalidConfig("wtt decomposition without a trained bank");
            return std::make_shared<WttTransform>(*bank);
    }
    return nullptr;
}

Matrix apply_rows(const LinearTransform* w, const Matrix& signals) {
    if (w == nullptr) return signals;
    Matrix out;
    std::vector<double> row(static_cast<std::size_t>(signals.cols()));
    for (Eigen::Index r = 0; r < signals.rows(); ++r) {
        for (Eigen::Index c = 0; c < signals.cols(); ++c) row[static_cast<std::size_t>(c)] = signals(r, c);
        const std::vector<double> coeffs = w->forward(row);
        if (r == 0) out.resize(signals.rows(), static_cast<Eigen::Index>(coeffs.size()));
        out.row(r) = Eigen::Map<const Vector>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size())).transpose();
    }
    return out;
}

Matrix scaled_signals(const Scaler& scaler, const PreprocessConfig& pre, const Matrix& prepared) {
    Matrix s = scaler.apply(prepared);
    if (pre.take_abs) s = s.cwiseAbs();
    return s;
}

std::vector<double> row_vector(const Matrix& m, Eigen::Index r) {
    std::vector<double> v(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(c)] = m(r, c);
    return v;
}

void set_row(Matrix& m, Eigen::Index r, const std::vector<double>& v) {
    m.row(r) = Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())).transpose();
}

// Features for every row of `signals` / `coefficients`.
Matrix map_rows(const Matrix& signals, const Matrix& coefficients, const LinearTransform* w, const TransformConfig& t,
                double tau, std::span<const std::size_t> rows) {
    Matrix out(static_cast<Eigen::Index>(rows.size()),
               t.map == FeatureMap::Contrast ? signals.cols() : coefficients.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(rows[i]);
        const auto oi = static_cast<Eigen::Index>(i);
        switch (t.map) {
            case FeatureMap::None:
                out.row(oi) = coefficients.row(r);
                break;
            case FeatureMap::Threshold:
                set_row(out, oi, threshold(row_vector(coefficients, r), {t.kind, tau}));
                break;
            case FeatureMap::Sign:
                set_row(out, oi, sign_quantize(row_vector(coefficients, r), tau));
                break;
            case FeatureMap::Contrast: {
                if (w == nullptr) throw InvalidConfig("contrast needs a decomposition");
                const std::vector<double> trend = w->inverse(threshold(row_vector(coefficients, r), {ThresholdKind::Soft, tau}));
                for (Eigen::Index c = 0; c < signals.cols(); ++c) out(oi, c) = signals(r, c) - trend[static_cast<std::size_t>(c)];
                break;
            }
        }
    }
    return out;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::string_view decomposition_name(DecompositionKind k) {
    switch (k) {
        case DecompositionKind::None:
            return "none";
        case DecompositionKind::Dwt:
            return "dwt";
        case DecompositionKind::Wtt:
            return "wtt";
    }
    return "unknown";
}

std::string_view feature_map_name(FeatureMap m) {
    switch (m) {
        case FeatureMap::None:
            return "none";
        case FeatureMap::Threshold:
            return "threshold";
        case FeatureMap::Sign:
            return "sign";
        case FeatureMap::Contrast:
            return "contrast";
    }
    return "unknown";
}

std::string_view model_name(ModelKind k) {
    switch (k) {
        case ModelKind::Lda:
            return "lda";
        case ModelKind::Lr:
            return "lr";
        case ModelKind::Hac:
            return "hac";
    }
    return "unknown";
}

void PipelineConfig::validate() const {
    preprocess.validate();
    const bool clustering = task() == Task::Clustering;
    if (decomposition.kind == DecompositionKind::None && transform.map != FeatureMap::None)
        throw InvalidConfig("transform '" + std::string(feature_map_name(transform.map)) + "' needs a decomposition");
    if (transform.map == FeatureMap::Contrast && !clustering)
        throw InvalidConfig("contrasting is only used in clustering pipelines");
    if (transform.map == FeatureMap::Sign && clustering)
        throw InvalidConfig("sign quantization is only used in classification pipelines");
    if (transform.map != FeatureMap::None && !(transform.quantile >= 0.0 && transform.quantile <= 1.0))
        throw InvalidConfig("threshold quantile must lie in [0, 1]");
    if (decomposition.kind == DecompositionKind::Dwt) lookup_wavelet(decomposition.wavelet);
    if (decomposition.kind == DecompositionKind::Wtt && decomposition.rank < 1) throw InvalidConfig("wtt rank must be >= 1");
    if (model.kind == ModelKind::Lr && !(model.c > 0.0)) throw InvalidConfig("C must be positive");
    if (model.kind == ModelKind::Hac && model.linkage == Linkage::Ward && model.affinity != Affinity::Euclidean)
        throw InvalidConfig("ward linkage requires euclidean affinity");
}

std::string PipelineConfig::feature_key() const {
    std::ostringstream os;
    os << "d" << preprocess.derivative_order << " c" << preprocess.center << " s" << preprocess.scale << " "
       << (preprocess.axis == ScaleAxis::Feature ? "feature" : "sample") << " abs" << preprocess.take_abs << " | ";
    switch (decomposition.kind) {
        case DecompositionKind::None:
            os << "none";
            break;
        case DecompositionKind::Dwt:
            os << "dwt " << decomposition.wavelet << " " << padding_name(decomposition.mode) << " L"
               << decomposition.level;
            break;
        case DecompositionKind::Wtt:
            os << "wtt r" << decomposition.rank;
            break;
    }
    return os.str();
}

std::string PipelineConfig::key() const {
    std::ostringstream os;
    os << feature_key() << " | " << feature_map_name(transform.map);
    if (transform.map == FeatureMap::Threshold) os << " " << (transform.kind == ThresholdKind::Hard ? "hard" : "soft");
    if (transform.map != FeatureMap::None) os << " q" << format_number(transform.quantile);
    os << " | " << model_name(model.kind);
    if (model.kind == ModelKind::Lr) os << " " << penalty_name(model.penalty) << " C" << format_number(model.c);
    if (model.kind == ModelKind::Hac) os << " " << affinity_name(model.affinity) << " " << linkage_name(model.linkage);
    return os.str();
}

nlohmann::json to_json(const PipelineConfig& c) {
    nlohmann::json j;
    j["preprocess"] = {{"derivative", c.preprocess.derivative_order},
                       {"center", c.preprocess.center},
                       {"scale", c.preprocess.scale},
                       {"axis", c.preprocess.axis == ScaleAxis::Feature ? "feature" : "sample"},
                       {"abs", c.preprocess.take_abs}};
    nlohmann::json d = {{"kind", decomposition_name(c.decomposition.kind)}};
    if (c.decomposition.kind == DecompositionKind::Dwt) {
        d["wavelet"] = c.decomposition.wavelet;
        d["mode"] = padding_name(c.decomposition.mode);
        d["level"] = c.decomposition.level;
    } else if (c.decomposition.kind == DecompositionKind::Wtt) {
        d["rank"] = c.decomposition.rank;
    }
    j["decomposition"] = d;
    nlohmann::json t = {{"kind", feature_map_name(c.transform.map)}};
    if (c.transform.map == FeatureMap::Threshold) t["rule"] = c.transform.kind == ThresholdKind::Hard ? "hard" : "soft";
    if (c.transform.map != FeatureMap::None) t["quantile"] = c.transform.quantile;
    j["transform"] = t;
    nlohmann::json m = {{"kind", model_name(c.model.kind)}};
    if (c.model.kind == ModelKind::Lr) {
        m["penalty"] = penalty_name(c.model.penalty);
        m["C"] = c.model.c;
    } else if (c.model.kind == ModelKind::Hac) {
        m["affinity"] = affinity_name(c.model.affinity);
        m["linkage"] = linkage_name(c.model.linkage);
    }
    j["model"] = m;
    return j;
}

PipelineConfig pipeline_from_json(const nlohmann::json& j) {
    try {
        PipelineConfig c;
        const auto& p = j.at("preprocess");
        c.preprocess.derivative_order = p.value("derivative", 0);
        c.preprocess.center = p.value("center", false);
        c.preprocess.scale = p.value("scale", false);
        const std::string axis = p.value("axis", std::string("feature"));
        if (axis != "feature" && axis != "sample") throw InvalidConfig("axis must be 'feature' or 'sample'");
        c.preprocess.axis = axis == "feature" ? ScaleAxis::Feature : ScaleAxis::Sample;
        c.preprocess.take_abs = p.value("abs", false);

        const auto& d = j.at("decomposition");
        const std::string dk = d.at("kind").get<std::string>();
        if (dk == "none") {
            c.decomposition.kind = DecompositionKind::None;
        } else if (dk == "dwt") {
            c.decomposition.kind = DecompositionKind::Dwt;
            c.decomposition.wavelet = d.at("wavelet").get<std::string>();
            c.decomposition.mode = parse_padding(d.value("mode", std::string("symmetric")));
            c.decomposition.level = d.value("level", std::size_t{0});
        } else if (dk == "wtt") {
            c.decomposition.kind = DecompositionKind::Wtt;
            c.decomposition.rank = d.at("rank").get<std::size_t>();
        } else {
            throw InvalidConfig("unknown decomposition: " + dk);
        }

        const auto& t = j.at("transform");
        const std::string tk = t.at("kind").get<std::string>();
        if (tk == "none") {
            c.transform.map = FeatureMap::None;
        } else if (tk == "threshold") {
            c.transform.map = FeatureMap::Threshold;
            const std::string rule = t.at("rule").get<std::string>();
            if (rule != "hard" && rule != "soft") throw InvalidConfig("threshold rule must be 'hard' or 'soft'");
            c.transform.kind = rule == "hard" ? ThresholdKind::Hard : ThresholdKind::Soft;
        } else if (tk == "sign") {
            c.transform.map = FeatureMap::Sign;
        } else if (tk == "contrast") {
            c.transform.map = FeatureMap::Contrast;
        } else {
            throw InvalidConfig("unknown transform: " + tk);
        }
        if (c.transform.map != FeatureMap::None) c.transform.quantile = t.at("quantile").get<double>();

        const auto& m = j.at("model");
        const std::string mk = m.at("kind").get<std::string>();
        if (mk == "lda") {
            c.model.kind = ModelKind::Lda;
        } else if (mk == "lr") {
            c.model.kind = ModelKind::Lr;
            c.model.penalty = parse_penalty(m.at("penalty").get<std::string>());
            c.model.c = m.at("C").get<double>();
        } else if (mk == "hac") {
            c.model.kind = ModelKind::Hac;
            c.model.affinity = parse_affinity(m.at("affinity").get<std::string>());
            c.model.linkage = parse_linkage(m.at("linkage").get<std::string>());
        } else {
            throw InvalidConfig("unknown model: " + mk);
        }
        c.validate();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("pipeline config: ") + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidConfig(e.what());
    }
}

LabeledDataset prepare_signals(const LabeledDataset& raw, const PreprocessConfig& pre, DecompositionKind kind) {
    LabeledDataset out = pre.derivative_order > 0 ? derivative(raw, pre.derivative_order) : raw;
    if (kind == DecompositionKind::Wtt) out = resample_pow2(out);
    return out;
}

FoldFeatures fit_fold_features(const PipelineConfig& config, const LabeledDataset& prepared,
                               std::span<const std::size_t> fit_rows) {
    if (fit_rows.empty()) throw InvalidInput("fit_fold_features: no rows to fit on");
    const auto n = static_cast<std::size_t>(prepared.intensities.rows());
    Matrix fit_block(static_cast<Eigen::Index>(fit_rows.size()), prepared.intensities.cols());
    for (std::size_t i = 0; i < fit_rows.size(); ++i) {
        if (fit_rows[i] >= n) throw InvalidInput("fit_fold_features: row index out of range");
        fit_block.row(static_cast<Eigen::Index>(i)) = prepared.intensities.row(static_cast<Eigen::Index>(fit_rows[i]));
    }

    FoldFeatures f;
    f.scaler = Scaler::fit(fit_block, config.preprocess);
    f.signals = scaled_signals(f.scaler, config.preprocess, prepared.intensities);
    if (config.decomposition.kind == DecompositionKind::Wtt) {
        Matrix fit_signals(static_cast<Eigen::Index>(fit_rows.size()), f.signals.cols());
        for (std::size_t i = 0; i < fit_rows.size(); ++i)
            fit_signals.row(static_cast<Eigen::Index>(i)) = f.signals.row(static_cast<Eigen::Index>(fit_rows[i]));
        f.bank = train_group_filters(fit_signals, config.decomposition.rank);
    }
    f.transform = make_transform(config.decomposition, f.bank, static_cast<std::size_t>(f.signals.cols()));
    f.coefficients = apply_rows(f.transform.get(), f.signals);
    if (f.transform) {
        f.fit_abs_sorted.reserve(fit_rows.size() * static_cast<std::size_t>(f.coefficients.cols()));
        for (std::size_t r : fit_rows) {
            for (Eigen::Index c = 0; c < f.coefficients.cols(); ++c)
                f.fit_abs_sorted.push_back(std::abs(f.coefficients(static_cast<Eigen::Index>(r), c)));
        }
        std::sort(f.fit_abs_sorted.begin(), f.fit_abs_sorted.end());
    }
    return f;
}

double fitted_tau(const FoldFeatures& f, const TransformConfig& t) {
    if (t.map == FeatureMap::None || f.fit_abs_sorted.empty()) return 0.0;
    const auto& v = f.fit_abs_sorted;
    const double pos = t.quantile * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

Matrix feature_rows(const FoldFeatures& f, const TransformConfig& t, double tau, std::span<const std::size_t> rows) {
    return map_rows(f.signals, f.coefficients, f.transform.get(), t, tau, rows);
}

FittedPipeline fit_pipeline(const PipelineConfig& config, const LabeledDataset& raw, std::span<const std::size_t> train_rows) {
    config.validate();
    raw.validate();
    const LabeledDataset prepared = prepare_signals(raw, config.preprocess, config.decomposition.kind);
    const FoldFeatures f = fit_fold_features(config, prepared, train_rows);

    FittedPipeline out;
    out.config = config;
    out.scaler = f.scaler;
    out.bank = f.bank;
    out.tau = fitted_tau(f, config.transform);
    out.signal_length = prepared.length();
    out.class_names = raw.class_names;
    if (config.task() == Task::Classification) {
        const Matrix x = feature_rows(f, config.transform, out.tau, train_rows);
        std::vector<int> y;
        y.reserve(train_rows.size());
        for (std::size_t r : train_rows) y.push_back(raw.labels[r]);
        if (config.model.kind == ModelKind::Lda) {
            out.model = lda_fit(x, y);
        } else {
            out.model = lr_fit(x, y, {config.model.penalty, config.model.c});
        }
    }
    return out;
}

Matrix FittedPipeline::features(const LabeledDataset& raw) const {
    const LabeledDataset prepared = prepare_signals(raw, config.preprocess, config.decomposition.kind);
    if (prepared.length() != signal_length) throw InvalidInput("pipeline: signal length differs from the training data");
    const Matrix signals = scaled_signals(scaler, config.preprocess, prepared.intensities);
    const auto w = make_transform(config.decomposition, bank, signal_length);
    const Matrix coefficients = apply_rows(w.get(), signals);
    std::vector<std::size_t> rows(raw.sample_count());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return map_rows(signals, coefficients, w.get(), config.transform, tau, rows);
}

std::vector<int> FittedPipeline::predict(const LabeledDataset& raw) const {
    const Matrix x = features(raw);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
        const Vector row = x.row(r).transpose();
        const std::span<const double> s(row.data(), static_cast<std::size_t>(row.size()));
        if (const auto* lda = std::get_if<LdaModel>(&model)) {
            out.push_back(lda_predict(*lda, s));
        } else if (const auto* lr = std::get_if<LrModel>(&model)) {
            out.push_back(lr_predict(*lr, s));
        } else {
            throw InvalidConfig("predict: clustering pipelines have no classifier");
        }
    }
    return out;
}

}  // namespace wavefeat
