// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>

#include "wavefeat/error.hpp"

namespace wavefeat {

using nlohmann::json;

namespace {

json vector_to_json(const Vector& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

Vector vector_from_json(const json& j) {
    const auto v = j.get<std::vector<double>>();
    return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto data = j.at("data").get<std::vector<double>>();
    if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != data.size())
        throw ParseError("matrix record: data length does not match its shape");
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
    return m;
}

json bank_to_json(const WttFilterBank& bank) {
    json filters = json::array();
    for (const Matrix& u : bank.filters) filters.push_back(matrix_to_json(u));
    return {{"schema", "wavefeat.wtt_bank/1"},
            {"signal_length", bank.signal_length},
            {"depth", bank.depth()},
            {"ranks", bank.ranks},
            {"mode_sizes", bank.mode_sizes},
            {"filters", filters}};
}

WttFilterBank bank_from_json(const json& j) {
    WttFilterBank bank;
    try {
        bank.signal_length = j.at("signal_length").get<std::size_t>();
        bank.ranks = j.at("ranks").get<std::vector<std::size_t>>();
        bank.mode_sizes = j.at("mode_sizes").get<std::vector<std::size_t>>();
        for (const json& f : j.at("filters")) bank.filters.push_back(matrix_from_json(f));
    } catch (const json::exception& e) {
        throw ParseError(std::string("wtt bank record: ") + e.what());
    }
    bank.validate();
    return bank;
}

json lda_to_json(const LdaModel& m) {
    return {{"classes", m.classes},
            {"class_means", matrix_to_json(m.class_means)},
            {"pinv_factor", matrix_to_json(m.pinv_factor)},
            {"log_priors", vector_to_json(m.log_priors)}};
}

LdaModel lda_from_json(const json& j) {
    LdaModel m;
    m.classes = j.at("classes").get<std::vector<int>>();
    m.class_means = matrix_from_json(j.at("class_means"));
    m.pinv_factor = matrix_from_json(j.at("pinv_factor"));
    m.log_priors = vector_from_json(j.at("log_priors"));
    return m;
}

json lr_to_json(const LrModel& m) {
    return {{"classes", m.classes},
            {"weights", matrix_to_json(m.weights)},
            {"intercepts", vector_to_json(m.intercepts)},
            {"penalty", penalty_name(m.penalty)},
            {"C", m.c},
            {"warnings", m.warnings}};
}

LrModel lr_from_json(const json& j) {
    LrModel m;
    m.classes = j.at("classes").get<std::vector<int>>();
    m.weights = matrix_from_json(j.at("weights"));
    m.intercepts = vector_from_json(j.at("intercepts"));
    m.penalty = parse_penalty(j.at("penalty").get<std::string>());
    m.c = j.at("C").get<double>();
    m.warnings = j.value("warnings", std::vector<std::string>{});
    return m;
}

json fitted_to_json(const FittedPipeline& p) {
    json j;
    j["schema"] = "wavefeat.pipeline/1";
    j["tool"] = std::string("wavefeat/") + WAVEFEAT_VERSION;
    j["config"] = to_json(p.config);
    j["scaler"] = {{"means", vector_to_json(p.scaler.means())}, {"stds", vector_to_json(p.scaler.stds())}};
    j["bank"] = p.bank ? bank_to_json(*p.bank) : json(nullptr);
    j["tau"] = p.tau;
    j["signal_length"] = p.signal_length;
    j["class_names"] = p.class_names;
    if (const auto* lda = std::get_if<LdaModel>(&p.model)) {
        j["model"] = {{"kind", "lda"}, {"state", lda_to_json(*lda)}};
    } else if (const auto* lr = std::get_if<LrModel>(&p.model)) {
        j["model"] = {{"kind", "lr"}, {"state", lr_to_json(*lr)}};
    } else {
        j["model"] = nullptr;
    }
    return j;
}

FittedPipeline fitted_from_json(const json& j) {
    try {
        if (j.at("schema").get<std::string>() != "wavefeat.pipeline/1") throw ParseError("not a fitted pipeline record");
        FittedPipeline p;
        p.config = pipeline_from_json(j.at("config"));
        p.scaler = Scaler::from_state(p.config.preprocess, vector_from_json(j.at("scaler").at("means")),
                                      vector_from_json(j.at("scaler").at("stds")));
        if (!j.at("bank").is_null()) p.bank = bank_from_json(j.at("bank"));
        p.tau = j.at("tau").get<double>();
        p.signal_length = j.at("signal_length").get<std::size_t>();
        p.class_names = j.at("class_names").get<std::vector<std::string>>();
        const json& m = j.at("model");
        if (!m.is_null()) {
            const std::string kind = m.at("kind").get<std::string>();
            if (kind == "lda") {
                p.model = lda_from_json(m.at("state"));
            } else if (kind == "lr") {
                p.model = lr_from_json(m.at("state"));
            } else {
                throw ParseError("unknown model kind '" + kind + "'");
            }
        }
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("fitted pipeline record: ") + e.what());
    }
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path);
    std::uint64_t h = 14695981039346656037ULL;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
        h ^= static_cast<unsigned char>(*it);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json make_manifest(const std::string& command, std::uint64_t seed, const std::string& input_path, double wall_seconds) {
    json j = {{"schema", "wavefeat.manifest/1"},
              {"tool", "wavefeat"},
              {"version", WAVEFEAT_VERSION},
              {"command", command},
              {"seed", seed},
              {"wall_seconds", wall_seconds}};
    if (!input_path.empty()) {
        j["input"] = input_path;
        j["input_digest"] = file_digest(input_path);
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j, int indent) {
    write_text_file(path, j.dump(indent) + "\n");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << text;
    if (!out) throw DataError("failed writing " + path);
}

}  // namespace wavefeat
