// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wavefeat/error.hpp"

namespace wavefeat {

namespace {

constexpr const char* kSchema = "wavefeat.dataset/1";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_number(std::string_view s, std::size_t line_no) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + std::string(s) + "'");
    return v;
}

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 4) throw InconsistentGrid("dataset grid needs at least 4 wavenumbers");
    const bool up = grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (up ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1]))
            throw InconsistentGrid("wavenumbers are not strictly monotone at column " + std::to_string(i + 1));
    }
}

// Class index by name; declared classes keep their order, new ones append.
int class_index(std::vector<std::string>& names, std::map<std::string, int>& index, const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    names.push_back(name);
    index.emplace(name, static_cast<int>(names.size() - 1));
    return static_cast<int>(names.size() - 1);
}

void finish(LabeledDataset& d) {
    if (d.sample_count() < 2) throw DataError("dataset needs at least 2 samples");
    if (!d.intensities.allFinite()) throw DataError("dataset contains non-finite intensities");
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw NumericalError("cannot format number");
    return std::string(buf, ptr);
}

DataFormat parse_format(std::string_view name) {
    if (name == "delimited" || name == "csv") return DataFormat::Delimited;
    if (name == "structured" || name == "json") return DataFormat::Structured;
    throw InvalidInput("unknown data format '" + std::string(name) + "' (expected delimited or structured)");
}

DataFormat format_for_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? DataFormat::Structured
                                                                              : DataFormat::Delimited;
}

LabeledDataset read_delimited(std::istream& in) {
    LabeledDataset d;
    std::map<std::string, int> index;
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty()) continue;
        if (view.front() == '#') {
            // "# classes=a|b|c" fixes class order, including classes without samples
            const std::size_t pos = view.find("classes=");
            if (pos != std::string_view::npos && !have_header) {
                std::string_view rest = view.substr(pos + 8);
                const std::size_t space = rest.find(' ');
                if (space != std::string_view::npos) rest = rest.substr(0, space);
                std::size_t start = 0;
                while (start <= rest.size()) {
                    const std::size_t bar = rest.find('|', start);
                    const std::string_view name = rest.substr(start, bar == std::string_view::npos ? rest.npos : bar - start);
                    if (!name.empty()) class_index(d.class_names, index, std::string(name));
                    if (bar == std::string_view::npos) break;
                    start = bar + 1;
                }
            }
            continue;
        }
        const auto cells = split(view);
        if (!have_header) {
            if (cells.front() != "label") throw ParseError("line " + std::to_string(line_no) + ": header must start with 'label'");
            for (std::size_t i = 1; i < cells.size(); ++i) d.wavenumbers.push_back(parse_number(cells[i], line_no));
            check_grid(d.wavenumbers);
            have_header = true;
            continue;
        }
        if (cells.size() != d.wavenumbers.size() + 1)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(d.wavenumbers.size() + 1) +
                             " fields, found " + std::to_string(cells.size()));
        if (cells.front().empty()) throw MissingLabel("line " + std::to_string(line_no) + ": sample has no label");
        d.labels.push_back(class_index(d.class_names, index, std::string(cells.front())));
        std::vector<double> row;
        row.reserve(d.wavenumbers.size());
        for (std::size_t i = 1; i < cells.size(); ++i) row.push_back(parse_number(cells[i], line_no));
        rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError("no header row");
    d.intensities.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d.wavenumbers.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            d.intensities(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    finish(d);
    return d;
}

LabeledDataset read_structured(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("structured dataset: ") + e.what());
    }
    LabeledDataset d;
    std::map<std::string, int> index;
    try {
        if (doc.contains("schema") && doc.at("schema").get<std::string>() != kSchema)
            throw ParseError("structured dataset: unsupported schema '" + doc.at("schema").get<std::string>() + "'");
        d.wavenumbers = doc.at("wavenumbers").get<std::vector<double>>();
        check_grid(d.wavenumbers);
        if (doc.contains("classes"))
            for (const auto& name : doc.at("classes")) class_index(d.class_names, index, name.get<std::string>());
        const auto& samples = doc.at("samples");
        if (!samples.is_array()) throw ParseError("structured dataset: 'samples' must be a list");
        d.intensities.resize(static_cast<Eigen::Index>(samples.size()), static_cast<Eigen::Index>(d.wavenumbers.size()));
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            if (!s.contains("label") || s.at("label").is_null() ||
                (s.at("label").is_string() && s.at("label").get<std::string>().empty()))
                throw MissingLabel("sample " + std::to_string(i) + " has no label");
            if (s.contains("wavenumbers") && s.at("wavenumbers").get<std::vector<double>>() != d.wavenumbers)
                throw InconsistentGrid("sample " + std::to_string(i) + " uses a different wavenumber grid");
            const auto v = s.at("intensities").get<std::vector<double>>();
            if (v.size() != d.wavenumbers.size())
                throw ParseError("sample " + std::to_string(i) + ": expected " + std::to_string(d.wavenumbers.size()) +
                                 " intensities, found " + std::to_string(v.size()));
            const auto& label = s.at("label");
            d.labels.push_back(class_index(d.class_names, index, label.is_string() ? label.get<std::string>() : label.dump()));
            for (std::size_t c = 0; c < v.size(); ++c)
                d.intensities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = v[c];
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("structured dataset: ") + e.what());
    }
    finish(d);
    return d;
}

LabeledDataset load_dataset(const std::string& path, DataFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open dataset file: " + path);
    return format == DataFormat::Delimited ? read_delimited(in) : read_structured(in);
}

void write_delimited(std::ostream& out, const LabeledDataset& data) {
    data.validate();
    for (const std::string& name : data.class_names)
        if (name.empty() || name.find_first_of(",| \t\r\n#") != std::string::npos)
            throw InvalidInput("class name '" + name + "' cannot be stored in the delimited format");
    out << "# schema=" << kSchema << " tool=wavefeat/" << WAVEFEAT_VERSION << " classes=";
    for (std::size_t i = 0; i < data.class_names.size(); ++i) out << (i ? "|" : "") << data.class_names[i];
    out << "\nlabel";
    for (double w : data.wavenumbers) out << ',' << format_double(w);
    out << '\n';
    for (std::size_t r = 0; r < data.sample_count(); ++r) {
        out << data.class_names[static_cast<std::size_t>(data.labels[r])];
        for (Eigen::Index c = 0; c < data.intensities.cols(); ++c)
            out << ',' << format_double(data.intensities(static_cast<Eigen::Index>(r), c));
        out << '\n';
    }
}

void write_structured(std::ostream& out, const LabeledDataset& data) {
    data.validate();
    nlohmann::json doc;
    doc["schema"] = kSchema;
    doc["tool"] = std::string("wavefeat/") + WAVEFEAT_VERSION;
    doc["wavenumbers"] = data.wavenumbers;
    doc["classes"] = data.class_names;
    nlohmann::json samples = nlohmann::json::array();
    for (std::size_t r = 0; r < data.sample_count(); ++r) {
        const Vector row = data.intensities.row(static_cast<Eigen::Index>(r)).transpose();
        samples.push_back({{"label", data.class_names[static_cast<std::size_t>(data.labels[r])]},
                           {"intensities", std::vector<double>(row.data(), row.data() + row.size())}});
    }
    doc["samples"] = samples;
    out << doc.dump() << '\n';
}

void save_dataset(const LabeledDataset& data, const std::string& path, DataFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write dataset file: " + path);
    if (format == DataFormat::Delimited) {
        write_delimited(out, data);
    } else {
        write_structured(out, data);
    }
    if (!out) throw DataError("failed writing dataset file: " + path);
}

}  // namespace wavefeat
