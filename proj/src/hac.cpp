// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <nlohmann/json.hpp>

#include "wavefeat/error.hpp"
#include "wavefeat/models.hpp"

namespace wavefeat {

Matrix pairwise_distances(const Matrix& samples, Affinity affinity) {
    const Eigen::Index m = samples.rows();
    if (m < 1) throw InvalidInput("pairwise_distances: no samples");
    Vector norms;
    if (affinity == Affinity::Cosine) {
        norms = samples.rowwise().norm();
        for (Eigen::Index i = 0; i < m; ++i) {
            if (norms(i) == 0.0) throw InvalidInput("pairwise_distances: zero vector under cosine affinity");
        }
    }
    Matrix d = Matrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            double v = 0.0;
            switch (affinity) {
                case Affinity::Euclidean:
                    v = (samples.row(i) - samples.row(j)).norm();
                    break;
                case Affinity::Manhattan:
                    v = (samples.row(i) - samples.row(j)).lpNorm<1>();
                    break;
                case Affinity::Cosine:
                    v = 1.0 - samples.row(i).dot(samples.row(j)) / (norms(i) * norms(j));
                    v = std::max(v, 0.0);
                    break;
            }
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return d;
}

LinkageTree hac_fit(const Matrix& distances, Linkage linkage, Affinity affinity) {
    const Eigen::Index m = distances.rows();
    if (m < 2 || distances.cols() != m) throw InvalidInput("hac_fit: need a square distance matrix over >= 2 samples");
    if (!distances.allFinite()) throw InvalidInput("hac_fit: non-finite distances");
    if (linkage == Linkage::Ward && affinity != Affinity::Euclidean)
        throw InvalidConfig("hac_fit: ward linkage requires euclidean affinity");

    LinkageTree tree;
    tree.leaf_count = static_cast<std::size_t>(m);
    tree.affinity = affinity;
    tree.linkage = linkage;

    // slot i holds node slot_node[i]; merged clusters reuse the lower slot
    Matrix d = distances;
    std::vector<std::size_t> slot_node(static_cast<std::size_t>(m));
    std::iota(slot_node.begin(), slot_node.end(), std::size_t{0});
    std::vector<std::size_t> size(static_cast<std::size_t>(m), 1);
    std::vector<bool> active(static_cast<std::size_t>(m), true);

    for (Eigen::Index step = 0; step + 1 < m; ++step) {
        Eigen::Index bi = -1;
        Eigen::Index bj = -1;
        double best = std::numeric_limits<double>::infinity();
        std::pair<std::size_t, std::size_t> best_key{0, 0};
        for (Eigen::Index i = 0; i < m; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            for (Eigen::Index j = i + 1; j < m; ++j) {
                if (!active[static_cast<std::size_t>(j)]) continue;
                const std::size_t ni = slot_node[static_cast<std::size_t>(i)];
                const std::size_t nj = slot_node[static_cast<std::size_t>(j)];
                const std::pair<std::size_t, std::size_t> key{std::min(ni, nj), std::max(ni, nj)};
                const double v = d(i, j);
                if (bi < 0 || v < best || (v == best && key < best_key)) {
                    best = v;
                    best_key = key;
                    bi = i;
                    bj = j;
                }
            }
        }
        const auto ui = static_cast<std::size_t>(bi);
        const auto uj = static_cast<std::size_t>(bj);
        const double ni = static_cast<double>(size[ui]);
        const double nj = static_cast<double>(size[uj]);
        for (Eigen::Index k = 0; k < m; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            if (!active[uk] || k == bi || k == bj) continue;
            const double dki = d(k, bi);
            const double dkj = d(k, bj);
            double v = 0.0;
            switch (linkage) {
                case Linkage::Single:
                    v = std::min(dki, dkj);
                    break;
                case Linkage::Complete:
                    v = std::max(dki, dkj);
                    break;
                case Linkage::Average:
                    v = (ni * dki + nj * dkj) / (ni + nj);
                    break;
                case Linkage::Ward: {
                    const double nk = static_cast<double>(size[uk]);
                    const double sq = ((ni + nk) * dki * dki + (nj + nk) * dkj * dkj - nk * best * best) / (ni + nj + nk);
                    v = std::sqrt(std::max(sq, 0.0));
                    break;
                }
            }
            d(k, bi) = v;
            d(bi, k) = v;
        }
        const std::size_t new_size = size[ui] + size[uj];
        tree.merges.push_back({best_key.first, best_key.second, best, new_size});
        slot_node[ui] = static_cast<std::size_t>(m) + static_cast<std::size_t>(step);
        size[ui] = new_size;
        active[uj] = false;
    }
    return tree;
}

LinkageTree hac_fit_samples(const Matrix& samples, Linkage linkage, Affinity affinity) {
    if (linkage == Linkage::Ward && affinity != Affinity::Euclidean)
        throw InvalidConfig("hac_fit: ward linkage requires euclidean affinity");
    return hac_fit(pairwise_distances(samples, affinity), linkage, affinity);
}

std::vector<int> cut_tree(const LinkageTree& tree, std::size_t k) {
    const std::size_t m = tree.leaf_count;
    if (k < 1 || k > m) throw InvalidInput("cut_tree: k must lie in [1, " + std::to_string(m) + "]");
    // union-find over leaves, applying the first m - k merges
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<std::size_t> representative(m + tree.merges.size());
    std::iota(representative.begin(), representative.begin() + static_cast<std::ptrdiff_t>(m), std::size_t{0});
    for (std::size_t t = 0; t < tree.merges.size(); ++t) {
        const Merge& mg = tree.merges[t];
        representative[m + t] = representative[mg.a];
        if (t < m - k) parent[find(representative[mg.b])] = find(representative[mg.a]);
    }
    std::vector<int> labels(m, -1);
    std::vector<int> root_label(m, -1);
    int next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = find(i);
        if (root_label[r] < 0) root_label[r] = next++;
        labels[i] = root_label[r];
    }
    return labels;
}

nlohmann::json dendrogram_export(const LinkageTree& tree, std::span<const std::string> leaf_names) {
    const std::size_t m = tree.leaf_count;
    if (leaf_names.size() != m) throw InvalidInput("dendrogram_export: one name per leaf required");
    if (tree.merges.size() + 1 != m) throw InvalidInput("dendrogram_export: incomplete linkage tree");
    std::vector<nlohmann::json> nodes(m + tree.merges.size());
    for (std::size_t i = 0; i < m; ++i) nodes[i] = {{"id", i}, {"name", leaf_names[i]}, {"height", 0.0}, {"size", 1}};
    for (std::size_t t = 0; t < tree.merges.size(); ++t) {
        const Merge& mg = tree.merges[t];
        nodes[m + t] = {{"id", m + t},
                        {"height", mg.height},
                        {"size", mg.size},
                        {"children", nlohmann::json::array({std::move(nodes[mg.a]), std::move(nodes[mg.b])})}};
    }
    return {{"schema", "wavefeat.dendrogram/1"},
            {"affinity", affinity_name(tree.affinity)},
            {"linkage", linkage_name(tree.linkage)},
            {"leaf_count", m},
            {"root", std::move(nodes.back())}};
}

LinkageTree dendrogram_import(const nlohmann::json& record, std::vector<std::string>* leaf_names) {
    try {
        LinkageTree tree;
        tree.leaf_count = record.at("leaf_count").get<std::size_t>();
        tree.affinity = parse_affinity(record.at("affinity").get<std::string>());
        tree.linkage = parse_linkage(record.at("linkage").get<std::string>());
        if (tree.leaf_count < 1) throw ParseError("dendrogram: empty tree");
        tree.merges.resize(tree.leaf_count - 1);
        std::vector<std::string> names(tree.leaf_count);
        std::vector<bool> seen(2 * tree.leaf_count - 1, false);
        // explicit stack; trees can be as deep as the leaf count
        std::vector<const nlohmann::json*> pending{&record.at("root")};
        while (!pending.empty()) {
            const nlohmann::json& node = *pending.back();
            pending.pop_back();
            const auto id = node.at("id").get<std::size_t>();
            if (id >= seen.size() || seen[id]) throw ParseError("dendrogram: bad or repeated node id");
            seen[id] = true;
            if (id < tree.leaf_count) {
                names[id] = node.at("name").get<std::string>();
                continue;
            }
            const auto& kids = node.at("children");
            if (kids.size() != 2) throw ParseError("dendrogram: internal node needs two children");
            Merge& mg = tree.merges[id - tree.leaf_count];
            mg.a = kids[0].at("id").get<std::size_t>();
            mg.b = kids[1].at("id").get<std::size_t>();
            mg.height = node.at("height").get<double>();
            mg.size = node.at("size").get<std::size_t>();
            pending.push_back(&kids[0]);
            pending.push_back(&kids[1]);
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("dendrogram: missing nodes");
        if (leaf_names != nullptr) *leaf_names = std::move(names);
        return tree;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("dendrogram: ") + e.what());
    }
}

std::string_view affinity_name(Affinity a) {
    switch (a) {
        case Affinity::Euclidean:
            return "euclidean";
        case Affinity::Manhattan:
            return "manhattan";
        case Affinity::Cosine:
            return "cosine";
    }
    return "unknown";
}

Affinity parse_affinity(std::string_view name) {
    if (name == "euclidean") return Affinity::Euclidean;
    if (name == "manhattan") return Affinity::Manhattan;
    if (name == "cosine") return Affinity::Cosine;
    throw InvalidConfig("unknown affinity: " + std::string(name));
}

std::string_view linkage_name(Linkage l) {
    switch (l) {
        case Linkage::Single:
            return "single";
        case Linkage::Complete:
            return "complete";
        case Linkage::Average:
            return "average";
        case Linkage::Ward:
            return "ward";
    }
    return "unknown";
}

Linkage parse_linkage(std::string_view name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "average") return Linkage::Average;
    if (name == "ward") return Linkage::Ward;
    throw InvalidConfig("unknown linkage: " + std::string(name));
}

}  // namespace wavefeat
