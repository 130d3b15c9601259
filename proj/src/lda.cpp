// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <algorithm>
#include <cmath>
#include <map>

#include "wavefeat/error.hpp"
#include "wavefeat/models.hpp"

namespace wavefeat {

LdaModel lda_fit(const Matrix& x, std::span<const int> labels, double rel_tol) {
    if (static_cast<std::size_t>(x.rows()) != labels.size()) throw InvalidInput("lda_fit: one label per row required");
    if (x.rows() < 2 || x.cols() < 1) throw InvalidInput("lda_fit: need at least 2 samples");
    if (!x.allFinite()) throw InvalidInput("lda_fit: non-finite features");

    std::map<int, std::vector<Eigen::Index>> members;
    for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(static_cast<Eigen::Index>(i));
    if (members.size() < 2) throw InvalidInput("lda_fit: need at least 2 classes");

    const Eigen::Index m = x.rows();
    const Eigen::Index p = x.cols();
    const auto s_count = static_cast<Eigen::Index>(members.size());

    LdaModel model;
    model.class_means.resize(s_count, p);
    model.log_priors.resize(s_count);
    Matrix centered(m, p);
    Eigen::Index row = 0;
    Eigen::Index s = 0;
    for (const auto& [label, idx] : members) {
        model.classes.push_back(label);
        Vector mean = Vector::Zero(p);
        for (Eigen::Index i : idx) mean += x.row(i).transpose();
        mean /= static_cast<double>(idx.size());
        model.class_means.row(s) = mean.transpose();
        model.log_priors(s) = std::log(static_cast<double>(idx.size()) / static_cast<double>(m));
        for (Eigen::Index i : idx) centered.row(row++) = x.row(i) - mean.transpose();
        ++s;
    }

    // Sigma = C^T C / (m - S); with C = U D V^T, Sigma^+ = V (D^2 / (m - S))^+ V^T.
    const double dof = static_cast<double>(std::max<Eigen::Index>(m - s_count, 1));
    Eigen::JacobiSVD<Matrix> svd(centered / std::sqrt(dof), Eigen::ComputeThinV);
    const Vector& d = svd.singularValues();
    const double top = d.size() > 0 ? d(0) * d(0) : 0.0;
    Eigen::Index keep = 0;
    while (keep < d.size() && d(keep) * d(keep) > rel_tol * top && d(keep) > 0.0) ++keep;
    model.pinv_factor = svd.matrixV().leftCols(keep) * d.head(keep).cwiseInverse().asDiagonal();
    return model;
}

Vector LdaModel::scores(std::span<const double> x) const {
    if (static_cast<Eigen::Index>(x.size()) != class_means.cols()) throw InvalidInput("lda: feature dimension mismatch");
    const Eigen::Map<const Vector> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    const Vector zx = pinv_factor.transpose() * xv;
    Vector out(class_means.rows());
    for (Eigen::Index s = 0; s < class_means.rows(); ++s) {
        const Vector zm = pinv_factor.transpose() * class_means.row(s).transpose();
        out(s) = zx.dot(zm) - 0.5 * zm.squaredNorm() + log_priors(s);
    }
    return out;
}

int lda_predict(const LdaModel& model, std::span<const double> x) {
    const Vector s = model.scores(x);
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < s.size(); ++i) {
        if (s(i) > s(best)) best = i;
    }
    return model.classes[static_cast<std::size_t>(best)];
}

}  // namespace wavefeat
