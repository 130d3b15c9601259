// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wavefeat/numerics.hpp"

namespace wavefeat {

using numerics::Matrix;
using numerics::Vector;

// ---------------------------------------------------------------------------
// Linear discriminant analysis
// ---------------------------------------------------------------------------

/// Shared-covariance Gaussian classifier. The (pseudo-)inverse of the pooled
/// covariance is kept in factored form, Sigma^+ = B B^T, since feature counts
/// far above the sample count make the dense p x p inverse wasteful.
struct LdaModel {
    std::vector<int> classes;  // label value of each row below
    Matrix class_means;        // S x p
    Matrix pinv_factor;        // p x r, Sigma^+ = B B^T
    Vector log_priors;         // S

    Matrix pooled_covariance_pinv() const { return pinv_factor * pinv_factor.transpose(); }
    /// (Sigma^+ x, mu_s) - 1/2 (Sigma^+ mu_s, mu_s) + ln P(s), one per class.
    Vector scores(std::span<const double> x) const;
};

/// rel_tol is applied to the singular values of the pooled covariance.
LdaModel lda_fit(const Matrix& x, std::span<const int> labels, double rel_tol = 1e-10);
/// argmax of the discriminant scores; ties go to the lowest class index.
int lda_predict(const LdaModel& model, std::span<const double> x);

// ---------------------------------------------------------------------------
// One-vs-rest logistic regression
// ---------------------------------------------------------------------------

enum class Penalty { L1, L2 };

struct LrOptions {
    Penalty penalty = Penalty::L2;
    double c = 1.0;  // inverse regularization strength, lambda = 1 / C
    double tol = 1e-6;
    int max_iter = 5000;
};

struct BinaryLr {
    Vector w;
    double b = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct LrModel {
    std::vector<int> classes;
    Matrix weights;     // S x p
    Vector intercepts;  // S
    Penalty penalty = Penalty::L2;
    double c = 1.0;
    std::vector<std::string> warnings;  // non-convergence notes

    /// w_s^T x + b_s for each class
    Vector margins(std::span<const double> x) const;
    /// sigmoid(w_s^T x + b_s) for each class
    Vector scores(std::span<const double> x) const;
};

/// Objective minimized per binary problem, y in {-1, +1}:
///   (1/m) sum ln(1 + exp(-y (w^T x + b))) + lambda * ||w||_2^2   (l2)
///   (1/m) sum ln(1 + exp(-y (w^T x + b))) + lambda * ||w||_1     (l1)
/// The intercept is never penalized.
double lr_objective(const Matrix& x, const Vector& y, const Vector& w, double b, Penalty penalty, double lambda);

/// Gradient of the smooth part (mean logistic loss, plus lambda ||w||^2 for
/// l2) with respect to (w, b); the intercept derivative is the last entry.
Vector lr_smooth_gradient(const Matrix& x, const Vector& y, const Vector& w, double b, Penalty penalty, double lambda);

/// Single binary problem. l2 uses damped Newton in the row space of x; l1 uses
/// proximal Newton with coordinate-descent inner steps. Optional warm start.
BinaryLr lr_fit_binary(const Matrix& x, const Vector& y, const LrOptions& opts, const Vector* w0 = nullptr,
                       double b0 = 0.0);

LrModel lr_fit(const Matrix& x, std::span<const int> labels, const LrOptions& opts);
int lr_predict(const LrModel& model, std::span<const double> x);

// ---------------------------------------------------------------------------
// Hierarchical agglomerative clustering
// ---------------------------------------------------------------------------

enum class Affinity { Euclidean, Manhattan, Cosine };
enum class Linkage { Single, Complete, Average, Ward };

struct Merge {
    std::size_t a;  // node ids: leaves are 0..m-1, merge t creates node m + t
    std::size_t b;
    double height;
    std::size_t size;
};

struct LinkageTree {
    std::vector<Merge> merges;
    std::size_t leaf_count = 0;
    Affinity affinity = Affinity::Euclidean;
    Linkage linkage = Linkage::Ward;
};

/// Symmetric, zero diagonal. Cosine distance is 1 - cos(angle) and rejects
/// zero vectors.
Matrix pairwise_distances(const Matrix& samples, Affinity affinity);

/// Agglomerates until one cluster remains. Among equally close pairs the one
/// with the lexicographically smallest (min id, max id) merges first.
LinkageTree hac_fit(const Matrix& distances, Linkage linkage, Affinity affinity);
LinkageTree hac_fit_samples(const Matrix& samples, Linkage linkage, Affinity affinity);

/// Undo the last k - 1 merges; clusters numbered by first appearance.
std::vector<int> cut_tree(const LinkageTree& tree, std::size_t k);

/// Nested {"name", "height", "children"} record for external plotters.
nlohmann::json dendrogram_export(const LinkageTree& tree, std::span<const std::string> leaf_names);
/// Rebuilds the merge list (and leaf names) from a dendrogram_export record.
LinkageTree dendrogram_import(const nlohmann::json& record, std::vector<std::string>* leaf_names = nullptr);

std::string_view affinity_name(Affinity a);
Affinity parse_affinity(std::string_view name);
std::string_view linkage_name(Linkage l);
Linkage parse_linkage(std::string_view name);
std::string_view penalty_name(Penalty p);
Penalty parse_penalty(std::string_view name);

}  // namespace wavefeat
