// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <Eigen/Dense>

namespace wavefeat::numerics {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SvdResult {
    Matrix u;                // m x m, orthogonal
    Vector singular_values;  // min(m, n), non-increasing
    Matrix v;                // n x n, orthogonal
};

/// Full SVD with canonical signs: every column of U has its largest-magnitude
/// entry non-negative (first such entry on ties); the paired column of V is
/// flipped with it. Throws InvalidInput on non-finite input.
SvdResult svd(const Matrix& a);

struct LeftSvd {
    Matrix u;                // m x m, orthogonal, canonical signs
    Vector singular_values;  // min(m, n), non-increasing
};

/// Left factor only. Cheap for short-and-wide matrices (the WTT unfoldings),
/// where a full V would be enormous.
LeftSvd left_svd(const Matrix& a);

/// Moore-Penrose inverse; singular values below rel_tol * sigma_max are dropped.
Matrix pseudo_inverse(const Matrix& a, double rel_tol);

/// max |Q^T Q - I|
double orthogonality_residual(const Matrix& q);

/// Flips columns of u (and the matching columns of v, when given) so that each
/// column's largest-magnitude entry is non-negative.
void canonicalize_signs(Matrix& u, Matrix* v = nullptr);

bool all_finite(const Matrix& a);

}  // namespace wavefeat::numerics
