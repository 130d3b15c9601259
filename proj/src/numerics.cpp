// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "wavefeat/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "wavefeat/error.hpp"

namespace wavefeat::numerics {

bool all_finite(const Matrix& a) {
    return a.allFinite();
}

void canonicalize_signs(Matrix& u, Matrix* v) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            // strict '>' keeps the lowest index on ties
            if (std::abs(u(r, c)) > best) {
                best = std::abs(u(r, c));
                arg = r;
            }
        }
        if (u(arg, c) < 0.0) {
            u.col(c) = -u.col(c);
            if (v != nullptr && c < v->cols()) v->col(c) = -v->col(c);
        }
    }
}

SvdResult svd(const Matrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw InvalidInput("svd: empty matrix");
    if (!all_finite(a)) throw InvalidInput("svd: non-finite entries");
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
    canonicalize_signs(out.u, &out.v);
    // Columns of V beyond min(m, n) have no partner in U.
    if (out.v.cols() > out.u.cols()) {
        Matrix tail = out.v.rightCols(out.v.cols() - out.u.cols());
        canonicalize_signs(tail);
        out.v.rightCols(tail.cols()) = tail;
    }
    return out;
}

LeftSvd left_svd(const Matrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw InvalidInput("left_svd: empty matrix");
    if (!all_finite(a)) throw InvalidInput("left_svd: non-finite entries");
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeFullU);
    LeftSvd out{solver.matrixU(), solver.singularValues()};
    canonicalize_signs(out.u);
    return out;
}

Matrix pseudo_inverse(const Matrix& a, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw InvalidInput("pseudo_inverse: rel_tol must lie in (0, 1)");
    if (a.rows() < 1 || a.cols() < 1) throw InvalidInput("pseudo_inverse: empty matrix");
    if (!all_finite(a)) throw InvalidInput("pseudo_inverse: non-finite entries");
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& s = solver.singularValues();
    const double cutoff = s.size() > 0 ? rel_tol * s(0) : 0.0;
    Vector inv = Vector::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > cutoff && s(i) > 0.0) inv(i) = 1.0 / s(i);
    }
    return solver.matrixV() * inv.asDiagonal() * solver.matrixU().transpose();
}

double orthogonality_residual(const Matrix& q) {
    const Matrix gram = q.transpose() * q;
    return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace wavefeat::numerics
