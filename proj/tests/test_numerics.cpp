// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_util.hpp"
#include "wavefeat/error.hpp"
#include "wavefeat/numerics.hpp"

using namespace wavefeat;
using numerics::Matrix;
using numerics::Vector;

namespace {

double rel_reconstruction_error(const Matrix& a, const numerics::SvdResult& s) {
    Matrix sigma = Matrix::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < s.singular_values.size(); ++i) sigma(i, i) = s.singular_values(i);
    return (s.u * sigma * s.v.transpose() - a).norm() / a.norm();
}

}  // namespace

TEST(Svd, IdentityHasUnitValuesAndIdentityFactors) {
    const auto s = numerics::svd(Matrix::Identity(3, 3));
    EXPECT_TRUE(s.singular_values.isApprox(Vector::Ones(3)));
    EXPECT_LE((s.u - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((s.v - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Svd, DiagonalValuesSortedDescending) {
    Matrix a(2, 2);
    a << 1, 0, 0, 3;
    const auto s = numerics::svd(a);
    EXPECT_NEAR(s.singular_values(0), 3.0, 1e-14);
    EXPECT_NEAR(s.singular_values(1), 1.0, 1e-14);
}

TEST(Svd, RandomReconstructionAndOrthogonality) {
    for (auto [r, c] : {std::pair{4, 3}, std::pair{3, 4}, std::pair{6, 6}, std::pair{2, 9}}) {
        const Matrix a = test_util::random_matrix(r, c, 42 + r * 10 + c);
        const auto s = numerics::svd(a);
        EXPECT_EQ(s.u.rows(), r);
        EXPECT_EQ(s.u.cols(), r);
        EXPECT_EQ(s.v.rows(), c);
        EXPECT_EQ(s.v.cols(), c);
        EXPECT_LE(rel_reconstruction_error(a, s), 1e-10);
        EXPECT_LE(numerics::orthogonality_residual(s.u), 1e-10);
        EXPECT_LE(numerics::orthogonality_residual(s.v), 1e-10);
        for (Eigen::Index i = 1; i < s.singular_values.size(); ++i)
            EXPECT_GE(s.singular_values(i - 1), s.singular_values(i));
    }
}

TEST(Svd, SignConvention) {
    const Matrix a = test_util::random_matrix(5, 4, 9);
    const auto s = numerics::svd(a);
    for (Eigen::Index j = 0; j < s.u.cols(); ++j) {
        Eigen::Index arg = 0;
        for (Eigen::Index i = 1; i < s.u.rows(); ++i)
            if (std::abs(s.u(i, j)) > std::abs(s.u(arg, j))) arg = i;
        EXPECT_GE(s.u(arg, j), 0.0);
    }
    // -A has the same left vectors after canonicalization, with V flipped
    const auto t = numerics::svd(-a);
    EXPECT_LE((s.u - t.u).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Svd, TieBreakPicksLowestIndex) {
    Matrix u(2, 2);
    u << -1, 1, 1, 1;
    u /= std::sqrt(2.0);
    numerics::canonicalize_signs(u);
    EXPECT_GT(u(0, 0), 0.0);  // |u00| == |u10|; first entry wins and is made positive
    EXPECT_GT(u(0, 1), 0.0);
}

TEST(Svd, Deterministic) {
    const Matrix a = test_util::random_matrix(7, 5, 3);
    const auto s1 = numerics::svd(a);
    const auto s2 = numerics::svd(a);
    EXPECT_EQ(s1.u, s2.u);
    EXPECT_EQ(s1.v, s2.v);
    EXPECT_EQ(s1.singular_values, s2.singular_values);
}

TEST(Svd, NonFiniteInputRejected) {
    Matrix a = Matrix::Identity(2, 2);
    a(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(numerics::svd(a), InvalidInput);
    a(0, 1) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(numerics::left_svd(a), InvalidInput);
}

TEST(Svd, ConditionedInputsReconstruct) {
    // singular values spread over 1e8
    const auto q1 = numerics::svd(test_util::random_matrix(6, 6, 1)).u;
    const auto q2 = numerics::svd(test_util::random_matrix(6, 6, 2)).u;
    Vector d(6);
    d << 1e8, 1e6, 1e4, 1e2, 1, 1;
    const Matrix a = q1 * d.asDiagonal() * q2.transpose();
    EXPECT_LE(rel_reconstruction_error(a, numerics::svd(a)), 1e-10);
}

TEST(PseudoInverse, Diagonal) {
    Matrix a(2, 2);
    a << 2, 0, 0, 4;
    Matrix expect(2, 2);
    expect << 0.5, 0, 0, 0.25;
    EXPECT_LE((numerics::pseudo_inverse(a, 1e-10) - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PseudoInverse, RankDeficient) {
    Matrix a(2, 2);
    a << 1, 0, 0, 0;
    EXPECT_LE((numerics::pseudo_inverse(a, 1e-10) - a).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PseudoInverse, FullRankGivesInverse) {
    const Matrix a = test_util::random_matrix(5, 5, 77);
    const Matrix p = numerics::pseudo_inverse(a, 1e-12);
    EXPECT_LE((p * a - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(PseudoInverse, MoorePenroseConditionsOnWideMatrix) {
    const Matrix a = test_util::random_matrix(3, 7, 5);
    const Matrix p = numerics::pseudo_inverse(a, 1e-12);
    EXPECT_LE((a * p * a - a).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((p * a * p - p).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE(((a * p).transpose() - a * p).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PseudoInverse, ToleranceOutOfRange) {
    const Matrix a = Matrix::Identity(2, 2);
    EXPECT_THROW(numerics::pseudo_inverse(a, 0.0), InvalidInput);
    EXPECT_THROW(numerics::pseudo_inverse(a, 1.0), InvalidInput);
}
