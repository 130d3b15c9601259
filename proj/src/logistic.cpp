// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "wavefeat/error.hpp"
#include "wavefeat/models.hpp"

namespace wavefeat {

namespace {

// ln(1 + e^z) without overflow
double softplus(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double mean_loss(const Vector& margins, const Vector& y) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) total += softplus(-y(i) * margins(i));
    return total / static_cast<double>(y.size());
}

// d/dt of the mean loss at each sample's margin t
Vector loss_slope(const Vector& margins, const Vector& y) {
    const double m = static_cast<double>(y.size());
    Vector g(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) g(i) = -y(i) * sigmoid(-y(i) * margins(i)) / m;
    return g;
}

double soft(double v, double t) {
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

void check_problem(const Matrix& x, const Vector& y, const LrOptions& opts) {
    if (x.rows() != y.size() || x.rows() < 1) throw InvalidInput("lr: one label per row required");
    if (!(opts.c > 0.0) || !std::isfinite(opts.c)) throw InvalidInput("lr: C must be positive");
    if (!x.allFinite()) throw InvalidInput("lr: non-finite features");
}

// x = z * basis^T with orthonormal basis columns; for p > m this is the thin
// QR of x^T, otherwise z = x and the basis is the identity (left empty).
struct RowSpace {
    Matrix z;
    Matrix basis;
    bool reduced = false;
};

RowSpace row_space(const Matrix& x) {
    RowSpace rs;
    if (x.cols() <= x.rows()) {
        rs.z = x;
        return rs;
    }
    const Eigen::HouseholderQR<Matrix> qr(x.transpose());
    const Eigen::Index m = x.rows();
    rs.basis = qr.householderQ() * Matrix::Identity(x.cols(), m);
    rs.z = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>().toDenseMatrix().transpose();
    rs.reduced = true;
    return rs;
}

// Damped Newton over (beta, b) where w = basis * beta. Exact for l2 because the
// optimum has no component outside the row space of x, and ||w|| = ||beta||.
BinaryLr newton_l2(const RowSpace& rs, const Vector& y, const LrOptions& opts, const Vector* w0, double b0) {
    const double lambda = 1.0 / opts.c;
    const Matrix& z = rs.z;
    const Eigen::Index m = z.rows();
    const Eigen::Index q = z.cols();

    Vector beta = Vector::Zero(q);
    if (w0 != nullptr) {
        const Eigen::Index p = rs.reduced ? rs.basis.rows() : q;
        if (w0->size() != p) throw InvalidInput("lr: warm start dimension mismatch");
        beta = rs.reduced ? Vector(rs.basis.transpose() * *w0) : *w0;
    }
    double b = b0;

    auto objective = [&](const Vector& bt, double bb) {
        const Vector t = (z * bt).array() + bb;
        return mean_loss(t, y) + lambda * bt.squaredNorm();
    };

    BinaryLr out;
    for (int it = 0; it < opts.max_iter; ++it) {
        const Vector t = (z * beta).array() + b;
        const Vector g = loss_slope(t, y);
        Vector grad(q + 1);
        grad.head(q) = z.transpose() * g + 2.0 * lambda * beta;
        grad(q) = g.sum();

        const double gnorm_w =
            rs.reduced ? (rs.basis * grad.head(q)).cwiseAbs().maxCoeff() : grad.head(q).cwiseAbs().maxCoeff();
        if (std::max(gnorm_w, std::abs(grad(q))) <= opts.tol) {
            out.converged = true;
            out.iterations = it;
            break;
        }

        Vector d(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double s = sigmoid(t(i));
            d(i) = s * (1.0 - s) / static_cast<double>(m);
        }
        Matrix h(q + 1, q + 1);
        const Matrix dz = d.asDiagonal() * z;
        h.topLeftCorner(q, q) = z.transpose() * dz;
        h.topLeftCorner(q, q).diagonal().array() += 2.0 * lambda;
        h.topRightCorner(q, 1) = dz.colwise().sum().transpose();
        h.bottomLeftCorner(1, q) = h.topRightCorner(q, 1).transpose();
        h(q, q) = d.sum() + 1e-12;
        Vector step = -h.ldlt().solve(grad);
        // fall back to the gradient if the Newton step is not a descent direction
        if (!(grad.dot(step) < 0.0) || !step.allFinite()) step = -grad;

        const double f0 = objective(beta, b);
        const double slope = grad.dot(step);
        double alpha = 1.0;
        while (objective(beta + alpha * step.head(q), b + alpha * step(q)) > f0 + 1e-4 * alpha * slope && alpha > 1e-12)
            alpha *= 0.5;
        beta += alpha * step.head(q);
        b += alpha * step(q);
        out.iterations = it + 1;
    }
    out.w = rs.reduced ? Vector(rs.basis * beta) : beta;
    out.b = b;
    return out;
}

// Worst violation of the l1 optimality conditions (minimum-norm subgradient).
double l1_violation(const Vector& w, const Vector& grad, double gb, double lambda) {
    double v = std::abs(gb);
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        if (w(j) > 0.0) {
            v = std::max(v, std::abs(grad(j) + lambda));
        } else if (w(j) < 0.0) {
            v = std::max(v, std::abs(grad(j) - lambda));
        } else {
            v = std::max(v, std::abs(grad(j)) - lambda);
        }
    }
    return v;
}

// Proximal Newton: each outer step minimizes the local quadratic model plus
// the l1 term by cyclic proximal coordinate descent over the coordinates that
// can move, then backtracks on the true objective.
BinaryLr newton_cd_l1(const Matrix& x, const Vector& y, const LrOptions& opts, const Vector* w0, double b0) {
    const double lambda = 1.0 / opts.c;
    const Eigen::Index m = x.rows();
    const Eigen::Index p = x.cols();

    Vector w = Vector::Zero(p);
    if (w0 != nullptr) {
        if (w0->size() != p) throw InvalidInput("lr: warm start dimension mismatch");
        w = *w0;
    }
    double b = b0;
    Vector t = (x * w).array() + b;
    double f = mean_loss(t, y) + lambda * w.lpNorm<1>();

    BinaryLr out;
    std::vector<Eigen::Index> active;
    Vector d(p);
    Vector hdiag(p);
    for (int it = 0; it < opts.max_iter; ++it) {
        const Vector g = loss_slope(t, y);
        const Vector grad = x.transpose() * g;
        const double gb = g.sum();
        const double violation = l1_violation(w, grad, gb, lambda);
        out.iterations = it;
        if (violation <= opts.tol) {
            out.converged = true;
            break;
        }

        Vector dw(m);  // Hessian weights of the mean loss
        for (Eigen::Index i = 0; i < m; ++i) {
            const double s = sigmoid(t(i));
            dw(i) = s * (1.0 - s) / static_cast<double>(m);
        }
        active.clear();
        for (Eigen::Index j = 0; j < p; ++j) {
            if (w(j) != 0.0 || std::abs(grad(j)) > lambda) {
                active.push_back(j);
                hdiag(j) = dw.dot(x.col(j).cwiseAbs2()) + 1e-12;
            }
        }

        d.setZero();
        double db = 0.0;
        Vector xd = Vector::Zero(m);  // x d + db
        const double hb = dw.sum() + 1e-12;
        for (int pass = 0; pass < 200; ++pass) {
            double biggest = 0.0;
            for (Eigen::Index j : active) {
                const double gj = grad(j) + x.col(j).dot(dw.cwiseProduct(xd));
                const double zj = w(j) + d(j);
                const double nz = soft(zj - gj / hdiag(j), lambda / hdiag(j));
                const double delta = nz - zj;
                if (delta != 0.0) {
                    d(j) += delta;
                    xd += delta * x.col(j);
                    biggest = std::max(biggest, std::abs(delta) * hdiag(j));
                }
            }
            const double delta_b = -(gb + dw.dot(xd)) / hb;
            db += delta_b;
            xd.array() += delta_b;
            biggest = std::max(biggest, std::abs(delta_b) * hb);
            if (biggest <= 0.1 * std::max(violation, opts.tol)) break;
        }

        // Armijo on the composite objective
        const double l1_now = w.lpNorm<1>();
        const double decrease = grad.dot(d) + gb * db + lambda * ((w + d).lpNorm<1>() - l1_now);
        double alpha = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 40; ++ls, alpha *= 0.5) {
            const Vector nt = t + alpha * xd;
            const double nf = mean_loss(nt, y) + lambda * (w + alpha * d).lpNorm<1>();
            if (nf <= f + 0.01 * alpha * decrease || nf < f) {
                w += alpha * d;
                b += alpha * db;
                t = nt;
                f = nf;
                moved = true;
                break;
            }
        }
        out.iterations = it + 1;
        if (!moved) break;  // no progress possible at double precision
    }
    out.w = w;
    out.b = b;
    return out;
}

}  // namespace

double lr_objective(const Matrix& x, const Vector& y, const Vector& w, double b, Penalty penalty, double lambda) {
    const Vector t = (x * w).array() + b;
    const double reg = penalty == Penalty::L2 ? w.squaredNorm() : w.lpNorm<1>();
    return mean_loss(t, y) + lambda * reg;
}

Vector lr_smooth_gradient(const Matrix& x, const Vector& y, const Vector& w, double b, Penalty penalty, double lambda) {
    const Vector t = (x * w).array() + b;
    const Vector g = loss_slope(t, y);
    Vector out(w.size() + 1);
    out.head(w.size()) = x.transpose() * g;
    if (penalty == Penalty::L2) out.head(w.size()) += 2.0 * lambda * w;
    out(w.size()) = g.sum();
    return out;
}

BinaryLr lr_fit_binary(const Matrix& x, const Vector& y, const LrOptions& opts, const Vector* w0, double b0) {
    check_problem(x, y, opts);
    return opts.penalty == Penalty::L2 ? newton_l2(row_space(x), y, opts, w0, b0) : newton_cd_l1(x, y, opts, w0, b0);
}

LrModel lr_fit(const Matrix& x, std::span<const int> labels, const LrOptions& opts) {
    if (static_cast<std::size_t>(x.rows()) != labels.size()) throw InvalidInput("lr_fit: one label per row required");
    const std::set<int> unique(labels.begin(), labels.end());
    if (unique.size() < 2) throw InvalidInput("lr_fit: need at least 2 classes");
    LrModel model;
    model.classes.assign(unique.begin(), unique.end());
    model.penalty = opts.penalty;
    model.c = opts.c;
    model.weights.resize(static_cast<Eigen::Index>(unique.size()), x.cols());
    model.intercepts.resize(static_cast<Eigen::Index>(unique.size()));
    if (!x.allFinite()) throw InvalidInput("lr: non-finite features");
    if (!(opts.c > 0.0) || !std::isfinite(opts.c)) throw InvalidInput("lr: C must be positive");
    const RowSpace rs = opts.penalty == Penalty::L2 ? row_space(x) : RowSpace{};
    for (std::size_t s = 0; s < model.classes.size(); ++s) {
        Vector y(x.rows());
        for (Eigen::Index i = 0; i < x.rows(); ++i) y(i) = labels[static_cast<std::size_t>(i)] == model.classes[s] ? 1.0 : -1.0;
        const BinaryLr fit = opts.penalty == Penalty::L2 ? newton_l2(rs, y, opts, nullptr, 0.0)
                                                         : newton_cd_l1(x, y, opts, nullptr, 0.0);
        if (!fit.converged) {
            model.warnings.push_back("class " + std::to_string(model.classes[s]) + ": no convergence after " +
                                     std::to_string(fit.iterations) + " iterations");
        }
        model.weights.row(static_cast<Eigen::Index>(s)) = fit.w.transpose();
        model.intercepts(static_cast<Eigen::Index>(s)) = fit.b;
    }
    return model;
}

Vector LrModel::margins(std::span<const double> x) const {
    if (static_cast<Eigen::Index>(x.size()) != weights.cols()) throw InvalidInput("lr: feature dimension mismatch");
    const Eigen::Map<const Vector> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    return weights * xv + intercepts;
}

Vector LrModel::scores(std::span<const double> x) const {
    Vector s = margins(x);
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = sigmoid(s(i));
    return s;
}

int lr_predict(const LrModel& model, std::span<const double> x) {
    // sigmoid is monotone; comparing margins avoids ties from saturation
    const Vector s = model.margins(x);
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < s.size(); ++i) {
        if (s(i) > s(best)) best = i;
    }
    return model.classes[static_cast<std::size_t>(best)];
}

std::string_view penalty_name(Penalty p) {
    return p == Penalty::L1 ? "l1" : "l2";
}

Penalty parse_penalty(std::string_view name) {
    if (name == "l1") return Penalty::L1;
    if (name == "l2") return Penalty::L2;
    throw InvalidConfig("unknown penalty: " + std::string(name));
}

}  // namespace wavefeat
