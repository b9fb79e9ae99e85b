#include "gkm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gkm {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix dense_from(const SparseIncidence& a) {
    DenseMatrix m(a.n_rows(), a.n_cols());
    for (std::size_t r = 0; r < a.n_rows(); ++r)
        for (auto c : a.rows[r]) m.at(r, c) = 1.0;
    return m;
}

DenseMatrix dense_from(const RationalMatrix& q) {
    DenseMatrix m(q.n_rows, q.n_cols);
    for (std::size_t i = 0; i < q.a.size(); ++i) m.a[i] = q.a[i].get_d();
    return m;
}

DenseMatrix dmul(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_cols != y.n_rows) throw std::invalid_argument("dmul: dimension mismatch");
    DenseMatrix out(x.n_rows, y.n_cols);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(x.n_rows); ++r)
        for (std::size_t t = 0; t < x.n_cols; ++t) {
            const double v = x.at(static_cast<std::size_t>(r), t);
            if (v == 0.0) continue;
            for (std::size_t c = 0; c < y.n_cols; ++c)
                out.at(static_cast<std::size_t>(r), c) += v * y.at(t, c);
        }
    return out;
}

DenseMatrix dtranspose(const DenseMatrix& m) {
    DenseMatrix t(m.n_cols, m.n_rows);
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = 0; c < m.n_cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

double max_abs(const DenseMatrix& m) {
    double v = 0.0;
    for (double x : m.a) v = std::max(v, std::abs(x));
    return v;
}

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_rows != y.n_rows || x.n_cols != y.n_cols)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double v = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) v = std::max(v, std::abs(x.a[i] - y.a[i]));
    return v;
}

namespace {

double frobenius(const DenseMatrix& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

double offdiag_frobenius(const DenseMatrix& m) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = 0; c < m.n_cols; ++c)
            if (r != c) s += m.at(r, c) * m.at(r, c);
    return std::sqrt(s);
}

}  // namespace

EighResult jacobi_eigh(const DenseMatrix& s) {
    if (s.n_rows != s.n_cols) throw std::invalid_argument("jacobi_eigh: matrix not square");
    const std::size_t n = s.n_rows;
    const double norm = frobenius(s);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (std::abs(s.at(r, c) - s.at(c, r)) > 1e-12 * (norm + 1.0))
                throw std::invalid_argument("jacobi_eigh: matrix not symmetric");

    DenseMatrix a = s;
    DenseMatrix v = DenseMatrix::identity(n);
    const double target = 1e-12 * norm;
    int sweeps = 0;
    bool converged = (n <= 1) || offdiag_frobenius(a) <= target;
    while (!converged && sweeps < 100) {
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double app = a.at(p, p), aqq = a.at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip - sn * aiq;
                    a.at(i, q) = sn * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a.at(p, i), aqi = a.at(q, i);
                    a.at(p, i) = c * api - sn * aqi;
                    a.at(q, i) = sn * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = c * vip - sn * viq;
                    v.at(i, q) = sn * vip + c * viq;
                }
            }
        }
        converged = offdiag_frobenius(a) <= target;
    }
    if (!converged) throw std::runtime_error("jacobi_eigh: no convergence within 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a.at(i, i) > a.at(j, j); });
    EighResult out;
    out.sweeps = sweeps;
    out.eigenvalues.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a.at(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
    }
    // residual gate: S V = V Lambda
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double sv = 0.0;
            for (std::size_t t = 0; t < n; ++t) sv += s.at(i, t) * out.vectors.at(t, j);
            resid = std::max(resid, std::abs(sv - out.vectors.at(i, j) * out.eigenvalues[j]));
        }
    if (resid > 1e-9 * (norm + 1.0))
        throw std::runtime_error("jacobi_eigh: residual above tolerance");
    return out;
}

DenseMatrix numeric_pinv(const DenseMatrix& a) {
    const DenseMatrix at = dtranspose(a);
    const DenseMatrix aat = dmul(a, at);
    const EighResult eig = jacobi_eigh(aat);
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    const double tau = 1e-10 * lmax;
    const std::size_t n = a.n_rows;
    // W = A^T Q Lambda^+ Q^T
    DenseMatrix qlq(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                if (eig.eigenvalues[t] <= tau || eig.eigenvalues[t] <= 0.0) continue;
                s += eig.vectors.at(i, t) * eig.vectors.at(j, t) / eig.eigenvalues[t];
            }
            qlq.at(i, j) = s;
        }
    return dmul(at, qlq);
}

int numeric_rank(const DenseMatrix& a) {
    const DenseMatrix aat = dmul(a, dtranspose(a));
    const EighResult eig = jacobi_eigh(aat);
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    const double tau = 1e-10 * lmax;
    int rank = 0;
    for (double l : eig.eigenvalues)
        if (l > tau && l > 0.0) ++rank;
    return rank;
}

std::array<double, 4> penrose_residuals(const DenseMatrix& a, const DenseMatrix& w) {
    if (a.n_rows != w.n_cols || a.n_cols != w.n_rows)
        throw std::invalid_argument("penrose_residuals: W must have the transposed shape of A");
    const DenseMatrix aw = dmul(a, w);
    const DenseMatrix wa = dmul(w, a);
    return {
        max_abs_diff(dmul(aw, a), a),
        max_abs_diff(dmul(wa, w), w),
        max_abs_diff(dtranspose(aw), aw),
        max_abs_diff(dtranspose(wa), wa),
    };
}

}  // namespace gkm
