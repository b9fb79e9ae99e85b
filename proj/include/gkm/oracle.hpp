#pragma once

#include <array>
#include <vector>

#include "gkm/incidence.hpp"
#include "gkm/rational_matrix.hpp"

namespace gkm {

/// Plain dense double matrix, row-major.
struct DenseMatrix {
    std::size_t n_rows = 0, n_cols = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : n_rows(r), n_cols(c), a(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return a[r * n_cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * n_cols + c]; }

    static DenseMatrix identity(std::size_t n);
};

DenseMatrix dense_from(const SparseIncidence& a);
DenseMatrix dense_from(const RationalMatrix& m);

DenseMatrix dmul(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix dtranspose(const DenseMatrix& m);
double max_abs(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);

struct EighResult {
    std::vector<double> eigenvalues;  // descending
    DenseMatrix vectors;              // column i pairs with eigenvalue i
    int sweeps = 0;
};

/// Cyclic Jacobi on a symmetric matrix. Converges when the off-diagonal
/// Frobenius mass drops below 1e-12 * ||S||_F, capped at 100 sweeps; the
/// residual ||S V - V L||_max is verified against 1e-9 * ||S||_F. Throws
/// std::invalid_argument on a non-symmetric input and std::runtime_error
/// on non-convergence.
EighResult jacobi_eigh(const DenseMatrix& s);

/// Moore-Penrose pseudo-inverse through the eigendecomposition of A A^T,
/// with the relative cutoff tau = 1e-10 * lambda_max.
DenseMatrix numeric_pinv(const DenseMatrix& a);

/// Count of eigenvalues of A A^T above the same cutoff.
int numeric_rank(const DenseMatrix& a);

/// Max-abs residuals of (A W A - A, W A W - W, (AW)^T - AW, (WA)^T - WA).
std::array<double, 4> penrose_residuals(const DenseMatrix& a, const DenseMatrix& w);

}  // namespace gkm
