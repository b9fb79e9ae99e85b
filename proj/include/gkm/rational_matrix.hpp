#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gkm/incidence.hpp"
#include "gkm/words.hpp"

namespace gkm {

/// Dense matrix of exact rationals with optional word labels, row-major.
struct RationalMatrix {
    std::size_t n_rows = 0, n_cols = 0;
    std::vector<Word> row_labels, col_labels;
    std::vector<mpq_class> a;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c)
        : n_rows(r), n_cols(c), a(r * c, mpq_class(0)) {}

    mpq_class& at(std::size_t r, std::size_t c) { return a[r * n_cols + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return a[r * n_cols + c]; }

    static RationalMatrix identity(std::size_t n);
};

/// Entrywise equality (labels ignored).
bool same_entries(const RationalMatrix& x, const RationalMatrix& y);

RationalMatrix transpose(const RationalMatrix& m);
bool is_symmetric(const RationalMatrix& m);

/// Exact product. Internally lifts both operands to a common-denominator
/// integer form so the inner loop is integer fused multiply-add; rows run
/// in parallel. mul_serial is the plain rational triple loop kept as the
/// reference implementation.
RationalMatrix mul(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix mul_serial(const RationalMatrix& x, const RationalMatrix& y);

/// Products against the 0/1 incidence matrix using its sparsity.
RationalMatrix mul_sparse_left(const SparseIncidence& a, const RationalMatrix& m);   // A * M
RationalMatrix mul_sparse_right(const RationalMatrix& m, const SparseIncidence& a);  // M * A

std::vector<mpq_class> row_sums(const RationalMatrix& m);
std::vector<mpq_class> col_sums(const RationalMatrix& m);

/// Fixed-precision decimal rendering with round-half-to-even, e.g.
/// decimal_string(-1/3, 4) == "-0.3333". digits == 0 renders an integer.
std::string decimal_string(const mpq_class& q, int digits);

/// "p/q" (or plain "p" for integers).
std::string rational_string(const mpq_class& q);

}  // namespace gkm
