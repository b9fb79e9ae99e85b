#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gkm/words.hpp"

namespace gkm {

/// 0/1 incidence matrix between the gapped words with exactly l-k gaps
/// (rows) and the gap-free words (columns), stored as per-row sorted column
/// index lists. Immutable after construction.
struct SparseIncidence {
    Alphabet alphabet;
    int k = 0;
    std::vector<Word> row_words;
    std::vector<Word> col_words;
    std::vector<std::vector<std::uint32_t>> rows;
    std::unordered_map<Word, std::uint32_t, WordHash> row_of;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return col_words.size(); }
    std::size_t nnz() const;
    std::uint32_t row_index(const Word& v) const;
};

/// The matrices for gap counts l, l-1, ..., l-k stacked top to bottom
/// (block i has exactly l-i gaps per row), sharing the column space.
struct StackedIncidence {
    Alphabet alphabet;
    int k = 0;
    std::vector<SparseIncidence> blocks;

    std::size_t n_rows() const;
    std::size_t n_cols() const { return blocks.empty() ? 0 : blocks.front().n_cols(); }
    std::size_t nnz() const;
};

SparseIncidence build_A(const Alphabet& ab, int k);
StackedIncidence build_A_upto(const Alphabet& ab, int k);

/// Dense 0/1 row of the stacked matrix for a word with at most k gaps.
/// Throws when w is not a row word.
std::vector<int> row_vector(const StackedIncidence& st, const Word& w);

/// Matrix Market coordinate/pattern export, 1-based indices, deterministic.
void write_matrix_market(std::ostream& os, const SparseIncidence& a);
void write_matrix_market(std::ostream& os, const StackedIncidence& st);

/// CSV export with word labels as the header row / leading column.
void write_csv(std::ostream& os, const SparseIncidence& a);
void write_csv(std::ostream& os, const StackedIncidence& st);

// Matvec kernels. The value type is anything with +=, * and zero-init from
// int (double, mpz_class, mpq_class). The plain *_serial forms are the
// reference implementations; the unsuffixed forms run the rows in parallel.

template <typename T>
std::vector<T> apply_serial(const SparseIncidence& a, std::span<const T> x) {
    if (x.size() != a.n_cols()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<T> y(a.n_rows(), T(0));
    for (std::size_t r = 0; r < a.n_rows(); ++r)
        for (auto c : a.rows[r]) y[r] += x[c];
    return y;
}

template <typename T>
std::vector<T> apply(const SparseIncidence& a, std::span<const T> x) {
    if (x.size() != a.n_cols()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<T> y(a.n_rows(), T(0));
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(a.n_rows()); ++r)
        for (auto c : a.rows[static_cast<std::size_t>(r)])
            y[static_cast<std::size_t>(r)] += x[c];
    return y;
}

template <typename T>
std::vector<T> apply_transpose_serial(const SparseIncidence& a, std::span<const T> y) {
    if (y.size() != a.n_rows()) throw std::invalid_argument("apply_transpose: dimension mismatch");
    std::vector<T> x(a.n_cols(), T(0));
    for (std::size_t r = 0; r < a.n_rows(); ++r)
        for (auto c : a.rows[r]) x[c] += y[r];
    return x;
}

template <typename T>
std::vector<T> apply_transpose(const SparseIncidence& a, std::span<const T> y) {
    if (y.size() != a.n_rows()) throw std::invalid_argument("apply_transpose: dimension mismatch");
    std::vector<T> x(a.n_cols(), T(0));
#pragma omp parallel
    {
        std::vector<T> local(a.n_cols(), T(0));
#pragma omp for schedule(static) nowait
        for (long r = 0; r < static_cast<long>(a.n_rows()); ++r)
            for (auto c : a.rows[static_cast<std::size_t>(r)])
                local[c] += y[static_cast<std::size_t>(r)];
#pragma omp critical
        for (std::size_t c = 0; c < a.n_cols(); ++c) x[c] += local[c];
    }
    return x;
}

}  // namespace gkm
