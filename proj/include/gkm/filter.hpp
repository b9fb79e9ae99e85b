#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <vector>

#include "gkm/rational_matrix.hpp"
#include "gkm/words.hpp"

namespace gkm {

/// Thrown when a full-matrix materialization would exceed the entry guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEntryGuard = 1'000'000;

/// Entry of the Moore-Penrose pseudo-inverse W = A^+ for a gap-free u and a
/// row word v with exactly l-k gaps:
///   (1 / prod_{i not in G_v} b_i) *
///   sum_{G_v subset G subset [l]} (-1)^{|Q\G|} prod_{i in P\G}(b_i - 1) / S_{l-k}(B(G))
mpq_class w_entry(const Alphabet& ab, int k, const Word& u, const Word& v);

/// Entry of the filter matrix H = W A for gap-free u, w:
///   (1 / prod b_i) * sum_{|G| >= l-k} (-1)^{|Q\G|} prod_{i in P\G}(b_i - 1)
mpq_class h_entry(const Alphabet& ab, int k, const Word& u, const Word& w);

// Full materializations, rows indexed by the gap-free words. W has the
// transposed shape of A; H is square. The unsuffixed forms share subset
// tables across entries and run in parallel; the *_serial forms evaluate
// every entry independently through w_entry/h_entry and are kept as the
// reference implementations. Both throw SizeGuardError above the guard.
RationalMatrix w_matrix(const Alphabet& ab, int k, std::size_t entry_guard = kDefaultEntryGuard);
RationalMatrix w_matrix_serial(const Alphabet& ab, int k,
                               std::size_t entry_guard = kDefaultEntryGuard);
RationalMatrix h_matrix(const Alphabet& ab, int k, std::size_t entry_guard = kDefaultEntryGuard);
RationalMatrix h_matrix_serial(const Alphabet& ab, int k,
                               std::size_t entry_guard = kDefaultEntryGuard);

enum class EstimateMode {
    kProject,     // H * raw
    kFromGapped,  // W * (A * raw)
};

/// Robust count estimates from raw gap-free word counts in canonical order.
/// The two modes are independent code paths that agree exactly (H = W A).
/// Neither materializes a full matrix.
std::vector<mpq_class> estimate_counts(const Alphabet& ab, int k,
                                       std::span<const mpz_class> raw, EstimateMode mode);

/// W/H export: CSV with word labels, a trailing row_sum column and a col_sum
/// footer row. digits < 0 renders exact "p/q", otherwise fixed decimals.
void write_filter_csv(std::ostream& os, const RationalMatrix& m, const Alphabet& ab, int digits);

}  // namespace gkm
