#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <vector>

#include "gkm/oracle.hpp"
#include "gkm/rational_matrix.hpp"
#include "gkm/words.hpp"

namespace gkm {

/// One closed-form eigenpair of A^T A / A A^T, labelled by a word with
/// nonzero letters. x(w) = (-1)^{l-k} nu_B(w, label) over the row words,
/// z(u) = nu_B(u, label) over the gap-free words, lambda = S_{l-k} of the
/// sizes on the label's gap set. Norms are the closed forms, all exact.
struct EigenPair {
    Word label;
    int n = 0;  // non-gap count of the label
    mpz_class lambda;
    std::vector<mpz_class> x;
    std::vector<mpz_class> z;
    mpz_class norm2_x;
    mpz_class norm2_z;
};

struct SpectralSystem {
    Alphabet alphabet;
    int k = 0;
    std::vector<EigenPair> pairs;    // one per label, n = 0..l blocks in order
    std::size_t nonzero_count = 0;   // labels with lambda > 0, equals R_k(B)
};

SpectralSystem build_spectral_system(const Alphabet& ab, int k);
SpectralSystem build_spectral_system_serial(const Alphabet& ab, int k);

/// S_{l-k}(B(G_label)); zero exactly when the label has more than k
/// non-gap positions. Throws when the label has a zero letter.
mpz_class eigenvalue_of(const Alphabet& ab, int k, const Word& label);

/// z-vectors of the labels with n > k; each is annihilated by A.
std::vector<std::pair<Word, std::vector<mpz_class>>> null_space_basis(const Alphabet& ab, int k);

/// Rows of the stacked matrix indexed by the labels with n <= k; a basis of
/// the row space, R_k(B) rows.
std::vector<std::pair<Word, std::vector<int>>> row_space_basis(const Alphabet& ab, int k);

/// Unit-norm reduced SVD: u column = x/||x||, v column = z/||z||,
/// sigma = sqrt(lambda), sorted by decreasing sigma with the canonical
/// label order as tie-break.
struct ReducedSVD {
    std::vector<Word> labels;
    std::vector<double> singular_values;
    DenseMatrix u;  // rows of A  x  rank
    DenseMatrix v;  // cols of A  x  rank
};

ReducedSVD reduced_svd(const Alphabet& ab, int k);

/// Exact pseudo-inverse along the eigen route W = A^T Upsilon D Upsilon^T,
/// D = diag(1/(||x||^2 lambda)) over the labels with n <= k. The parallel
/// form accumulates over a common integer denominator; the serial reference
/// multiplies the factors as plain rationals.
RationalMatrix spectral_pinv(const Alphabet& ab, int k);
RationalMatrix spectral_pinv_serial(const Alphabet& ab, int k);

/// CSV: label, n, lambda, nonzero flag, ||x||^2, ||z||^2.
void write_spectrum_csv(std::ostream& os, const SpectralSystem& sys);

}  // namespace gkm
