#pragma once

#include <gmpxx.h>

#include <vector>

namespace gkm {

/// A finite sequence of integers, e.g. the per-position alphabet sizes or a
/// subsequence of them. Empty sequences are allowed everywhere.
using IntSeq = std::vector<long>;

/// i-th elementary symmetric polynomial of xs, evaluated exactly.
/// Returns 1 for i == 0 and 0 for i > xs.size(). Uses the prefix
/// recurrence e_j <- e_j + x * e_{j-1}, never subset enumeration.
mpz_class elementary_symmetric(const IntSeq& xs, int i);

/// (x_1 + delta, ..., x_n + delta).
IntSeq shifted(IntSeq xs, long delta);

/// R_i(xs) = sum_{j=0}^{i} S_j(xs - 1).
mpz_class r_poly(const IntSeq& xs, int i);

}  // namespace gkm
