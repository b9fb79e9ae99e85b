#pragma once

#include <gmpxx.h>

#include "gkm/words.hpp"

namespace gkm {

// The integer-valued weight nu on pairs of slots, ordered
// 0 < 1 < ... < b-1 < gap per position:
//   nu(g, g) = -b,  nu(y, y) = -y,  nu(x, y) = 1 if x < y,  0 if x > y.
// Products of these weights generate the eigenvectors and the filter
// closed forms; all arithmetic in this module is exact.

/// Single-position weight for an alphabet of size `base`.
mpz_class nu_pos(int base, int x, int y);

/// Product over all positions, nu_B(x, y) = prod_i nu_i(x_i, y_i).
mpz_class nu_product(const Alphabet& ab, const Word& x, const Word& y);

/// sum_{v1 <= z <= v2} nu_B(v1, z) by explicit interval enumeration
/// (empty interval when v1 is not <= v2). Verification oracle for the
/// product identity below.
mpz_class interval_nu_sum(const Alphabet& ab, const Word& v1, const Word& v2);

/// The closed form prod_i (y'_i - 2 x'_i) with gap read as b_i, and 0 when
/// v1 is not <= v2.
mpz_class interval_nu_product_form(const Alphabet& ab, const Word& v1, const Word& v2);

/// phi_i(u, v) = sum_{j=max(1,v_i)}^{b_i-1} nu_i(v_i,j) nu_i(u_i,j) / (j(j+1)).
/// Equals (b_i-1)/b_i when u_i == v_i and -1/b_i otherwise. u must be
/// gap-free and v must carry a letter at pos.
mpq_class phi_factor(const Alphabet& ab, int pos, const Word& u, const Word& v);

/// Closed form of the gap-set-G weighted pair sum:
///   (-1)^{|Q\G| + |G_v|} * prod_{i in G_v} b_i * prod_{i in P\G} (b_i - 1)
///     / prod_{i not in G} b_i
/// with (P, Q) = agree_disagree(u, v). Requires gap_set(v) subset of G.
/// The matching enumeration-side sum lives in the verification suite.
mpq_class weighted_pair_sum(const Alphabet& ab, const Word& u, const Word& v, const PosSet& G);

}  // namespace gkm
