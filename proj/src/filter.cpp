#include "gkm/filter.hpp"

#include <ostream>

#include "gkm/incidence.hpp"
#include "gkm/symfunc.hpp"

namespace gkm {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return __builtin_popcount(m); }

void check_mask_width(const Alphabet& ab) {
    if (ab.length() > 24)
        throw SizeGuardError("subset tables: alphabet length above supported width");
}

// S_{l-k}(sizes on mask) for every subset mask of positions.
std::vector<mpz_class> subset_sym_table(const Alphabet& ab, int k) {
    check_mask_width(ab);
    const int l = ab.length();
    const Mask full = (Mask{1} << l) - 1;
    std::vector<mpz_class> s(full + 1);
    for (Mask g = 0; g <= full; ++g) {
        IntSeq seq;
        for (int i = 0; i < l; ++i)
            if (g & (Mask{1} << i)) seq.push_back(ab.size(i));
        s[g] = elementary_symmetric(seq, l - k);
    }
    return s;
}

// prod over mask of (b_i - 1)
std::vector<mpz_class> subset_bm1_table(const Alphabet& ab) {
    check_mask_width(ab);
    const int l = ab.length();
    const Mask full = (Mask{1} << l) - 1;
    std::vector<mpz_class> t(full + 1);
    t[0] = 1;
    for (Mask g = 1; g <= full; ++g) {
        const int i = __builtin_ctz(g);
        t[g] = t[g & (g - 1)] * (ab.size(i) - 1);
    }
    return t;
}

Mask mask_of(const PosSet& ps) {
    Mask m = 0;
    for (int p : ps) m |= Mask{1} << p;
    return m;
}

struct PairMasks {
    Mask p = 0, q = 0;
};

// P/Q masks of (u, v) over the non-gap positions of v; u gap-free.
PairMasks pair_masks(const Word& u, const Word& v) {
    PairMasks out;
    for (int i = 0; i < v.length(); ++i) {
        const auto s = v.slots[static_cast<std::size_t>(i)];
        if (s == kGap) continue;
        if (s == u.slots[static_cast<std::size_t>(i)])
            out.p |= Mask{1} << i;
        else
            out.q |= Mask{1} << i;
    }
    return out;
}

// Per-column data for the W sum: subset masks T of the non-gap set with
// multipliers L / S(G_v | T), and the denominator L * prod_{non-gap} b_i.
struct ColumnTables {
    std::vector<Mask> t_masks;
    std::vector<mpz_class> mult;
    mpz_class denom;
};

ColumnTables column_tables(const Alphabet& ab, Mask gap_mask, const std::vector<mpz_class>& sym) {
    const int l = ab.length();
    const Mask full = (Mask{1} << l) - 1;
    const Mask nm = full & ~gap_mask;
    ColumnTables ct;
    // enumerate submasks of nm, ascending
    for (Mask t = 0;; t = (t - nm) & nm) {
        ct.t_masks.push_back(t);
        if (t == nm) break;
    }
    mpz_class common = 1;
    for (Mask t : ct.t_masks)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), sym[gap_mask | t].get_mpz_t());
    ct.mult.reserve(ct.t_masks.size());
    for (Mask t : ct.t_masks) ct.mult.push_back(common / sym[gap_mask | t]);
    ct.denom = common;
    for (int i = 0; i < l; ++i)
        if (nm & (Mask{1} << i)) ct.denom *= ab.size(i);
    return ct;
}

mpq_class w_sum(const Alphabet&, const ColumnTables& ct, const std::vector<mpz_class>& bm1,
                PairMasks pq) {
    mpz_class acc = 0;
    for (std::size_t t = 0; t < ct.t_masks.size(); ++t) {
        const Mask tm = ct.t_masks[t];
        const mpz_class term = bm1[pq.p & ~tm] * ct.mult[t];
        if (popcount(pq.q & ~tm) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    mpq_class q(acc, ct.denom);
    q.canonicalize();
    return q;
}

void check_guard(std::size_t rows, std::size_t cols, std::size_t guard) {
    if (rows != 0 && cols > guard / rows)
        throw SizeGuardError("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " entries exceeds the guard of " + std::to_string(guard));
}

std::vector<Mask> h_subset_masks(const Alphabet& ab, int k) {
    check_mask_width(ab);
    const int l = ab.length();
    const Mask full = (Mask{1} << l) - 1;
    std::vector<Mask> out;
    for (Mask g = 0; g <= full; ++g)
        if (popcount(g) >= l - k) out.push_back(g);
    return out;
}

}  // namespace

mpq_class w_entry(const Alphabet& ab, int k, const Word& u, const Word& v) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("w_entry: k out of range");
    ab.check_word(u);
    ab.check_word(v);
    if (!u.gap_free()) throw std::invalid_argument("w_entry: u must be gap-free");
    if (v.gap_count() != ab.length() - k)
        throw std::invalid_argument("w_entry: v must have exactly l-k gaps");
    const auto sym = subset_sym_table(ab, k);
    const auto bm1 = subset_bm1_table(ab);
    const auto ct = column_tables(ab, mask_of(gap_set(v)), sym);
    return w_sum(ab, ct, bm1, pair_masks(u, v));
}

mpq_class h_entry(const Alphabet& ab, int k, const Word& u, const Word& w) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("h_entry: k out of range");
    ab.check_word(u);
    ab.check_word(w);
    if (!u.gap_free() || !w.gap_free()) throw std::invalid_argument("h_entry: words must be gap-free");
    const auto bm1 = subset_bm1_table(ab);
    const PairMasks pq = pair_masks(u, w);
    mpz_class acc = 0;
    for (Mask g : h_subset_masks(ab, k)) {
        const mpz_class term = bm1[pq.p & ~g];
        if (popcount(pq.q & ~g) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    mpq_class out(acc, ab.sigma_size());
    out.canonicalize();
    return out;
}

RationalMatrix w_matrix(const Alphabet& ab, int k, std::size_t entry_guard) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("w_matrix: k out of range");
    const auto uwords = enumerate_U(ab);
    const auto vwords = enumerate_V(ab, k);
    check_guard(uwords.size(), vwords.size(), entry_guard);
    const auto sym = subset_sym_table(ab, k);
    const auto bm1 = subset_bm1_table(ab);

    RationalMatrix out(uwords.size(), vwords.size());
    out.row_labels = uwords;
    out.col_labels = vwords;
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < static_cast<long>(vwords.size()); ++c) {
        const Word& v = vwords[static_cast<std::size_t>(c)];
        const auto ct = column_tables(ab, mask_of(gap_set(v)), sym);
        for (std::size_t r = 0; r < uwords.size(); ++r)
            out.at(r, static_cast<std::size_t>(c)) = w_sum(ab, ct, bm1, pair_masks(uwords[r], v));
    }
    return out;
}

RationalMatrix w_matrix_serial(const Alphabet& ab, int k, std::size_t entry_guard) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("w_matrix: k out of range");
    const auto uwords = enumerate_U(ab);
    const auto vwords = enumerate_V(ab, k);
    check_guard(uwords.size(), vwords.size(), entry_guard);
    RationalMatrix out(uwords.size(), vwords.size());
    out.row_labels = uwords;
    out.col_labels = vwords;
    for (std::size_t r = 0; r < uwords.size(); ++r)
        for (std::size_t c = 0; c < vwords.size(); ++c)
            out.at(r, c) = w_entry(ab, k, uwords[r], vwords[c]);
    return out;
}

RationalMatrix h_matrix(const Alphabet& ab, int k, std::size_t entry_guard) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("h_matrix: k out of range");
    const auto uwords = enumerate_U(ab);
    check_guard(uwords.size(), uwords.size(), entry_guard);
    const auto masks = h_subset_masks(ab, k);
    const auto bm1 = subset_bm1_table(ab);
    const mpz_class denom = ab.sigma_size();

    RationalMatrix out(uwords.size(), uwords.size());
    out.row_labels = uwords;
    out.col_labels = uwords;
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(uwords.size()); ++r) {
        mpz_class acc;
        for (std::size_t c = 0; c < uwords.size(); ++c) {
            const PairMasks pq = pair_masks(uwords[static_cast<std::size_t>(r)], uwords[c]);
            acc = 0;
            for (Mask g : masks) {
                const mpz_class& term = bm1[pq.p & ~g];
                if (popcount(pq.q & ~g) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            mpq_class q(acc, denom);
            q.canonicalize();
            out.at(static_cast<std::size_t>(r), c) = q;
        }
    }
    return out;
}

RationalMatrix h_matrix_serial(const Alphabet& ab, int k, std::size_t entry_guard) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("h_matrix: k out of range");
    const auto uwords = enumerate_U(ab);
    check_guard(uwords.size(), uwords.size(), entry_guard);
    RationalMatrix out(uwords.size(), uwords.size());
    out.row_labels = uwords;
    out.col_labels = uwords;
    for (std::size_t r = 0; r < uwords.size(); ++r)
        for (std::size_t c = 0; c < uwords.size(); ++c)
            out.at(r, c) = h_entry(ab, k, uwords[r], uwords[c]);
    return out;
}

std::vector<mpq_class> estimate_counts(const Alphabet& ab, int k, std::span<const mpz_class> raw,
                                       EstimateMode mode) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("estimate_counts: k out of range");
    const auto uwords = enumerate_U(ab);
    if (raw.size() != uwords.size())
        throw std::invalid_argument("estimate_counts: count vector has wrong length");

    std::vector<mpq_class> out(uwords.size(), mpq_class(0));
    if (mode == EstimateMode::kProject) {
        const auto masks = h_subset_masks(ab, k);
        const auto bm1 = subset_bm1_table(ab);
        const mpz_class denom = ab.sigma_size();
#pragma omp parallel for schedule(static)
        for (long r = 0; r < static_cast<long>(uwords.size()); ++r) {
            mpz_class acc = 0, cell;
            for (std::size_t c = 0; c < uwords.size(); ++c) {
                if (raw[c] == 0) continue;
                const PairMasks pq = pair_masks(uwords[static_cast<std::size_t>(r)], uwords[c]);
                cell = 0;
                for (Mask g : masks) {
                    const mpz_class& term = bm1[pq.p & ~g];
                    if (popcount(pq.q & ~g) % 2 == 0)
                        cell += term;
                    else
                        cell -= term;
                }
                acc += cell * raw[c];
            }
            mpq_class q(acc, denom);
            q.canonicalize();
            out[static_cast<std::size_t>(r)] = q;
        }
        return out;
    }

    // from gapped counts: c = A raw, then W c
    const SparseIncidence a = build_A(ab, k);
    const std::vector<mpz_class> gapped =
        apply<mpz_class>(a, std::span<const mpz_class>(raw.data(), raw.size()));
    const auto sym = subset_sym_table(ab, k);
    const auto bm1 = subset_bm1_table(ab);
    // per-column tables, then accumulate rows over the common denominator
    std::vector<ColumnTables> cts(a.n_rows());
    for (std::size_t v = 0; v < a.n_rows(); ++v)
        cts[v] = column_tables(ab, mask_of(gap_set(a.row_words[v])), sym);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(uwords.size()); ++r) {
        mpq_class acc = 0;
        for (std::size_t v = 0; v < a.n_rows(); ++v) {
            if (gapped[v] == 0) continue;
            mpq_class w = w_sum(ab, cts[v], bm1, pair_masks(uwords[static_cast<std::size_t>(r)],
                                                            a.row_words[v]));
            w *= mpq_class(gapped[v]);
            acc += w;
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

void write_filter_csv(std::ostream& os, const RationalMatrix& m, const Alphabet& ab, int digits) {
    const auto render = [&](const mpq_class& q) {
        return digits < 0 ? rational_string(q) : decimal_string(q, digits);
    };
    os << "word";
    for (const auto& w : m.col_labels) os << ',' << ab.format(w);
    os << ",row_sum\n";
    std::vector<mpq_class> csum(m.n_cols, mpq_class(0));
    for (std::size_t r = 0; r < m.n_rows; ++r) {
        os << ab.format(m.row_labels[r]);
        mpq_class rsum = 0;
        for (std::size_t c = 0; c < m.n_cols; ++c) {
            const mpq_class& q = m.at(r, c);
            os << ',' << render(q);
            rsum += q;
            csum[c] += q;
        }
        os << ',' << render(rsum) << '\n';
    }
    os << "col_sum";
    mpq_class total = 0;
    for (std::size_t c = 0; c < m.n_cols; ++c) {
        os << ',' << render(csum[c]);
        total += csum[c];
    }
    os << ',' << render(total) << '\n';
}

}  // namespace gkm
