#include "gkm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gkm/nu.hpp"
#include "gkm/oracle.hpp"
#include "gkm/symfunc.hpp"

namespace gkm {

namespace {

CheckResult ok(std::string name) { return {std::move(name), true, ""}; }
CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}
CheckResult gate(std::string name, bool pass, std::string detail_on_fail) {
    return pass ? ok(std::move(name)) : fail(std::move(name), std::move(detail_on_fail));
}

/// All words over letters-plus-gap at every position.
std::vector<Word> enumerate_delta(const Alphabet& ab) {
    std::vector<Word> out;
    Word w;
    w.slots.assign(static_cast<std::size_t>(ab.length()), 0);
    while (true) {
        out.push_back(w);
        int i = ab.length() - 1;
        for (; i >= 0; --i) {
            auto& s = w.slots[static_cast<std::size_t>(i)];
            if (s == kGap) {
                s = 0;
                continue;
            }
            s = (s + 1 < ab.size(i)) ? static_cast<std::int16_t>(s + 1) : kGap;
            break;
        }
        if (i < 0) break;
    }
    return out;
}

/// Words with nonzero letters whose gap set is exactly `gaps`.
std::vector<Word> gamma_with_gap_set(const Alphabet& ab, const PosSet& gaps) {
    std::vector<Word> out;
    std::vector<bool> is_gap(static_cast<std::size_t>(ab.length()), false);
    for (int p : gaps) is_gap[static_cast<std::size_t>(p)] = true;
    Word w;
    w.slots.assign(static_cast<std::size_t>(ab.length()), 1);
    for (int p : gaps) w.slots[static_cast<std::size_t>(p)] = kGap;
    while (true) {
        out.push_back(w);
        int i = ab.length() - 1;
        for (; i >= 0; --i) {
            if (is_gap[static_cast<std::size_t>(i)]) continue;
            auto& s = w.slots[static_cast<std::size_t>(i)];
            if (s + 1 < ab.size(i)) {
                ++s;
                break;
            }
            s = 1;
        }
        if (i < 0) break;
    }
    return out;
}

mpz_class dot(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), y[i].get_mpz_t());
    return acc;
}

std::string word_pair(const Alphabet& ab, const Word& a, const Word& b) {
    return ab.format(a) + "," + ab.format(b);
}

}  // namespace

VerifyContext make_context(const Alphabet& ab, int k, bool corrupt_a) {
    VerifyContext ctx{ab, k, build_A(ab, k), build_spectral_system(ab, k),
                      w_matrix(ab, k), spectral_pinv(ab, k)};
    if (corrupt_a) {
        // flip entry (0,0)
        auto& row = ctx.a.rows.at(0);
        const auto it = std::find(row.begin(), row.end(), 0u);
        if (it == row.end())
            row.insert(row.begin(), 0u);
        else
            row.erase(it);
    }
    return ctx;
}

std::vector<CheckResult> check_nu_base(const Alphabet& ab, bool exhaustive_pairs) {
    std::vector<CheckResult> out;
    const int l = ab.length();

    // phi closed form, per position over all letter pairs
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < l && pass; ++i) {
            Word u, v;
            u.slots.assign(static_cast<std::size_t>(l), 0);
            v.slots.assign(static_cast<std::size_t>(l), 0);
            for (int ui = 0; ui < ab.size(i) && pass; ++ui)
                for (int vi = 0; vi < ab.size(i) && pass; ++vi) {
                    u.slots[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(ui);
                    v.slots[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(vi);
                    const mpq_class expect = (ui == vi)
                                                 ? mpq_class(ab.size(i) - 1, ab.size(i))
                                                 : mpq_class(-1, ab.size(i));
                    if (phi_factor(ab, i, u, v) != expect) {
                        pass = false;
                        detail = "pos " + std::to_string(i + 1) + " letters " +
                                 std::to_string(ui) + "," + std::to_string(vi);
                    }
                }
        }
        out.push_back(gate("nu/phi_closed_form", pass, detail));
    }

    if (!exhaustive_pairs) return out;

    const auto delta = enumerate_delta(ab);

    // support of nu on the product order
    {
        bool pass = true;
        std::string detail;
        for (const Word& x : delta) {
            for (const Word& y : delta)
                if (nu_product(ab, x, y) != 0 && !word_leq(x, y)) {
                    pass = false;
                    detail = word_pair(ab, x, y);
                    break;
                }
            if (!pass) break;
        }
        out.push_back(gate("nu/support_order", pass, detail));
    }

    // interval sums against the product form
    {
        bool pass = true;
        std::string detail;
        for (const Word& x : delta) {
            for (const Word& y : delta)
                if (interval_nu_sum(ab, x, y) != interval_nu_product_form(ab, x, y)) {
                    pass = false;
                    detail = word_pair(ab, x, y);
                    break;
                }
            if (!pass) break;
        }
        out.push_back(gate("nu/interval_sum_product", pass, detail));
    }

    // weighted pair sums: enumeration of the fixed-gap-set labels vs closed form
    {
        bool pass = true;
        std::string detail;
        const auto uwords = enumerate_U(ab);
        for (const Word& v : delta) {
            const PosSet gv = gap_set(v);
            for (int extra = 0; extra <= l - static_cast<int>(gv.size()) && pass; ++extra) {
                // supersets G of the gap set with |G| = |gv| + extra
                PosSet rest;
                for (int i = 0; i < l; ++i)
                    if (std::find(gv.begin(), gv.end(), i) == gv.end()) rest.push_back(i);
                for_each_combination(static_cast<int>(rest.size()), extra, [&](const PosSet& pick) {
                    if (!pass) return;
                    PosSet g = gv;
                    for (int j : pick) g.push_back(rest[static_cast<std::size_t>(j)]);
                    std::sort(g.begin(), g.end());
                    for (const Word& u : uwords) {
                        mpq_class left = 0;
                        for (const Word& vp : gamma_with_gap_set(ab, g)) {
                            mpz_class den = 1;
                            for (int i : nongap_set(vp)) {
                                const long c = vp.slots[static_cast<std::size_t>(i)];
                                den *= c + c * c;
                            }
                            mpq_class term(nu_product(ab, v, vp) * nu_product(ab, u, vp), den);
                            term.canonicalize();
                            left += term;
                        }
                        if (left != weighted_pair_sum(ab, u, v, g)) {
                            pass = false;
                            detail = word_pair(ab, u, v);
                            return;
                        }
                    }
                });
            }
            if (!pass) break;
        }
        out.push_back(gate("nu/weighted_pair_sum", pass, detail));
    }

    return out;
}

std::vector<CheckResult> check_nu_at_k(const Alphabet& ab, int k, bool exhaustive_pairs) {
    std::vector<CheckResult> out;
    const int l = ab.length();
    const auto vwords = enumerate_V(ab, k);
    const auto uwords = enumerate_U(ab);
    const auto labels = enumerate_Vprime_upto(ab, l);
    Word gapword;
    gapword.slots.assign(static_cast<std::size_t>(l), kGap);
    const int sign = ((l - k) % 2 == 0) ? 1 : -1;

    // column sums vanish for every label except the all-gap word
    {
        bool pass = true;
        std::string detail;
        for (const Word& vp : labels) {
            if (vp == gapword) continue;
            mpz_class s = 0;
            for (const Word& w : vwords) s += nu_product(ab, w, vp);
            if (s != 0) {
                pass = false;
                detail = ab.format(vp);
                break;
            }
        }
        out.push_back(gate("nu/colsum_zero", pass, detail));
    }

    // all-gap label: the match-set sums carry the signed symmetric value,
    // and the unrestricted column sum carries the multiplicity-weighted one
    {
        const mpz_class expect = sign * elementary_symmetric(ab.sizes_seq(), l - k);
        bool pass = true;
        std::string detail;
        for (const Word& u : uwords) {
            mpz_class s = 0;
            for (const Word& y : match_set_M(ab, u, k)) s += nu_product(ab, y, gapword);
            if (s != expect) {
                pass = false;
                detail = ab.format(u);
                break;
            }
        }
        out.push_back(gate("nu/gapword_matchsum", pass, detail));

        mpz_class total = 0;
        for (const Word& w : vwords) total += nu_product(ab, w, gapword);
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(l),
                     static_cast<unsigned long>(l - k));
        out.push_back(gate("nu/gapword_colsum_total", total == sign * binom * ab.sigma_size(),
                           total.get_str()));
    }

    // scaled match-set sums for every label (all u)
    {
        bool pass = true;
        std::string detail;
        for (const Word& vp : labels) {
            const mpz_class scale =
                sign * elementary_symmetric(restrict_sizes(ab, gap_set(vp)), l - k);
            for (const Word& u : uwords) {
                mpz_class s = 0;
                for (const Word& y : match_set_M(ab, u, k)) s += nu_product(ab, y, vp);
                if (s != scale * nu_product(ab, u, vp)) {
                    pass = false;
                    detail = word_pair(ab, u, vp);
                    break;
                }
            }
            if (!pass) break;
        }
        out.push_back(gate("nu/matchsum_scaling", pass, detail));
    }

    // gap-fill sums flip the sign only
    {
        bool pass = true;
        std::string detail;
        for (const Word& vp : labels) {
            for (const Word& v : vwords) {
                mpz_class s = 0;
                for (const Word& u : match_set_N(ab, v)) s += nu_product(ab, u, vp);
                if (s != sign * nu_product(ab, v, vp)) {
                    pass = false;
                    detail = word_pair(ab, v, vp);
                    break;
                }
            }
            if (!pass) break;
        }
        out.push_back(gate("nu/gapfill_sum_sign", pass, detail));
    }

    // Gram diagonal: the closed-form squared norm
    {
        bool pass = true;
        std::string detail;
        for (const Word& vp : labels) {
            mpz_class s = 0, term;
            for (const Word& w : vwords) {
                term = nu_product(ab, w, vp);
                mpz_addmul(s.get_mpz_t(), term.get_mpz_t(), term.get_mpz_t());
            }
            mpz_class expect = elementary_symmetric(restrict_sizes(ab, gap_set(vp)), l - k);
            for (int i : gap_set(vp)) expect *= ab.size(i);
            for (int i : nongap_set(vp)) {
                const long c = vp.slots[static_cast<std::size_t>(i)];
                expect *= c + c * c;
            }
            if (s != expect) {
                pass = false;
                detail = ab.format(vp);
                break;
            }
        }
        out.push_back(gate("nu/gram_diagonal", pass, detail));
    }

    if (exhaustive_pairs) {
        bool pass = true;
        std::string detail;
        std::vector<std::vector<mpz_class>> cols(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            cols[i].reserve(vwords.size());
            for (const Word& w : vwords) cols[i].push_back(nu_product(ab, w, labels[i]));
        }
        for (std::size_t i = 0; i < labels.size() && pass; ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (dot(cols[i], cols[j]) != 0) {
                    pass = false;
                    detail = word_pair(ab, labels[i], labels[j]);
                    break;
                }
        out.push_back(gate("nu/gram_offdiagonal", pass, detail));
    }

    return out;
}

std::vector<CheckResult> check_spectral(const VerifyContext& ctx, double tol) {
    std::vector<CheckResult> out;
    const Alphabet& ab = ctx.alphabet;
    const auto& sys = ctx.sys;
    const auto& a = ctx.a;
    const int l = ab.length();

    out.push_back(gate("spectral/completeness",
                       mpz_class(static_cast<unsigned long>(sys.pairs.size())) == ab.sigma_size(),
                       std::to_string(sys.pairs.size()) + " pairs"));
    out.push_back(gate("spectral/nonzero_count",
                       mpz_class(static_cast<unsigned long>(sys.nonzero_count)) ==
                           r_poly(ab.sizes_seq(), ctx.k),
                       std::to_string(sys.nonzero_count)));
    {
        bool pass = true;
        for (const auto& p : sys.pairs)
            if ((p.lambda > 0) != (p.n <= ctx.k)) pass = false;
        out.push_back(gate("spectral/positivity_pattern", pass, ""));
    }

    bool id_i = true, id_ii = true, id_iii = true, id_iv = true, norms = true;
    std::string d_i, d_ii, d_iii, d_iv, d_norms;
    for (const auto& p : sys.pairs) {
        const auto atx =
            apply_transpose_serial<mpz_class>(a, std::span<const mpz_class>(p.x));
        for (std::size_t i = 0; i < atx.size() && id_i; ++i)
            if (atx[i] != p.lambda * p.z[i]) {
                id_i = false;
                d_i = ab.format(p.label);
            }
        const auto az = apply_serial<mpz_class>(a, std::span<const mpz_class>(p.z));
        for (std::size_t i = 0; i < az.size() && id_ii; ++i)
            if (az[i] != p.x[i]) {
                id_ii = false;
                d_ii = ab.format(p.label);
            }
        const auto aatx = apply_serial<mpz_class>(a, std::span<const mpz_class>(atx));
        for (std::size_t i = 0; i < aatx.size() && id_iii; ++i)
            if (aatx[i] != p.lambda * p.x[i]) {
                id_iii = false;
                d_iii = ab.format(p.label);
            }
        const auto ataz = apply_transpose_serial<mpz_class>(a, std::span<const mpz_class>(az));
        for (std::size_t i = 0; i < ataz.size() && id_iv; ++i)
            if (ataz[i] != p.lambda * p.z[i]) {
                id_iv = false;
                d_iv = ab.format(p.label);
            }
        if (dot(p.x, p.x) != p.norm2_x || dot(p.z, p.z) != p.norm2_z) {
            norms = false;
            d_norms = ab.format(p.label);
        }
    }
    out.push_back(gate("spectral/matid_i", id_i, d_i));
    out.push_back(gate("spectral/matid_ii", id_ii, d_ii));
    out.push_back(gate("spectral/matid_iii", id_iii, d_iii));
    out.push_back(gate("spectral/matid_iv", id_iv, d_iv));
    out.push_back(gate("spectral/norm_closed_form", norms, d_norms));

    // pairwise orthogonality of the x family and the z family
    {
        const std::size_t n = sys.pairs.size();
        bool x_ok = true, z_ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : x_ok, z_ok)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            const auto& pi = sys.pairs[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
                const auto& pj = sys.pairs[j];
                if (dot(pi.x, pj.x) != 0) x_ok = false;
                if (dot(pi.z, pj.z) != 0) z_ok = false;
            }
        }
        out.push_back(gate("spectral/matid_v_x_orthogonal", x_ok, ""));
        out.push_back(gate("spectral/matid_vi_z_orthogonal", z_ok, ""));
    }

    // trace of A A^T against the eigenvalue total
    {
        mpz_class sum_lambda = 0;
        for (const auto& p : sys.pairs) sum_lambda += p.lambda;
        mpz_class trace = 0;
        for (const auto& row : a.rows) trace += static_cast<unsigned long>(row.size());
        out.push_back(gate("spectral/trace", sum_lambda == trace,
                           sum_lambda.get_str() + " vs " + trace.get_str()));
    }

    // eigenvalue multiset against the numeric oracle
    {
        std::vector<double> closed;
        for (const auto& p : sys.pairs)
            if (p.lambda > 0) closed.push_back(p.lambda.get_d());
        closed.resize(a.n_rows(), 0.0);  // pad with the zero eigenvalues
        std::sort(closed.begin(), closed.end(), std::greater<>());
        std::string detail;
        bool pass = true;
        if (closed.size() < a.n_rows()) {
            pass = false;
            detail = "more nonzero eigenvalues than rows";
        } else {
            try {
                const auto eig = jacobi_eigh(dmul(dense_from(a), dtranspose(dense_from(a))));
                for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i)
                    if (std::abs(eig.eigenvalues[i] - closed[i]) > 1e-8) {
                        pass = false;
                        detail = "index " + std::to_string(i);
                        break;
                    }
            } catch (const std::exception& e) {
                pass = false;
                detail = e.what();
            }
        }
        out.push_back(gate("spectral/eigen_multiset_oracle", pass, detail));
    }
    (void)tol;
    return out;
}

std::vector<CheckResult> check_rank_bases(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    const Alphabet& ab = ctx.alphabet;
    const mpz_class rk = r_poly(ab.sizes_seq(), ctx.k);

    out.push_back(gate("rank/numeric_equals_closed",
                       mpz_class(numeric_rank(dense_from(ctx.a))) == rk,
                       "expected " + rk.get_str()));

    {
        const auto basis = null_space_basis(ab, ctx.k);
        bool annihilated = true;
        std::string detail;
        for (const auto& [label, z] : basis) {
            const auto az = apply_serial<mpz_class>(ctx.a, std::span<const mpz_class>(z));
            for (const auto& e : az)
                if (e != 0) {
                    annihilated = false;
                    detail = ab.format(label);
                    break;
                }
            if (!annihilated) break;
        }
        out.push_back(gate("nullspace/annihilation", annihilated, detail));
        out.push_back(gate("nullspace/count",
                           mpz_class(static_cast<unsigned long>(basis.size())) ==
                               ab.sigma_size() - rk,
                           std::to_string(basis.size())));
    }

    {
        const auto basis = row_space_basis(ab, ctx.k);
        bool count_ok = mpz_class(static_cast<unsigned long>(basis.size())) == rk;
        DenseMatrix rows(basis.size(), basis.empty() ? 0 : basis.front().second.size());
        for (std::size_t r = 0; r < basis.size(); ++r)
            for (std::size_t c = 0; c < basis[r].second.size(); ++c)
                rows.at(r, c) = basis[r].second[c];
        bool rank_ok = mpz_class(numeric_rank(rows)) == rk;
        out.push_back(gate("rowspace/count", count_ok, std::to_string(basis.size())));
        out.push_back(gate("rowspace/numeric_rank", rank_ok, ""));
    }
    return out;
}

namespace {

bool equals_incidence(const RationalMatrix& m, const SparseIncidence& a) {
    if (m.n_rows != a.n_rows() || m.n_cols != a.n_cols()) return false;
    std::vector<char> dense(a.n_cols());
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        std::fill(dense.begin(), dense.end(), 0);
        for (auto c : a.rows[r]) dense[c] = 1;
        for (std::size_t c = 0; c < a.n_cols(); ++c)
            if (m.at(r, c) != static_cast<int>(dense[c])) return false;
    }
    return true;
}

}  // namespace

std::vector<CheckResult> check_pinv(const VerifyContext& ctx, double tol) {
    std::vector<CheckResult> out;
    out.push_back(gate("pinv/closed_equals_spectral",
                       same_entries(ctx.w_closed, ctx.w_spectral), ""));

    {
        std::string detail;
        bool pass = true;
        try {
            const double diff = max_abs_diff(dense_from(ctx.w_closed), numeric_pinv(dense_from(ctx.a)));
            pass = diff <= tol;
            std::ostringstream os;
            os << "max diff " << diff;
            detail = os.str();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        out.push_back(gate("pinv/matches_numeric_oracle", pass, detail));
    }

    // Penrose, exact
    const RationalMatrix aw = mul_sparse_left(ctx.a, ctx.w_closed);
    const RationalMatrix wa = mul_sparse_right(ctx.w_closed, ctx.a);
    out.push_back(gate("penrose/awa_exact", equals_incidence(mul_sparse_left(ctx.a, wa), ctx.a), ""));
    out.push_back(gate("penrose/waw_exact", same_entries(mul(ctx.w_closed, aw), ctx.w_closed), ""));
    out.push_back(gate("penrose/aw_symmetric_exact", is_symmetric(aw), ""));
    out.push_back(gate("penrose/wa_symmetric_exact", is_symmetric(wa), ""));

    // Penrose, numeric residuals
    {
        const auto res = penrose_residuals(dense_from(ctx.a), dense_from(ctx.w_closed));
        const double worst = *std::max_element(res.begin(), res.end());
        std::ostringstream os;
        os << "max residual " << worst;
        out.push_back(gate("penrose/numeric_residuals", worst <= tol, os.str()));
    }
    return out;
}

std::vector<CheckResult> check_filter_props(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    const Alphabet& ab = ctx.alphabet;
    const RationalMatrix h = h_matrix(ab, ctx.k);
    const RationalMatrix wa = mul_sparse_right(ctx.w_closed, ctx.a);

    out.push_back(gate("filter/h_equals_wa", same_entries(h, wa), ""));
    out.push_back(gate("filter/h_symmetric", is_symmetric(h), ""));
    out.push_back(gate("filter/h_idempotent", same_entries(mul(h, h), h), ""));
    {
        bool rows_one = true, cols_one = true;
        for (const auto& s : row_sums(h))
            if (s != 1) rows_one = false;
        for (const auto& s : col_sums(h))
            if (s != 1) cols_one = false;
        out.push_back(gate("filter/row_sums_one", rows_one, ""));
        out.push_back(gate("filter/col_sums_one", cols_one, ""));
    }
    out.push_back(gate("filter/h_numeric_rank",
                       mpz_class(numeric_rank(dense_from(h))) == r_poly(ab.sizes_seq(), ctx.k),
                       ""));
    return out;
}

std::vector<CheckResult> check_svd(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    if (ctx.a.n_rows() > 500) {
        out.push_back(ok("svd/skipped_over_500_rows"));
        return out;
    }
    const ReducedSVD svd = reduced_svd(ctx.alphabet, ctx.k);
    const DenseMatrix ad = dense_from(ctx.a);
    const std::size_t r = svd.singular_values.size();

    // A = U Sigma V^T
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < ad.n_rows; ++i)
            for (std::size_t j = 0; j < ad.n_cols; ++j) {
                double s = 0.0;
                for (std::size_t t = 0; t < r; ++t)
                    s += svd.u.at(i, t) * svd.singular_values[t] * svd.v.at(j, t);
                worst = std::max(worst, std::abs(s - ad.at(i, j)));
            }
        std::ostringstream os;
        os << "max diff " << worst;
        out.push_back(gate("svd/reconstruction", worst <= 1e-10, os.str()));
    }
    // orthonormal factors
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                double uu = 0.0, vv = 0.0;
                for (std::size_t t = 0; t < svd.u.n_rows; ++t) uu += svd.u.at(t, i) * svd.u.at(t, j);
                for (std::size_t t = 0; t < svd.v.n_rows; ++t) vv += svd.v.at(t, i) * svd.v.at(t, j);
                const double target = (i == j) ? 1.0 : 0.0;
                worst = std::max({worst, std::abs(uu - target), std::abs(vv - target)});
            }
        out.push_back(gate("svd/orthonormal_factors", worst <= 1e-10, ""));
    }
    // singular values against the closed-form eigenvalues
    {
        std::vector<double> expect;
        for (const auto& p : ctx.sys.pairs)
            if (p.lambda > 0) expect.push_back(std::sqrt(p.lambda.get_d()));
        std::sort(expect.begin(), expect.end(), std::greater<>());
        bool pass = expect.size() == r;
        for (std::size_t i = 0; pass && i < r; ++i)
            if (std::abs(svd.singular_values[i] - expect[i]) > 1e-10) pass = false;
        out.push_back(gate("svd/singular_values", pass, ""));
    }
    // A V = U Sigma
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < ad.n_rows; ++i)
            for (std::size_t t = 0; t < r; ++t) {
                double av = 0.0;
                for (std::size_t j = 0; j < ad.n_cols; ++j) av += ad.at(i, j) * svd.v.at(j, t);
                worst = std::max(worst, std::abs(av - svd.u.at(i, t) * svd.singular_values[t]));
            }
        out.push_back(gate("svd/av_equals_us", worst <= 1e-10, ""));
    }
    return out;
}

std::vector<CheckResult> run_verification(const Alphabet& ab, int k, const VerifyOptions& opt) {
    if (ab.sigma_size() > static_cast<unsigned long>(opt.sigma_guard))
        throw SizeGuardError("instance above the verification guard of " +
                             std::to_string(opt.sigma_guard) + " gap-free words");
    const bool exhaustive = opt.exhaustive_pairs && ab.length() <= 3;
    const VerifyContext ctx = make_context(ab, k, opt.corrupt_a);

    std::vector<CheckResult> out;
    const auto append = [&out](std::vector<CheckResult> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(check_nu_base(ab, exhaustive));
    append(check_nu_at_k(ab, k, exhaustive));
    append(check_spectral(ctx, opt.tol));
    append(check_rank_bases(ctx));
    append(check_pinv(ctx, opt.tol));
    append(check_filter_props(ctx));
    append(check_svd(ctx));
    return out;
}

}  // namespace gkm
