#include "gkm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gkm/incidence.hpp"
#include "gkm/nu.hpp"
#include "gkm/symfunc.hpp"

namespace gkm {

namespace {

void check_gamma_word(const Alphabet& ab, const Word& w) {
    ab.check_word(w);
    for (auto s : w.slots)
        if (s == 0) throw std::invalid_argument("label words must have nonzero letters");
}

std::vector<Word> gamma_labels(const Alphabet& ab) {
    return enumerate_Vprime_upto(ab, ab.length());
}

EigenPair make_pair(const Alphabet& ab, int k, const Word& label,
                    const std::vector<Word>& vwords, const std::vector<Word>& uwords) {
    EigenPair p;
    p.label = label;
    p.n = static_cast<int>(nongap_set(label).size());
    const PosSet gaps = gap_set(label);
    p.lambda = elementary_symmetric(restrict_sizes(ab, gaps), ab.length() - k);

    const int sign = ((ab.length() - k) % 2 == 0) ? 1 : -1;
    p.x.reserve(vwords.size());
    for (const Word& w : vwords) p.x.push_back(sign * nu_product(ab, w, label));
    p.z.reserve(uwords.size());
    for (const Word& u : uwords) p.z.push_back(nu_product(ab, u, label));

    mpz_class tail = 1;
    for (int i : gaps) tail *= ab.size(i);
    for (int i : nongap_set(label)) {
        const long c = label.slots[static_cast<std::size_t>(i)];
        tail *= c + c * c;
    }
    p.norm2_x = p.lambda * tail;
    p.norm2_z = tail;  // the k = l case of the same closed form (S_0 = 1)
    return p;
}

}  // namespace

SpectralSystem build_spectral_system_serial(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length())
        throw std::invalid_argument("build_spectral_system: k out of range");
    SpectralSystem sys{ab, k, {}, 0};
    const auto labels = gamma_labels(ab);
    const auto vwords = enumerate_V(ab, k);
    const auto uwords = enumerate_U(ab);
    sys.pairs.reserve(labels.size());
    for (const Word& label : labels) sys.pairs.push_back(make_pair(ab, k, label, vwords, uwords));
    for (const auto& p : sys.pairs)
        if (p.lambda > 0) ++sys.nonzero_count;
    return sys;
}

SpectralSystem build_spectral_system(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length())
        throw std::invalid_argument("build_spectral_system: k out of range");
    SpectralSystem sys{ab, k, {}, 0};
    const auto labels = gamma_labels(ab);
    const auto vwords = enumerate_V(ab, k);
    const auto uwords = enumerate_U(ab);
    sys.pairs.resize(labels.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(labels.size()); ++i)
        sys.pairs[static_cast<std::size_t>(i)] =
            make_pair(ab, k, labels[static_cast<std::size_t>(i)], vwords, uwords);
    for (const auto& p : sys.pairs)
        if (p.lambda > 0) ++sys.nonzero_count;
    return sys;
}

mpz_class eigenvalue_of(const Alphabet& ab, int k, const Word& label) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("eigenvalue_of: k out of range");
    check_gamma_word(ab, label);
    return elementary_symmetric(restrict_sizes(ab, gap_set(label)), ab.length() - k);
}

std::vector<std::pair<Word, std::vector<mpz_class>>> null_space_basis(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("null_space_basis: k out of range");
    std::vector<std::pair<Word, std::vector<mpz_class>>> out;
    const auto uwords = enumerate_U(ab);
    for (int n = k + 1; n <= ab.length(); ++n) {
        for (const Word& label : enumerate_Vprime(ab, n)) {
            std::vector<mpz_class> z;
            z.reserve(uwords.size());
            for (const Word& u : uwords) z.push_back(nu_product(ab, u, label));
            out.emplace_back(label, std::move(z));
        }
    }
    return out;
}

std::vector<std::pair<Word, std::vector<int>>> row_space_basis(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("row_space_basis: k out of range");
    const StackedIncidence st = build_A_upto(ab, k);
    std::vector<std::pair<Word, std::vector<int>>> out;
    for (const Word& w : enumerate_Vprime_upto(ab, k)) out.emplace_back(w, row_vector(st, w));
    return out;
}

ReducedSVD reduced_svd(const Alphabet& ab, int k) {
    const SpectralSystem sys = build_spectral_system(ab, k);
    std::vector<const EigenPair*> nz;
    for (const auto& p : sys.pairs)
        if (p.lambda > 0) nz.push_back(&p);
    std::stable_sort(nz.begin(), nz.end(),
                     [](const EigenPair* a, const EigenPair* b) { return a->lambda > b->lambda; });

    ReducedSVD svd;
    const std::size_t r = nz.size();
    svd.u = DenseMatrix(nz.empty() ? 0 : nz.front()->x.size(), r);
    svd.v = DenseMatrix(nz.empty() ? 0 : nz.front()->z.size(), r);
    svd.labels.reserve(r);
    svd.singular_values.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        const EigenPair& p = *nz[j];
        svd.labels.push_back(p.label);
        const double sigma = std::sqrt(p.lambda.get_d());
        const double nx = std::sqrt(p.norm2_x.get_d());
        const double nzr = std::sqrt(p.norm2_z.get_d());
        if (std::abs(sigma - nx / nzr) > 1e-9 * (sigma + 1.0))
            throw std::runtime_error("reduced_svd: sigma inconsistent with vector norms");
        svd.singular_values.push_back(sigma);
        for (std::size_t i = 0; i < p.x.size(); ++i) svd.u.at(i, j) = p.x[i].get_d() / nx;
        for (std::size_t i = 0; i < p.z.size(); ++i) svd.v.at(i, j) = p.z[i].get_d() / nzr;
    }
    return svd;
}

namespace {

struct PinvParts {
    std::vector<Word> labels;           // n <= k
    std::vector<std::vector<mpz_class>> x;  // per label, over V rows
    std::vector<mpz_class> weight;          // ||x||^2 * lambda per label
};

PinvParts pinv_parts(const Alphabet& ab, int k, const std::vector<Word>& vwords) {
    PinvParts parts;
    parts.labels = enumerate_Vprime_upto(ab, k);
    const int sign = ((ab.length() - k) % 2 == 0) ? 1 : -1;
    parts.x.reserve(parts.labels.size());
    parts.weight.reserve(parts.labels.size());
    for (const Word& label : parts.labels) {
        std::vector<mpz_class> col;
        col.reserve(vwords.size());
        for (const Word& w : vwords) col.push_back(sign * nu_product(ab, w, label));
        parts.x.push_back(std::move(col));

        const PosSet gaps = gap_set(label);
        mpz_class lambda = elementary_symmetric(restrict_sizes(ab, gaps), ab.length() - k);
        mpz_class n2 = lambda;
        for (int i : gaps) n2 *= ab.size(i);
        for (int i : nongap_set(label)) {
            const long c = label.slots[static_cast<std::size_t>(i)];
            n2 *= c + c * c;
        }
        parts.weight.push_back(n2 * lambda);
    }
    return parts;
}

}  // namespace

RationalMatrix spectral_pinv(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("spectral_pinv: k out of range");
    const SparseIncidence a = build_A(ab, k);
    const auto parts = pinv_parts(ab, k, a.row_words);
    const std::size_t nlab = parts.labels.size();

    // columns of A^T Upsilon, one apply_transpose per label
    std::vector<std::vector<mpz_class>> m(nlab);
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < static_cast<long>(nlab); ++c)
        m[static_cast<std::size_t>(c)] = apply_transpose_serial<mpz_class>(
            a, std::span<const mpz_class>(parts.x[static_cast<std::size_t>(c)]));

    mpz_class common = 1;
    for (const auto& w : parts.weight)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.get_mpz_t());
    std::vector<mpz_class> mult(nlab);
    for (std::size_t c = 0; c < nlab; ++c) mult[c] = common / parts.weight[c];

    RationalMatrix out(a.n_cols(), a.n_rows());
    out.row_labels = a.col_words;
    out.col_labels = a.row_words;
#pragma omp parallel for schedule(static)
    for (long u = 0; u < static_cast<long>(a.n_cols()); ++u) {
        std::vector<mpz_class> scaled(nlab);
        for (std::size_t c = 0; c < nlab; ++c)
            scaled[c] = m[c][static_cast<std::size_t>(u)] * mult[c];
        mpz_class acc;
        for (std::size_t v = 0; v < a.n_rows(); ++v) {
            acc = 0;
            for (std::size_t c = 0; c < nlab; ++c)
                mpz_addmul(acc.get_mpz_t(), scaled[c].get_mpz_t(), parts.x[c][v].get_mpz_t());
            mpq_class q(acc, common);
            q.canonicalize();
            out.at(static_cast<std::size_t>(u), v) = q;
        }
    }
    return out;
}

RationalMatrix spectral_pinv_serial(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("spectral_pinv: k out of range");
    const SparseIncidence a = build_A(ab, k);
    const auto parts = pinv_parts(ab, k, a.row_words);
    const std::size_t nv = a.n_rows();

    // C = Upsilon D Upsilon^T over the row words, then W = A^T C
    RationalMatrix c(nv, nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            mpq_class acc = 0;
            for (std::size_t t = 0; t < parts.labels.size(); ++t) {
                mpq_class term(parts.x[t][i] * parts.x[t][j], parts.weight[t]);
                term.canonicalize();
                acc += term;
            }
            c.at(i, j) = acc;
        }
    RationalMatrix out(a.n_cols(), nv);
    out.row_labels = a.col_words;
    out.col_labels = a.row_words;
    for (std::size_t r = 0; r < nv; ++r)
        for (auto u : a.rows[r])
            for (std::size_t v = 0; v < nv; ++v) out.at(u, v) += c.at(r, v);
    return out;
}

void write_spectrum_csv(std::ostream& os, const SpectralSystem& sys) {
    os << "label,n,lambda,nonzero,norm2_x,norm2_z\n";
    for (const auto& p : sys.pairs) {
        os << sys.alphabet.format(p.label) << ',' << p.n << ',' << p.lambda.get_str() << ','
           << (p.lambda > 0 ? 1 : 0) << ',' << p.norm2_x.get_str() << ',' << p.norm2_z.get_str()
           << '\n';
    }
}

}  // namespace gkm
