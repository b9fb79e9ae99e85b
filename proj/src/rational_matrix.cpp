#include "gkm/rational_matrix.hpp"

#include <stdexcept>

namespace gkm {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool same_entries(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.n_rows != y.n_rows || x.n_cols != y.n_cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix t(m.n_cols, m.n_rows);
    t.row_labels = m.col_labels;
    t.col_labels = m.row_labels;
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = 0; c < m.n_cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

bool is_symmetric(const RationalMatrix& m) {
    if (m.n_rows != m.n_cols) return false;
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = r + 1; c < m.n_cols; ++c)
            if (m.at(r, c) != m.at(c, r)) return false;
    return true;
}

namespace {

// M == N / den with integer N; den is the lcm of all entry denominators.
struct IntegerForm {
    std::vector<mpz_class> n;
    mpz_class den = 1;
};

IntegerForm lift(const RationalMatrix& m) {
    IntegerForm f;
    for (const auto& q : m.a) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den().get_mpz_t());
    f.n.resize(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i)
        f.n[i] = m.a[i].get_num() * (f.den / m.a[i].get_den());
    return f;
}

void check_mul_dims(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.n_cols != y.n_rows) throw std::invalid_argument("mul: dimension mismatch");
}

}  // namespace

RationalMatrix mul(const RationalMatrix& x, const RationalMatrix& y) {
    check_mul_dims(x, y);
    const IntegerForm xf = lift(x);
    const IntegerForm yf = lift(y);
    const mpz_class den = xf.den * yf.den;
    RationalMatrix out(x.n_rows, y.n_cols);
    out.row_labels = x.row_labels;
    out.col_labels = y.col_labels;
    const std::size_t inner = x.n_cols;
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(x.n_rows); ++r) {
        mpz_class acc;
        for (std::size_t c = 0; c < y.n_cols; ++c) {
            acc = 0;
            const std::size_t xo = static_cast<std::size_t>(r) * inner;
            for (std::size_t t = 0; t < inner; ++t)
                mpz_addmul(acc.get_mpz_t(), xf.n[xo + t].get_mpz_t(),
                           yf.n[t * y.n_cols + c].get_mpz_t());
            mpq_class q(acc, den);
            q.canonicalize();
            out.at(static_cast<std::size_t>(r), c) = q;
        }
    }
    return out;
}

RationalMatrix mul_serial(const RationalMatrix& x, const RationalMatrix& y) {
    check_mul_dims(x, y);
    RationalMatrix out(x.n_rows, y.n_cols);
    out.row_labels = x.row_labels;
    out.col_labels = y.col_labels;
    for (std::size_t r = 0; r < x.n_rows; ++r)
        for (std::size_t c = 0; c < y.n_cols; ++c) {
            mpq_class acc = 0;
            for (std::size_t t = 0; t < x.n_cols; ++t) acc += x.at(r, t) * y.at(t, c);
            out.at(r, c) = acc;
        }
    return out;
}

RationalMatrix mul_sparse_left(const SparseIncidence& a, const RationalMatrix& m) {
    if (a.n_cols() != m.n_rows) throw std::invalid_argument("mul_sparse_left: dimension mismatch");
    RationalMatrix out(a.n_rows(), m.n_cols);
    out.row_labels = a.row_words;
    out.col_labels = m.col_labels;
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(a.n_rows()); ++r)
        for (auto t : a.rows[static_cast<std::size_t>(r)])
            for (std::size_t c = 0; c < m.n_cols; ++c)
                out.at(static_cast<std::size_t>(r), c) += m.at(t, c);
    return out;
}

RationalMatrix mul_sparse_right(const RationalMatrix& m, const SparseIncidence& a) {
    if (m.n_cols != a.n_rows()) throw std::invalid_argument("mul_sparse_right: dimension mismatch");
    RationalMatrix out(m.n_rows, a.n_cols());
    out.row_labels = m.row_labels;
    out.col_labels = a.col_words;
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(m.n_rows); ++r)
        for (std::size_t t = 0; t < m.n_cols; ++t) {
            const mpq_class& x = m.at(static_cast<std::size_t>(r), t);
            if (x == 0) continue;
            for (auto c : a.rows[t]) out.at(static_cast<std::size_t>(r), c) += x;
        }
    return out;
}

std::vector<mpq_class> row_sums(const RationalMatrix& m) {
    std::vector<mpq_class> out(m.n_rows, mpq_class(0));
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = 0; c < m.n_cols; ++c) out[r] += m.at(r, c);
    return out;
}

std::vector<mpq_class> col_sums(const RationalMatrix& m) {
    std::vector<mpq_class> out(m.n_cols, mpq_class(0));
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = 0; c < m.n_cols; ++c) out[c] += m.at(r, c);
    return out;
}

std::string decimal_string(const mpq_class& q, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative precision");
    const bool negative = q < 0;
    mpq_class mag = negative ? mpq_class(-q) : q;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // mag * 10^digits = whole + rem/den with 0 <= rem < den
    mpz_class num = mag.get_num() * scale;
    const mpz_class& den = mag.get_den();
    mpz_class whole, rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half to even on the discarded fraction rem/den
    const mpz_class twice = 2 * rem;
    if (twice > den || (twice == den && mpz_odd_p(whole.get_mpz_t()) != 0)) whole += 1;
    std::string s = whole.get_str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        out = s.substr(0, s.size() - static_cast<std::size_t>(digits)) + "." +
              s.substr(s.size() - static_cast<std::size_t>(digits));
    }
    if (negative && out.find_first_not_of("0.") != std::string::npos) out.insert(0, 1, '-');
    return out;
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gkm
