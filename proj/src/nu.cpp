#include "gkm/nu.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

namespace {

void check_slot(int base, int s, const char* who) {
    if (s == kGap) return;
    if (s < 0 || s >= base) throw std::invalid_argument(std::string(who) + ": slot out of range");
}

}  // namespace

mpz_class nu_pos(int base, int x, int y) {
    if (base < 2) throw std::invalid_argument("nu_pos: base must be >= 2");
    check_slot(base, x, "nu_pos");
    check_slot(base, y, "nu_pos");
    if (x == kGap && y == kGap) return -base;
    if (x == y) return -y;
    const int xv = (x == kGap) ? base : x;
    const int yv = (y == kGap) ? base : y;
    return xv < yv ? 1 : 0;
}

mpz_class nu_product(const Alphabet& ab, const Word& x, const Word& y) {
    ab.check_word(x);
    ab.check_word(y);
    mpz_class p = 1;
    for (int i = 0; i < ab.length(); ++i) {
        p *= nu_pos(ab.size(i), x.slots[static_cast<std::size_t>(i)],
                    y.slots[static_cast<std::size_t>(i)]);
        if (p == 0) return 0;
    }
    return p;
}

mpz_class interval_nu_sum(const Alphabet& ab, const Word& v1, const Word& v2) {
    ab.check_word(v1);
    ab.check_word(v2);
    if (!word_leq(v1, v2)) return 0;
    // walk the componentwise interval; per position the range is
    // v1_i .. v2_i in the order 0 < ... < b_i-1 < gap
    const int l = ab.length();
    std::vector<std::vector<std::int16_t>> ranges(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        const auto lo = v1.slots[static_cast<std::size_t>(i)];
        const auto hi = v2.slots[static_cast<std::size_t>(i)];
        auto& r = ranges[static_cast<std::size_t>(i)];
        if (lo == kGap) {
            r.push_back(kGap);
            continue;
        }
        const int top = (hi == kGap) ? ab.size(i) - 1 : hi;
        for (int c = lo; c <= top; ++c) r.push_back(static_cast<std::int16_t>(c));
        if (hi == kGap) r.push_back(kGap);
    }
    mpz_class total = 0;
    Word z = v1;
    std::vector<std::size_t> cursor(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < l; ++i) z.slots[static_cast<std::size_t>(i)] = ranges[static_cast<std::size_t>(i)][0];
    while (true) {
        total += nu_product(ab, v1, z);
        int i = l - 1;
        for (; i >= 0; --i) {
            auto& c = cursor[static_cast<std::size_t>(i)];
            const auto& r = ranges[static_cast<std::size_t>(i)];
            if (c + 1 < r.size()) {
                ++c;
                z.slots[static_cast<std::size_t>(i)] = r[c];
                break;
            }
            c = 0;
            z.slots[static_cast<std::size_t>(i)] = r[0];
        }
        if (i < 0) break;
    }
    return total;
}

mpz_class interval_nu_product_form(const Alphabet& ab, const Word& v1, const Word& v2) {
    ab.check_word(v1);
    ab.check_word(v2);
    if (!word_leq(v1, v2)) return 0;
    mpz_class p = 1;
    for (int i = 0; i < ab.length(); ++i) {
        const auto x = v1.slots[static_cast<std::size_t>(i)];
        const auto y = v2.slots[static_cast<std::size_t>(i)];
        const long xv = (x == kGap) ? ab.size(i) : x;
        const long yv = (y == kGap) ? ab.size(i) : y;
        p *= yv - 2 * xv;
    }
    return p;
}

mpq_class phi_factor(const Alphabet& ab, int pos, const Word& u, const Word& v) {
    ab.check_word(u);
    ab.check_word(v);
    if (!u.gap_free()) throw std::invalid_argument("phi_factor: u must be gap-free");
    if (pos < 0 || pos >= ab.length()) throw std::invalid_argument("phi_factor: position out of range");
    const auto vi = v.slots[static_cast<std::size_t>(pos)];
    if (vi == kGap) throw std::invalid_argument("phi_factor: v is gapped at the requested position");
    const auto ui = u.slots[static_cast<std::size_t>(pos)];
    const int b = ab.size(pos);
    mpq_class total = 0;
    for (int j = std::max(1, static_cast<int>(vi)); j <= b - 1; ++j) {
        const mpz_class num = nu_pos(b, vi, j) * nu_pos(b, ui, j);
        if (num == 0) continue;
        mpq_class term(num, mpz_class(static_cast<long>(j) * (j + 1)));
        term.canonicalize();
        total += term;
    }
    return total;
}

mpq_class weighted_pair_sum(const Alphabet& ab, const Word& u, const Word& v, const PosSet& G) {
    ab.check_word(u);
    ab.check_word(v);
    if (!u.gap_free()) throw std::invalid_argument("weighted_pair_sum: u must be gap-free");
    std::vector<bool> in_g(static_cast<std::size_t>(ab.length()), false);
    for (int p : G) {
        if (p < 0 || p >= ab.length())
            throw std::invalid_argument("weighted_pair_sum: position out of range");
        in_g[static_cast<std::size_t>(p)] = true;
    }
    const PosSet gv = gap_set(v);
    for (int p : gv)
        if (!in_g[static_cast<std::size_t>(p)])
            throw std::invalid_argument("weighted_pair_sum: G must contain the gap set of v");

    const auto [pset, qset] = agree_disagree(u, v);
    int sign_exp = static_cast<int>(gv.size());
    for (int p : qset)
        if (!in_g[static_cast<std::size_t>(p)]) ++sign_exp;
    mpz_class num = (sign_exp % 2 == 0) ? 1 : -1;
    for (int p : gv) num *= ab.size(p);
    for (int p : pset)
        if (!in_g[static_cast<std::size_t>(p)]) num *= ab.size(p) - 1;
    mpz_class den = 1;
    for (int i = 0; i < ab.length(); ++i)
        if (!in_g[static_cast<std::size_t>(i)]) den *= ab.size(i);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace gkm
