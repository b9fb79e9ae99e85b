#include <doctest.h>

#include "gkm/nu.hpp"
#include "gkm/symfunc.hpp"
#include "gkm/words.hpp"

using namespace gkm;

namespace {

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

}  // namespace

TEST_CASE("nu_pos cases") {
    CHECK(nu_pos(3, kGap, kGap) == -3);
    CHECK(nu_pos(3, 2, 2) == -2);
    CHECK(nu_pos(3, 0, 2) == 1);
    CHECK(nu_pos(3, 2, 0) == 0);
    CHECK(nu_pos(2, 0, 0) == 0);
    CHECK(nu_pos(2, 0, kGap) == 1);
    CHECK(nu_pos(2, kGap, 0) == 0);
    CHECK_THROWS_AS(nu_pos(3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(nu_pos(1, 0, 0), std::invalid_argument);
}

TEST_CASE("nu_product") {
    const Alphabet ab({2, 3});
    CHECK(nu_product(ab, ab.parse("-0"), ab.parse("-1")) == -2);
    CHECK(nu_product(ab, ab.parse("01"), ab.parse("01")) == 0);  // zero letter forces 0
    CHECK(nu_product(ab, ab.parse("-1"), ab.parse("-1")) == 2);
    CHECK(nu_product(ab, ab.parse("11"), ab.parse("11")) == 1);  // (-1)(-1)
}

TEST_CASE("nu vanishes off the order") {
    const Alphabet ab({2, 3});
    for (const auto& x : enumerate_delta(ab))
        for (const auto& y : enumerate_delta(ab))
            if (nu_product(ab, x, y) != 0) CHECK(word_leq(x, y));
}

TEST_CASE("interval sums") {
    const Alphabet b22({2, 2});
    CHECK(interval_nu_sum(b22, b22.parse("00"), b22.parse("00")) == 0);
    const Alphabet b23({2, 3});
    CHECK(interval_nu_sum(b23, b23.parse("00"), b23.parse("--")) == 6);
    CHECK(interval_nu_sum(b23, b23.parse("10"), b23.parse("01")) == 0);  // incomparable
    CHECK(interval_nu_product_form(b23, b23.parse("10"), b23.parse("01")) == 0);
}

TEST_CASE("interval sum equals the product form everywhere") {
    for (const Alphabet& ab : {Alphabet({2, 3}), Alphabet({2, 2, 2}), Alphabet({3, 4})}) {
        const auto delta = enumerate_delta(ab);
        for (const auto& x : delta)
            for (const auto& y : delta)
                CHECK(interval_nu_sum(ab, x, y) == interval_nu_product_form(ab, x, y));
    }
}

TEST_CASE("phi closed form") {
    const Alphabet b4({4, 2});
    CHECK(phi_factor(b4, 0, b4.parse("10"), b4.parse("10")) == mpq_class(3, 4));
    CHECK(phi_factor(b4, 0, b4.parse("20"), b4.parse("10")) == mpq_class(-1, 4));
    const Alphabet b2({2});
    CHECK(phi_factor(b2, 0, b2.parse("0"), b2.parse("0")) == mpq_class(1, 2));
    CHECK_THROWS_AS(phi_factor(b2, 0, b2.parse("0"), b2.parse("-")), std::invalid_argument);
}

TEST_CASE("weighted pair sum closed form") {
    const Alphabet b23({2, 3});
    CHECK(weighted_pair_sum(b23, b23.parse("00"), b23.parse("--"), {0, 1}) == 6);
    const Alphabet b22({2, 2});
    CHECK(weighted_pair_sum(b22, b22.parse("00"), b22.parse("0-"), {1}) == -1);
    // all-gap v with G = everything: (-1)^l prod b_i
    CHECK(weighted_pair_sum(b23, b23.parse("10"), b23.parse("--"), {0, 1}) == 6);
    const Alphabet b222({2, 2, 2});
    CHECK(weighted_pair_sum(b222, b222.parse("000"), b222.parse("---"), {0, 1, 2}) == -8);
    CHECK_THROWS_AS(weighted_pair_sum(b22, b22.parse("00"), b22.parse("0-"), {0}),
                    std::invalid_argument);
}

TEST_CASE("weighted pair sum matches the label enumeration") {
    const Alphabet ab({2, 3});
    const auto uwords = enumerate_U(ab);
    for (const auto& v : enumerate_delta(ab)) {
        const PosSet gv = gap_set(v);
        // every superset G of the gap set
        for (unsigned mask = 0; mask < 4; ++mask) {
            PosSet g;
            for (int i = 0; i < 2; ++i)
                if (mask & (1u << i)) g.push_back(i);
            bool contains = true;
            for (int p : gv)
                if (std::find(g.begin(), g.end(), p) == g.end()) contains = false;
            if (!contains) continue;
            for (const auto& u : uwords) {
                // left side: sum over labels with gap set exactly g
                mpq_class left = 0;
                for (const auto& vp : enumerate_Vprime_upto(ab, 2)) {
                    if (gap_set(vp) != g) continue;
                    mpz_class den = 1;
                    for (int i : nongap_set(vp)) {
                        const long c = vp.slots[static_cast<std::size_t>(i)];
                        den *= c + c * c;
                    }
                    mpq_class term(nu_product(ab, v, vp) * nu_product(ab, u, vp), den);
                    term.canonicalize();
                    left += term;
                }
                CHECK(left == weighted_pair_sum(ab, u, v, g));
            }
        }
    }
}

TEST_CASE("column sums over the row words") {
    // For labels other than the all-gap word the sum vanishes; for the
    // all-gap word it is +/- binom(l, l-k) * prod b_i (each gap set occurs
    // once per letter filling). Restricted to any match set it drops to
    // +/- S_{l-k}(B).
    for (const Alphabet& ab : {Alphabet({2}), Alphabet({2, 3}), Alphabet({2, 2, 2})}) {
        const int l = ab.length();
        Word gapword;
        gapword.slots.assign(static_cast<std::size_t>(l), kGap);
        for (int k = 0; k <= l; ++k) {
            const int sign = ((l - k) % 2 == 0) ? 1 : -1;
            const auto vwords = enumerate_V(ab, k);
            for (const auto& vp : enumerate_Vprime_upto(ab, l)) {
                mpz_class s = 0;
                for (const auto& w : vwords) s += nu_product(ab, w, vp);
                if (vp == gapword) {
                    mpz_class binom;
                    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(l),
                                 static_cast<unsigned long>(l - k));
                    CHECK(s == sign * binom * ab.sigma_size());
                } else {
                    CHECK(s == 0);
                }
            }
            for (const auto& u : enumerate_U(ab)) {
                mpz_class s = 0;
                for (const auto& y : match_set_M(ab, u, k)) s += nu_product(ab, y, gapword);
                CHECK(s == sign * elementary_symmetric(ab.sizes_seq(), l - k));
            }
        }
    }
}
