#include <doctest.h>

#include <random>
#include <set>
#include <unordered_map>

#include "gkm/symfunc.hpp"
#include "gkm/words.hpp"

using namespace gkm;

namespace {

std::vector<std::string> formatted(const Alphabet& ab, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(ab.format(w));
    return out;
}

// every non-decreasing size tuple over {2,3,4} with length <= max_len
std::vector<std::vector<int>> size_grid(int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int lo) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int b = lo; b <= 4; ++b) {
            cur.push_back(b);
            self(self, b);
            cur.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

}  // namespace

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({2}, {{"a"}}), std::invalid_argument);          // wrong table size
    CHECK_THROWS_AS(Alphabet({2}, {{"a", "a"}}), std::invalid_argument);     // duplicate
    CHECK_THROWS_AS(Alphabet({2}, {{"a", "-"}}), std::invalid_argument);     // reserved gap glyph
    CHECK_THROWS_AS(Alphabet({2}, {{"a", "b|c"}}), std::invalid_argument);   // reserved separator
    CHECK_THROWS_AS(Alphabet({2}, {{"a", "b c"}}), std::invalid_argument);   // whitespace
    CHECK_THROWS_AS(Alphabet({2, 2}, {{"a", "b"}}), std::invalid_argument);  // missing table
    CHECK_NOTHROW(Alphabet({4, 2}, {{"A", "C", "G", "T"}, {"me", "un"}}));
}

TEST_CASE("enumerate_U canonical order") {
    const Alphabet b2({2});
    CHECK(formatted(b2, enumerate_U(b2)) == std::vector<std::string>{"0", "1"});

    const Alphabet b23({2, 3});
    CHECK(formatted(b23, enumerate_U(b23)) ==
          std::vector<std::string>{"00", "01", "02", "10", "11", "12"});

    const Alphabet b222({2, 2, 2});
    const auto u = enumerate_U(b222);
    CHECK(u.size() == 8);
    CHECK(u_index(b222, b222.parse("101")) == 5);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u_index(b222, u[i]) == i);
}

TEST_CASE("enumerate_V canonical order") {
    const Alphabet ab({2, 3});
    CHECK(formatted(ab, enumerate_V(ab, 1)) ==
          std::vector<std::string>{"0-", "1-", "-0", "-1", "-2"});
    CHECK(enumerate_V(ab, 2) == enumerate_U(ab));
    CHECK(formatted(ab, enumerate_V(ab, 0)) == std::vector<std::string>{"--"});
    CHECK_THROWS_AS(enumerate_V(ab, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_V(ab, -1), std::invalid_argument);
}

TEST_CASE("enumerate_Vprime") {
    const Alphabet ab({2, 3});
    CHECK(formatted(ab, enumerate_Vprime(ab, 1)) == std::vector<std::string>{"1-", "-1", "-2"});
    CHECK(formatted(ab, enumerate_Vprime(ab, 0)) == std::vector<std::string>{"--"});
    const Alphabet b22({2, 2});
    CHECK(formatted(b22, enumerate_Vprime(b22, 2)) == std::vector<std::string>{"11"});
    CHECK(formatted(ab, enumerate_Vprime_upto(ab, 1)) ==
          std::vector<std::string>{"--", "1-", "-1", "-2"});
    CHECK(enumerate_Vprime_upto(b22, 0).size() == 1);
    const Alphabet b222({2, 2, 2});
    CHECK(enumerate_Vprime_upto(b222, 2).size() == 7);  // R_2((2,2,2))
}

TEST_CASE("enumeration counts match the symmetric polynomials") {
    for (const auto& sizes : size_grid(4)) {
        const Alphabet ab(sizes);
        const IntSeq b = ab.sizes_seq();
        CHECK(mpz_class(static_cast<unsigned long>(enumerate_U(ab).size())) == ab.sigma_size());
        for (int k = 0; k <= ab.length(); ++k) {
            CHECK(mpz_class(static_cast<unsigned long>(enumerate_V(ab, k).size())) ==
                  elementary_symmetric(b, k));
            CHECK(mpz_class(static_cast<unsigned long>(enumerate_Vprime(ab, k).size())) ==
                  elementary_symmetric(shifted(b, -1), k));
            CHECK(mpz_class(static_cast<unsigned long>(enumerate_Vprime_upto(ab, k).size())) ==
                  r_poly(b, k));
        }
        // stacked row count identity R_k(B+1) = sum of S_m(B)
        for (int k = 0; k <= ab.length(); ++k) {
            mpz_class total = 0;
            for (int m = 0; m <= k; ++m)
                total += static_cast<unsigned long>(enumerate_V(ab, m).size());
            CHECK(total == r_poly(shifted(b, 1), k));
        }
    }
}

TEST_CASE("index maps are bijections") {
    for (const auto& sizes : size_grid(3)) {
        const Alphabet ab(sizes);
        for (int k = 0; k <= ab.length(); ++k) {
            const auto v = enumerate_V(ab, k);
            std::set<Word> seen(v.begin(), v.end());
            CHECK(seen.size() == v.size());
        }
    }
}

TEST_CASE("matches") {
    const Alphabet ab({2, 3});
    CHECK(matches(ab.parse("01"), ab.parse("0-")));
    CHECK_FALSE(matches(ab.parse("11"), ab.parse("0-")));
    CHECK(matches(ab.parse("00"), ab.parse("--")));
    CHECK_THROWS_AS(matches(ab.parse("0-"), ab.parse("--")), std::invalid_argument);
}

TEST_CASE("match sets") {
    const Alphabet ab({2, 3});
    const Word u = ab.parse("01");
    CHECK(formatted(ab, match_set_M(ab, u, 1)) == std::vector<std::string>{"0-", "-1"});
    CHECK(formatted(ab, match_set_M(ab, u, 0)) == std::vector<std::string>{"--"});
    CHECK(formatted(ab, match_set_M(ab, u, 2)) == std::vector<std::string>{"01"});

    CHECK(formatted(ab, match_set_N(ab, ab.parse("-1"))) == std::vector<std::string>{"01", "11"});
    CHECK(formatted(ab, match_set_N(ab, ab.parse("10"))) == std::vector<std::string>{"10"});
    CHECK(match_set_N(ab, ab.parse("--")).size() == 6);
}

TEST_CASE("match set consistency") {
    std::mt19937 rng(3);
    for (const auto& sizes : size_grid(3)) {
        const Alphabet ab(sizes);
        const auto uwords = enumerate_U(ab);
        for (int k = 0; k <= ab.length(); ++k) {
            const auto vwords = enumerate_V(ab, k);
            // |M| and |N| closed forms, and the three-way equivalence
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(ab.length()),
                         static_cast<unsigned long>(k));
            const Word& u = uwords[rng() % uwords.size()];
            const auto m = match_set_M(ab, u, k);
            CHECK(mpz_class(static_cast<unsigned long>(m.size())) == binom);
            for (const auto& v : m) CHECK(matches(u, v));
            const Word& v = vwords[rng() % vwords.size()];
            const auto n = match_set_N(ab, v);
            mpz_class expect = 1;
            for (int p : gap_set(v)) expect *= ab.size(p);
            CHECK(mpz_class(static_cast<unsigned long>(n.size())) == expect);
            for (const auto& x : n) CHECK(matches(x, v));
            for (const auto& w : vwords)
                CHECK(matches(u, w) ==
                      (std::find(m.begin(), m.end(), w) != m.end()));
        }
    }
}

TEST_CASE("gap sets and size restriction") {
    const Alphabet ab({2, 3});
    CHECK(gap_set(ab.parse("-1")) == PosSet{0});
    CHECK(nongap_set(ab.parse("-1")) == PosSet{1});
    CHECK(gap_set(ab.parse("--")) == PosSet{0, 1});
    CHECK(gap_set(ab.parse("01")).empty());

    const Alphabet abc({2, 3, 4});
    CHECK(restrict_sizes(abc, {0, 2}) == IntSeq{2, 4});
    CHECK(restrict_sizes(abc, {}) == IntSeq{});
    CHECK(restrict_sizes(abc, {0, 1, 2}) == IntSeq{2, 3, 4});
}

TEST_CASE("agree/disagree splits") {
    const Alphabet ab({2, 3});
    auto [p1, q1] = agree_disagree(ab.parse("01"), ab.parse("0-"));
    CHECK(p1 == PosSet{0});
    CHECK(q1.empty());
    auto [p2, q2] = agree_disagree(ab.parse("01"), ab.parse("1-"));
    CHECK(p2.empty());
    CHECK(q2 == PosSet{0});
    auto [p3, q3] = agree_disagree(ab.parse("01"), ab.parse("02"));
    CHECK(p3 == PosSet{0});
    CHECK(q3 == PosSet{1});
    CHECK_THROWS_AS(agree_disagree(ab.parse("0-"), ab.parse("0-")), std::invalid_argument);
}

TEST_CASE("gap partition") {
    const Alphabet ab({2, 3});
    {
        const auto parts = gap_partition(ab.parse("-1"), ab.parse("1-"));
        CHECK(parts[0].empty());
        CHECK(parts[1] == PosSet{0});
        CHECK(parts[2] == PosSet{1});
        CHECK(parts[3].empty());
    }
    {
        const auto parts = gap_partition(ab.parse("--"), ab.parse("--"));
        CHECK(parts[0] == PosSet{0, 1});
        CHECK(parts[1].empty());
        CHECK(parts[2].empty());
        CHECK(parts[3].empty());
    }
    {
        const auto parts = gap_partition(ab.parse("--"), ab.parse("11"));
        CHECK(parts[0].empty());
        CHECK(parts[1] == PosSet{0, 1});
        CHECK(parts[2].empty());
        CHECK(parts[3].empty());
    }
}

TEST_CASE("gap partition covers all positions, full-gap intersection only at the top") {
    const Alphabet ab({2, 3});
    // all pairs over letters-plus-gap at both positions
    std::vector<Word> delta;
    for (int a = -1; a < 2; ++a)
        for (int b = -1; b < 3; ++b)
            delta.push_back(Word({static_cast<std::int16_t>(a), static_cast<std::int16_t>(b)}));
    for (const auto& v1 : delta)
        for (const auto& v2 : delta) {
            const auto parts = gap_partition(v1, v2);
            std::set<int> all;
            std::size_t total = 0;
            for (const auto& part : parts) {
                total += part.size();
                all.insert(part.begin(), part.end());
            }
            CHECK(total == 2);
            CHECK(all.size() == 2);
            if (parts[0].size() == 2) {
                CHECK(v1 == ab.parse("--"));
                CHECK(v2 == ab.parse("--"));
            }
        }
}

TEST_CASE("text form round trip") {
    const Alphabet plain({2, 3});
    for (const auto& w : enumerate_V(plain, 1)) CHECK(plain.parse(plain.format(w)) == w);
    CHECK(plain.parse("0|1") == plain.parse("01"));  // joined form accepted everywhere

    const Alphabet named({4, 2}, {{"A", "C", "G", "T"}, {"me", "un"}});
    CHECK(named.joined_form());
    CHECK(named.format(named.parse("T|me")) == "T|me");
    CHECK(named.format(Word({kGap, 1})) == "-|un");
    CHECK(named.parse("-|un") == Word({kGap, 1}));
    CHECK_THROWS_AS(named.parse("X|me"), std::invalid_argument);
    CHECK_THROWS_AS(plain.parse("012"), std::invalid_argument);
    CHECK_THROWS_AS(plain.parse("03"), std::invalid_argument);

    // sizes above 10 fall back to joined decimal names
    const Alphabet wide({12, 2});
    CHECK(wide.joined_form());
    CHECK(wide.format(wide.parse("11|0")) == "11|0");
}

TEST_CASE("word order helper") {
    const Alphabet ab({2, 3});
    CHECK(word_leq(ab.parse("00"), ab.parse("--")));
    CHECK(word_leq(ab.parse("01"), ab.parse("0-")));
    CHECK_FALSE(word_leq(ab.parse("--"), ab.parse("00")));
    CHECK_FALSE(word_leq(ab.parse("10"), ab.parse("01")));
    CHECK(word_leq(ab.parse("0-"), ab.parse("--")));
}
