#include <doctest.h>

#include <random>

#include "gkm/rational_matrix.hpp"

using namespace gkm;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    RationalMatrix m(rows, cols);
    for (auto& q : m.a) {
        q = mpq_class(num(rng), den(rng));
        q.canonicalize();
    }
    return m;
}

}  // namespace

TEST_CASE("mul agrees with the serial reference") {
    std::mt19937 rng(5150);
    for (int it = 0; it < 10; ++it) {
        const auto x = random_matrix(rng, 7, 5);
        const auto y = random_matrix(rng, 5, 6);
        CHECK(same_entries(mul(x, y), mul_serial(x, y)));
    }
    const auto m = random_matrix(rng, 4, 4);
    CHECK(same_entries(mul(m, RationalMatrix::identity(4)), m));
    CHECK(same_entries(mul(RationalMatrix::identity(4), m), m));
    CHECK_THROWS_AS(mul(random_matrix(rng, 3, 4), random_matrix(rng, 3, 4)),
                    std::invalid_argument);
}

TEST_CASE("transpose and symmetry") {
    std::mt19937 rng(77);
    const auto m = random_matrix(rng, 4, 6);
    const auto t = transpose(m);
    for (std::size_t r = 0; r < m.n_rows; ++r)
        for (std::size_t c = 0; c < m.n_cols; ++c) CHECK(m.at(r, c) == t.at(c, r));
    const auto sym = mul(m, t);
    CHECK(is_symmetric(sym));
    CHECK_FALSE(is_symmetric(m));
}

TEST_CASE("row and column sums") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = mpq_class(1, 2);
    m.at(0, 1) = mpq_class(1, 2);
    m.at(1, 0) = mpq_class(3, 4);
    m.at(1, 1) = mpq_class(1, 4);
    const auto rs = row_sums(m);
    CHECK(rs[0] == 1);
    CHECK(rs[1] == 1);
    const auto cs = col_sums(m);
    CHECK(cs[0] == mpq_class(5, 4));
    CHECK(cs[1] == mpq_class(3, 4));
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(decimal_string(mpq_class(1, 3), 4) == "0.3333");
    CHECK(decimal_string(mpq_class(-1, 3), 4) == "-0.3333");
    CHECK(decimal_string(mpq_class(2, 3), 4) == "0.6667");
    CHECK(decimal_string(mpq_class(1, 8), 2) == "0.12");   // 12.5 -> even 12
    CHECK(decimal_string(mpq_class(3, 8), 2) == "0.38");   // 37.5 -> even 38
    CHECK(decimal_string(mpq_class(-1, 8), 2) == "-0.12");
    CHECK(decimal_string(mpq_class(1, 2), 0) == "0");
    CHECK(decimal_string(mpq_class(3, 2), 0) == "2");
    CHECK(decimal_string(mpq_class(5, 2), 0) == "2");
    CHECK(decimal_string(mpq_class(7, 4), 1) == "1.8");
    CHECK(decimal_string(mpq_class(0), 3) == "0.000");
    CHECK(decimal_string(mpq_class(-1, 100000), 2) == "0.00");  // no negative zero
    CHECK(decimal_string(mpq_class(123, 1), 2) == "123.00");
}

TEST_CASE("rational rendering") {
    CHECK(rational_string(mpq_class(3, 4)) == "3/4");
    CHECK(rational_string(mpq_class(-1, 4)) == "-1/4");
    CHECK(rational_string(mpq_class(2)) == "2");
    CHECK(rational_string(mpq_class(0)) == "0");
}
