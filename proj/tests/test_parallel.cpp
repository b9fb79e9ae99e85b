#include <doctest.h>

#include <random>

#include "gkm/filter.hpp"
#include "gkm/incidence.hpp"
#include "gkm/spectral.hpp"

using namespace gkm;

// The OpenMP kernels must agree exactly with their serial references.

TEST_CASE("matvec kernels agree") {
    std::mt19937 rng(42);
    for (const Alphabet& ab : {Alphabet({2, 3, 4}), Alphabet({3, 3, 3})}) {
        for (int k = 0; k <= ab.length(); ++k) {
            const auto a = build_A(ab, k);
            std::vector<mpq_class> x(a.n_cols());
            for (auto& q : x) {
                q = mpq_class(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 5));
                q.canonicalize();
            }
            const auto par = apply<mpq_class>(a, std::span<const mpq_class>(x));
            const auto ser = apply_serial<mpq_class>(a, std::span<const mpq_class>(x));
            CHECK(par == ser);
            const auto tpar = apply_transpose<mpq_class>(a, std::span<const mpq_class>(par));
            const auto tser = apply_transpose_serial<mpq_class>(a, std::span<const mpq_class>(ser));
            CHECK(tpar == tser);
        }
    }
}

TEST_CASE("spectral system construction agrees") {
    const Alphabet ab({2, 3, 2});
    for (int k = 0; k <= 3; ++k) {
        const auto par = build_spectral_system(ab, k);
        const auto ser = build_spectral_system_serial(ab, k);
        REQUIRE(par.pairs.size() == ser.pairs.size());
        CHECK(par.nonzero_count == ser.nonzero_count);
        for (std::size_t i = 0; i < par.pairs.size(); ++i) {
            CHECK(par.pairs[i].label == ser.pairs[i].label);
            CHECK(par.pairs[i].lambda == ser.pairs[i].lambda);
            CHECK(par.pairs[i].x == ser.pairs[i].x);
            CHECK(par.pairs[i].z == ser.pairs[i].z);
            CHECK(par.pairs[i].norm2_x == ser.pairs[i].norm2_x);
            CHECK(par.pairs[i].norm2_z == ser.pairs[i].norm2_z);
        }
    }
}

TEST_CASE("pseudo-inverse routes agree") {
    for (const Alphabet& ab : {Alphabet({2, 3}), Alphabet({2, 2, 2})}) {
        for (int k = 0; k <= ab.length(); ++k)
            CHECK(same_entries(spectral_pinv(ab, k), spectral_pinv_serial(ab, k)));
    }
}

TEST_CASE("filter materializations agree") {
    for (const Alphabet& ab : {Alphabet({2, 3}), Alphabet({2, 2, 2})}) {
        for (int k = 0; k <= ab.length(); ++k) {
            CHECK(same_entries(w_matrix(ab, k), w_matrix_serial(ab, k)));
            CHECK(same_entries(h_matrix(ab, k), h_matrix_serial(ab, k)));
        }
    }
}
