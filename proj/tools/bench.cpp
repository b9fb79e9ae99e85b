#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "gkm/filter.hpp"
#include "gkm/incidence.hpp"
#include "gkm/spectral.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.2f ms %10.2f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel comparison"};
    std::string b_text = "3,3,3,3,3";
    int k = 2;
    int reps = 5;
    app.add_option("--B", b_text, "per-position sizes");
    app.add_option("-k,--k", k, "non-gap positions");
    app.add_option("--reps", reps, "matvec repetitions");
    CLI11_PARSE(app, argc, argv);

    std::vector<int> sizes;
    std::stringstream ss(b_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    const gkm::Alphabet ab(sizes);

    std::printf("B=%s k=%d, %d OpenMP threads\n", b_text.c_str(), k, omp_get_max_threads());
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    {
        auto t0 = Clock::now();
        const auto s1 = gkm::build_spectral_system_serial(ab, k);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        const auto s2 = gkm::build_spectral_system(ab, k);
        const double tp = ms_since(t0);
        bool equal = s1.pairs.size() == s2.pairs.size();
        for (std::size_t i = 0; equal && i < s1.pairs.size(); ++i)
            equal = s1.pairs[i].x == s2.pairs[i].x && s1.pairs[i].lambda == s2.pairs[i].lambda;
        report("spectral system", ts, tp, equal);
    }
    {
        auto t0 = Clock::now();
        const auto w1 = gkm::spectral_pinv_serial(ab, k);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        const auto w2 = gkm::spectral_pinv(ab, k);
        const double tp = ms_since(t0);
        report("spectral pseudo-inverse", ts, tp, gkm::same_entries(w1, w2));
    }
    {
        auto t0 = Clock::now();
        const auto w1 = gkm::w_matrix_serial(ab, k);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        const auto w2 = gkm::w_matrix(ab, k);
        const double tp = ms_since(t0);
        report("W entries", ts, tp, gkm::same_entries(w1, w2));
    }
    gkm::RationalMatrix h;
    {
        auto t0 = Clock::now();
        const auto h1 = gkm::h_matrix_serial(ab, k);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        h = gkm::h_matrix(ab, k);
        const double tp = ms_since(t0);
        report("H entries", ts, tp, gkm::same_entries(h1, h));
    }
    {
        auto t0 = Clock::now();
        const auto p1 = gkm::mul_serial(h, h);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        const auto p2 = gkm::mul(h, h);
        const double tp = ms_since(t0);
        report("rational matrix product", ts, tp, gkm::same_entries(p1, p2));
    }
    {
        const auto a = gkm::build_A(ab, k);
        std::vector<double> x(a.n_cols());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = 1.0 + static_cast<double>(i % 7);
        std::vector<double> y1, y2;
        auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r)
            y1 = gkm::apply_serial<double>(a, std::span<const double>(x));
        const double ts = ms_since(t0);
        t0 = Clock::now();
        for (int r = 0; r < reps; ++r) y2 = gkm::apply<double>(a, std::span<const double>(x));
        const double tp = ms_since(t0);
        report("matvec (double)", ts, tp, y1 == y2);

        std::vector<double> z1, z2;
        t0 = Clock::now();
        for (int r = 0; r < reps; ++r)
            z1 = gkm::apply_transpose_serial<double>(a, std::span<const double>(y1));
        const double ts2 = ms_since(t0);
        t0 = Clock::now();
        for (int r = 0; r < reps; ++r)
            z2 = gkm::apply_transpose<double>(a, std::span<const double>(y2));
        const double tp2 = ms_since(t0);
        report("matvec transpose (double)", ts2, tp2, z1 == z2);
    }
    return 0;
}
