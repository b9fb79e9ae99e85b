#pragma once

#include <string>
#include <vector>

#include "gkm/filter.hpp"
#include "gkm/incidence.hpp"
#include "gkm/spectral.hpp"
#include "gkm/words.hpp"

namespace gkm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    double tol = 1e-9;
    std::size_t sigma_guard = 4096;  // refuse instances with more gap-free words
    bool corrupt_a = false;          // negative control: flip incidence entry (0,0)
    bool exhaustive_pairs = true;    // quadratic scans over word pairs (meant for l <= 3)
};

/// Everything the cross-checks need, built once per (alphabet, k).
struct VerifyContext {
    Alphabet alphabet;
    int k = 0;
    SparseIncidence a;        // possibly corrupted
    SpectralSystem sys;       // closed forms, never corrupted
    RationalMatrix w_closed;  // entrywise closed form
    RationalMatrix w_spectral;
};

VerifyContext make_context(const Alphabet& ab, int k, bool corrupt_a);

// Check groups. Names are slash-scoped ("nu/support", "spectral/matid_i", ...).
std::vector<CheckResult> check_nu_base(const Alphabet& ab, bool exhaustive_pairs);  // k-free
std::vector<CheckResult> check_nu_at_k(const Alphabet& ab, int k, bool exhaustive_pairs);
std::vector<CheckResult> check_spectral(const VerifyContext& ctx, double tol);
std::vector<CheckResult> check_rank_bases(const VerifyContext& ctx);
std::vector<CheckResult> check_pinv(const VerifyContext& ctx, double tol);
std::vector<CheckResult> check_filter_props(const VerifyContext& ctx);
std::vector<CheckResult> check_svd(const VerifyContext& ctx);

/// The full suite for one instance. Throws SizeGuardError above sigma_guard.
std::vector<CheckResult> run_verification(const Alphabet& ab, int k, const VerifyOptions& opt);

}  // namespace gkm
