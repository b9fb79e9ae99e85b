#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkm/filter.hpp"
#include "gkm/incidence.hpp"
#include "gkm/spectral.hpp"
#include "gkm/verify.hpp"
#include "gkm/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

struct AlphabetArgs {
    std::string config_path;
    std::string inline_b;
};

gkm::Alphabet load_alphabet(const AlphabetArgs& args) {
    if (!args.inline_b.empty()) {
        std::vector<int> sizes;
        std::stringstream ss(args.inline_b);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("--B: empty size entry");
            sizes.push_back(std::stoi(tok));
        }
        return gkm::Alphabet(sizes);
    }
    std::ifstream in(args.config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + args.config_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config parse error: " + std::string(e.what()));
    }
    if (!j.contains("B") || !j["B"].is_array())
        throw std::invalid_argument("config: field \"B\" (list of ints) is required");
    std::vector<int> sizes = j["B"].get<std::vector<int>>();
    if (!j.contains("symbols")) return gkm::Alphabet(sizes);
    auto symbols = j["symbols"].get<std::vector<std::vector<std::string>>>();
    return gkm::Alphabet(sizes, symbols);
}

// Writes through `fn` to --out or stdout.
int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& fn) {
    if (out_path.empty()) {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitBadInput;
    }
    fn(os);
    return kExitOk;
}

std::vector<mpz_class> read_counts(const gkm::Alphabet& ab, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open counts file " + path);
    const auto uwords = gkm::enumerate_U(ab);
    std::vector<mpz_class> counts(uwords.size(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // split on comma or whitespace
        std::string word_text, count_text, extra;
        std::string norm = line;
        for (char& c : norm)
            if (c == ',' || c == '\t') c = ' ';
        std::stringstream ss(norm);
        ss >> word_text >> count_text;
        if (word_text.empty()) continue;  // blank line
        if (ss >> extra)
            throw std::invalid_argument("counts line " + std::to_string(lineno) +
                                        ": expected 'word,count'");
        if (word_text == "word") continue;  // header row
        if (count_text.empty())
            throw std::invalid_argument("counts line " + std::to_string(lineno) +
                                        ": missing count");
        gkm::Word w;
        try {
            w = ab.parse(word_text);
        } catch (const std::exception& e) {
            throw std::invalid_argument("counts line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!w.gap_free())
            throw std::invalid_argument("counts line " + std::to_string(lineno) +
                                        ": counts are per gap-free word");
        mpz_class c;
        if (c.set_str(count_text, 10) != 0 || c < 0)
            throw std::invalid_argument("counts line " + std::to_string(lineno) +
                                        ": bad count '" + count_text + "'");
        counts[gkm::u_index(ab, w)] += c;
    }
    return counts;
}

int run_matrix(const gkm::Alphabet& ab, int k, bool upto, const std::string& format,
               const std::string& out_path) {
    const auto write = [&](std::ostream& os) {
        if (upto) {
            const auto st = gkm::build_A_upto(ab, k);
            format == "csv" ? gkm::write_csv(os, st) : gkm::write_matrix_market(os, st);
        } else {
            const auto a = gkm::build_A(ab, k);
            format == "csv" ? gkm::write_csv(os, a) : gkm::write_matrix_market(os, a);
        }
    };
    return with_output(out_path, write);
}

int run_spectrum(const gkm::Alphabet& ab, int k, const std::string& out_path) {
    const auto sys = gkm::build_spectral_system(ab, k);
    return with_output(out_path, [&](std::ostream& os) { gkm::write_spectrum_csv(os, sys); });
}

int run_filter(const gkm::Alphabet& ab, int k, const std::string& which, const std::string& entry,
               int decimals, std::size_t max_entries, const std::string& out_path) {
    if (!entry.empty()) {
        const auto comma = entry.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--entry expects two words separated by a comma");
        const gkm::Word u = ab.parse(entry.substr(0, comma));
        const gkm::Word v = ab.parse(entry.substr(comma + 1));
        const mpq_class q = (which == "W") ? gkm::w_entry(ab, k, u, v) : gkm::h_entry(ab, k, u, v);
        return with_output(out_path, [&](std::ostream& os) {
            os << (decimals < 0 ? gkm::rational_string(q) : gkm::decimal_string(q, decimals))
               << '\n';
        });
    }
    const gkm::RationalMatrix m =
        (which == "W") ? gkm::w_matrix(ab, k, max_entries) : gkm::h_matrix(ab, k, max_entries);
    return with_output(out_path,
                       [&](std::ostream& os) { gkm::write_filter_csv(os, m, ab, decimals); });
}

int run_verify(const gkm::Alphabet& ab, int k, const gkm::VerifyOptions& opt) {
    const auto results = gkm::run_verification(ab, k, opt);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << '\n';
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << " ("
              << results.size() << " checks)\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_estimate(const gkm::Alphabet& ab, int k, const std::string& counts_path,
                 const std::string& mode, int decimals, bool clip_nonneg,
                 const std::string& out_path) {
    const auto raw = read_counts(ab, counts_path);
    const auto est_mode =
        (mode == "from_gapped") ? gkm::EstimateMode::kFromGapped : gkm::EstimateMode::kProject;
    std::vector<mpq_class> est =
        gkm::estimate_counts(ab, k, std::span<const mpz_class>(raw), est_mode);
    if (clip_nonneg) {
        mpq_class before = 0, after = 0;
        for (const auto& q : est) before += q;
        for (auto& q : est) {
            if (q < 0) q = 0;
            after += q;
        }
        if (after > 0) {
            const mpq_class scale = before / after;
            for (auto& q : est) q *= scale;
        }
    }
    const auto uwords = gkm::enumerate_U(ab);
    return with_output(out_path, [&](std::ostream& os) {
        os << "word,estimate\n";
        for (std::size_t i = 0; i < uwords.size(); ++i)
            os << ab.format(uwords[i]) << ',' << gkm::decimal_string(est[i], decimals) << '\n';
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gapped k-mer incidence matrices, spectra, filters and count estimation"};
    app.require_subcommand(1);

    AlphabetArgs ab_args;
    int k = 0;
    std::string out_path;

    const auto add_common = [&](CLI::App* sub) {
        auto* cfg = sub->add_option("--config", ab_args.config_path,
                                    "JSON config with fields B and optional symbols");
        sub->add_option("--B", ab_args.inline_b, "inline per-position sizes, e.g. 2,3,4")
            ->excludes(cfg);
        sub->add_option("-k,--k", k, "number of non-gap positions")->required();
        sub->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* matrix = app.add_subcommand("matrix", "export the incidence matrix");
    bool upto = false;
    std::string format = "mtx";
    add_common(matrix);
    matrix->add_flag("--upto", upto, "stack the matrices for 0..k");
    matrix->add_option("--format", format, "mtx or csv")
        ->check(CLI::IsMember({"mtx", "csv"}));

    auto* spectrum = app.add_subcommand("spectrum", "export the closed-form eigen-system");
    add_common(spectrum);

    auto* filter = app.add_subcommand("filter", "export W = A^+ or H = WA, or query one entry");
    std::string which = "W", entry;
    int decimals = -1;
    std::size_t max_entries = gkm::kDefaultEntryGuard;
    add_common(filter);
    filter->add_option("--which", which, "W or H")->check(CLI::IsMember({"W", "H"}));
    filter->add_option("--entry", entry, "single entry query 'u,v'");
    filter->add_option("--decimals", decimals, "render fixed decimals instead of p/q");
    filter->add_option("--max-entries", max_entries, "full-export size guard");

    auto* verify = app.add_subcommand("verify", "run the closed-form cross-check suite");
    gkm::VerifyOptions vopt;
    add_common(verify);
    verify->add_option("--tol", vopt.tol, "numeric-oracle tolerance");
    verify->add_option("--guard", vopt.sigma_guard, "max gap-free words");
    verify->add_flag("--corrupt-a", vopt.corrupt_a)->group("");  // negative-control hook

    auto* estimate = app.add_subcommand("estimate", "robust count estimates from a counts file");
    std::string counts_path, mode = "project";
    int est_decimals = 12;
    bool clip_nonneg = false;
    add_common(estimate);
    estimate->add_option("counts", counts_path, "CSV of word,count rows")->required();
    estimate->add_option("--mode", mode, "project (H*raw) or from_gapped (W*(A*raw))")
        ->check(CLI::IsMember({"project", "from_gapped"}));
    estimate->add_option("--decimals", est_decimals, "output precision");
    estimate->add_flag("--clip-nonneg", clip_nonneg, "clamp negatives and renormalize");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        const gkm::Alphabet ab = load_alphabet(ab_args);
        if (matrix->parsed()) return run_matrix(ab, k, upto, format, out_path);
        if (spectrum->parsed()) return run_spectrum(ab, k, out_path);
        if (filter->parsed())
            return run_filter(ab, k, which, entry, decimals, max_entries, out_path);
        if (verify->parsed()) return run_verify(ab, k, vopt);
        if (estimate->parsed())
            return run_estimate(ab, k, counts_path, mode, est_decimals, clip_nonneg, out_path);
    } catch (const gkm::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
