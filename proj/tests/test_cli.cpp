#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string g_binary;
std::filesystem::path g_tmp;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("matrix export and determinism") {
    const auto out1 = g_tmp / "a1.mtx";
    const auto out2 = g_tmp / "a2.mtx";
    CHECK(run_cli("matrix --B 2,3 -k 1 --out " + out1.string()).exit_code == 0);
    CHECK(run_cli("matrix --B 2,3 -k 1 --out " + out2.string()).exit_code == 0);
    const std::string text = slurp(out1);
    CHECK(text == slurp(out2));
    CHECK(text.find("5 6 12") != std::string::npos);

    const auto r = run_cli("matrix --B 2,3 -k 1 --upto --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("word,00,01,02,10,11,12") != std::string::npos);
    CHECK(r.output.find("--,1,1,1,1,1,1") != std::string::npos);
}

TEST_CASE("matrix rejects bad parameters") {
    CHECK(run_cli("matrix --B 2,3 -k 9").exit_code == 2);
    CHECK(run_cli("matrix --B 1,3 -k 1").exit_code == 2);
    CHECK(run_cli("matrix -k 1").exit_code == 2);  // no alphabet given
}

TEST_CASE("spectrum export") {
    const auto r = run_cli("spectrum --B 2,3 -k 1");
    CHECK(r.exit_code == 0);
    int rows = 0, nonzero = 0;
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "label,n,lambda,nonzero,norm2_x,norm2_z");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        std::stringstream ss(line);
        std::string f;
        for (int i = 0; i < 4; ++i) std::getline(ss, f, ',');
        if (f == "1") ++nonzero;
    }
    CHECK(rows == 6);
    CHECK(nonzero == 4);
}

TEST_CASE("filter entry queries") {
    auto r = run_cli("filter --B 2,2 -k 1 --which H --entry 00,11");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1/4\n");
    r = run_cli("filter --B 2 -k 0 --which W --entry 0,-");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/2\n");
    r = run_cli("filter --B 2,2 -k 1 --which H --entry 00,11 --decimals 3");
    CHECK(r.output == "-0.250\n");
}

TEST_CASE("filter full export carries unit row sums for H") {
    const auto r = run_cli("filter --B 2,3 -k 1 --which H");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("col_sum", 0) == 0) continue;
        CHECK(line.substr(line.rfind(',') + 1) == "1");
    }
}

TEST_CASE("filter size guard exits 3") {
    CHECK(run_cli("filter --B 2,3 -k 1 --which H --max-entries 10").exit_code == 3);
}

TEST_CASE("verify") {
    const auto good = run_cli("verify --B 2,3 -k 1");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("FAIL") == std::string::npos);
    CHECK(good.output.find("verification passed") != std::string::npos);

    const auto bad = run_cli("verify --B 2,3 -k 1 --corrupt-a");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("FAIL") != std::string::npos);

    // the guard refuses oversized instances with exit 3
    CHECK(run_cli("verify --B 4,4,4,4,4,4,4 -k 2").exit_code == 3);
}

TEST_CASE("estimate") {
    const auto counts = g_tmp / "counts.csv";
    spit(counts, "word,count\n00,1\n");
    auto r = run_cli("estimate --B 2,2 -k 1 " + counts.string() + " --decimals 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "word,estimate\n00,0.75\n01,0.25\n10,0.25\n11,-0.25\n");

    // the two modes produce identical files
    const auto o1 = g_tmp / "e1.csv";
    const auto o2 = g_tmp / "e2.csv";
    CHECK(run_cli("estimate --B 2,2 -k 1 " + counts.string() + " --mode project --out " +
                  o1.string())
              .exit_code == 0);
    CHECK(run_cli("estimate --B 2,2 -k 1 " + counts.string() + " --mode from_gapped --out " +
                  o2.string())
              .exit_code == 0);
    CHECK(slurp(o1) == slurp(o2));

    // k = l echoes the input with zeros filled in
    r = run_cli("estimate --B 2,2 -k 2 " + counts.string() + " --decimals 0");
    CHECK(r.output == "word,estimate\n00,1\n01,0\n10,0\n11,0\n");

    // clipping clamps the negative cell and renormalizes the total
    r = run_cli("estimate --B 2,2 -k 1 " + counts.string() + " --clip-nonneg --decimals 4");
    CHECK(r.output.find("11,0.0000") != std::string::npos);
    double total = 0;
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line))
        if (!line.empty()) total += std::stod(line.substr(line.find(',') + 1));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("estimate parse errors name the line") {
    const auto bad = g_tmp / "bad.csv";
    spit(bad, "00,1\nxx,2\n");
    const auto r = run_cli("estimate --B 2,2 -k 1 " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);

    spit(bad, "00,1\n01,-3\n");
    CHECK(run_cli("estimate --B 2,2 -k 1 " + bad.string()).exit_code == 2);
}

TEST_CASE("json config with named symbols") {
    const auto cfg = g_tmp / "cfg.json";
    spit(cfg, R"({"B": [4, 2], "symbols": [["A", "C", "G", "T"], ["me", "un"]]})");
    const auto r = run_cli("matrix --config " + cfg.string() + " -k 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("word,A|me,A|un,C|me,C|un,G|me,G|un,T|me,T|un") != std::string::npos);
    CHECK(r.output.find("A|-,1,1,0,0,0,0,0,0") != std::string::npos);

    spit(cfg, R"({"symbols": []})");
    CHECK(run_cli("matrix --config " + cfg.string() + " -k 1").exit_code == 2);
    spit(cfg, "not json");
    CHECK(run_cli("matrix --config " + cfg.string() + " -k 1").exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: gkm-cli-tests <path-to-gkmfilter> [doctest args]\n");
        return 1;
    }
    g_binary = argv[1];
    g_tmp = std::filesystem::temp_directory_path() /
            ("gkm-cli-tests-" + std::to_string(::getpid()));
    std::filesystem::create_directories(g_tmp);

    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    const int rc = ctx.run();
    std::filesystem::remove_all(g_tmp);
    return rc;
}
