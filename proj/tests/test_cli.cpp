#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[512];
    while (fgets(buf, sizeof(buf), pipe)) res.output += buf;
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("besovlab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

bool has_tmp_files(const fs::path& dir) {
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.path().string().find(".tmp") != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("thm1 sweep writes one row per n and exits 0") {
    auto dir = fresh_dir("thm1");
    auto r = run_cli("thm1 --s 2 --p 2 --d 2 --n 6..12 --J 16 --no-grid-check --out " +
                     dir.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(dir / "thm1_records.csv");
    CHECK(count_lines(csv) == 8);  // header + 7 records
    CHECK(csv.rfind("theorem,n,s,p,r,d,alpha,", 0) == 0);
    CHECK(fs::exists(dir / "thm1_summary.json"));
    CHECK(fs::exists(dir / "thm1_plot.csv"));
    CHECK_FALSE(has_tmp_files(dir));
}

TEST_CASE("inadmissible p is a usage error naming the choices") {
    auto dir = fresh_dir("badp");
    auto r = run_cli("thm1 --p 7 --out " + dir.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("1,2,inf") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
    auto r = run_cli("");
    CHECK(r.exit_code == 2);
}

TEST_CASE("inadmissible theorem parameters exit 2") {
    auto dir = fresh_dir("badrange");
    auto r = run_cli("thm2 --s 2 --p 2 --r 2 --alpha 0.5 --n 6..8 --no-grid-check --out " +
                     dir.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("s = d/p + 1") != std::string::npos);
}

TEST_CASE("identical argv produces byte-identical output") {
    auto dir1 = fresh_dir("det1");
    auto dir2 = fresh_dir("det2");
    const std::string args = "thm4 --s 2 --p 2 --d 2 --n 6..9 --no-grid-check --out ";
    CHECK(run_cli(args + dir1.string()).exit_code == 0);
    CHECK(run_cli(args + dir2.string()).exit_code == 0);
    CHECK(slurp(dir1 / "thm4_records.csv") == slurp(dir2 / "thm4_records.csv"));
    CHECK(slurp(dir1 / "thm4_summary.json") == slurp(dir2 / "thm4_summary.json"));
    CHECK(slurp(dir1 / "thm4_plot.csv") == slurp(dir2 / "thm4_plot.csv"));
}

TEST_CASE("BESOV_LAB_OUT overrides --out") {
    auto dir = fresh_dir("envout");
    auto ignored = fresh_dir("envout_ignored");
    auto r = run_cli("profile --s 1 --J 4 --out " + ignored.string(),
                     "BESOV_LAB_OUT=" + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "profile.json"));
    CHECK_FALSE(fs::exists(ignored / "profile.json"));
}

TEST_CASE("json record format") {
    auto dir = fresh_dir("jsonfmt");
    auto r = run_cli("thm1 --s 1 --p 2 --d 2 --n 8 --no-grid-check --format json --out " +
                     dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "thm1_records.json"));
    CHECK_FALSE(fs::exists(dir / "thm1_records.csv"));
    const std::string body = slurp(dir / "thm1_records.json");
    CHECK(body.find("\"theorem\": \"thm1\"") != std::string::npos);
}

TEST_CASE("profile descriptor round trip") {
    auto dir = fresh_dir("descr");
    CHECK(run_cli("profile --s 2 --J 5 --rule jsq --d 3 --out " + dir.string()).exit_code == 0);
    // Feed the emitted descriptor back in; flags absent, so it wins.
    auto dir2 = fresh_dir("descr2");
    auto r = run_cli("profile --descriptor " + (dir / "profile.json").string() + " --out " +
                     dir2.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(dir / "profile_coefficients.csv") == slurp(dir2 / "profile_coefficients.csv"));
}

TEST_CASE("rational p routes through the quadrature") {
    auto dir = fresh_dir("ratp");
    auto r = run_cli("besov --s 1 --J 5 --p-num 3 --p-den 2 --d 2 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(dir / "besov.json").find("\"p\": \"1.5\"") != std::string::npos);
}

TEST_CASE("partition check passes at desk scale") {
    auto dir = fresh_dir("part");
    auto r = run_cli("partition-check --jmax 12 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(dir / "partition_check.json").find("\"pass\": true") != std::string::npos);
}

TEST_CASE("ns2d config file drives the solver") {
    auto dir = fresh_dir("nscfg");
    const fs::path cfg = dir / "cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"N": 32, "dt": 2e-3, "eps": 0.02, "T": 0.05,
                   "u0": {"kind": "taylor_green"}})";
    }
    auto r = run_cli("solve-ns2d --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "ns2d_summary.json"));
    CHECK(slurp(dir / "ns2d_summary.json").find("\"pass\": true") != std::string::npos);
    CHECK_FALSE(has_tmp_files(dir));
}
