#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

const std::string kBin = SDCMP_BIN;
const std::string kFixtures = FIXTURES_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = kBin + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

void write_values(const std::string& path, double from, double step, int n) {
    std::ofstream out(path);
    out << "# generated by the CLI test\n";
    for (int i = 0; i < n; ++i) out << (from + step * i) << "\n";
}

struct TempFiles {
    std::vector<std::string> paths;
    ~TempFiles() {
        for (const std::string& p : paths) std::remove(p.c_str());
    }
    std::string add(const std::string& p) {
        paths.push_back(p);
        return p;
    }
};

}  // namespace

TEST_CASE("compare prints the interval summary", "[cli]") {
    TempFiles tmp;
    write_values(tmp.add("cli_eq_a.txt"), 0.0, 0.01, 150);
    write_values(tmp.add("cli_eq_b.txt"), 0.0, 0.01, 150);

    const RunResult eq =
        run("compare --a cli_eq_a.txt --b cli_eq_b.txt --resamples 150");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out.rfind("C_P=0.5000 [", 0) == 0);
    CHECK(eq.out.find("  C_D=0.5000 [") != std::string::npos);
    CHECK(eq.out.find("verdict=equal\n") != std::string::npos);
    CHECK(eq.err.empty());

    write_values(tmp.add("cli_lo.txt"), 0.0, 0.5, 150);
    write_values(tmp.add("cli_hi.txt"), 1000.0, 0.5, 150);
    const RunResult dom =
        run("compare --a cli_lo.txt --b cli_hi.txt --resamples 150 --verify");
    CHECK(dom.exit_code == 0);
    CHECK(dom.out.rfind("C_P=1.0000 [1.0000,1.0000]", 0) == 0);
    CHECK(dom.out.find("C_D=1.0000") != std::string::npos);
    CHECK(dom.out.find("verdict=a_dominates\n") != std::string::npos);

    // Negating both sides flips the verdict.
    const RunResult flipped = run(
        "compare --a cli_lo.txt --b cli_hi.txt --resamples 150 --maximize");
    CHECK(flipped.exit_code == 0);
    CHECK(flipped.out.rfind("C_P=0.0000", 0) == 0);
    CHECK(flipped.out.find("verdict=b_dominates\n") != std::string::npos);
}

TEST_CASE("compare warns below the recommended sample size", "[cli]") {
    TempFiles tmp;
    write_values(tmp.add("cli_small_a.txt"), 0.0, 1.0, 30);
    write_values(tmp.add("cli_small_b.txt"), 0.5, 1.0, 30);
    const RunResult r =
        run("compare --a cli_small_a.txt --b cli_small_b.txt --resamples 150");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("warning: sample size 30 is below the recommended minimum "
                     "of 100") != std::string::npos);
    CHECK(r.out.rfind("C_P=", 0) == 0);
}

TEST_CASE("compare rejects malformed input", "[cli]") {
    TempFiles tmp;
    write_values(tmp.add("cli_ok.txt"), 0.0, 1.0, 120);

    {
        std::ofstream bad(tmp.add("cli_bad.txt"));
        bad << "1.5\nnot-a-number\n2.5\n";
    }
    const RunResult parse = run("compare --a cli_ok.txt --b cli_bad.txt");
    CHECK(parse.exit_code == 2);
    CHECK(parse.err.find("cli_bad.txt") != std::string::npos);
    CHECK(parse.err.find("not-a-number") != std::string::npos);

    write_values(tmp.add("cli_short.txt"), 0.0, 1.0, 119);
    const RunResult sizes = run("compare --a cli_ok.txt --b cli_short.txt");
    CHECK(sizes.exit_code == 2);
    CHECK(sizes.err.find("same number of values") != std::string::npos);

    const RunResult missing = run("compare --a cli_ok.txt --b cli_nonexistent.txt");
    CHECK(missing.exit_code == 2);

    // Argument errors (no subcommand, unknown flag) are nonzero too.
    CHECK(run("").exit_code != 0);
    CHECK(run("compare --a cli_ok.txt").exit_code != 0);
    CHECK(run("frobnicate").exit_code != 0);
}

TEST_CASE("compare artifacts are byte deterministic", "[cli]") {
    TempFiles tmp;
    write_values(tmp.add("cli_da.txt"), 0.0, 0.37, 200);
    write_values(tmp.add("cli_db.txt"), 10.0, 0.31, 200);

    const std::string base =
        "compare --a cli_da.txt --b cli_db.txt --resamples 150 --seed 7";
    for (const char* suffix : {"1", "2"}) {
        const std::string s = suffix;
        const RunResult r = run(base + " --out " + tmp.add("cli_plot" + s + ".svg") +
                                " --report " + tmp.add("cli_rep" + s + ".json") +
                                " --csv " + tmp.add("cli_band" + s + ".csv"));
        REQUIRE(r.exit_code == 0);
    }
    const std::string svg = slurp("cli_plot1.svg");
    CHECK(svg == slurp("cli_plot2.svg"));
    CHECK(svg.rfind("<svg xmlns", 0) == 0);
    const std::string rep = slurp("cli_rep1.json");
    CHECK(rep == slurp("cli_rep2.json"));
    const std::string csv = slurp("cli_band1.csv");
    CHECK(csv == slurp("cli_band2.csv"));
    CHECK(csv.rfind("x,lower,diff,upper\n", 0) == 0);

    const nlohmann::json j = nlohmann::json::parse(rep);
    CHECK(j["n"].get<int>() == 200);
    CHECK(j["seed"].get<int>() == 7);
    CHECK(j["resamples"].get<int>() == 150);
    // The ramps overlap on both ends, so the curve changes sign.
    CHECK(j["verdict"].get<std::string>() == "cross");
}

TEST_CASE("analytic reports measures for model files", "[cli]") {
    const std::string a = kFixtures + "/mixtures/crossing_narrow_a.json";
    const std::string b1 = kFixtures + "/mixtures/crossing_narrow_b1.json";
    const std::string b = kFixtures + "/mixtures/crossing_narrow_b.json";

    const RunResult dom = run("analytic --a " + a + " --b " + b1);
    CHECK(dom.exit_code == 0);
    CHECK(dom.out.rfind("C_P=0.550000", 0) == 0);
    CHECK(dom.out.find("C_D=1.000000") != std::string::npos);
    CHECK(dom.out.find("verdict=a_dominates") != std::string::npos);
    CHECK(dom.out.find("reference measures:") != std::string::npos);
    // A-mass sits where the second model has none: divergence is infinite.
    CHECK(dom.out.find("kl                 inf") != std::string::npos);
    CHECK(dom.out.find("tv                 0.100000") != std::string::npos);

    const RunResult cross = run("analytic --a " + a + " --b " + b);
    CHECK(cross.exit_code == 0);
    CHECK(cross.out.rfind("C_P=0.495000", 0) == 0);
    CHECK(cross.out.find("C_D=0.000000") != std::string::npos);
    CHECK(cross.out.find("verdict=b_dominates") != std::string::npos);

    const RunResult bad = run("analytic --a " + a + " --b no_such_model.json");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("analytic drives the empirical pipeline on fresh samples", "[cli]") {
    const std::string a = kFixtures + "/mixtures/case2_a.json";
    const std::string b = kFixtures + "/mixtures/case2_b.json";
    const RunResult r = run("analytic --a " + a + " --b " + b +
                            " --n 400 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("empirical pipeline on 400 fresh samples (seed 7)") !=
          std::string::npos);
    CHECK(r.out.find("verdict=cross") != std::string::npos);
}

TEST_CASE("properties subcommand reports the matrix", "[cli]") {
    const RunResult one = run("properties --measure wasserstein --trials 10");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("measure      properties (p:pass f:fail)") !=
          std::string::npos);
    CHECK(one.out.find("wasserstein") != std::string::npos);
    CHECK(one.out.find("matches expectation") != std::string::npos);
    CHECK(one.out.find("MISMATCH") == std::string::npos);

    const RunResult all = run("properties --trials 10");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("c_p") != std::string::npos);
    CHECK(all.out.find("hellinger") != std::string::npos);

    TempFiles tmp;
    const RunResult rep = run("properties --measure c_d --trials 10 --report " +
                              tmp.add("cli_props.json"));
    CHECK(rep.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp("cli_props.json"));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["measure"].get<std::string>() == "c_d");

    CHECK(run("properties --measure mmd --trials 10").exit_code == 2);
    CHECK(run("properties --trials 5").exit_code == 2);
}
