#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SAR_CLI_PATH
#define SAR_CLI_PATH "sar"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "/tmp/sar_cli_out.txt";
    std::string cmd = std::string(SAR_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.output = buf.str();
    std::remove(out_file.c_str());
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("/tmp/sar_cli_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST(Cli, GenProducesValidJson) {
    TempPath inst("gen.json");
    RunResult res = run_cli("gen --kind circle --n 12 --seed 1 --out " + inst.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    std::string text = read_file(inst.path);
    EXPECT_NE(text.find("\"version\": 1"), std::string::npos);
    EXPECT_NE(text.find("\"start\""), std::string::npos);
    EXPECT_NE(text.find("\"circle\""), std::string::npos);
}

TEST(Cli, GenDeterministicAcrossRuns) {
    TempPath a("gen_a.json"), b("gen_b.json");
    EXPECT_EQ(run_cli("gen --kind random --n 40 --seed 9 --out " + a.path).exit_code, 0);
    EXPECT_EQ(run_cli("gen --kind random --n 40 --seed 9 --out " + b.path).exit_code, 0);
    EXPECT_EQ(read_file(a.path), read_file(b.path));
}

TEST(Cli, SolveLabeledFixedTranslation) {
    TempPath inst("solve_inst.json"), out("solve_out.json");
    // Two far-apart discs moving to themselves: v = 0,0 is trivially valid.
    std::ofstream f(inst.path);
    f << R"({"version":1,"labeled":true,"start":[[0,0],[10,0]],"target":[[0,0],[10,0]],"matching":[0,1]})";
    f.close();
    RunResult res = run_cli("solve --in " + inst.path + " --labeled --v 0,0 --align none --out " + out.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    std::string text = read_file(out.path);
    EXPECT_NE(text.find("\"valid\": true"), std::string::npos);
    EXPECT_NE(text.find("\"order\""), std::string::npos);
}

TEST(Cli, SolveInfeasibleLabeledExitsTwo) {
    TempPath inst("swap_inst.json");
    std::ofstream f(inst.path);
    // Tangent swap: infeasible for every translation.
    f << R"({"version":1,"labeled":true,"start":[[0,0],[0,2]],"target":[[0,2],[0,0]],"matching":[0,1]})";
    f.close();
    RunResult res = run_cli("solve --in " + inst.path + " --labeled --align none");
    EXPECT_EQ(res.exit_code, 2) << res.output;
    EXPECT_NE(res.output.find("no valid translation exists"), std::string::npos);
}

TEST(Cli, SolveUnlabeledFeasibility) {
    TempPath inst("unlab_inst.json"), out("unlab_out.json");
    EXPECT_EQ(run_cli("gen --kind cross --n 8 --seed 3 --out " + inst.path).exit_code, 0);
    RunResult res = run_cli("solve --in " + inst.path + " --unlabeled --seed 4 --out " + out.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(read_file(out.path).find("\"valid\": true"), std::string::npos);
}

TEST(Cli, OptimizeUnlabeledReport) {
    TempPath inst("opt_inst.json"), out("opt_out.json");
    EXPECT_EQ(run_cli("gen --kind circle --n 16 --seed 2 --out " + inst.path).exit_code, 0);
    RunResult res = run_cli("optimize --in " + inst.path +
                            " --mode unlabeled --criterion shortest --directions 16 --seed 5 --out " +
                            out.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    std::string text = read_file(out.path);
    EXPECT_NE(text.find("\"value\""), std::string::npos);
    EXPECT_NE(text.find("\"r_sum_discs\""), std::string::npos);
    EXPECT_NE(text.find("\"per_direction\""), std::string::npos);
}

TEST(Cli, OptimizeLabeledSed) {
    TempPath inst("optl_inst.json"), out("optl_out.json");
    std::ofstream f(inst.path);
    f << R"({"version":1,"labeled":true,"start":[[-3,0],[3,0]],"target":[[-1,0],[1,0]],"matching":[0,1]})";
    f.close();
    RunResult res =
        run_cli("optimize --in " + inst.path + " --mode labeled --criterion sed --align none --out " + out.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(read_file(out.path).find("\"value\": 3.0"), std::string::npos);
}

TEST(Cli, BenchCsvDeterministic) {
    TempPath a("bench_a.csv"), b("bench_b.csv");
    std::string args = "bench --kinds cross --sizes 6 --seeds 1,2 --criterion shortest --directions 4 --out ";
    EXPECT_EQ(run_cli(args + a.path).exit_code, 0);
    EXPECT_EQ(run_cli(args + b.path).exit_code, 0);
    std::string ca = read_file(a.path);
    std::string cb = read_file(b.path);
    // Strip wall-time column (last) before comparing.
    auto strip_time = [](const std::string& csv) {
        std::istringstream in(csv);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.rfind(',');
            out << line.substr(0, pos) << "\n";
        }
        return out.str();
    };
    EXPECT_EQ(strip_time(ca), strip_time(cb));
    EXPECT_NE(ca.find("kind,n,seed"), std::string::npos);
}

TEST(Cli, RenderWellFormedSvg) {
    TempPath inst("render_inst.json"), out("render_out.svg");
    EXPECT_EQ(run_cli("gen --kind circle --n 7 --seed 1 --out " + inst.path).exit_code, 0);
    RunResult res = run_cli("render --in " + inst.path + " --v 3,1 --out " + out.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    std::string svg = read_file(out.path);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    std::size_t circles = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1))
        ++circles;
    EXPECT_EQ(circles, 14u);
}

TEST(Cli, Optimize2dModeBeatsRayModeOnSameDirection) {
    TempPath inst("opt2d_inst.json"), out_ray("opt2d_ray.json"), out_2d("opt2d_2d.json");
    EXPECT_EQ(run_cli("gen --kind random --n 7 --seed 11 --out " + inst.path).exit_code, 0);
    // Same seed and a single direction: identical matching/order, so the
    // 2-D search space contains the ray and the value can only improve.
    std::string common = " --criterion shortest --directions 1 --seed 21 ";
    EXPECT_EQ(run_cli("optimize --in " + inst.path + " --mode unlabeled" + common + "--out " + out_ray.path)
                  .exit_code,
              0);
    EXPECT_EQ(
        run_cli("optimize --in " + inst.path + " --mode unlabeled-2d" + common + "--out " + out_2d.path)
            .exit_code,
        0);
    auto value_of = [&](const std::string& path) {
        std::string text = read_file(path);
        auto pos = text.find("\"value\":");
        return std::stod(text.substr(pos + 8));
    };
    EXPECT_LE(value_of(out_2d.path), value_of(out_ray.path) + 1e-9);
}

TEST(Cli, OptimizeCsvFormat) {
    TempPath inst("fmt_inst.json"), out("fmt_out.csv");
    EXPECT_EQ(run_cli("gen --kind cross --n 6 --seed 1 --out " + inst.path).exit_code, 0);
    RunResult res = run_cli("optimize --in " + inst.path +
                            " --criterion shortest --directions 4 --seed 2 --format csv --out " + out.path);
    EXPECT_EQ(res.exit_code, 0) << res.output;
    std::string csv = read_file(out.path);
    EXPECT_NE(csv.find("generator,n,seed"), std::string::npos);
    EXPECT_NE(csv.find("cross,6"), std::string::npos);

    RunResult bad = run_cli("gen --kind cross --n 6 --seed 1 --format svg");
    EXPECT_EQ(bad.exit_code, 3);
}

TEST(Cli, BadInputExitsThree) {
    TempPath missing("missing.json");
    RunResult res = run_cli("solve --in " + missing.path);
    EXPECT_EQ(res.exit_code, 3);

    TempPath bad("bad.json");
    std::ofstream f(bad.path);
    f << R"({"version":1,"labeled":false,"start":[[0,0],[4,0]],"target":[[0,0]]})";
    f.close();
    RunResult res2 = run_cli("solve --in " + bad.path);
    EXPECT_EQ(res2.exit_code, 3);
    EXPECT_NE(res2.output.find("cardinality mismatch"), std::string::npos);
}
