#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI with optional stdin text; stderr is discarded.
Run run(const std::string& args, const std::string& input = "") {
    std::string cmd = std::string(VIRACOMB_BIN) + " " + args + " 2>/dev/null";
    if (!input.empty()) {
        std::string file = "cli_input.txt";
        std::ofstream(file) << input;
        cmd += " < " + file;
    } else {
        cmd += " < /dev/null";
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string running =
    "rsos p=4 pp=9 a=8 b=6 h=8,7,6,5,6,5,4,3,2,3,2,1,2,3,4,5,4,3,4,5,6,5,6\n";
const std::string running_image =
    "half T=8 A=8 B=6 H=8,7,6,5,4,3,2,3,2,3,4,5,6,5,4,5,6,7,6,7,6,7,6,7,6,7,8,7,6,7,6,7,6,7,6,7,8,"
    "7,6,7,6,7,8,7,6\n";
const std::string second =
    "rsos p=4 pp=7 a=6 b=1 h=6,5,6,5,6,5,4,3,4,3,4,5,4,3,2,1,2,3,2,3,4,5,6,5,6,5,4,3,2,1,2,3,2\n";
const std::string second_image =
    "half T=7 A=2 B=6 H=2,3,2,3,4,5,4,3,2,3,4,5,4,5,6,5,4,3,2,3,4,5,4,3,2,3,2,3,2,3,4,5,6,7,6,7,"
    "6,5,4,5,6\n";

}  // namespace

TEST_CASE("character series", "[cli]") {
    const std::string rr = "1,1,1,1,2,2,3,3,4\n";
    CHECK(run("character bosonic 2 5 1 2 --order 8").out == rr);
    CHECK(run("character fermionic --t2 4 --order 8").out == rr);
    CHECK(run("character product --mod 5 --res 1,4 --order 8").out == rr);
    CHECK(run("character bosonic 2 5 1 2 --order 3 --format pretty").out ==
          "1 + q + q^2 + q^3 + O(q^4)\n");
}

TEST_CASE("character argument errors exit 2", "[cli]") {
    CHECK(run("character bosonic 2 4 1 1").code == 2);
    CHECK(run("character fermionic --t2 3").code == 2);
    CHECK(run("character bosonic 2 5 1").code == 2);
    CHECK(run("character").code == 2);
    CHECK(run("nonsense").code == 2);
}

TEST_CASE("path enumeration", "[cli]") {
    CHECK(run("paths rsos 4 9 8 6 --max-weight 3 --gf").out ==
          run("character bosonic 4 9 3 8 --order 3").out);
    CHECK(run("paths half --t2 4 --A 2 --B 2 --max-weight 0").out == "half T=4 A=2 B=2 H=2\n");
    CHECK(run("paths half --t2 10 --A 4 --B 8 --max-weight 2 --gf").out ==
          run("character bosonic 5 11 4 4 --order 2").out);
    Run r = run("paths rsos 2 5 2 2 --max-weight 3");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    CHECK(run("paths rsos 4 9 8 5 --max-weight 2").code == 2);
    CHECK(run("paths half --t2 10 --A 4 --B 10 --max-weight 2").code == 2);
}

TEST_CASE("bijections through the command line", "[cli]") {
    CHECK(run("bijection forward", running).out == running_image);
    CHECK(run("bijection inverse", running_image).out == running);
    CHECK(run("bijection forward", second).out == second_image);
    CHECK(run("bijection inverse", second_image).out == second);
    Run t = run("bijection forward --trace", running);
    CHECK(t.code == 0);
    CHECK(t.out.find("\"lambda\":[9,8,5,1]") != std::string::npos);
    CHECK(t.out.find("\"mu\":[13,11,7,2]") != std::string::npos);
    Run t2 = run("bijection forward --trace", second);
    CHECK(t2.out.find("\"nu\":[11,8,4,4,2]") != std::string::npos);
    CHECK(run("bijection inverse", run("bijection forward", running).out).out == running);
}

TEST_CASE("bijection input errors exit 2", "[cli]") {
    CHECK(run("bijection forward", "garbage\n").code == 2);
    CHECK(run("bijection forward", "rsos p=3 pp=8 a=4 b=2 h=4,3,2\n").code == 2);
    CHECK(run("bijection inverse", "half T=8 A=8 B=6 H=8,7,6,5,6,7,6\n").code == 2);
    CHECK(run("bijection inverse", running).code == 2);
}

TEST_CASE("verify suites", "[cli]") {
    Run r = run("verify theorem2 --order 12 --max-t2 6");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(r.out.find("\"status\":\"fail\"") == std::string::npos);
    CHECK(run("verify sectors --order 8 --max-t2 6").code == 0);
    CHECK(run("verify nosuch").code == 2);
    CHECK(run("verify theorem2 --max-t2 3").code == 2);
}

TEST_CASE("rendering", "[cli]") {
    Run r = run("render --format ascii", running);
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '*') == 13);
    Run s = run("render --format svg", running);
    CHECK(s.out.find("</svg>") != std::string::npos);
    CHECK(run("render --format ascii", "half T=8 A=8 B=6\n").code == 2);
    CHECK(run("render --format ascii --baselines", "half T=4 A=2 B=2 H=2,3,4,3,2\n").out.find('-') !=
          std::string::npos);
}

TEST_CASE("dissection and sector output", "[cli]") {
    Run r = run("dissect", "half T=4 A=2 B=2 H=2,3,4,3,2\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"sector\":[1]") != std::string::npos);
    CHECK(r.out.find("\"weight\":1") != std::string::npos);
    CHECK(run("dissect", running_image).code == 2);
    CHECK(run("sector-gf --t2 4 --n 1 --order 4").out == "0,1,1,1,1\n");
    CHECK(run("sector-gf --t2 4 --n 1,2 --order 4").code == 2);
}

TEST_CASE("output is deterministic", "[cli]") {
    CHECK(run("paths half --t2 7 --A 2 --B 6 --max-weight 6").out ==
          run("paths half --t2 7 --A 2 --B 6 --max-weight 6").out);
}
