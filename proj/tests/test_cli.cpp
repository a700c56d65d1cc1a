#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string bin() {
    const char* p = std::getenv("PARORBIT_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classify subcommand") {
    auto r = run("classify --bv 2,2,2");
    CHECK(r.code == 0);
    CHECK(r.out.find("infinite") != std::string::npos);
    auto r2 = run("classify --bv 5,4 --check");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("finite") != std::string::npos);
    CHECK(r2.out.find("(5,k)") != std::string::npos);
    auto bad = run("classify");
    CHECK(bad.code == 2);
}

TEST_CASE("orbits subcommand") {
    auto r = run("orbits --bv 1,1 --q 2 --target cone --acting P --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"orbit_count\": 2") != std::string::npos);
}

TEST_CASE("deterministic json output") {
    auto a = run("classify --bv 1,2,1,4 --json");
    auto b = run("classify --bv 1,2,1,4 --json");
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"verdict\": \"infinite\"") != std::string::npos);
}

TEST_CASE("normalize subcommand on a small pair") {
    std::string path = "/tmp/parorbit_pair.json";
    {
        std::ofstream f(path);
        f << R"json({"f": {"field": "GF(5)", "rows": 3, "cols": 3,
                 "entries": [[0,1,0],[0,0,1],[0,0,0]]},
                "u_basis": {"field": "GF(5)", "rows": 1, "cols": 3,
                 "entries": [[1,0,0]]}})json";
    }
    auto r = run("normalize --input " + path + " --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"reduced_ok\": true") != std::string::npos);
}

TEST_CASE("family subcommand") {
    auto r = run("family --name levi_nilr_111 --t 2 --q 7 --certify");
    CHECK(r.code == 0);
    auto r2 = run("family --name e6_66 --t 1 --q 5 --json");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("\"rows\": 12") != std::string::npos);
}

TEST_CASE("distinguished subcommand") {
    auto r = run("distinguished --bv 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("1 distinguished") != std::string::npos);
}

TEST_CASE("rep round trip with assertion") {
    std::string path = "/tmp/parorbit_mat.json";
    {
        std::ofstream f(path);
        f << R"json({"field": "GF(3)", "rows": 3, "cols": 3,
                 "entries": [[0,1,2],[0,0,1],[0,0,0]]})json";
    }
    auto r = run("rep --from-matrix " + path + " --bv 1,2 --to-matrix --assert --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"roundtrip_conjugate\": true") != std::string::npos);
}

TEST_CASE("delta subcommand on a projective grid module") {
    std::string path = "/tmp/parorbit_grid.json";
    {
        std::ofstream f(path);
        f << R"json({"field": "Q", "p": 2, "rows": 2, "x": 2,
                "dims": [[1,1],[1,1]],
                "maps": {
                  "a1_1": {"field": "Q", "rows": 1, "cols": 1, "entries": [["1"]]},
                  "a2_1": {"field": "Q", "rows": 1, "cols": 1, "entries": [["1"]]},
                  "b1_1": {"field": "Q", "rows": 1, "cols": 1, "entries": [["1"]]},
                  "b1_2": {"field": "Q", "rows": 1, "cols": 1, "entries": [["1"]]}}})json";
    }
    auto r = run("delta --input " + path + " --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("filtration") != std::string::npos);
}
