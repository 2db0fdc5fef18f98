#include "mutant/cli.hpp"
#include "mutant/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace mutant;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "cli_test_tmp_" + std::to_string(counter++) + ".json";
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_str = nullptr,
            std::string* err_str = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_str) *out_str = out.str();
    if (err_str) *err_str = err.str();
    return code;
}

} // namespace

TEST_CASE("cli mutate") {
    TempFile f(R"({"labels":["1","2","3"],"rows":[[0,1,-1],[-1,0,1],[1,-1,0]]})");
    std::string out;
    int code = run_cli({"mutate", "--matrix", f.path, "--at", "2"}, &out);
    CHECK(code == 0);
    auto m = matrix_from_json(json::parse(out));
    CHECK(m == ExchangeMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}));
}

TEST_CASE("cli classify") {
    TempFile tri(R"({"n":3,"edges":[{"tail":1,"head":2,"w":2},{"tail":2,"head":3,"w":2},
                    {"tail":3,"head":1,"w":1}]})");
    std::string out;
    CHECK(run_cli({"classify", "--diagram", tri.path}, &out) == 0);
    CHECK(out == "B3\n");

    TempFile inf(R"({"n":3,"edges":[{"tail":1,"head":2,"w":3},{"tail":2,"head":3,"w":1}]})");
    CHECK(run_cli({"classify", "--diagram", inf.path}, &out) == 0);
    CHECK(out == "2-infinite\n");

    // matrices disambiguate B vs C through the symmetrizer
    TempFile c3(R"({"rows":[[0,1,0],[-1,0,2],[0,-1,0]]})");
    CHECK(run_cli({"classify", "--matrix", c3.path}, &out) == 0);
    CHECK(out == "C3\n");
    TempFile b3(R"({"rows":[[0,1,0],[-1,0,1],[0,-2,0]]})");
    CHECK(run_cli({"classify", "--matrix", b3.path}, &out) == 0);
    CHECK(out == "B3\n");
}

TEST_CASE("cli clusters count") {
    std::string out;
    CHECK(run_cli({"clusters", "--type", "A2", "--count"}, &out) == 0);
    CHECK(out == "5\n");
    CHECK(run_cli({"clusters", "--type", "D4", "--count"}, &out) == 0);
    CHECK(out == "50\n");
}

TEST_CASE("cli variables") {
    std::string out;
    CHECK(run_cli({"variables", "--type", "A2"}, &out) == 0);
    CHECK(out.find("(1+x2)/x1") != std::string::npos);
    CHECK(out.find("(1+x1+x2)/(x1x2)") != std::string::npos);
}

TEST_CASE("cli exchange graph and class") {
    std::string out;
    CHECK(run_cli({"exchange-graph", "--type", "A2"}, &out) == 0);
    CHECK(out == "5 clusters, 5 exchanges\n");
    TempFile tri(R"({"n":3,"edges":[{"tail":1,"head":2},{"tail":2,"head":3},
                    {"tail":3,"head":1}]})");
    CHECK(run_cli({"class", "--diagram", tri.path}, &out) == 0);
    CHECK(out == "closed, 4 members\n");
    CHECK(run_cli({"class", "--diagram", tri.path, "--format", "dot"}, &out) == 0);
    CHECK(out.find("digraph") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(run_cli({"clusters"}, &out, &err) == 2);              // missing --type
    CHECK(run_cli({"nonsense"}, &out, &err) == 2);              // unknown command
    CHECK(run_cli({"classify", "--diagram", "no_such.json"}, &out, &err) == 1);
    TempFile bad(R"({"n":2,"edges":[{"tail":1,"head":5}]})");
    CHECK(run_cli({"classify", "--diagram", bad.path}, &out, &err) == 1);
    // unknown verify suite is a usage error
    CHECK(run_cli({"verify", "everything"}, &out, &err) == 2);
}

TEST_CASE("cli output is deterministic") {
    std::string a, b;
    CHECK(run_cli({"exchange-graph", "--type", "B2", "--format", "json"}, &a) == 0);
    CHECK(run_cli({"exchange-graph", "--type", "B2", "--format", "json"}, &b) == 0);
    CHECK(a == b);
    CHECK(run_cli({"clusters", "--type", "A3", "--format", "json"}, &a) == 0);
    CHECK(run_cli({"clusters", "--type", "A3", "--format", "json"}, &b) == 0);
    CHECK(a == b);
}

TEST_CASE("cli verify suites") {
    std::string out;
    CHECK(run_cli({"verify", "counts"}, &out) == 0);
    CHECK(out.find("pass") == 0);
    CHECK(run_cli({"verify", "loops", "--type", "A3"}, &out) == 0);
    CHECK(run_cli({"verify", "plucker", "--type", "C", "--n", "3"}, &out) == 0);
}

TEST_CASE("cli verify dynkin with the bundled corpus") {
#ifdef MUTANT_TEST_DATA_DIR
    std::string out;
    CHECK(run_cli({"verify", "dynkin", "--data", MUTANT_TEST_DATA_DIR}, &out) == 0);
    CHECK(out.find("bundled corpus") != std::string::npos);
#endif
}

TEST_CASE("seed json round trip") {
    json j = {{"matrix", {{"rows", {{0, 1}, {-1, 0}}}}},
              {"semifield", {"p"}},
              {"coeff_pairs", {{{1}, {0}}, {{0}, {1}}}}};
    Seed s = seed_from_json(j);
    CHECK(s.semifield.gens == std::vector<std::string>{"p"});
    json back = seed_to_json(s);
    Seed s2 = seed_from_json(back);
    CHECK(s.matrix == s2.matrix);
    CHECK(s.coeffs == s2.coeffs);
}
