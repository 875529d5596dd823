#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "grsum/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = grsum::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("table reproduces the k = 6 tables byte for byte") {
    const auto b0 = run({"table", "--k", "6", "--b", "0"});
    CHECK(b0.code == 0);
    CHECK(b0.out == slurp(GRSUM_TEST_DATA_DIR "/table_k6_b0.tsv"));
    const auto b1 = run({"table", "--k", "6", "--b", "1"});
    CHECK(b1.code == 0);
    CHECK(b1.out == slurp(GRSUM_TEST_DATA_DIR "/table_k6_b1.tsv"));
    CHECK(run({"table", "--k", "1", "--b", "0"}).out == "s\tt=0\n1\t1\n");
}

TEST_CASE("table json") {
    const auto r = run({"table", "--k", "6", "--b", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 6);
    CHECK(j["rows"][1]["values"][2] == "-1/3");
}

TEST_CASE("table validation") {
    CHECK(run({"table", "--k", "0", "--b", "0"}).code == 2);
    CHECK(run({"table", "--k", "10001", "--b", "0"}).code == 2);
    CHECK(run({"table", "--k", "6", "--b", "2"}).code == 2);
    CHECK(run({"table", "--k", "6"}).code == 2);
    CHECK(run({"table", "--k", "6", "--b", "0", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("value") {
    CHECK(run({"value", "--k", "12", "--s", "6", "--t", "3", "--b", "0"}).out == "-1\n");
    CHECK(run({"value", "--k", "6", "--s", "2", "--t", "3", "--b", "1"}).out == "-1/6\n");
    CHECK(run({"value", "--k", "6", "--s", "3", "--t", "-5", "--b", "1"}).out == "-1/2\n");
    CHECK(run({"value", "--k", "6", "--s", "7", "--t", "0", "--b", "0"}).code == 2);
}

TEST_CASE("svt exit codes") {
    const auto r = run({"svt", "--s", "4", "--delta", "0", "--t", "2", "--parity", "1", "--crosscheck"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 1);
    CHECK(j["methods"]["brute_force"] == 1);
    CHECK(j["methods"]["closed_form_total"] == 1);
    const auto shifted = run({"svt", "--s", "4", "--delta", "1", "--t", "0", "--parity", "0", "--crosscheck"});
    CHECK(shifted.code == 0);
    CHECK(nlohmann::json::parse(shifted.out)["size"] == nlohmann::json::parse(shifted.out)["methods"]["brute_force"]);
    CHECK(run({"svt", "--s", "4", "--delta", "0", "--t", "2", "--parity", "2"}).code == 2);
    CHECK(run({"svt", "--s", "4", "--delta", "5", "--t", "2", "--parity", "0"}).code == 2);
}

TEST_CASE("oracle") {
    const auto r = run({"oracle", "--n", "4", "--k", "9", "--t", "5", "--parity", "0"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size0"] == 2);
    CHECK(j["size1"] == 0);
    CHECK(j["size"] == 2);
    CHECK(run({"oracle", "--n", "31", "--k", "9", "--t", "5"}).code == 2);
}

TEST_CASE("verify") {
    const auto a = run({"verify", "--suite", "comb-oracle", "--kmax", "10"});
    CHECK(a.code == 0);
    const auto b = run({"verify", "--suite", "comb-oracle", "--kmax", "10", "--jobs", "4"});
    CHECK(a.out == b.out);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
    // An impossible tolerance on a numeric suite must fail with exit 4 and name a counterexample.
    const auto strict = run({"verify", "--suite", "trig", "--kmax", "20", "--tol", "0"});
    CHECK(strict.code == 4);
    CHECK(strict.err.find("FAILED") != std::string::npos);
}

TEST_CASE("series") {
    const auto c = run({"series", "--kind", "c", "--n", "1", "--r", "2", "--terms", "1000"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind("series,n,r_or_alpha", 0) == 0);
    const auto f = run({"series", "--kind", "f", "--r", "2", "--s", "2", "--t", "0", "--terms", "500"});
    CHECK(f.code == 0);
    CHECK(f.out.find("f_printed") != std::string::npos);
    CHECK(run({"series", "--kind", "f", "--r", "2", "--terms", "500"}).code == 2);
    CHECK(run({"series", "--kind", "c", "--r", "1", "--terms", "10"}).code == 2);
    CHECK(run({"series", "--kind", "c", "--r", "2", "--terms", "0"}).code == 2);
}
