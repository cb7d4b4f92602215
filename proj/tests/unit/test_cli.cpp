#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coartin/cli.hpp"
#include "coartin/json_io.hpp"

using namespace coartin;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(COARTIN_GOLDEN_DIR) + "/" + name); }

Json parse(const std::string& s) { return Json::parse(s); }

struct GoldenCase {
    const char* file;
    std::vector<std::string> args;
};

const std::vector<GoldenCase>& goldenCases() {
    static const std::vector<GoldenCase> cases = {
        {"orders_m6.json", {"orders", "--m", "6"}},
        {"orders_m6_p2.json", {"--char", "2", "orders", "--m", "6"}},
        {"enumerate_m4.json", {"enumerate-s", "--m", "4"}},
        {"enumerate_m6.json", {"enumerate-s", "--m", "6"}},
        {"gamma_info_m14.json", {"gamma-info", "--m", "14", "--gamma", "4,6,8,10,12"}},
        {"canonical_m6.json", {"canonical", "--m", "6", "--gen", "x^2 + x^3"}},
        {"aut_even_m6.json", {"aut", "--family", "even-extremal", "--m", "6"}},
        {"iso_m6.json", {"iso", "--m", "6", "--a", "x^2+x^3+x^5", "--b", "x^2+2x^3+8x^5"}},
        {"iso_m6_no.json", {"iso", "--m", "6", "--a", "x^2+x^3+x^5", "--b", "x^2+x^3+2x^5"}},
        {"present_m6.json", {"present", "--m", "6", "--gen", "x^2 + x^3", "--target", "full"}},
        {"variety_m14.json", {"variety", "--m", "14", "--gamma", "4,6,8,10,12"}},
        {"fixed_points_m6.json", {"fixed-points", "--m", "6", "--gamma", "2,4", "--n", "3"}},
        {"realize_m6.json", {"realize-orders", "--m", "6"}},
        {"sweep_4_8.csv", {"--format", "csv", "sweep", "--from", "4", "--to", "8"}},
        {"present_m14.txt", {"--format", "text", "present", "--m", "14", "--gen", "x^4 + x^5", "--gen", "x^6 + 3/2 x^7"}},
    };
    return cases;
}

}  // namespace

TEST_CASE("documented examples") {
    {
        const auto r = call({"orders", "--m", "6"});
        CHECK(r.code == 0);
        CHECK(r.out == "{\"L\":[1,2,3],\"B\":[4,5],\"O\":[1,2,3]}\n");
    }
    {
        const auto r = call({"iso", "--m", "6", "--a", "x^2+x^3+x^5", "--b", "x^2+2x^3+8x^5"});
        CHECK(r.code == 0);
        const auto j = parse(r.out);
        CHECK(j["isomorphic"] == true);
        CHECK(j["forced_power"]["g"] == 1);
        CHECK(j["forced_power"]["mu"] == "2/1");
    }
    {
        const auto r = call({"enumerate-s", "--m", "4"});
        CHECK(r.code == 0);
        CHECK(parse(r.out)["count"] == 2);
    }
}

TEST_CASE("golden outputs") {
    for (const auto& c : goldenCases()) {
        INFO(c.file);
        const auto r = call(c.args);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        CHECK(r.out == golden(c.file));
    }
}

TEST_CASE("JSON outputs re-parse to the same value") {
    for (const auto& c : goldenCases()) {
        const std::string f = c.file;
        if (f.size() < 5 || f.substr(f.size() - 5) != ".json") continue;
        INFO(f);
        const auto r = call(c.args);
        const Json j = parse(r.out);
        CHECK(j.dump() + "\n" == r.out);
        CHECK(Json::parse(j.dump()) == j);
    }
}

TEST_CASE("algebra JSON round trip through the canonical verb") {
    const auto r = call({"canonical", "--m", "10", "--gen", "x^4 + 2/3 x^5 - x^7", "--gen", "x^6 + x^9"});
    REQUIRE(r.code == 0);
    const Json j = parse(r.out);
    const CanonicalAlgebra A = algebraFromJson(j["algebra"]);
    CHECK(toJson(A) == j["algebra"]);
    CHECK(A.gamma() == Gamma(10, {4, 6, 8}));

    const std::string path = "cli_roundtrip_algebra.json";
    {
        std::ofstream o(path);
        o << r.out;
    }
    const auto again = call({"canonical", "--algebra-json", path});
    CHECK(again.code == 0);
    CHECK(again.out == r.out);
    const auto viaAut = call({"aut", "--algebra-json", path});
    CHECK(viaAut.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("pretty output parses to the compact value") {
    const auto a = call({"--pretty", "gamma-info", "--m", "14", "--gamma", "4,6,8,10,12"});
    const auto b = call({"gamma-info", "--m", "14", "--gamma", "4,6,8,10,12"});
    CHECK(a.out != b.out);
    CHECK(parse(a.out) == parse(b.out));
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const auto& c : goldenCases()) {
        const auto a = call(c.args), b = call(c.args);
        CHECK(a.out == b.out);
    }
    const std::vector<std::string> search{"realize-orders", "--m", "8", "--gamma", "2,4,6", "--seed", "5"};
    CHECK(call(search).out == call(search).out);
}

TEST_CASE("exit codes and structured errors") {
    auto errorKind = [](const Result& r) { return parse(r.err)["error"]["kind"].get<std::string>(); };
    {
        const auto r = call({"orders", "--m", "3"});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(errorKind(r) == "validation");
    }
    {
        const auto r = call({"nonsense"});
        CHECK(r.code == 2);
    }
    {
        const auto r = call({"canonical", "--m", "6", "--gen", "x^2 + "});
        CHECK(r.code == 2);
        CHECK(errorKind(r) == "validation");
    }
    {
        const auto r = call({"canonical", "--m", "6", "--gen", "x^5"});
        CHECK(r.code == 2);
        CHECK(errorKind(r) == "not_in_am");
    }
    CHECK(call({"gamma-info", "--m", "6", "--gamma", "2"}).code == 2);
    CHECK(call({"--char", "4", "orders", "--m", "6"}).code == 2);
    CHECK(call({"--format", "csv", "canonical", "--m", "6", "--gen", "x^2"}).code == 2);
    CHECK(call({"orders", "--m", "500"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({}).code == 2);
}

TEST_CASE("the installed tool matches the in-process runner") {
    const std::string cmd = std::string(COARTIN_TOOL) + " orders --m 6 > cli_tool_out.txt";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp("cli_tool_out.txt") == call({"orders", "--m", "6"}).out);
    std::remove("cli_tool_out.txt");
    const std::string bad = std::string(COARTIN_TOOL) + " orders --m 2 2> /dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
