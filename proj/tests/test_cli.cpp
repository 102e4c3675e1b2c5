#include "cli.hpp"

#include "gl4/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "gl4cert");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = gl4::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
    CHECK(run({"example"}).code == 0);
    CHECK(run({"verify-family"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"certify", "--primes", "5"}).code == 2);
    CHECK(run({"certify", "--example", "--primes", "5,5"}).code == 2);
    CHECK(run({"frobenius", "--example", "--prime", "2"}).code == 2);
    CHECK(run({"frobenius", "--example", "--prime", "9"}).code == 2);
    CHECK(run({"certify", "--family", "1,1,2", "--delta", "4", "--primes", "5,11"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    // Inconclusive is a negative answer.
    const std::string cm = temp_file("gl4_cm.json",
                                     R"({"field":{"type":"quadratic","delta":2},"f":["1","0","0","0","0","0","1"]})");
    const auto r = run({"certify", "--curve", cm, "--primes", "5,11"});
    CHECK(r.code == 1);
    CHECK(r.out.find("Inconclusive") != std::string::npos);
}

TEST_CASE("bad prime is named") {
    const auto r = run({"certify", "--example", "--primes", "5,3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("p = 3") != std::string::npos);
}

TEST_CASE("malformed JSON") {
    const std::string bad = temp_file("gl4_bad.json", "{\"field\": ");
    CHECK(run({"certify", "--curve", bad, "--primes", "5,11"}).code == 2);
    const std::string wrong = temp_file("gl4_wrong.json", R"({"field":{"type":"quadratic","delta":2},"f":["1"]})");
    CHECK(run({"certify", "--curve", wrong, "--primes", "5,11"}).code == 2);
    CHECK(run({"certify", "--curve", "/nonexistent/gl4.json", "--primes", "5,11"}).code == 2);
}

TEST_CASE("certificate JSON schema") {
    const auto r = run({"example", "--json"});
    REQUIRE(r.code == 0);
    const auto j = gl4::Json::parse(r.out);
    CHECK(j["schema"] == gl4::kCertificateSchema);
    CHECK(j["conclusion"] == "EndIsZ");
    CHECK(j["seed"] == 20240607);
    REQUIRE(j["primes"].size() == 2);
    CHECK(j["primes"][0]["p"] == 5);
    CHECK(j["primes"][0]["weil"]["a1"] == 8);
    CHECK(j["primes"][0]["weil"]["a2"] == 34);
    CHECK(j["primes"][0]["group_order"] == "452");
    CHECK(j["primes"][1]["weil"]["a2"] == 390);
    CHECK(j["intersection_is_Q"] == true);
    CHECK(j["curve"]["equation"]["field"]["delta"] == 2);
    const auto v = gl4::Json::parse(run({"verify-family", "--json"}).out);
    CHECK(v["all_pass"] == true);
    CHECK(v["transpose_without_involution_rejected"] == true);
}

TEST_CASE("output is deterministic") {
    CHECK(run({"example", "--json"}).out == run({"example", "--json"}).out);
    const auto a = run({"richelot", "--family", "1,1,2", "--delta", "2", "--prime", "17", "--samples", "20"});
    const auto b = run({"richelot", "--family", "1,1,2", "--delta", "2", "--prime", "17", "--samples", "20"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"richelot", "--seed", "5", "--family", "1,1,2", "--delta", "2", "--prime", "17", "--samples",
                        "20"});
    CHECK(c.out.find("seed: 5") != std::string::npos);
}

TEST_CASE("construct round trip") {
    const auto r = run({"construct", "--family", "1,1,2", "--delta", "2", "--alpha", "sqrt(2)"});
    REQUIRE(r.code == 0);
    const auto j = gl4::Json::parse(r.out);
    CHECK(gl4::curve_from_json(j) == gl4::example_curve());
    const std::string path = temp_file("gl4_construct.json", r.out);
    const auto viafile = run({"certify", "--curve", path, "--primes", "5,11", "--json"});
    const auto direct = run({"certify", "--example", "--primes", "5,11", "--json"});
    CHECK(viafile.code == 0);
    CHECK(gl4::Json::parse(viafile.out)["primes"] == gl4::Json::parse(direct.out)["primes"]);
}

TEST_CASE("frobenius output") {
    const auto r = run({"frobenius", "--example", "--prime", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("14638") != std::string::npos);
    CHECK(r.out.find("11616") != std::string::npos);
}

TEST_CASE("finite-field curve JSON") {
    const auto& k = gl4::FiniteField::get(5, 2);
    std::vector<gl4::FqElem> c(7, k.zero());
    c[0] = k.theta();
    c[6] = k.one();
    const gl4::ReducedCurve rc{gl4::FqPoly(k, c)};
    const auto back = gl4::reduced_curve_from_json(gl4::to_json(rc));
    CHECK(back.f() == rc.f());
}

}  // TEST_SUITE
