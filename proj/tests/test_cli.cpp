#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MODWAVE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("speed evaluates the symbol") {
    const auto r = run("speed --model water-wave --kappa 1 --T 0");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["c"].get<double>() == doctest::Approx(0.87269).epsilon(1e-4));
    CHECK(j["kappa"] == 1.0);
}

TEST_CASE("speed with the CH symbol") {
    const auto r = run("speed --model ch --kappa 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["c"].get<double>() == doctest::Approx(11.0 / 13.0).epsilon(1e-12));
}

TEST_CASE("coeffs reports p1 for the surface model and null for CH") {
    const auto surf = run("coeffs --model fdch-surface --kappa 1.3 --T 0");
    REQUIRE(surf.status == 0);
    CHECK(!json::parse(surf.out)["p1"].is_null());
    const auto ch = run("coeffs --model ch --kappa 2");
    REQUIRE(ch.status == 0);
    CHECK(json::parse(ch.out)["p1"].is_null());
}

TEST_CASE("wave solves and reports a tiny residual") {
    const auto r = run("wave --kappa 2 --T 0 --a 0.01 --N 32");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["residual_norm"].get<double>() <= 1e-11);
    CHECK(j["coeffs"][1].get<double>() == doctest::Approx(0.01));
}

TEST_CASE("index classifies the gravity wave numbers") {
    const auto stable = run("index --model fdch-surface --kappa 1 --T 0");
    REQUIRE(stable.status == 0);
    CHECK(json::parse(stable.out)["classification"] == "stable");
    const auto unstable = run("index --model fdch-surface --kappa 2 --T 0");
    CHECK(json::parse(unstable.out)["classification"] == "unstable");
}

TEST_CASE("critical finds the i4 root") {
    const auto r =
        run("critical --model fdch-surface --factor i4 --kmin 0.5 --kmax 3");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["kappa"].get<double>() == doctest::Approx(1.420).epsilon(4e-3));
}

TEST_CASE("delta0 reports the cubic discriminant") {
    const auto r = run("delta0 --kappa 2 --T 0 --xi 0.01 --a 0.001");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["delta0"].get<double>() > 0.0);
    CHECK(j["xi"] == 0.01);
}

TEST_CASE("spectrum reports a positive growth rate for an unstable wave") {
    const auto r =
        run("spectrum --kappa 2 --T 0 --a 0.003 --N 32 --M 48 --xi 0.01");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["max_real"].get<double>() > 1e-8);
    CHECK(j["eigenvalues"].size() == 2 * 48 + 1);
}

TEST_CASE("validate --quick prints one line per criterion") {
    const auto r = run("validate --quick");
    REQUIRE(r.status == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 6);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("diagram writes a curves CSV") {
    const auto r = run(
        "diagram --model fdch-surface --kmin 0.5 --kmax 3 --step 0.02 "
        "--tmin 0.001 --tmax 0.01 --tcount 5 --what curves --jobs 2");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("curve_id,kappa,kappa_sqrtT\n", 0) == 0);
    CHECK(r.out.find("\n4,") != std::string::npos);
}

TEST_CASE("domain errors exit with code 1 and a JSON message") {
    const auto r = run("index --model fdch-surface --kappa -1 --T 0");
    CHECK(r.status == 1);
    CHECK(json::parse(r.out).contains("error"));
    const auto res = run("coeffs --model fdch-surface --kappa 0 --T 0");
    CHECK(res.status == 1);
}

TEST_CASE("unknown flags are a usage error") {
    const auto r = run("index --frobnicate 3");
    CHECK(r.status != 0);
}
