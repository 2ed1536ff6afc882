#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(INVREL_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace

TEST_CASE("count") {
    auto r = run("count '>,<=' --n 1..9 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "n,count\n1,1\n2,2\n3,6\n4,20\n5,72\n6,272\n7,1064\n8,4272\n9,17504\n");

    r = run("count '=,!=' --n 1..9 --format json --reproducible");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["counts"].size() == 9);
    CHECK(j["counts"][8]["count"] == "46234");
    CHECK_FALSE(j.contains("timestamp"));

    r = run("count '<=,>=' --n 3 --format csv");
    CHECK(r.out == "n,count\n3,3\n");

    r = run("count '>,<=,-' --n 4 --by-dist --format json --reproducible");
    const auto k = nlohmann::json::parse(r.out);
    CHECK(k["counts"][0]["by_dist"]["2"].is_string());
}

TEST_CASE("json output is reproducible") {
    const auto a = run("count '<,<' --n 1..8 --by-last --format json --reproducible");
    const auto b = run("count '<,<' --n 1..8 --by-last --format json --reproducible");
    CHECK(a.out == b.out);
    const auto c = run("count '<,<' --n 3 --format json");
    CHECK(nlohmann::json::parse(c.out).contains("timestamp"));
}

TEST_CASE("series") {
    auto r = run("series thm_1_3 --order 6");
    CHECK(r.status == 0);
    CHECK(r.out == "1 + z + 2*z^2 + 6*z^3 + 20*z^4 + 72*z^5 + 272*z^6\n");
    r = run("series catalan --order 4");
    CHECK(r.out == "1 + z + 2*z^2 + 5*z^3 + 14*z^4\n");
    r = run("series I_eq_le --order 5 --t 1");
    CHECK(r.out == "1 + z + 2*z^2 + 3*z^3 + 5*z^4 + 8*z^5\n");
    r = run("series I_eq_lt --order 2 --t 1/2 --format json --reproducible");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"][1] == "1/2");
    CHECK(run("series nope").status == 2);
}

TEST_CASE("classify") {
    auto r = run("classify --level wilf --nmax 10 --format json --reproducible");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["class_count"] == 30);
    CHECK(j["matches_reference"] == true);
    r = run("classify --level strong --nmax 10 --format json --reproducible");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["class_count"] == 31);
    r = run("classify --level strong --nmax 3");
    CHECK(r.status == 0);
}

TEST_CASE("verify and oeis-check") {
    auto r = run("verify table1");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS: table1") != std::string::npos);
    r = run("verify dist-symmetry --format json --reproducible");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["passed"] == true);
    CHECK(run("verify bogus").status == 2);

    r = run("oeis-check --id A071356 --format json --reproducible");
    CHECK(r.status == 0);
    {
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["results"][0]["match"] == true);
        CHECK(j["results"][0]["terms"] == 9);
    }
    CHECK(run("oeis-check --id A000085").status == 0);
    CHECK(run("oeis-check --id A200403").status == 0);
    CHECK(run("oeis-check --all").status == 0);
    CHECK(run("oeis-check").status == 2);
    CHECK(run("oeis-check --id A000001").status == 2);
}

TEST_CASE("bijection") {
    CHECK(run("bijection upsilon 00114").out == "42513\n");
    CHECK(run("bijection theta 42513").out == "01032\n");
    CHECK(run("bijection theta --inverse 01032").out == "42513\n");
    CHECK(run("bijection varphi 011344421").out == "ENEEN*N*ENEEENNN\n");
    const auto r = run("bijection dyck 001123 --format json --reproducible");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["input"] == "001123");
    CHECK(j["output"] == "EENEENENENNN");
    CHECK(run("bijection upsilon 012").status == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("").status == 2);
    CHECK(run("count 'x,y'").status == 2);
    CHECK(run("count '<,<' --n 5..2").status == 2);
    CHECK(run("count '>,<,-' --n 13").status == 3);
    CHECK(run("classify --nmax 11").status == 3);
    CHECK(run("--help").status == 0);
}
