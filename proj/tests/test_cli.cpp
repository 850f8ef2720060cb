// End-to-end checks of the command-line binary (path injected as CARPET_BIN).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args)
{
    std::string cmd = std::string(CARPET_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run("--definitely-not-a-flag").code == 2);
    CHECK(run("toral --matrix nonsense").code == 2);
    CHECK(run("hyperlocal --eps banana").code == 2);
}

TEST_CASE("toral subcommand")
{
    auto r = run("toral --matrix 2,1,1,1 --orbit 1/2,1/2 --steps 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"entropy\"") != std::string::npos);
    CHECK(r.out.find("(1/2, 0)") != std::string::npos);

    CHECK(run("toral --matrix 1,0,0,1").code != 0);  // not hyperbolic
}

TEST_CASE("entropy subcommand")
{
    auto r = run("entropy --system bernoulli --p 1/2,1/2");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.693") != std::string::npos);

    auto real = run("entropy --realize 2.5 --tol 1e-9");
    CHECK(real.code == 0);
    CHECK(real.out.find("\"N\": 13") != std::string::npos);
}

TEST_CASE("quotient subcommand")
{
    auto r = run("quotient --base 2 --catalog-depth 3 --fiber 1/3,2/5");
    CHECK(r.code == 0);
    CHECK(r.out.find("branch_catalog") != std::string::npos);
    CHECK(r.out.find("fiber") != std::string::npos);
}

TEST_CASE("hyperlocal subcommand")
{
    auto r = run("hyperlocal --lambda 2 --eps 1/10 --samples 50 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"bound_holds\": true") != std::string::npos);
}

TEST_CASE("invlim falsifiers")
{
    auto r = run("invlim --spec-falsify --resolution 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"survivors\": 0") != std::string::npos);
    CHECK(r.out.find("not a proof") != std::string::npos);
}

TEST_CASE("plot emits SVG")
{
    auto r = run("plot --kind identification --base 2 --svg-out /tmp/carpet_ident.svg");
    CHECK(r.code == 0);
    FILE* f = fopen("/tmp/carpet_ident.svg", "r");
    REQUIRE(f != nullptr);
    char head[6] = {0};
    REQUIRE(fread(head, 1, 4, f) == 4);
    fclose(f);
    CHECK(std::string(head) == "<svg");
}

TEST_CASE("seeded reports are byte-identical across runs")
{
    const std::string args = "hyperlocal --lambda 2 --eps 1/10 --samples 40 --seed 5";
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
