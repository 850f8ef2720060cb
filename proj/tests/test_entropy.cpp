#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "carpet/entropy.hpp"

using namespace carpet;

TEST_CASE("bernoulli entropy")
{
    CHECK(bernoulli_entropy(ProbabilityVector({Rat(1)})) == 0);
    CHECK(std::abs(bernoulli_entropy(ProbabilityVector({rat(1, 2), rat(1, 2)})) -
                   std::log(2.0)) < 1e-14);
    CHECK(std::abs(bernoulli_entropy(ProbabilityVector(
                       {rat(1, 3), rat(1, 3), rat(1, 3)})) -
                   std::log(3.0)) < 1e-14);
    // 0 log 0 = 0
    CHECK(std::abs(bernoulli_entropy(ProbabilityVector({Rat(1), Rat(0)}))) <
          1e-14);
    // skewed vector: -1/4 log 1/4 - 3/4 log 3/4
    double h = bernoulli_entropy(ProbabilityVector({rat(1, 4), rat(3, 4)}));
    CHECK(std::abs(h - (0.25 * std::log(4.0) + 0.75 * std::log(4.0 / 3.0))) <
          1e-14);
}

TEST_CASE("entropy realization")
{
    auto r3 = realize_entropy(std::log(3.0), 1e-12);
    CHECK(r3.N == 3);
    for (const Rat& p : r3.P.p) CHECK(p == rat(1, 3));
    CHECK(std::abs(r3.achieved - std::log(3.0)) <= 1e-12);

    auto small = realize_entropy(0.01, 1e-9);
    CHECK(small.N == 2);
    CHECK(std::abs(small.achieved - 0.01) <= 1e-9);
    CHECK(small.P.p[0] > rat(9, 10));  // nearly all mass on one symbol

    auto mid = realize_entropy(2.5, 1e-9);
    CHECK(mid.N == 13);  // smallest N with log N >= 2.5
    CHECK(std::abs(mid.achieved - 2.5) <= 1e-9);
    CHECK(std::abs(bernoulli_entropy(mid.P) - 2.5) <= 1e-9);
}

TEST_CASE("exact shift spanning counts")
{
    // eps in [2^-3, 2^-2): a Bowen ball is a cylinder on n + 5 symbols
    CHECK(shift_spanning_exact(2, 1, 3) == mpz_class(64));
    CHECK(shift_spanning_exact(2, 4, 3) == mpz_class(512));
    CHECK(shift_spanning_exact(3, 2, 2) == mpz_class(243));
    // growth ratio is exactly the symbol count
    mpz_class a = shift_spanning_exact(2, 7, 4), b = shift_spanning_exact(2, 8, 4);
    CHECK(b == a * 2);
}

TEST_CASE("spanning bounds on sample sets")
{
    // single fixed point: spanning number 1 for every window
    auto zero_dist = [](long, long, int) { return 0.0; };
    for (int w : {1, 4, 9}) {
        auto sb = spanning_bounds(1, w, 0.125, zero_dist);
        CHECK(sb.lower == 1);
        CHECK(sb.upper == 1);
        CHECK(sb.exact);
    }

    // empty set
    auto sb0 = spanning_bounds(0, 3, 0.125, zero_dist);
    CHECK(sb0.upper == 0);

    // points on a line, static under the dynamics: cover count scales with eps
    auto line = [](long i, long j, int) { return std::abs(i - j) / 100.0; };
    auto sb = spanning_bounds(101, 2, 0.05, line);
    CHECK(sb.lower <= sb.upper);
    CHECK(sb.lower >= 5);
    CHECK(sb.upper <= 101);
    CHECK(sb.upper >= 9);
}

TEST_CASE("shift estimate converges to log 2")
{
    std::vector<int> windows = {4, 6, 8, 10, 12};
    auto est = shift_estimate(2, windows, 4);
    CHECK(std::abs(est.slope - std::log(2.0)) < 1e-12);
    CHECK(est.proxy_max >= std::log(2.0) - 1e-12);
}

TEST_CASE("factor chain estimates")
{
    auto chain = factor_chain_estimates(12, {2, 4, 6, 8}, 3);
    CHECK(std::abs(chain.shift.slope - std::log(2.0)) < 1e-12);
    // the quotient metric is dominated by the surface metric, so its
    // spanning counts are no larger
    REQUIRE(chain.surface.log_r.size() == chain.shift.log_r.size());
    for (size_t i = 0; i < chain.surface.log_r.size(); ++i) {
        CHECK(chain.quotient.log_r[i] <= chain.surface.log_r[i] + 1e-12);
    }
}
