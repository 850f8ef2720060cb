#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "carpet/toral.hpp"

using namespace carpet;

TEST_CASE("construction accepts hyperbolic matrices only")
{
    CHECK_NOTHROW(ToralAuto(2, 1, 1, 1));
    CHECK_NOTHROW(ToralAuto(1, 1, 1, 2));
    CHECK_NOTHROW(ToralAuto(0, 1, 1, 1));   // det -1, trace 1
    CHECK_THROWS(ToralAuto(1, 1, 0, 1));    // parabolic shear
    CHECK_THROWS(ToralAuto(0, -1, 1, 0));   // rotation, eigenvalues on circle
    CHECK_THROWS(ToralAuto(1, 0, 0, 1));    // identity
    CHECK_THROWS(ToralAuto(2, 0, 0, 2));    // det 4
    CHECK_THROWS(ToralAuto(0, 1, 1, 0));    // det -1, trace 0
}

TEST_CASE("cat map basics")
{
    auto A = ToralAuto::cat();
    CHECK(A.apply(TorusPoint(rat(1, 2), rat(1, 2))) ==
          TorusPoint(rat(1, 2), 0));
    CHECK(A.apply(TorusPoint(0, 0)) == TorusPoint(0, 0));

    CHECK(A.discriminant() == 5);
    // lambda = (3 + sqrt 5)/2, root of x^2 - 3x + 1
    QuadVal l = A.leading_eigenvalue();
    CHECK(l * l - l * QuadVal(Rat(3), 5) + QuadVal(Rat(1), 5) ==
          QuadVal(Rat(0), 5));
    CHECK(std::abs(A.entropy() - std::log((3 + std::sqrt(5.0)) / 2)) < 1e-12);
}

TEST_CASE("round trips")
{
    std::mt19937_64 gen(41);
    std::vector<ToralAuto> mats = {ToralAuto::cat(), ToralAuto(1, 1, 1, 2),
                                   ToralAuto(3, 2, 4, 3), ToralAuto(0, 1, 1, 1)};
    for (const ToralAuto& A : mats)
        for (int i = 0; i < 500; ++i) {
            long q = 1 + static_cast<long>(gen() % 500);
            TorusPoint z(rat(static_cast<long>(gen() % q), q),
                         rat(static_cast<long>(gen() % q), q));
            CHECK(A.apply(A.apply(z), true) == z);
            CHECK(A.apply(A.apply(z, true)) == z);
        }
}

TEST_CASE("eigendirections")
{
    auto A = ToralAuto::cat();
    QuadVec e = A.expanding_direction(), c = A.contracting_direction();
    QuadVal l = A.leading_eigenvalue();
    // A e = lambda e, A c = (1/lambda with sign) c: check eigen property
    CHECK(A.apply_vec(e).cross(e) == QuadVal(Rat(0), 5));
    CHECK(A.apply_vec(c).cross(c) == QuadVal(Rat(0), 5));
    CHECK(e.cross(c).sgn() != 0);  // independent
    // expanding really expands: |A e| component along e is lambda > 1
    CHECK(A.apply_vec(e).dot(e).sgn() > 0);
    CHECK((A.apply_vec(e).dot(e) - e.dot(e)).sgn() > 0);
    CHECK((c.dot(c) - A.apply_vec(c).dot(A.apply_vec(c))).sgn() > 0);
    (void)l;
}

TEST_CASE("pillowcase")
{
    TorusPoint z(rat(1, 3), rat(2, 5));
    TorusPoint m(rat(2, 3), rat(3, 5));
    CHECK(pillowcase(z) == pillowcase(m));
    auto fib = pillowcase_fiber(z);
    REQUIRE(fib.size() == 2);
    CHECK(((fib[0] == z && fib[1] == m) || (fib[0] == m && fib[1] == z)));

    auto branch = pillowcase_branch_points();
    REQUIRE(branch.size() == 4);
    std::set<TorusPoint> seen;
    for (const TorusPoint& b : branch) {
        CHECK(pillowcase_fiber(b).size() == 1);
        CHECK((b.x == 0 || b.x == rat(1, 2)));
        CHECK((b.y == 0 || b.y == rat(1, 2)));
        seen.insert(b);
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("periodic points of the cat map")
{
    auto A = ToralAuto::cat();

    auto fixed = periodic_points(A, 1);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0].period() == 1);
    CHECK(fixed[0].points[0] == TorusPoint(0, 0));

    // q = 5: origin plus 24 nonzero points split into orbits
    auto orbs = periodic_points(A, 5);
    long total = 0;
    for (const TorusOrbit& o : orbs) {
        total += o.period();
        // each orbit is consistent and returns to its start
        TorusPoint z = o.points.front();
        for (int i = 0; i < o.period(); ++i) {
            CHECK(o.points[i] == z);
            z = A.apply(z);
        }
        CHECK(z == o.points.front());
    }
    CHECK(total == 25);
    long nonzero = 0;
    for (const TorusOrbit& o : orbs)
        for (const TorusPoint& p : o.points)
            if (p != TorusPoint(0, 0)) ++nonzero;
    CHECK(nonzero == 24);

    // non-branch orbits avoid the pillowcase branch set
    for (const TorusOrbit& o : non_branch_orbits(A, 5))
        for (const TorusPoint& p : o.points)
            for (const TorusPoint& b : pillowcase_branch_points())
                CHECK(pillowcase(p) != pillowcase(b));
}
