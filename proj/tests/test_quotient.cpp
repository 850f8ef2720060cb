#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carpet/quotient.hpp"

using namespace carpet;

TEST_CASE("rotation is an involution commuting with the baker map")
{
    std::mt19937_64 gen(31);
    for (int i = 0; i < 1500; ++i) {
        int base = 2 + static_cast<int>(gen() % 4);
        long q = 2 + static_cast<long>(gen() % 300);
        Rat x = rat(static_cast<long>(gen() % (q + 1)), q);
        Rat y = rat(static_cast<long>(gen() % (q + 1)), q);
        auto z = cn_canonicalize(base, x, y);
        CHECK(cn_rotate(cn_rotate(z)) == z);
        CHECK(cn_rotate(baker(z)) == baker(cn_rotate(z)));
    }

    auto sing = cn_canonicalize(2, 0, 0);
    CHECK(cn_rotate(sing) == sing);
}

TEST_CASE("quotient classes and fibers")
{
    // interior non-fixed point: fiber of size two
    auto q = qn_from_square(2, rat(1, 3), rat(2, 5));
    CHECK(!q.branch);
    auto fib = qn_fiber(q);
    REQUIRE(fib.size() == 2);
    CHECK(fib[0] != fib[1]);
    CHECK(cn_rotate(fib[0]) == fib[1]);

    // both preimages give the same quotient class
    CHECK(qn_from_square(2, rat(2, 3), rat(3, 5)) == q);

    // the center is fixed: fiber of size one
    auto c = qn_from_square(2, rat(1, 2), rat(1, 2));
    CHECK(c.branch);
    CHECK(qn_fiber(c).size() == 1);
}

TEST_CASE("induced map is well defined and invertible")
{
    std::mt19937_64 gen(37);
    for (int i = 0; i < 1500; ++i) {
        int base = 2 + static_cast<int>(gen() % 4);
        long den = 2 + static_cast<long>(gen() % 300);
        Rat x = rat(static_cast<long>(gen() % (den + 1)), den);
        Rat y = rat(static_cast<long>(gen() % (den + 1)), den);
        auto q = qn_from_square(base, x, y);
        auto w = qn_apply(q);
        CHECK(qn_apply(w, true) == q);
        // projection of the surface image agrees
        CHECK(w == qn_canonicalize(baker(cn_canonicalize(base, x, y))));
    }
}

TEST_CASE("interval constants")
{
    CHECK(interval_length_I(2, 1) == rat(3, 2));
    CHECK(interval_length_I(2, 2) == rat(3, 4));
    CHECK(interval_length_I(3, 2) == rat(4, 9));
    CHECK(interval_length_J(2, 1) == rat(1, 2));
    CHECK(interval_length_J(3, 1) == rat(2, 3));
    CHECK(interval_length_J(2, 2) == rat(3, 4));
    for (int n = 2; n <= 5; ++n)
        for (int j = 2; j <= 8; ++j)
            CHECK(interval_length_I(n, j) == interval_length_J(n, j));
}

TEST_CASE("branch catalog")
{
    for (int base : {2, 3, 4}) {
        auto cat = branch_catalog(base, 5);
        CHECK(cat.size() >= 2 + 2 * 5);
        for (const QnPoint& q : cat) {
            CHECK(q.branch);
            CHECK(qn_fiber(q).size() == 1);
            // every catalog entry is fixed by the involution by construction;
            // branch_catalog itself throws if not, so just apply the map and
            // check the image is still a valid class
            (void)qn_apply(q);
        }

        // the center and the singular class are present
        bool has_center = false, has_sing = false;
        for (const QnPoint& q : cat) {
            if (q.rep.kind == CnPoint::Kind::Singular) has_sing = true;
            if (q.rep.kind == CnPoint::Kind::Interior &&
                q.rep.xr() == rat(1, 2) && q.rep.yr() == rat(1, 2))
                has_center = true;
        }
        CHECK(has_center);
        CHECK(has_sing);
    }

    // side-interval midpoints are in the catalog
    auto cat2 = branch_catalog(2, 4);
    auto mid_I1 = qn_from_square(2, 0, interval_length_I(2, 1) / 2);
    bool found = false;
    for (const QnPoint& q : cat2) found |= q == mid_I1;
    CHECK(found);

    // off-midpoint side points are not fixed
    auto off = qn_from_square(2, 0, rat(5, 8));
    CHECK(!off.branch);
    CHECK(qn_fiber(off).size() == 2);
}

TEST_CASE("quotient metric")
{
    auto a = qn_from_square(2, rat(1, 4), rat(1, 4));
    auto b = qn_from_square(2, rat(3, 4), rat(3, 4));
    CHECK(a == b);
    CHECK(qn_dist2(a, b) == 0);

    auto c = qn_from_square(2, rat(1, 4), rat(3, 4));
    CHECK(qn_dist2(a, c) <= cn_dist2(cn_canonicalize(2, rat(1, 4), rat(1, 4)),
                                     cn_canonicalize(2, rat(1, 4), rat(3, 4))));
    CHECK(qn_dist2(a, c) > 0);
}
