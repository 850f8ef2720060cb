#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carpet/chamanara.hpp"

using namespace carpet;

TEST_CASE("canonicalization")
{
    auto z = cn_canonicalize(2, rat(1, 3), rat(2, 5));
    CHECK(z.kind == CnPoint::Kind::Interior);
    CHECK(z.xr() == rat(1, 3));
    CHECK(z.yr() == rat(2, 5));

    // left side point and its glued right partner land in the same class
    auto left = cn_canonicalize(2, 0, rat(3, 4));    // on I_1 = {0} x [1/2, 1]
    auto right = cn_canonicalize(2, 1, rat(1, 4));
    CHECK(left.kind == CnPoint::Kind::SideI);
    CHECK(left.k == 1);
    CHECK(left == right);

    // corners and the points (0, 1/n^k) form one class
    CHECK(cn_canonicalize(2, 0, 0).kind == CnPoint::Kind::Singular);
    CHECK(cn_canonicalize(2, 1, 1) == cn_canonicalize(2, 0, 0));
    CHECK(cn_canonicalize(2, 0, rat(1, 4)) == cn_canonicalize(2, 0, 0));
    CHECK(cn_canonicalize(2, rat(1, 8), 0) == cn_canonicalize(2, 0, 0));
}

TEST_CASE("class members")
{
    auto z = cn_canonicalize(2, rat(1, 3), rat(2, 5));
    auto mem = cn_class_members(z);
    REQUIRE(mem.size() == 1);
    CHECK(mem[0] == std::make_pair(rat(1, 3), rat(2, 5)));

    auto side = cn_canonicalize(2, 0, rat(3, 4));
    auto pair = cn_class_members(side);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].first == 0);
    CHECK(pair[1].first == 1);

    auto sing = cn_class_members(cn_canonicalize(3, 0, 0), 2);
    CHECK(sing.size() == 4 + 2 * 4);
    for (const auto& [x, y] : sing)
        CHECK(cn_canonicalize(3, x, y).kind == CnPoint::Kind::Singular);
}

TEST_CASE("baker map")
{
    // (1/3, 2/5) -> (2/3, 1/5) for n = 2
    auto z = cn_canonicalize(2, rat(1, 3), rat(2, 5));
    auto w = baker(z);
    CHECK(w == cn_canonicalize(2, rat(2, 3), rat(1, 5)));
    CHECK(baker(w, true) == z);

    // singular class is fixed
    auto sing = cn_canonicalize(2, 0, 0);
    CHECK(baker(sing) == sing);
    CHECK(baker(sing, true) == sing);

    // invertibility on random points, several bases
    std::mt19937_64 gen(23);
    for (int i = 0; i < 1500; ++i) {
        int base = 2 + static_cast<int>(gen() % 4);
        long q = 2 + static_cast<long>(gen() % 400);
        Rat x = rat(static_cast<long>(gen() % (q + 1)), q);
        Rat y = rat(static_cast<long>(gen() % (q + 1)), q);
        auto p = cn_canonicalize(base, x, y);
        CHECK(baker(baker(p), true) == p);
        CHECK(baker(baker(p, true)) == p);
    }
}

TEST_CASE("factor map")
{
    // right part 1,0,1,0,... left all 0 -> the class of (2/3, 0) on J_1
    BiSequence s(2, {}, {0}, {}, {1, 0});
    auto z = factor_map(s);
    CHECK(z == cn_canonicalize(2, rat(2, 3), 0));
    CHECK(z.kind == CnPoint::Kind::SideJ);
    // the glued partner is (1/6, 1)
    auto mem = cn_class_members(z);
    REQUIRE(mem.size() == 2);
    CHECK(mem[1] == std::make_pair(rat(1, 6), Rat(1)));

    // all-zero sequence maps to the singular class
    CHECK(factor_map(BiSequence::constant(2, 0)).kind ==
          CnPoint::Kind::Singular);
}

TEST_CASE("semiconjugacy on random eventually periodic sequences")
{
    std::mt19937_64 gen(29);
    for (int i = 0; i < 3000; ++i) {
        int base = 2 + static_cast<int>(gen() % 4);
        auto digits = [&](int len) {
            std::vector<int> v(len);
            for (int& d : v) d = static_cast<int>(gen() % base);
            return v;
        };
        BiSequence s(base, digits(1 + gen() % 3), digits(1 + gen() % 3),
                     digits(1 + gen() % 3), digits(1 + gen() % 3));
        CHECK(check_semiconjugacy(s).ok);
    }
}

TEST_CASE("metric")
{
    auto a = cn_canonicalize(2, rat(1, 4), rat(1, 4));
    auto b = cn_canonicalize(2, rat(1, 2), rat(1, 4));
    CHECK(cn_dist2(a, a) == 0);
    CHECK(cn_dist2(a, b) == rat(1, 16));

    // gluing shortens distances: a side class is near interior points on
    // either glued edge
    auto side = cn_canonicalize(2, 0, rat(3, 4));  // members (0,3/4), (1,1/4)
    auto near_right = cn_canonicalize(2, rat(99, 100), rat(1, 4));
    CHECK(cn_dist2(side, near_right) == rat(1, 10000));
}

TEST_CASE("periodic density witnesses")
{
    auto sing = cn_canonicalize(2, 0, 0);
    auto w = periodic_density_witness(sing, rat(1, 1000), 4);
    REQUIRE(w.has_value());
    CHECK(w->point == sing);

    auto c3 = cn_canonicalize(3, rat(1, 2), rat(1, 2));
    auto w3 = periodic_density_witness(c3, rat(1, 27), 6);
    REQUIRE(w3.has_value());
    CHECK(w3->period <= 6);
    CHECK(cn_dist2(w3->point, c3) <= rat(1, 27) * rat(1, 27));

    // the witness really is periodic
    auto z = w3->point;
    for (int i = 0; i < w3->period; ++i) z = baker(z);
    CHECK(z == w3->point);
}
