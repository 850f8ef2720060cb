#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carpet/symbolic.hpp"

using namespace carpet;

namespace {

BiSequence random_seq(std::mt19937_64& gen, int base)
{
    auto digits = [&](int len) {
        std::vector<int> v(len);
        for (int& d : v) d = static_cast<int>(gen() % base);
        return v;
    };
    return BiSequence(base, digits(1 + gen() % 3), digits(1 + gen() % 4),
                      digits(1 + gen() % 3), digits(1 + gen() % 4));
}

}  // namespace

TEST_CASE("shift basics")
{
    auto c = BiSequence::constant(2, 0);
    CHECK(c.shifted() == c);

    auto p2 = BiSequence::periodic(2, {0, 1});
    CHECK(p2.shifted().shifted() == p2);
    CHECK(p2.shifted() != p2);

    // (...000; 1 0 0 0...) -> (...0001; 0 0 0...)
    BiSequence s(2, {}, {0}, {1}, {0});
    BiSequence t = s.shifted();
    CHECK(t.digit(0) == 1);
    CHECK(t.digit(1) == 0);
    CHECK(t.digit(-1) == 0);
    for (long i = 1; i <= 8; ++i) CHECK(t.digit(i) == s.digit(i + 1));
}

TEST_CASE("shift is invertible")
{
    std::mt19937_64 gen(3);
    for (int i = 0; i < 2000; ++i) {
        BiSequence s = random_seq(gen, 2 + static_cast<int>(gen() % 4));
        CHECK(s.shifted().shifted(true) == s);
        CHECK(s.shifted(true).shifted() == s);
    }
}

TEST_CASE("metric")
{
    auto p = BiSequence::periodic(2, {0, 1});
    CHECK(shift_dist(p, p) == 0);

    // differ first at index 4 (agree on 1..3 and on 0..-2): dist 2^-3
    BiSequence s(2, {}, {0}, {1, 1, 1, 0}, {0});
    BiSequence t(2, {}, {0}, {1, 1, 1, 1}, {0});
    CHECK(shift_dist(s, t) == rat(1, 8));

    // disagree at index 1
    BiSequence u(2, {}, {0}, {1}, {0});
    BiSequence v(2, {}, {0}, {0}, {0});
    CHECK(shift_dist(u, v) == 1);

    // symmetry and triangle inequality on random triples
    std::mt19937_64 gen(5);
    for (int i = 0; i < 500; ++i) {
        BiSequence a = random_seq(gen, 2), b = random_seq(gen, 2),
                   c = random_seq(gen, 2);
        CHECK(shift_dist(a, b) == shift_dist(b, a));
        CHECK(shift_dist(a, c) <= shift_dist(a, b) + shift_dist(b, c));
    }
}

TEST_CASE("cylinder measures")
{
    ProbabilityVector half({rat(1, 2), rat(1, 2)});
    CHECK(cylinder_measure(half, {}) == 1);
    CHECK(cylinder_measure(half, {0, 1, 1}) == rat(1, 8));

    ProbabilityVector skew({rat(1, 3), rat(2, 3)});
    CHECK(cylinder_measure(skew, {1, 1, 0}) == rat(4, 27));

    CHECK_THROWS(ProbabilityVector({rat(1, 2), rat(1, 3)}));
    CHECK_THROWS(ProbabilityVector({rat(3, 2), rat(-1, 2)}));
}

TEST_CASE("periodic enumeration")
{
    CHECK(enumerate_periodic(2, 1).size() == 2);
    CHECK(enumerate_periodic(2, 2).size() == 4);

    auto nine = enumerate_periodic(3, 2);
    CHECK(nine.size() == 9);
    for (const BiSequence& s : nine) CHECK(s.shifted().shifted() == s);

    // no duplicates
    for (size_t i = 0; i < nine.size(); ++i)
        for (size_t j = i + 1; j < nine.size(); ++j)
            CHECK(nine[i] != nine[j]);

    CHECK_THROWS_AS(enumerate_periodic(2, 30, 1 << 10), std::length_error);
}
