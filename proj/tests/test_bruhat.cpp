#include <doctest.h>

#include <random>

#include "thetalift/bruhat.hpp"

using namespace thetalift;

namespace {
Mat2Q mq(long long a, long long b, long long c, long long d) {
    return Mat2Q(Rat(a), Rat(b), Rat(c), Rat(d));
}
}  // namespace

TEST_CASE("weyl element factors through the five-factor formula") {
    auto f = bruhat_factor(mq(0, 1, 1, 0));
    REQUIRE(f.factors.size() == 5);
    CHECK(f.factors[0].kind == BruhatFactor::Kind::Unipotent);
    CHECK(f.factors[0].u == Rat(0));
    CHECK(f.factors[1].d1 == Rat(1));
    CHECK(f.factors[1].d2 == Rat(1));
    CHECK(f.factors[2].kind == BruhatFactor::Kind::Weyl);
    CHECK(f.factors[3].u == Rat(0));
    CHECK(f.factors[4].d2 == Rat(1));
    CHECK(f.product() == mq(0, 1, 1, 0));
}

TEST_CASE("borel case") {
    auto f = bruhat_factor(mq(2, 3, 0, 1));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].kind == BruhatFactor::Kind::Unipotent);
    CHECK(f.factors[0].u == Rat(3));
    CHECK(f.factors[1].d1 == Rat(2));
    CHECK(f.factors[1].d2 == Rat(1));
    CHECK(f.product() == mq(2, 3, 0, 1));
}

TEST_CASE("generic matrix reconstructs exactly") {
    auto f = bruhat_factor(mq(1, 2, 3, 4));
    REQUIRE(f.factors.size() == 5);
    CHECK(f.factors[0].u == Rat(1, 3));
    CHECK(f.factors[1].d2 == Rat(3));
    CHECK(f.factors[3].u == Rat(2));        // -d/det = -4/-2
    CHECK(f.factors[4].d2 == Rat(2, 3));    // -det/c = 2/3
    CHECK(f.product() == mq(1, 2, 3, 4));
}

TEST_CASE("exact reconstruction on 1000 random rational matrices") {
    std::mt19937_64 rng(2024);
    auto r = [&] {
        long long num = (long long)(rng() % 19) - 9;
        long long den = 1 + (long long)(rng() % 4);
        return Rat(num, den);
    };
    int done = 0;
    while (done < 1000) {
        Mat2Q g(r(), r(), r(), r());
        if (g.det().is_zero()) continue;
        auto f = bruhat_factor(g);
        CHECK(f.product() == g);
        CHECK((g.c.is_zero() ? f.factors.size() == 2 : f.factors.size() == 5));
        ++done;
    }
    CHECK_THROWS_AS(bruhat_factor(mq(1, 2, 2, 4)), SingularMatrix);
}
