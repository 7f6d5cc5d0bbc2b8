#include <doctest.h>

#include "sedecim/arith.hpp"

using namespace sedecim;

TEST_CASE("powmod") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(13, 39, 157) == 156);
    CHECK(powmod(13, 15, 61) == 1);
    CHECK(powmod(5, 0, 7) == 1);
}

TEST_CASE("v2") {
    CHECK(v2(1) == 0);
    CHECK(v2(8) == 3);
    CHECK(v2(48) == 4);
    CHECK(v2(bigint("1208925819614629174706176")) == 80);  // 2^80
}

TEST_CASE("isqrt") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    bigint big("1000000000000000000");
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
}

TEST_CASE("is_probable_prime") {
    for (long p : {2L, 3L, 13L, 61L, 157L, 19993L}) CHECK(is_probable_prime(p));
    for (long n : {0L, 1L, 25L, 91L, 561L, 19987L}) CHECK_FALSE(is_probable_prime(n));
}

TEST_CASE("sqrt_mod") {
    auto r = sqrt_mod(bigint(-1), 13);
    REQUIRE(r.has_value());
    CHECK((*r == 5 || *r == 8));
    CHECK(mod_floor(*r * *r + 1, 13) == 0);

    auto rq = sqrt_mod(3, 13);
    REQUIRE(rq.has_value());
    CHECK((*rq == 4 || *rq == 9));

    CHECK_FALSE(sqrt_mod(2, 13).has_value());  // 13 = 5 mod 8
}

TEST_CASE("smallest_nonresidue") {
    CHECK(smallest_nonresidue(13) == 2);
    CHECK(smallest_nonresidue(17) == 3);  // 2 is a residue mod 17
    CHECK(smallest_nonresidue(5) == 2);
}

TEST_CASE("invmod") {
    CHECK(invmod(2, 13) == 7);
    CHECK(invmod(5, 7) == 3);
    bigint p(19993);
    for (long a : {2L, 3L, 19992L}) CHECK(mod_floor(invmod(a, p) * a, p) == 1);
}

TEST_CASE("factorize") {
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<bigint, int>{2, 3});
    CHECK(f[1] == std::pair<bigint, int>{3, 2});
    CHECK(f[2] == std::pair<bigint, int>{5, 1});

    auto g = factorize(157);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == std::pair<bigint, int>{157, 1});

    CHECK(factorize(1).empty());

    bigint semiprime = bigint(1000003) * 1000033;
    auto s = factorize(semiprime);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == std::pair<bigint, int>{1000003, 1});
    CHECK(s[1] == std::pair<bigint, int>{1000033, 1});
}

TEST_CASE("mod_floor") {
    CHECK(mod_floor(-7, 4) == 1);
    CHECK(mod_floor(7, 4) == 3);
    CHECK(mod_floor(-8, 4) == 0);
    CHECK(mod_floor(0, 5) == 0);
}
