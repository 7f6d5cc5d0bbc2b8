#include <doctest.h>

#include <set>

#include "sedecim/ideals.hpp"
#include "sedecim/normform.hpp"

using namespace sedecim;

namespace {
const MqElement kW13(0, 1, 1, -2);  // norm 13 over q = 3
}

TEST_CASE("principal ideal lattices") {
    QContext c3(3);
    CHECK(IdealLattice::principal(c3, MqElement::from_int(2)).det() == 16);
    CHECK(IdealLattice::principal(c3, kW13).det() == 13);
    CHECK(IdealLattice::principal(c3, MqElement::from_int(1)).det() == 1);
}

TEST_CASE("from_rows rejects rank deficiency") {
    std::vector<std::array<bigint, 4>> rows = {
        {bigint(1), bigint(0), bigint(0), bigint(0)},
        {bigint(0), bigint(1), bigint(0), bigint(0)},
        {bigint(1), bigint(1), bigint(0), bigint(0)},
    };
    CHECK_THROWS_AS(IdealLattice::from_rows(rows), std::invalid_argument);
}

TEST_CASE("ideal multiplication matches element multiplication") {
    QContext c3(3);
    MqElement a(2, 1, 0, 1), b(1, -1, 2, 0);
    IdealLattice prod = ideal_mul(c3, IdealLattice::principal(c3, a), IdealLattice::principal(c3, b));
    CHECK(prod == IdealLattice::principal(c3, mq_mul(c3, a, b)));
}

TEST_CASE("coprimality of ideals") {
    QContext c3(3);
    auto p13 = primes_above(c3, 13);
    auto p17 = primes_above(c3, 17);
    CHECK(ideal_sum_coprime(p13[0].lattice, p17[0].lattice));
    CHECK_FALSE(ideal_sum_coprime(p13[0].lattice, p13[0].lattice));
}

TEST_CASE("residue field arithmetic") {
    ResidueField F(13, 2, 2);
    CHECK(F.size_minus_one() == 168);
    CHECK(F.make(-1, 0) == Fp2Element{12, 0});
    CHECK(F.mul(F.make(0, 1), F.make(0, 1)) == F.make(2, 0));  // theta^2 = 2
    Fp2Element x = F.make(3, 5);
    CHECK(F.pow(x, 168) == F.make(1, 0));
    CHECK(F.pow(x, 3) == F.mul(x, F.mul(x, x)));
}

TEST_CASE("splitting of p in O_{M_3}: four cases") {
    QContext c3(3);

    auto split = primes_above(c3, 13);  // (-1/13) = (3/13) = 1
    REQUIRE(split.size() == 4);
    for (const auto& P : split) {
        CHECK(P.f == 1);
        CHECK(P.lattice.det() == 13);
        CHECK(P.s_i.b == 0);
        CHECK(P.s_q.b == 0);
    }

    auto gauss = primes_above(c3, 17);  // (-1/17) = 1, (3/17) = -1
    REQUIRE(gauss.size() == 2);
    for (const auto& P : gauss) {
        CHECK(P.f == 2);
        CHECK(P.lattice.det() == 17 * 17);
        CHECK(P.s_i.b == 0);
        CHECK(P.s_q.b != 0);
    }

    auto real = primes_above(c3, 11);  // (-1/11) = -1, (3/11) = 1
    REQUIRE(real.size() == 2);
    for (const auto& P : real) {
        CHECK(P.f == 2);
        CHECK(P.s_i.b != 0);
        CHECK(P.s_q.b == 0);
    }

    auto imag = primes_above(c3, 7);  // (-1/7) = (3/7) = -1
    REQUIRE(imag.size() == 2);
    for (const auto& P : imag) {
        CHECK(P.f == 2);
        CHECK(P.s_i.b != 0);
        CHECK(P.s_q.b != 0);
    }
}

TEST_CASE("residue reduction at a fixed prime of 13") {
    QContext c3(3);
    bool found = false;
    for (const auto& P : primes_above(c3, 13)) {
        if (!(P.s_i == Fp2Element{5, 0} && P.s_q == Fp2Element{4, 0})) continue;
        found = true;
        CHECK(P.s_w == Fp2Element{4, 0});  // (1 + 5*4)/2 = 4 mod 13
        CHECK(residue_reduce(MqElement(2, 3, 0, 0), P) == Fp2Element{4, 0});  // 2 + 3*5 = 17
    }
    CHECK(found);
}

TEST_CASE("valuations locate the prime of a generator") {
    QContext c3(3);
    auto primes = primes_above(c3, 13);
    int at_one = 0;
    for (const auto& P : primes) {
        int v = valuation(c3, kW13, P);
        CHECK(P.lattice.contains(kW13) == (v >= 1));
        CHECK((residue_reduce(kW13, P) == Fp2Element{0, 0}) == (v >= 1));
        if (v == 1) ++at_one;
        CHECK(valuation(c3, MqElement::from_int(13), P) == 1);
    }
    CHECK(at_one == 1);
}

TEST_CASE("find_generator on all four splitting branches") {
    QContext c3(3);
    for (long p : {13L, 61L}) {  // f = 1
        for (const auto& P : primes_above(c3, p)) {
            MqElement w = find_generator(c3, P);
            CHECK(norm_to_q(c3, w) == p);
            CHECK(valuation(c3, w, P) == 1);
        }
    }
    for (long p : {17L, 11L, 7L}) {  // f = 2: Gaussian, real, imag branches
        auto P = primes_above(c3, p)[0];
        MqElement w = find_generator(c3, P);
        CHECK(norm_to_q(c3, w) == bigint(p) * p);
        CHECK(valuation(c3, w, P) == 1);
        CHECK(residue_reduce(w, P) == Fp2Element{0, 0});
    }
}

TEST_CASE("factor_principal") {
    QContext c3(3);

    auto f13 = factor_principal(c3, MqElement::from_int(13));
    CHECK(f13.size() == 4);
    for (const auto& [P, e] : f13) {
        CHECK(P.p == 13);
        CHECK(e == 1);
    }

    auto f5 = factor_principal(c3, MqElement::from_int(5));
    CHECK(f5.size() == 2);
    for (const auto& [P, e] : f5) {
        CHECK(P.f == 2);
        CHECK(e == 1);
    }

    auto mixed = factor_principal(c3, mq_mul(c3, kW13, MqElement::from_int(5)));
    CHECK(mixed.size() == 3);  // the prime of w13 and both primes above 5

    CHECK_THROWS_AS(factor_principal(c3, MqElement::from_int(2)), std::invalid_argument);
    CHECK_THROWS_AS(factor_principal(c3, MqElement::from_int(3)), std::invalid_argument);
}
