#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sedecim/arith.hpp"
#include "sedecim/mq.hpp"

namespace sedecim {

/**
 * IdealLattice: a nonzero ideal of O_{M_q} as the row span of a 4x4
 * upper-triangular Hermite-normal-form matrix over the basis {1, i, w, iw}.
 * det(hnf) is the absolute norm of the ideal.
 */
class IdealLattice {
public:
    /** HNF of the Z-module spanned by the given coordinate rows; needs full rank. */
    static IdealLattice from_rows(std::vector<std::array<bigint, 4>> rows);
    /** The principal ideal (a), a != 0. */
    static IdealLattice principal(const QContext& ctx, const MqElement& a);

    const std::array<std::array<bigint, 4>, 4>& rows() const { return _m; }
    bigint det() const { return _m[0][0] * _m[1][1] * _m[2][2] * _m[3][3]; }
    bool contains(const MqElement& a) const;

    bool operator==(const IdealLattice& o) const { return _m == o._m; }

private:
    std::array<std::array<bigint, 4>, 4> _m;
};

/** Product ideal AB: HNF of the pairwise products of the basis rows. */
IdealLattice ideal_mul(const QContext& ctx, const IdealLattice& A, const IdealLattice& B);

/** True iff A + B = (1), i.e. the HNF of the union has determinant 1. */
bool ideal_sum_coprime(const IdealLattice& A, const IdealLattice& B);

/**
 * Fp2Element: an element a + b*theta of F_p[theta]/(theta^2 - d); residue
 * fields with f = 1 simply keep b = 0.
 */
struct Fp2Element {
    bigint a, b;
    bool operator==(const Fp2Element&) const = default;
};

/** Residue field F_{p^f}, f in {1,2}, with theta^2 = d (d unused when f=1). */
class ResidueField {
public:
    ResidueField(bigint p, int f, bigint d);

    const bigint& p() const { return _p; }
    int f() const { return _f; }
    const bigint& d() const { return _d; }
    bigint size_minus_one() const;  // p^f - 1

    Fp2Element make(const bigint& a, const bigint& b) const;
    Fp2Element add(const Fp2Element& x, const Fp2Element& y) const;
    Fp2Element mul(const Fp2Element& x, const Fp2Element& y) const;
    Fp2Element pow(const Fp2Element& x, const bigint& e) const;
    bool is_zero(const Fp2Element& x) const { return x.a == 0 && x.b == 0; }

private:
    bigint _p;
    int _f;
    bigint _d;
};

/**
 * PrimeIdeal: a prime of O_{M_q} above an odd rational prime p coprime to 2q,
 * carried as the residue images (s_i, s_q, s_w) of i, sqrt q, w together with
 * the HNF lattice of its kernel.
 */
struct PrimeIdeal {
    bigint p;
    int f;  // residue degree, 1 or 2
    ResidueField field;
    Fp2Element s_i, s_q, s_w;
    IdealLattice lattice;
};

/** All primes of O_{M_q} above p: four with f=1 if p splits completely, else two with f=2. */
std::vector<PrimeIdeal> primes_above(const QContext& ctx, const bigint& p);

/** The ring homomorphism O_{M_q} -> F_{p^f} determined by (s_i, s_w). */
Fp2Element residue_reduce(const MqElement& a, const PrimeIdeal& P);

/** Largest k with a in P^k (a != 0). */
int valuation(const QContext& ctx, const MqElement& a, const PrimeIdeal& P);

/**
 * A generator of P.  Degree-1 primes are found by enumerating the lattice
 * under a unit-balanced positive form of radius ~4 sqrt p; degree-2 primes
 * descend to the quadratic subfield fixed by their decomposition group.
 * Every returned element is verified exactly (norm p^f and reduction 0).
 */
MqElement find_generator(const QContext& ctx, const PrimeIdeal& P);

/** Prime factorization of (a) for a with norm odd and coprime to q. */
std::vector<std::pair<PrimeIdeal, int>> factor_principal(const QContext& ctx, const MqElement& a);

}  // namespace sedecim
