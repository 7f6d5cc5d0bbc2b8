#pragma once

#include "sedecim/arith.hpp"
#include "sedecim/ideals.hpp"
#include "sedecim/mq.hpp"

namespace sedecim {

/** Value of a quadratic or quartic residue symbol: mu_4 together with 0. */
enum class SymbolValue { ZERO, ONE, MINUS_ONE, I, MINUS_I };

SymbolValue sym_mul(SymbolValue x, SymbolValue y);
SymbolValue sym_pow(SymbolValue x, unsigned long e);
SymbolValue sym_inverse(SymbolValue x);  // x nonzero
SymbolValue sym_conj(SymbolValue x);     // the automorphism i -> -i
/** ONE/MINUS_ONE/ZERO as +1/-1/0; throws on imaginary values. */
int sym_to_sign(SymbolValue x);
const char* sym_name(SymbolValue x);

/** Standard Jacobi symbol (a/n), n odd and positive. */
int jacobi(const bigint& a, const bigint& n);

/** The smaller square root of -1 mod p, fixing the mu_4 labelling mod p. */
bigint canonical_sqrt_minus_one(const bigint& p);

/**
 * Rational quartic residue symbol a^((p-1)/4) mod p matched against
 * {1, -1, s_i, -s_i}; the +-1 outcomes do not depend on the choice of s_i.
 */
SymbolValue quartic_rational(const bigint& a, const bigint& p, const bigint& s_i);
SymbolValue quartic_rational(const bigint& a, const bigint& p);  // canonical s_i

/** n-th power residue symbol (n in {2,4}) of a at the prime P of O_{M_q}. */
SymbolValue power_residue_prime(const QContext& ctx, const MqElement& a, const PrimeIdeal& P,
                                int n);

/** Symbol at the principal ideal (b): product over the factorization of (b). */
SymbolValue power_residue(const QContext& ctx, const MqElement& a, const MqElement& b, int n);

/** A degree-1 prime of a quadratic subfield: kernel of the map sending the
 *  subfield generator (i, sqrt q or w) to s mod p. */
struct SubfieldPrime {
    Subfield k;
    bigint p;
    bigint s;
};

/** The primes of O_{M_q} above a subfield prime. */
std::vector<PrimeIdeal> primes_above_subfield(const QContext& ctx, const SubfieldPrime& P);

/**
 * For b with b = psi(b) mod P O_{M_q} (psi generating Gal(M_q/K)), a subfield
 * element congruent to b modulo P O_{M_q}.
 */
QuadElement descend_to_subfield(const QContext& ctx, const MqElement& b, const SubfieldPrime& P);

enum class LoweringMode { SPLIT, INERT };

/**
 * Checks the lowering identity at a degree-1 prime of Q(i) over p = 1 mod 4:
 * SPLIT ((q/p)=1): (alpha / P O_{M_q})_4 = (alpha / P)_2;
 * INERT ((q/p)=-1): (alpha / P O_{M_q})_4 = (alpha / P)_2^((p+1)/2);
 * on `samples` random alpha in Z[i].  Mode must match the actual splitting.
 */
bool lowering_check(const QContext& ctx, const bigint& p, const bigint& s_i, LoweringMode mode,
                    int samples, unsigned seed);

/** The unit mu with (a/b)_4 = mu * (b/a)_4, for odd coprime a, b. */
SymbolValue reciprocity_ratio(const QContext& ctx, const MqElement& a, const MqElement& b);

}  // namespace sedecim
