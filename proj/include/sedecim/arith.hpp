#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sedecim {

using bigint = mpz_class;

/** b^e mod m for e >= 0, m > 0. */
bigint powmod(const bigint& base, const bigint& exp, const bigint& mod);

/** 2-adic valuation of n != 0. */
int v2(const bigint& n);

/** Floor square root of n >= 0. */
bigint isqrt(const bigint& n);

/** Baillie-PSW plus Miller-Rabin rounds, as exposed by GMP. */
bool is_probable_prime(const bigint& n);

/** Square root of a mod odd prime p, or nullopt if a is a non-residue. */
std::optional<bigint> sqrt_mod(const bigint& a, const bigint& p);

/** Smallest quadratic non-residue mod odd prime p. */
bigint smallest_nonresidue(const bigint& p);

/** Inverse of a mod m, gcd(a, m) = 1. */
bigint invmod(const bigint& a, const bigint& m);

/** Prime factorization of n > 0, trial division then Brent rho, sorted. */
std::vector<std::pair<bigint, int>> factorize(const bigint& n);

/** Representative of x mod m in [0, m). */
bigint mod_floor(const bigint& x, const bigint& m);

}  // namespace sedecim
