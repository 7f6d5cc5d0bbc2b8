#pragma once

#include "sedecim/arith.hpp"
#include "sedecim/mq.hpp"

namespace sedecim {

/**
 * Solve u^2 - q v^2 = p for p an odd prime with (q/p) = 1, p != q, by
 * reducing the indefinite form (p, 2r, (r^2-q)/p) of discriminant 4q while
 * tracking the transformation.  Returns u + v sqrt q with v >= 0; u may be
 * negative and no residue normalization is applied.
 */
QuadElement solve_norm_equation(int q, const bigint& p);

/** Minimal-v brute force solution of u^2 - q v^2 = p, for cross-checks. */
QuadElement solve_norm_brute(int q, const bigint& p);

/**
 * Like solve_norm_equation but stops at leading coefficient +-1, returning
 * u + v sqrt q with u^2 - q v^2 = +-p.  Primes with (-1/p) = -1 lie outside
 * the principal genus of x^2 - q y^2 and only the -p sign is attainable.
 */
QuadElement solve_real_prime(int q, const bigint& p);

/**
 * Solve 4p = s^2 + q t^2 for p prime with (-q/p) = 1, via Gauss reduction
 * of the definite form (p, b0, (b0^2+q)/4p) of discriminant -q.  Returns
 * the element (s + t sqrt(-q))/2 of norm p, in w-coordinates.
 */
QuadElement solve_imag_norm(int q, const bigint& p);

/** A Gaussian integer x + y i with x^2 + y^2 = p, for p prime, p = 1 mod 4. */
QuadElement gaussian_factor(const bigint& p);

}  // namespace sedecim
