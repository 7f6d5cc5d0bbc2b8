#pragma once

#include <array>
#include <utility>

#include "sedecim/arith.hpp"
#include "sedecim/ideals.hpp"
#include "sedecim/mq.hpp"
#include "sedecim/symbols.hpp"

namespace sedecim {

/**
 * One batch row: the 16-rank criterion data for a pair (q, p), p = 1 mod 4.
 * chi = (-q/p); when chi = 1, chi4 = (-q/p)_4 as +-1 and (u, v) solve
 * p = u^2 - q v^2 with u = 1 mod 4, v >= 0.  e is the criterion value:
 * +1 when 16 | h(-qp), -1 when 8 | h but 16 does not, 0 when 8 does not.
 */
struct EpRecord {
    int q = 0;
    bigint p;
    int chi = 0;
    bool chi4_known = false;
    int chi4 = 0;
    bool uv_known = false;
    bigint u, v;
    int e = 0;
    bool h_known = false;
    std::int64_t h = 0;
    bool agree = true;
};

/** A value in Z[i, 1/2]: (re2 + im2*i)/2. */
struct HalfComplex {
    bigint re2, im2;

    bool operator==(const HalfComplex&) const = default;
    bool is_integer() const { return im2 == 0 && mpz_even_p(re2.get_mpz_t()) != 0; }
    bigint integer() const;  // (re2)/2, requires is_integer()
    std::string str() const;
};

/** The action of multiplication by eta = eps sigma(eps) on (u, v) mod 4. */
std::array<int, 2> orbit_step(int q, std::array<int, 2> uv);

/**
 * Moves u + v sqrt(q) along its unit orbit by eta^k, k in {0..3}, to the
 * unique representative with u = 1 mod 4; the v-sign is then fixed to v >= 0.
 */
std::pair<bigint, bigint> normalize_u(const QContext& ctx, const bigint& u, const bigint& v);

/** The full criterion row for (q, p): chi, chi4, (u, v) and e.  Oracle fields
 *  are left for the caller. */
EpRecord criterion_record(const QContext& ctx, const bigint& p);

/** The criterion value alone. */
int e_p(const QContext& ctx, const bigint& p);

/** 1 iff u(w sigma(w)) = 1 mod 4. */
int s_indicator(const QContext& ctx, const MqElement& w);

/** [w] = (u(w sigma w) / w)_4 * (2 / u(w sigma w)); ZERO if the u-part is even. */
SymbolValue bracket(const QContext& ctx, const MqElement& w);

/**
 * a_(w): 0 when (w) shares a factor with (2q), otherwise
 * sum_{i=0..3} s(eps^i w) [eps^i w] (1 + (-q / eps^i w)_4)/2, which the
 * s-indicator collapses to a single term.  Independent of the generator.
 */
HalfComplex a_ideal(const QContext& ctx, const MqElement& w);

/** Q_2(w, z) = (2/u(w sigma w)) (2/u(z sigma z)) (2/u(wz sigma(wz))); 0 if any u-part is even. */
int q2_factor(const QContext& ctx, const MqElement& w, const MqElement& z);

/** mu_3 with [wz] = mu_3 [w][z] (z / tau(w))_2, or degenerate when either
 *  side vanishes (including gcd((z), (tau sigma w)) != (1)). */
struct TwistedRatio {
    bool degenerate = false;
    SymbolValue mu3 = SymbolValue::ZERO;
};

TwistedRatio twisted_ratio(const QContext& ctx, const MqElement& w, const MqElement& z);

/** Checks 2A and 2qB of eta^4 = A + B sqrt(q) against the published rows. */
bool unit_coeff_check(const QContext& ctx);

/**
 * Verifies the mod-4 orbit picture: orbit_step agrees with multiplication by
 * eta, its fourth iterate is the identity, and the 8 residue pairs compatible
 * with u^2 - q v^2 = 1 mod 4 fall into two 4-cycles with exactly one
 * u = 1 mod 4 element each.
 */
bool orbit_structure_check(const QContext& ctx);

/** a_ideal at a degree-1 prime equals e_p, via fully independent pipelines. */
bool prop31_check(const QContext& ctx, const PrimeIdeal& P);

}  // namespace sedecim
