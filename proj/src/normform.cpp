#include "sedecim/normform.hpp"

#include <stdexcept>

namespace sedecim {

namespace {

bigint fdiv(const bigint& a, const bigint& b) {
    bigint r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

void check_norm_input(int q, const bigint& p) {
    if (!is_supported_q(q)) throw std::invalid_argument("unsupported q");
    if (p == q || p < 3 || mod_floor(p, 2) == 0)
        throw std::invalid_argument("p must be an odd prime distinct from q");
}

}  // namespace

namespace {

// Reduce the form (p, 2r, (r^2-q)/p) of discriminant 4q along its cycle,
// tracking the SL2(Z) transform, until the leading coefficient is 1 (or,
// with allow_minus, -1); transport the representation f(1,0) = p back.
QuadElement cycle_to_unit_form(int q, const bigint& p, bool allow_minus) {
    const auto r = sqrt_mod(mod_floor(q, p), p);
    if (!r) throw std::invalid_argument("q is not a square mod p");

    bigint A = p, B = 2 * *r, C = (*r * *r - q) / p;
    bigint m00 = 1, m01 = 0, m10 = 0, m11 = 1;  // current form = initial form | m
    const bigint sq = isqrt(bigint(4 * q));

    for (long guard = 0; A != 1 && !(allow_minus && A == -1); ++guard) {
        if (guard > 100000 || C == 0) throw std::logic_error("form reduction did not cycle");
        const bigint c2 = 2 * abs(C);
        const bigint base = mod_floor(-B, c2);
        bigint Bp = base + c2 * fdiv(sq - base, c2);
        if (Bp <= sq - c2) Bp += c2;
        const bigint num = Bp + B;
        if (mod_floor(num, 2 * C) != 0) throw std::logic_error("non-integral reduction step");
        const bigint t = num / (2 * C);
        const bigint Cp = (Bp * Bp - 4 * q) / (4 * C);
        const bigint n00 = m01, n01 = -m00 + m01 * t;
        const bigint n10 = m11, n11 = -m10 + m11 * t;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
        A = C; B = Bp; C = Cp;
    }
    if (m00 * m11 - m01 * m10 != 1) throw std::logic_error("transform left SL2(Z)");

    const bigint x0 = m11, y0 = -m10;  // preimage of (1, 0)
    if (A * x0 * x0 + B * x0 * y0 + C * y0 * y0 != p)
        throw std::logic_error("representation transport failed");
    // A = 1: f = (x + By/2)^2 - q y^2;  A = -1: f = -(x - By/2)^2 + q y^2.
    const bigint u = (A == 1) ? bigint(x0 + (B / 2) * y0) : bigint(x0 - (B / 2) * y0);
    if (u * u - q * y0 * y0 != A * p) throw std::logic_error("norm equation not satisfied");
    return {Subfield::REAL, u, y0};
}

}  // namespace

QuadElement solve_norm_equation(int q, const bigint& p) {
    check_norm_input(q, p);
    QuadElement s = cycle_to_unit_form(q, p, false);
    s.y = abs(s.y);
    return s;
}

QuadElement solve_real_prime(int q, const bigint& p) {
    check_norm_input(q, p);
    return cycle_to_unit_form(q, p, true);
}

QuadElement solve_norm_brute(int q, const bigint& p) {
    check_norm_input(q, p);
    for (bigint v = 0;; ++v) {
        const bigint u2 = p + q * v * v;
        const bigint u = isqrt(u2);
        if (u * u == u2) return {Subfield::REAL, u, v};
    }
}

QuadElement solve_imag_norm(int q, const bigint& p) {
    check_norm_input(q, p);
    const auto r = sqrt_mod(mod_floor(-q, p), p);
    if (!r) throw std::invalid_argument("-q is not a square mod p");
    bigint b0 = *r;
    if (mod_floor(b0, 2) == 0) b0 = p - b0;  // odd, so b0^2 = -q mod 4p

    bigint a = p, b = b0, c = (b0 * b0 + q) / (4 * p);
    bigint m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (long guard = 0;; ++guard) {
        if (guard > 100000) throw std::logic_error("definite reduction did not terminate");
        const bigint t = fdiv(a - b, 2 * a);  // shift b into (-a, a]
        if (t != 0) {
            c += t * (a * t + b);
            b += 2 * a * t;
            m01 += m00 * t;
            m11 += m10 * t;
        }
        if (a > c || (a == c && b < 0)) {
            const bigint na = c, nb = -b, nc = a;
            a = na; b = nb; c = nc;
            const bigint n00 = m01, n01 = -m00, n10 = m11, n11 = -m10;
            m00 = n00; m01 = n01; m10 = n10; m11 = n11;
            continue;
        }
        if (-a < b && b <= a && a <= c) break;
    }
    if (a != 1 || b != 1 || c != (q + 1) / 4)
        throw std::logic_error("reduced form is not principal");
    if (m00 * m11 - m01 * m10 != 1) throw std::logic_error("transform left SL2(Z)");

    const bigint X = m11, Y = -m10;
    const bigint mbar = (q + 1) / 4;
    if (X * X + X * Y + mbar * Y * Y != p)
        throw std::logic_error("principal form does not represent p");
    const bigint s = abs(2 * X + Y), t = abs(Y);
    if (s * s + q * t * t != 4 * p) throw std::logic_error("4p decomposition failed");
    const QuadElement beta{Subfield::IMAG, (s - t) / 2, t};
    if (beta.x * beta.x + beta.x * beta.y + mbar * beta.y * beta.y != p)
        throw std::logic_error("imaginary norm check failed");
    return beta;
}

QuadElement gaussian_factor(const bigint& p) {
    if (p < 5 || mod_floor(p, 4) != 1)
        throw std::invalid_argument("p must be a prime = 1 mod 4");
    const auto r = sqrt_mod(p - 1, p);
    if (!r) throw std::invalid_argument("-1 is not a square mod p");
    bigint a = p, b = *r;
    while (b * b > p) {
        const bigint t = mod_floor(a, b);
        a = b;
        b = t;
    }
    const bigint y2 = p - b * b;
    const bigint y = isqrt(y2);
    if (y * y != y2) throw std::logic_error("two-square decomposition failed");
    return {Subfield::GAUSS, b, y};
}

}  // namespace sedecim
