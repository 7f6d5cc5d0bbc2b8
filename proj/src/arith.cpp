#include "sedecim/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sedecim {

bigint powmod(const bigint& base, const bigint& exp, const bigint& mod) {
    if (mod <= 0) throw std::invalid_argument("powmod: modulus must be positive");
    if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
    bigint r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

int v2(const bigint& n) {
    if (n == 0) throw std::invalid_argument("v2: zero");
    return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

bigint isqrt(const bigint& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative");
    bigint r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_probable_prime(const bigint& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

bigint mod_floor(const bigint& x, const bigint& m) {
    bigint r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bigint invmod(const bigint& a, const bigint& m) {
    bigint r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("invmod: not invertible");
    return r;
}

std::optional<bigint> sqrt_mod(const bigint& a, const bigint& p) {
    // Tonelli-Shanks; p odd prime
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("sqrt_mod: p must be an odd prime");
    bigint am = mod_floor(a, p);
    if (am == 0) return bigint(0);
    if (mpz_legendre(am.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(am, (p + 1) / 4, p);
    bigint q = p - 1;
    int s = v2(q);
    q >>= s;
    bigint z = smallest_nonresidue(p);
    bigint c = powmod(z, q, p);
    bigint x = powmod(am, (q + 1) / 2, p);
    bigint t = powmod(am, q, p);
    int m = s;
    while (t != 1) {
        bigint tt = t;
        int i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (i == m) throw std::logic_error("sqrt_mod: order error");
        }
        bigint b = c;
        for (int j = 0; j < m - i - 1; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

bigint smallest_nonresidue(const bigint& p) {
    for (bigint d = 2;; ++d) {
        if (mpz_legendre(d.get_mpz_t(), p.get_mpz_t()) == -1) return d;
        if (d > 1000) throw std::logic_error("smallest_nonresidue: search failed");
    }
}

namespace {

bigint rho_brent(const bigint& n) {
    // Brent's cycle variant; n odd composite, not a prime power of small prime
    if (n % 2 == 0) return 2;
    bigint y = 2, c = 1, m = 128;
    for (unsigned seed = 1;; ++seed) {
        y = 2 + seed;
        c = 1 + (seed * 7919) % 97;
        bigint g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (bigint i = 0; i < r; ++i) y = (y * y + c) % n;
            bigint k = 0;
            while (k < r && g == 1) {
                ys = y;
                bigint lim = r - k;
                if (m < lim) lim = m;
                for (bigint i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(const bigint& n, std::map<bigint, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    bigint d = rho_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<bigint, int>> factorize(const bigint& n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::map<bigint, int> out;
    bigint rest = n;
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (rest % d == 0) {
            ++out[bigint(d)];
            rest /= d;
        }
    }
    bigint d = 41;
    while (rest > 1 && d * d <= rest && d < 100000) {
        while (rest % d == 0) {
            ++out[d];
            rest /= d;
        }
        d += 2;
    }
    if (rest > 1) factor_rec(rest, out);
    return {out.begin(), out.end()};
}

}  // namespace sedecim
