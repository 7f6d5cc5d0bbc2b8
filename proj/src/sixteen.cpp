#include "sedecim/sixteen.hpp"

#include <stdexcept>
#include <string>

#include "sedecim/normform.hpp"

namespace sedecim {

namespace {

// SymbolValue as a Gaussian integer (re, im).
std::array<int, 2> sym_gauss(SymbolValue x) {
    switch (x) {
        case SymbolValue::ZERO: return {0, 0};
        case SymbolValue::ONE: return {1, 0};
        case SymbolValue::MINUS_ONE: return {-1, 0};
        case SymbolValue::I: return {0, 1};
        default: return {0, -1};
    }
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

bigint HalfComplex::integer() const {
    if (!is_integer()) throw std::logic_error("HalfComplex: not an integer");
    return bigint(re2 / 2);
}

std::string HalfComplex::str() const {
    if (is_integer()) return bigint(re2 / 2).get_str();
    return "(" + re2.get_str() + (im2 >= 0 ? "+" : "") + im2.get_str() + "i)/2";
}

std::array<int, 2> orbit_step(int q, std::array<int, 2> uv) {
    if (!is_supported_q(q)) throw std::invalid_argument("orbit_step: unsupported q");
    int u = uv[0], v = uv[1];
    switch (q) {
        case 7: return {mod4(v), mod4(3 * u)};
        case 43:
        case 67: return {mod4(2 * u + 3 * v), mod4(u + 2 * v)};
        default: return {mod4(2 * u - 3 * v), mod4(2 * v - u)};
    }
}

std::pair<bigint, bigint> normalize_u(const QContext& ctx, const bigint& u, const bigint& v) {
    QuadElement a{Subfield::REAL, u, v};
    if (a.x < 0) {
        a.x = -a.x;
        a.y = -a.y;
    }
    for (int k = 0; k < 4; ++k) {
        if (mod_floor(a.x, 4) == 1) {
            bigint vv = a.y < 0 ? bigint(-a.y) : a.y;
            return {a.x, vv};
        }
        a = real_mul(ctx.q(), a, ctx.eta());
    }
    throw std::logic_error("normalize_u: no orbit representative with u = 1 mod 4");
}

EpRecord criterion_record(const QContext& ctx, const bigint& p) {
    if (p % 4 != 1 || !is_probable_prime(p))
        throw std::invalid_argument("criterion_record: p must be a prime = 1 mod 4");
    EpRecord r;
    r.q = ctx.q();
    r.p = p;
    r.chi = jacobi(bigint(-ctx.q()), p);
    if (r.chi != 1) return r;
    r.chi4_known = true;
    r.chi4 = sym_to_sign(quartic_rational(bigint(-ctx.q()), p));
    QuadElement sol = solve_norm_equation(ctx.q(), p);
    auto [nu, nv] = normalize_u(ctx, sol.x, sol.y);
    r.uv_known = true;
    r.u = nu;
    r.v = nv;
    if (r.chi4 != 1) return r;
    if (jacobi(r.u, p) != 1)
        throw std::logic_error("criterion_record: (u/p) = -1 on the chi4 = 1 path");
    int lhs = sym_to_sign(quartic_rational(r.u, p));
    int rhs = jacobi(2, r.u);
    r.e = lhs == rhs ? 1 : -1;
    return r;
}

int e_p(const QContext& ctx, const bigint& p) { return criterion_record(ctx, p).e; }

int s_indicator(const QContext& ctx, const MqElement& w) {
    return mod_floor(u_part(norm_to_subfield(ctx, w, Subfield::REAL)), 4) == 1 ? 1 : 0;
}

SymbolValue bracket(const QContext& ctx, const MqElement& w) {
    const bigint U = u_part(norm_to_subfield(ctx, w, Subfield::REAL));
    if (mpz_even_p(U.get_mpz_t())) return SymbolValue::ZERO;
    SymbolValue quart = power_residue(ctx, MqElement(U, 0, 0, 0), w, 4);
    // u(w sigma w) is totally positive, so U > 0 and the Jacobi symbol is defined
    int two = jacobi(2, U);
    return two == 1 ? quart : sym_mul(quart, SymbolValue::MINUS_ONE);
}

HalfComplex a_ideal(const QContext& ctx, const MqElement& w) {
    bigint n = norm_to_q(ctx, w);
    if (gcd(n, bigint(2 * ctx.q())) != 1) return {0, 0};
    SymbolValue c = power_residue(ctx, MqElement::from_int(-ctx.q()), w, 4);

    MqElement x = w;
    MqElement sel;
    int ssum = 0;
    for (int i = 0; i < 4; ++i) {
        if (s_indicator(ctx, x) == 1) {
            ++ssum;
            sel = x;
        }
        x = mq_mul(ctx, x, ctx.eps());
    }
    if (ssum != 1) throw std::logic_error("a_ideal: s-indicator did not collapse to one term");

    SymbolValue b = bracket(ctx, sel);
    auto [br, bi] = sym_gauss(b);
    auto [cr, ci] = sym_gauss(c);
    // b * (1 + c)/2 in Z[i, 1/2], stored with doubled parts
    return {bigint(br * (1 + cr) - bi * ci), bigint(br * ci + bi * (1 + cr))};
}

int q2_factor(const QContext& ctx, const MqElement& w, const MqElement& z) {
    auto u_of = [&](const MqElement& x) {
        return u_part(norm_to_subfield(ctx, x, Subfield::REAL));
    };
    bigint uw = u_of(w), uz = u_of(z), uwz = u_of(mq_mul(ctx, w, z));
    if (mpz_even_p(uw.get_mpz_t()) || mpz_even_p(uz.get_mpz_t()) ||
        mpz_even_p(uwz.get_mpz_t()))
        return 0;
    return jacobi(2, uw) * jacobi(2, uz) * jacobi(2, uwz);
}

TwistedRatio twisted_ratio(const QContext& ctx, const MqElement& w, const MqElement& z) {
    IdealLattice iz = IdealLattice::principal(ctx, z);
    IdealLattice its = IdealLattice::principal(ctx, galois_apply(GaloisElement::SIGMATAU, w));
    if (!ideal_sum_coprime(iz, its)) return {true, SymbolValue::ZERO};

    SymbolValue bwz = bracket(ctx, mq_mul(ctx, w, z));
    SymbolValue bw = bracket(ctx, w);
    SymbolValue bz = bracket(ctx, z);
    SymbolValue quad = power_residue(ctx, z, galois_apply(GaloisElement::TAU, w), 2);
    if (bwz == SymbolValue::ZERO || bw == SymbolValue::ZERO || bz == SymbolValue::ZERO ||
        quad == SymbolValue::ZERO)
        return {true, SymbolValue::ZERO};
    SymbolValue denom = sym_mul(sym_mul(bw, bz), quad);
    return {false, sym_mul(bwz, sym_inverse(denom))};
}

bool unit_coeff_check(const QContext& ctx) {
    struct Row {
        int q;
        const char* two_a;
        const char* two_qb;
    };
    static const Row kRows[] = {
        {3, "194", "-336"},
        {7, "64514", "170688"},
        {11, "158402", "525360"},
        {19, "13362897602", "58247520240"},
        {43, "2351987525322434", "-15423013607227056"},
        {67, "91052891016584133314", "-745300033869597034608"},
        {163, "269780589805913908506459977860802",
         "3444327998561165640260096561357040"},
    };
    for (const Row& row : kRows) {
        if (row.q != ctx.q()) continue;
        const QuadElement& e4 = ctx.eta4();
        return bigint(2) * e4.x == bigint(row.two_a) &&
               bigint(2 * ctx.q()) * e4.y == bigint(row.two_qb);
    }
    return false;
}

bool orbit_structure_check(const QContext& ctx) {
    const auto& M = ctx.orbit_matrix();
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            std::array<int, 2> s = orbit_step(ctx.q(), {u, v});
            if (s[0] != mod4(M[0][0] * u + M[0][1] * v) ||
                s[1] != mod4(M[1][0] * u + M[1][1] * v))
                return false;
            std::array<int, 2> it{u, v};
            for (int k = 0; k < 4; ++k) it = orbit_step(ctx.q(), it);
            if (it[0] != u || it[1] != v) return false;
        }

    std::vector<std::array<int, 2>> valid;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (mod4(u * u - ctx.q() * v * v) == 1) valid.push_back({u, v});
    if (valid.size() != 8) return false;

    bool seen[4][4] = {};
    int orbits = 0;
    for (const auto& start : valid) {
        if (seen[start[0]][start[1]]) continue;
        ++orbits;
        int ones = 0;
        std::array<int, 2> cur = start;
        for (int k = 0; k < 4; ++k) {
            if (seen[cur[0]][cur[1]]) return false;  // orbit shorter than 4
            if (mod4(cur[0] * cur[0] - ctx.q() * cur[1] * cur[1]) != 1) return false;
            seen[cur[0]][cur[1]] = true;
            if (cur[0] == 1) ++ones;
            cur = orbit_step(ctx.q(), cur);
        }
        if (cur != start || ones != 1) return false;
    }
    return orbits == 2;
}

bool prop31_check(const QContext& ctx, const PrimeIdeal& P) {
    if (P.f != 1) throw std::invalid_argument("prop31_check: degree-1 prime required");
    MqElement w = find_generator(ctx, P);
    HalfComplex a = a_ideal(ctx, w);
    if (!a.is_integer()) throw std::logic_error("prop31_check: a value is not an integer");
    bigint av = a.integer();
    if (av < -1 || av > 1) throw std::logic_error("prop31_check: a value outside {-1, 0, 1}");
    return av == e_p(ctx, P.p);
}

}  // namespace sedecim
