#include "sedecim/mq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sedecim {

bool is_supported_q(int q) {
    return std::find(kSupportedQ.begin(), kSupportedQ.end(), q) != kSupportedQ.end();
}

std::string MqElement::str() const {
    std::ostringstream os;
    os << "(" << _c[0] << ", " << _c[1] << ", " << _c[2] << ", " << _c[3] << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MqElement& a) { return os << a.str(); }

MqElement mq_mul(const QContext& ctx, const MqElement& a, const MqElement& b) {
    // Write a = A1 + B1 w, b = A2 + B2 w with A, B in Z[i]; then
    // a b = (A1 A2 - m B1 B2) + (A1 B2 + A2 B1 + B1 B2) w  since w^2 = w - m.
    const bigint m = ctx.m();
    const bigint &a0 = a.c0(), &a1 = a.c1(), &a2 = a.c2(), &a3 = a.c3();
    const bigint &b0 = b.c0(), &b1 = b.c1(), &b2 = b.c2(), &b3 = b.c3();

    const bigint aa_re = a0 * b0 - a1 * b1, aa_im = a0 * b1 + a1 * b0;
    const bigint bb_re = a2 * b2 - a3 * b3, bb_im = a2 * b3 + a3 * b2;
    const bigint ab_re = a0 * b2 - a1 * b3, ab_im = a0 * b3 + a1 * b2;
    const bigint ba_re = a2 * b0 - a3 * b1, ba_im = a2 * b1 + a3 * b0;

    return {aa_re - m * bb_re, aa_im - m * bb_im,
            ab_re + ba_re + bb_re, ab_im + ba_im + bb_im};
}

MqElement mq_pow(const QContext& ctx, const MqElement& a, unsigned long e) {
    MqElement acc = MqElement::from_int(1);
    MqElement base = a;
    while (e > 0) {
        if (e & 1) acc = mq_mul(ctx, acc, base);
        base = mq_mul(ctx, base, base);
        e >>= 1;
    }
    return acc;
}

MqElement galois_apply(GaloisElement g, const MqElement& a) {
    const bigint &c0 = a.c0(), &c1 = a.c1(), &c2 = a.c2(), &c3 = a.c3();
    switch (g) {
        case GaloisElement::IDENTITY:
            return a;
        case GaloisElement::SIGMA:  // i -> -i, sqrt q -> -sqrt q, w -> w - i w... = conj(w)
            return {c0 + c2, -c1 - c3, -c2, c3};
        case GaloisElement::TAU:  // i -> i, sqrt q -> -sqrt q
            return {c0 + c2, c1 + c3, -c2, -c3};
        case GaloisElement::SIGMATAU:  // i -> -i, sqrt q -> sqrt q
            return {c0, -c1, c2, -c3};
    }
    throw std::logic_error("galois_apply: bad element");
}

bigint trace_to_q(const MqElement& a) { return 4 * a.c0() + 2 * a.c2(); }

QuadElement project_to_subfield(const MqElement& a, Subfield k) {
    const bigint &c0 = a.c0(), &c1 = a.c1(), &c2 = a.c2(), &c3 = a.c3();
    switch (k) {
        case Subfield::GAUSS:  // x + y i
            if (c2 != 0 || c3 != 0) break;
            return {k, c0, c1};
        case Subfield::REAL:  // x + y sqrt q, sqrt q = (0, 1, 0, -2)
            if (c2 != 0 || c3 != -2 * c1) break;
            return {k, c0, c1};
        case Subfield::IMAG:  // x + y w
            if (c1 != 0 || c3 != 0) break;
            return {k, c0, c2};
    }
    throw std::invalid_argument("project_to_subfield: element not in subring");
}

MqElement embed(const QuadElement& a) {
    switch (a.field) {
        case Subfield::GAUSS:
            return {a.x, a.y, 0, 0};
        case Subfield::REAL:
            return {a.x, a.y, 0, -2 * a.y};
        case Subfield::IMAG:
            return {a.x, 0, a.y, 0};
    }
    throw std::logic_error("embed: bad subfield");
}

QuadElement norm_to_subfield(const QContext& ctx, const MqElement& a, Subfield k) {
    GaloisElement psi;
    switch (k) {
        case Subfield::GAUSS:
            psi = GaloisElement::TAU;
            break;
        case Subfield::REAL:
            psi = GaloisElement::SIGMA;
            break;
        case Subfield::IMAG:
            psi = GaloisElement::SIGMATAU;
            break;
        default:
            throw std::logic_error("norm_to_subfield: bad subfield");
    }
    return project_to_subfield(mq_mul(ctx, a, galois_apply(psi, a)), k);
}

bigint norm_to_q(const QContext& ctx, const MqElement& a) {
    const QuadElement g = norm_to_subfield(ctx, a, Subfield::GAUSS);
    return g.x * g.x + g.y * g.y;
}

const bigint& u_part(const QuadElement& a) {
    if (a.field != Subfield::REAL)
        throw std::invalid_argument("u_part: element not in the real subfield");
    return a.x;
}

QuadElement real_mul(int q, const QuadElement& a, const QuadElement& b) {
    if (a.field != Subfield::REAL || b.field != Subfield::REAL)
        throw std::invalid_argument("real_mul: operands must lie in Z[sqrt q]");
    return {Subfield::REAL, a.x * b.x + q * a.y * b.y, a.x * b.y + a.y * b.x};
}

QuadElement real_conj(const QuadElement& a) {
    if (a.field != Subfield::REAL)
        throw std::invalid_argument("real_conj: element must lie in Z[sqrt q]");
    return {Subfield::REAL, a.x, -a.y};
}

QuadElement real_pow(int q, const QuadElement& a, unsigned long e) {
    QuadElement acc{Subfield::REAL, 1, 0};
    QuadElement base = a;
    while (e > 0) {
        if (e & 1) acc = real_mul(q, acc, base);
        base = real_mul(q, base, base);
        e >>= 1;
    }
    return acc;
}

MqElement unit_inverse(const QContext& ctx, const MqElement& u) {
    if (norm_to_q(ctx, u) != 1) throw std::invalid_argument("unit_inverse: norm is not 1");
    const MqElement s = galois_apply(GaloisElement::SIGMA, u);
    const MqElement t = galois_apply(GaloisElement::TAU, u);
    const MqElement st = galois_apply(GaloisElement::SIGMATAU, u);
    return mq_mul(ctx, mq_mul(ctx, s, t), st);
}

MqElement unit_power(const QContext& ctx, UnitBase base, long k) {
    const MqElement& u = (base == UnitBase::NU) ? ctx.nu() : ctx.eps();
    if (k >= 0) return mq_pow(ctx, u, static_cast<unsigned long>(k));
    return mq_pow(ctx, unit_inverse(ctx, u), static_cast<unsigned long>(-k));
}

namespace {

bigint det3(const std::array<std::array<bigint, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bigint det4(const std::array<std::array<bigint, 4>, 4>& m) {
    bigint det = 0;
    for (int col = 0; col < 4; ++col) {
        std::array<std::array<bigint, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == col) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        const bigint term = m[0][col] * det3(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

bigint trace_form_det(const QContext& ctx) {
    const std::array<MqElement, 4> basis = {
        MqElement(1, 0, 0, 0), MqElement(0, 1, 0, 0),
        MqElement(0, 0, 1, 0), MqElement(0, 0, 0, 1)};
    std::array<std::array<bigint, 4>, 4> gram;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gram[i][j] = trace_to_q(mq_mul(ctx, basis[i], basis[j]));
    return det4(gram);
}

bool order_discriminant_check(const QContext& ctx) {
    bigint d = trace_form_det(ctx);
    if (d < 0) d = -d;
    return d == bigint(16) * ctx.q() * ctx.q();
}

namespace {

struct QRow {
    int q;
    std::array<long, 4> eps;  // coordinates of the fundamental unit
    long eta_a, eta_b;        // eps * sigma(eps) = eta_a + eta_b sqrt q
};

// Fundamental units of O_{M_q}; eta rows are the totally positive
// fundamental units of Z[sqrt q] they project onto.
constexpr std::array<QRow, 7> kRows = {{
    {3, {-1, 1, 0, -1}, 2, -1},
    {7, {2, -1, -1, -1}, 8, 3},
    {11, {2, -1, -1, -1}, 10, 3},
    {19, {5, 8, 3, -3}, 170, 39},
    {43, {-34, -25, 9, -9}, 3482, -531},
    {67, {-124, -97, 27, -27}, 48842, -5967},
    {163, {4316, -3689, -627, -627}, 64080026, 5019135},
}};

int mod4(const bigint& x) { return static_cast<int>(mod_floor(x, 4).get_si()); }

}  // namespace

QContext::QContext(int q) : _q(q) {
    if (!is_supported_q(q)) throw std::invalid_argument("QContext: unsupported q");

    // nu: zeta_12 = i - i w for q = 3, else i.
    _nu = (q == 3) ? MqElement(0, 1, 0, -1) : MqElement(0, 1, 0, 0);

    const QRow* row = nullptr;
    for (const auto& r : kRows)
        if (r.q == q) row = &r;
    _eps = MqElement(row->eps[0], row->eps[1], row->eps[2], row->eps[3]);

    if (norm_to_q(*this, _nu) != 1 || norm_to_q(*this, _eps) != 1)
        throw std::logic_error("QContext: unit norms are not 1");
    const int ord = torsion_order();
    if (mq_pow(*this, _nu, ord) != MqElement::from_int(1) ||
        mq_pow(*this, _nu, ord / 2) != -MqElement::from_int(1))
        throw std::logic_error("QContext: torsion order mismatch");

    _eta = norm_to_subfield(*this, _eps, Subfield::REAL);
    if (_eta.x != row->eta_a || _eta.y != row->eta_b)
        throw std::logic_error("QContext: eta mismatch");
    _eta4 = real_pow(q, _eta, 4);

    // Multiplication by eta on (u, v) columns, reduced mod 4.
    _orbit = {{{mod4(_eta.x), mod4(bigint(q) * _eta.y)},
               {mod4(_eta.y), mod4(_eta.x)}}};
    // eta^4 acts trivially mod 4.
    std::array<std::array<int, 2>, 2> p = {{{1, 0}, {0, 1}}};
    for (int s = 0; s < 4; ++s) {
        const std::array<std::array<int, 2>, 2> next = {
            {{(_orbit[0][0] * p[0][0] + _orbit[0][1] * p[1][0]) % 4,
              (_orbit[0][0] * p[0][1] + _orbit[0][1] * p[1][1]) % 4},
             {(_orbit[1][0] * p[0][0] + _orbit[1][1] * p[1][0]) % 4,
              (_orbit[1][0] * p[0][1] + _orbit[1][1] * p[1][1]) % 4}}};
        p = next;
    }
    if (p != std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}})
        throw std::logic_error("QContext: orbit matrix has wrong order mod 4");

    if (!order_discriminant_check(*this))
        throw std::logic_error("QContext: trace form determinant mismatch");
}

}  // namespace sedecim
