#include "sedecim/ideals.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "sedecim/normform.hpp"

namespace sedecim {

namespace {

bigint fdiv(const bigint& a, const bigint& b) {
    bigint r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool abs_less(const bigint& a, const bigint& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

IdealLattice IdealLattice::from_rows(std::vector<std::array<bigint, 4>> rows) {
    int r = 0;  // next pivot row
    for (int col = 0; col < 4; ++col) {
        // Euclid the column entries below the pivot into a single nonzero one.
        while (true) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 && (piv < 0 || abs_less(rows[i][col], rows[piv][col])))
                    piv = i;
            if (piv < 0) throw std::invalid_argument("lattice rows are not full rank");
            std::swap(rows[r], rows[piv]);
            bool clean = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][col] == 0) continue;
                const bigint t = fdiv(rows[i][col], rows[r][col]);
                for (int j = col; j < 4; ++j) rows[i][j] -= t * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][col] < 0)
            for (int j = col; j < 4; ++j) rows[r][j] = -rows[r][j];
        for (int i = 0; i < r; ++i) {  // normalize entries above the pivot into [0, pivot)
            const bigint t = fdiv(rows[i][col], rows[r][col]);
            if (t != 0)
                for (int j = col; j < 4; ++j) rows[i][j] -= t * rows[r][j];
        }
        ++r;
    }
    IdealLattice L;
    for (int i = 0; i < 4; ++i) L._m[i] = rows[i];
    return L;
}

IdealLattice IdealLattice::principal(const QContext& ctx, const MqElement& a) {
    if (a.is_zero()) throw std::invalid_argument("zero element generates no lattice");
    const std::array<MqElement, 4> basis = {
        MqElement(1, 0, 0, 0), MqElement(0, 1, 0, 0),
        MqElement(0, 0, 1, 0), MqElement(0, 0, 0, 1)};
    std::vector<std::array<bigint, 4>> rows;
    for (const auto& b : basis) rows.push_back(mq_mul(ctx, a, b).coords());
    return from_rows(std::move(rows));
}

bool IdealLattice::contains(const MqElement& a) const {
    std::array<bigint, 4> c = a.coords();
    for (int k = 0; k < 4; ++k) {
        if (mod_floor(c[k], _m[k][k]) != 0) return false;
        const bigint t = c[k] / _m[k][k];
        for (int j = k; j < 4; ++j) c[j] -= t * _m[k][j];
    }
    return true;
}

IdealLattice ideal_mul(const QContext& ctx, const IdealLattice& A, const IdealLattice& B) {
    std::vector<std::array<bigint, 4>> rows;
    for (int i = 0; i < 4; ++i) {
        const MqElement a(A.rows()[i][0], A.rows()[i][1], A.rows()[i][2], A.rows()[i][3]);
        for (int j = 0; j < 4; ++j) {
            const MqElement b(B.rows()[j][0], B.rows()[j][1], B.rows()[j][2], B.rows()[j][3]);
            rows.push_back(mq_mul(ctx, a, b).coords());
        }
    }
    return IdealLattice::from_rows(std::move(rows));
}

bool ideal_sum_coprime(const IdealLattice& A, const IdealLattice& B) {
    std::vector<std::array<bigint, 4>> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(A.rows()[i]);
    for (int i = 0; i < 4; ++i) rows.push_back(B.rows()[i]);
    return IdealLattice::from_rows(std::move(rows)).det() == 1;
}

ResidueField::ResidueField(bigint p, int f, bigint d)
    : _p(std::move(p)), _f(f), _d(std::move(d)) {
    if (_f != 1 && _f != 2) throw std::invalid_argument("residue degree must be 1 or 2");
}

bigint ResidueField::size_minus_one() const { return _f == 1 ? bigint(_p - 1) : bigint(_p * _p - 1); }

Fp2Element ResidueField::make(const bigint& a, const bigint& b) const {
    if (_f == 1 && mod_floor(b, _p) != 0)
        throw std::invalid_argument("theta component in a prime residue field");
    return {mod_floor(a, _p), mod_floor(b, _p)};
}

Fp2Element ResidueField::add(const Fp2Element& x, const Fp2Element& y) const {
    return {mod_floor(x.a + y.a, _p), mod_floor(x.b + y.b, _p)};
}

Fp2Element ResidueField::mul(const Fp2Element& x, const Fp2Element& y) const {
    return {mod_floor(x.a * y.a + x.b * y.b * _d, _p), mod_floor(x.a * y.b + x.b * y.a, _p)};
}

Fp2Element ResidueField::pow(const Fp2Element& x, const bigint& e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Fp2Element acc{1, 0}, base = x;
    bigint n = e;
    while (n > 0) {
        if (mpz_tstbit(n.get_mpz_t(), 0)) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

namespace {

// Kernel lattice of the reduction map determined by (s_i, s_w): null space of
// the basis-image matrix mod p, lifted and saturated with p * (basis).
IdealLattice kernel_lattice(const ResidueField& F, const Fp2Element& s_i, const Fp2Element& s_w) {
    const bigint& p = F.p();
    const std::array<Fp2Element, 4> img = {
        F.make(1, 0), s_i, s_w, F.mul(s_i, s_w)};  // images of 1, i, w, iw

    // Two F_p-linear constraints (theta-free and theta parts).
    std::array<std::array<bigint, 4>, 2> eq;
    for (int k = 0; k < 4; ++k) {
        eq[0][k] = img[k].a;
        eq[1][k] = img[k].b;
    }

    // Gauss-reduce the 2x4 system mod p.
    std::array<int, 2> pivot_col = {-1, -1};
    int rank = 0;
    for (int col = 0; col < 4 && rank < 2; ++col) {
        int sel = -1;
        for (int row = rank; row < 2; ++row)
            if (mod_floor(eq[row][col], p) != 0) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(eq[rank], eq[sel]);
        const bigint inv = invmod(eq[rank][col], p);
        for (int j = 0; j < 4; ++j) eq[rank][j] = mod_floor(eq[rank][j] * inv, p);
        for (int row = 0; row < 2; ++row) {
            if (row == rank) continue;
            const bigint c = mod_floor(eq[row][col], p);
            if (c == 0) continue;
            for (int j = 0; j < 4; ++j) eq[row][j] = mod_floor(eq[row][j] - c * eq[rank][j], p);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    if (rank != F.f()) throw std::logic_error("reduction map has unexpected rank");

    std::vector<std::array<bigint, 4>> rows;
    for (int col = 0; col < 4; ++col) {  // kernel basis from the free columns
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r) is_pivot = is_pivot || pivot_col[r] == col;
        if (is_pivot) continue;
        std::array<bigint, 4> v = {0, 0, 0, 0};
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_floor(-eq[r][col], p);
        rows.push_back(v);
    }
    for (int k = 0; k < 4; ++k) {
        std::array<bigint, 4> v = {0, 0, 0, 0};
        v[k] = p;
        rows.push_back(v);
    }
    return IdealLattice::from_rows(std::move(rows));
}

PrimeIdeal make_prime(const QContext& ctx, const ResidueField& F, const Fp2Element& s_i,
                      const Fp2Element& s_q) {
    const bigint inv2 = invmod(2, F.p());
    const Fp2Element s_w = F.mul(F.add(F.make(1, 0), F.mul(s_i, s_q)), F.make(inv2, 0));
    // Defining relations in the residue field.
    if (!F.is_zero(F.add(F.mul(s_i, s_i), F.make(1, 0))))
        throw std::logic_error("s_i is not a square root of -1");
    if (!F.is_zero(F.add(F.mul(s_q, s_q), F.make(-ctx.q(), 0))))
        throw std::logic_error("s_q is not a square root of q");
    const Fp2Element w2 = F.mul(s_w, s_w);
    if (!F.is_zero(F.add(F.add(w2, F.mul(F.make(-1, 0), s_w)), F.make(ctx.m(), 0))))
        throw std::logic_error("s_w violates w^2 = w - m");

    IdealLattice L = kernel_lattice(F, s_i, s_w);
    bigint want = F.p();
    if (F.f() == 2) want *= F.p();
    if (L.det() != want) throw std::logic_error("prime lattice has wrong norm");
    return {F.p(), F.f(), F, s_i, s_q, s_w, std::move(L)};
}

}  // namespace

namespace {

bigint must_sqrt(const bigint& a, const bigint& p) {
    const auto r = sqrt_mod(a, p);
    if (!r) throw std::logic_error("expected quadratic residue");
    return *r;
}

}  // namespace

std::vector<PrimeIdeal> primes_above(const QContext& ctx, const bigint& p) {
    if (p < 3 || mod_floor(p, 2) == 0 || p == ctx.q() || !is_probable_prime(p))
        throw std::invalid_argument("p must be an odd prime not dividing 2q");
    const int li = mpz_legendre(bigint(-1).get_mpz_t(), p.get_mpz_t());
    const int lq = mpz_legendre(bigint(ctx.q()).get_mpz_t(), p.get_mpz_t());

    std::vector<PrimeIdeal> out;
    if (li == 1 && lq == 1) {
        const ResidueField F(p, 1, 0);
        const bigint ri = must_sqrt(p - 1, p);
        const bigint rq = must_sqrt(mod_floor(ctx.q(), p), p);
        for (const bigint& si : {ri, bigint(p - ri)})
            for (const bigint& sq : {rq, bigint(p - rq)})
                out.push_back(make_prime(ctx, F, F.make(si, 0), F.make(sq, 0)));
        return out;
    }

    const bigint d = smallest_nonresidue(p);
    const ResidueField F(p, 2, d);
    const bigint dinv = invmod(d, p);
    if (li == 1) {  // (q/p) = -1: sqrt q = c * theta
        const bigint ri = must_sqrt(p - 1, p);
        const bigint c = must_sqrt(mod_floor(bigint(ctx.q()) * dinv, p), p);
        for (const bigint& si : {ri, bigint(p - ri)})
            out.push_back(make_prime(ctx, F, F.make(si, 0), F.make(0, c)));
    } else if (lq == 1) {  // (-1/p) = -1: i = c * theta
        const bigint rq = must_sqrt(mod_floor(ctx.q(), p), p);
        const bigint c = must_sqrt(mod_floor(bigint(p - 1) * dinv, p), p);
        for (const bigint& sq : {rq, bigint(p - rq)})
            out.push_back(make_prime(ctx, F, F.make(0, c), F.make(sq, 0)));
    } else {  // both inert over Q: i = c1 theta, sqrt q = +-c2 theta
        const bigint c1 = must_sqrt(mod_floor(bigint(p - 1) * dinv, p), p);
        const bigint c2 = must_sqrt(mod_floor(bigint(ctx.q()) * dinv, p), p);
        for (const bigint& sq : {c2, bigint(p - c2)})
            out.push_back(make_prime(ctx, F, F.make(0, c1), F.make(0, sq)));
    }
    return out;
}

Fp2Element residue_reduce(const MqElement& a, const PrimeIdeal& P) {
    const ResidueField& F = P.field;
    Fp2Element acc = F.make(a.c0(), 0);
    acc = F.add(acc, F.mul(F.make(a.c1(), 0), P.s_i));
    acc = F.add(acc, F.mul(F.make(a.c2(), 0), P.s_w));
    acc = F.add(acc, F.mul(F.make(a.c3(), 0), F.mul(P.s_i, P.s_w)));
    return acc;
}

int valuation(const QContext& ctx, const MqElement& a, const PrimeIdeal& P) {
    if (a.is_zero()) throw std::invalid_argument("valuation of zero");
    int k = 0;
    IdealLattice power = P.lattice;
    while (power.contains(a)) {
        ++k;
        power = ideal_mul(ctx, power, P.lattice);
    }
    return k;
}

namespace {

// Walk x across eta^{+-1} to the representative with minimal positive u;
// every generator's real norm sits in this orbit up to sign.
QuadElement balance_real(const QContext& ctx, QuadElement x) {
    if (x.x < 0) { x.x = -x.x; x.y = -x.y; }
    const QuadElement eta = ctx.eta();
    const QuadElement eta_inv = real_conj(eta);
    for (bool moved = true; moved;) {
        moved = false;
        for (const QuadElement& step : {eta, eta_inv}) {
            const QuadElement y = real_mul(ctx.q(), x, step);
            if (y.x > 0 && y.x < x.x) { x = y; moved = true; }
        }
    }
    return x;
}

// Fincke-Pohst enumeration of nonzero lattice vectors with quadratic value
// <= bound under the Cholesky factor R (upper triangular, long double).
bool enumerate_short(const std::array<std::array<long double, 4>, 4>& R, long double bound,
                     const std::function<bool(const std::array<long, 4>&)>& accept) {
    std::array<long, 4> t{};
    // Depth-first from coordinate 3 down to 0.
    struct Frame { long lo, hi, cur; long double rem, center; };
    std::array<Frame, 4> st;
    int lvl = 3;
    auto prepare = [&](int l, long double rem) {
        long double center = 0;
        for (int j = l + 1; j < 4; ++j) center += R[l][j] * t[j];
        const long double half = std::sqrt(std::max<long double>(rem, 0)) / R[l][l];
        const long double c = -center / R[l][l];
        st[l] = {static_cast<long>(std::ceil(c - half - 1e-9L)),
                 static_cast<long>(std::floor(c + half + 1e-9L)), 0, rem, center};
        st[l].cur = st[l].lo;
    };
    prepare(3, bound);
    while (true) {
        if (st[lvl].cur > st[lvl].hi) {
            if (++lvl > 3) return false;
            ++st[lvl].cur;
            continue;
        }
        t[lvl] = st[lvl].cur;
        const long double term = R[lvl][lvl] * t[lvl] + st[lvl].center;
        const long double rem = st[lvl].rem - term * term;
        if (rem < -1e-6L) {
            ++st[lvl].cur;
            continue;
        }
        if (lvl == 0) {
            if ((t[0] | t[1] | t[2] | t[3]) != 0 && accept(t)) return true;
            ++st[lvl].cur;
            continue;
        }
        --lvl;
        prepare(lvl, rem);
    }
}

}  // namespace

MqElement find_generator(const QContext& ctx, const PrimeIdeal& P) {
    const bigint& p = P.p;
    if (P.f == 2) {
        // The decomposition group is generated by one of sigma, tau, sigma-tau;
        // a prime element of the fixed subfield generates P.
        std::vector<MqElement> candidates;
        if (P.s_i.b == 0) {  // (-1/p)=1, (q/p)=-1: Gaussian prime
            const QuadElement g = gaussian_factor(p);
            candidates.push_back(embed(g));
            candidates.push_back(embed({Subfield::GAUSS, g.x, -g.y}));
        } else if (P.s_q.b == 0) {  // (q/p)=1, (-1/p)=-1: real prime, norm -p
            const QuadElement g = solve_real_prime(ctx.q(), p);
            candidates.push_back(embed(g));
            candidates.push_back(embed(real_conj(g)));
        } else {  // both -1: prime of Z[(1+sqrt(-q))/2]
            const QuadElement g = solve_imag_norm(ctx.q(), p);
            candidates.push_back(embed(g));
            candidates.push_back(embed({Subfield::IMAG, g.x + g.y, -g.y}));  // w -> 1 - w
        }
        for (const MqElement& w : candidates) {
            if (norm_to_q(ctx, w) != p * p) continue;
            if (!P.field.is_zero(residue_reduce(w, P))) continue;
            return w;
        }
        throw std::logic_error("no subfield generator matched the prime");
    }

    // f = 1: enumerate the ideal lattice under a unit-balanced positive form.
    const QuadElement bal = balance_real(ctx, solve_norm_equation(ctx.q(), p));
    const long double sq = std::sqrt(static_cast<long double>(ctx.q()));
    const long double phi1 = static_cast<long double>(bal.x.get_d()) + bal.y.get_d() * sq;
    const long double phi2 = static_cast<long double>(bal.x.get_d()) - bal.y.get_d() * sq;
    const long double lam = std::sqrt(phi2 / phi1);  // both embeddings positive

    std::array<MqElement, 4> B;
    for (int k = 0; k < 4; ++k)
        B[k] = MqElement(P.lattice.rows()[k][0], P.lattice.rows()[k][1], P.lattice.rows()[k][2],
                         P.lattice.rows()[k][3]);
    std::array<std::array<long double, 4>, 4> G{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const MqElement s = mq_mul(ctx, B[i], galois_apply(GaloisElement::SIGMA, B[j])) +
                                mq_mul(ctx, B[j], galois_apply(GaloisElement::SIGMA, B[i]));
            const QuadElement r = project_to_subfield(s, Subfield::REAL);
            const long double U = r.x.get_d(), V = r.y.get_d();
            G[i][j] = lam * (U + V * sq) + (U - V * sq) / lam;
        }
    }

    // Cholesky G = R^T R.
    std::array<std::array<long double, 4>, 4> R{};
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            long double s = G[i][j];
            for (int k = 0; k < i; ++k) s -= R[k][i] * R[k][j];
            if (i == j) {
                if (s <= 0) throw std::logic_error("balanced form is not positive definite");
                R[i][i] = std::sqrt(s);
            } else {
                R[i][j] = s / R[i][i];
            }
        }
    }

    MqElement found;
    const auto accept = [&](const std::array<long, 4>& t) {
        MqElement e;
        for (int k = 0; k < 4; ++k) {
            if (t[k] == 0) continue;
            MqElement scaled(t[k] * B[k].c0(), t[k] * B[k].c1(), t[k] * B[k].c2(),
                             t[k] * B[k].c3());
            e = e + scaled;
        }
        if (norm_to_q(ctx, e) != p) return false;
        if (!P.field.is_zero(residue_reduce(e, P))) return false;
        found = e;
        return true;
    };

    long double bound = 4 * std::sqrt(static_cast<long double>(p.get_d())) * 1.01L;
    for (int attempt = 0; attempt < 4; ++attempt, bound *= 2)
        if (enumerate_short(R, bound, accept)) return found;
    throw std::logic_error("generator enumeration exhausted; principality violated?");
}

std::vector<std::pair<PrimeIdeal, int>> factor_principal(const QContext& ctx, const MqElement& a) {
    const bigint n = norm_to_q(ctx, a);
    if (n == 0) throw std::invalid_argument("cannot factor the zero ideal");
    if (mod_floor(n, 2) == 0 || mod_floor(n, ctx.q()) == 0)
        throw std::invalid_argument("norm must be odd and coprime to q");

    std::vector<std::pair<PrimeIdeal, int>> out;
    for (const auto& [pf, e] : factorize(n)) {
        int seen = 0;
        for (PrimeIdeal& P : primes_above(ctx, pf)) {
            const int v = valuation(ctx, a, P);
            if (v > 0) {
                seen += P.f * v;
                out.emplace_back(std::move(P), v);
            }
        }
        if (seen != e) throw std::logic_error("valuations do not account for the norm");
    }
    return out;
}

}  // namespace sedecim
