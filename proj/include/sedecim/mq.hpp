#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "sedecim/arith.hpp"

namespace sedecim {

/** The seven primes q = 3 mod 4 for which O_{M_q} is a principal ideal domain. */
inline constexpr std::array<int, 7> kSupportedQ = {3, 7, 11, 19, 43, 67, 163};

bool is_supported_q(int q);

enum class GaloisElement { IDENTITY, SIGMA, TAU, SIGMATAU };
enum class Subfield { GAUSS, REAL, IMAG };

/**
 * MqElement: an element of O_{M_q}, M_q = Q(i, sqrt q), written on the
 * integral basis {1, i, w, iw} with w = (1 + i sqrt q)/2.
 *
 * Addition and the Galois action are q-independent coordinate maps;
 * multiplication needs the context (w^2 = w - (q+1)/4).
 */
class MqElement {
public:
    MqElement() : _c{} {}
    MqElement(bigint c0, bigint c1, bigint c2, bigint c3)
        : _c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static MqElement from_int(long n) { return MqElement(n, 0, 0, 0); }

    const bigint& c0() const { return _c[0]; }
    const bigint& c1() const { return _c[1]; }
    const bigint& c2() const { return _c[2]; }
    const bigint& c3() const { return _c[3]; }
    const std::array<bigint, 4>& coords() const { return _c; }

    bool is_zero() const { return _c[0] == 0 && _c[1] == 0 && _c[2] == 0 && _c[3] == 0; }

    bool operator==(const MqElement& o) const { return _c == o._c; }
    bool operator!=(const MqElement& o) const { return !(*this == o); }

    MqElement operator+(const MqElement& o) const {
        return {_c[0] + o._c[0], _c[1] + o._c[1], _c[2] + o._c[2], _c[3] + o._c[3]};
    }
    MqElement operator-(const MqElement& o) const {
        return {_c[0] - o._c[0], _c[1] - o._c[1], _c[2] - o._c[2], _c[3] - o._c[3]};
    }
    MqElement operator-() const { return {-_c[0], -_c[1], -_c[2], -_c[3]}; }

    std::string str() const;

private:
    std::array<bigint, 4> _c;
};

std::ostream& operator<<(std::ostream& os, const MqElement& a);

/**
 * QuadElement: an element x + y*g of the ring of integers of one quadratic
 * subfield, g = i (GAUSS), sqrt q (REAL) or w (IMAG).
 */
struct QuadElement {
    Subfield field;
    bigint x, y;

    bool operator==(const QuadElement& o) const {
        return field == o.field && x == o.x && y == o.y;
    }
};

class QContext;

MqElement mq_mul(const QContext& ctx, const MqElement& a, const MqElement& b);
MqElement mq_pow(const QContext& ctx, const MqElement& a, unsigned long e);

/** Coordinate action of a Galois element; the group is Klein four. */
MqElement galois_apply(GaloisElement g, const MqElement& a);

/** Tr_{M_q/Q}, the sum over all four conjugates: 4 c0 + 2 c2. */
bigint trace_to_q(const MqElement& a);

/** Relative norm a * psi(a), psi the generator of Gal(M_q/K). */
QuadElement norm_to_subfield(const QContext& ctx, const MqElement& a, Subfield k);

/** Absolute norm, product of all four conjugates; non-negative. */
bigint norm_to_q(const QContext& ctx, const MqElement& a);

/** The rational part u of u + v sqrt q; rejects non-REAL input. */
const bigint& u_part(const QuadElement& a);

/** Embed a subfield element back into O_{M_q} coordinates. */
MqElement embed(const QuadElement& a);

/** Extract the subfield coordinates of a, which must lie in the subring. */
QuadElement project_to_subfield(const MqElement& a, Subfield k);

/** Multiplication inside Z[sqrt q]. */
QuadElement real_mul(int q, const QuadElement& a, const QuadElement& b);
QuadElement real_conj(const QuadElement& a);
QuadElement real_pow(int q, const QuadElement& a, unsigned long e);

enum class UnitBase { NU, EPS };

/** base^k for base in {nu, eps}; negative k uses that both units have norm 1. */
MqElement unit_power(const QContext& ctx, UnitBase base, long k);

/** Inverse of a unit (norm 1): the product of its three conjugates. */
MqElement unit_inverse(const QContext& ctx, const MqElement& u);

/** Gram determinant of the trace form on {1, i, w, iw}; |det| must be 16 q^2. */
bool order_discriminant_check(const QContext& ctx);
bigint trace_form_det(const QContext& ctx);

/**
 * QContext: per-q constants of M_q.  The unit coordinates are precomputed
 * and re-derived at construction from the defining expressions; construction
 * throws if any self-check fails.
 */
class QContext {
public:
    explicit QContext(int q);

    int q() const { return _q; }
    int m() const { return (_q + 1) / 4; }          // w^2 = w - m
    int n_q() const { return 2 * _q; }
    const MqElement& nu() const { return _nu; }      // torsion generator
    const MqElement& eps() const { return _eps; }    // fundamental unit
    int torsion_order() const { return _q == 3 ? 12 : 4; }

    /** eta = eps * sigma(eps) = a + b sqrt q, a totally positive unit of Z[sqrt q]. */
    const QuadElement& eta() const { return _eta; }
    /** eta^4 = A + B sqrt q; 2A and 2qB are the published coefficient rows. */
    const QuadElement& eta4() const { return _eta4; }

    /** Multiplication-by-eta matrix mod 4, column convention (u, v). */
    const std::array<std::array<int, 2>, 2>& orbit_matrix() const { return _orbit; }

private:
    int _q;
    MqElement _nu, _eps;
    QuadElement _eta, _eta4;
    std::array<std::array<int, 2>, 2> _orbit;
};

}  // namespace sedecim
