#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sedecim/classgroup.hpp"
#include "sedecim/harness.hpp"

namespace {

using namespace sedecim;

// Pinned tolerances.  The density test demands each observed ratio lie within
// kDensityTol of its limit; the cancellation test bounds every checkpointed
// partial sum by kCancelFactor * sqrt(#nonzero terms so far).
constexpr double kDensityTol = 0.01;
constexpr double kCancelFactor = 3.0;
constexpr long kOracleXMax = 20000;
constexpr long kDensityXMax = 1000000;
constexpr int kGeneratorSamples = 50;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

/* 1: the residue-symbol chain against the brute-force class number, every
 *    q and every p = 1 mod 4 up to kOracleXMax. */
Outcome criterion1() {
    RunConfig cfg;
    cfg.x_max = kOracleXMax;
    cfg.method = RunMethod::BOTH;
    std::vector<EpRecord> records = run_batch(cfg);
    long skipped = 0, bad = 0;
    for (const EpRecord& r : records) {
        if (!r.h_known)
            ++skipped;
        else if (!r.agree)
            ++bad;
    }
    Outcome o;
    o.pass = bad == 0 && skipped == 0 && records.size() == 7875;
    o.detail = fmt("%zu pairs over 7 q values, p <= %ld: %ld mismatches, %ld unchecked",
                   records.size(), kOracleXMax, bad, skipped);
    return o;
}

/* 2: three fixed pairs computed along two disjoint routes: reduced-form count
 *    + rational criterion chain versus the symmetric form count + the ideal
 *    invariant a_(p) at an explicit prime generator. */
Outcome criterion2() {
    struct Spot {
        long p;
        std::int64_t h;
        int e;
    };
    const Spot spots[] = {{13, 4, 0}, {61, 8, -1}, {157, 16, 1}};
    QContext ctx(3);
    Outcome o;
    for (const Spot& s : spots) {
        std::int64_t h1 = class_number(-3 * s.p);
        std::int64_t h2 = class_number_symmetric(-3 * s.p);
        int e1 = e_p(ctx, bigint(s.p));
        bool row = h1 == s.h && h2 == s.h && e1 == s.e;

        std::vector<PrimeIdeal> primes = primes_above(ctx, bigint(s.p));
        row = row && primes.size() == 4;
        for (const PrimeIdeal& P : primes) row = row && prop31_check(ctx, P);
        HalfComplex a = a_ideal(ctx, find_generator(ctx, primes.front()));
        row = row && a.is_integer() && a.integer() == s.e;

        if (!row) {
            o.pass = false;
            o.detail = fmt("q=3 p=%ld: expected h=%lld e=%d, got h=%lld/%lld e=%d a=%s",
                           s.p, static_cast<long long>(s.h), s.e,
                           static_cast<long long>(h1), static_cast<long long>(h2), e1,
                           a.str().c_str());
            return o;
        }
    }
    o.detail = "q=3, p in {13, 61, 157}: h in {4, 8, 16} and e = a on both routes";
    return o;
}

DensityReport density3() {
    RunConfig cfg;
    cfg.qs = {3};
    cfg.x_max = kDensityXMax;
    cfg.method = RunMethod::CRITERION;
    return density_report(3, kDensityXMax, run_batch(cfg));
}

/* 3: among p = 1 mod 4 the events 4|h, 8|h, 16|h have densities 1/2, 1/4,
 *    1/8 to within kDensityTol at x = 10^6. */
Outcome criterion3() {
    DensityReport rep = density3();
    Outcome o;
    if (rep.n1 < 30000) {
        o.pass = false;
        o.detail = fmt("only %ld primes enumerated", rep.n1);
        return o;
    }
    double r4 = double(rep.n4) / rep.n1;
    double r8 = double(rep.n8) / rep.n1;
    double r16 = double(rep.n16) / rep.n1;
    o.pass = std::fabs(r4 - 0.5) < kDensityTol && std::fabs(r8 - 0.25) < kDensityTol &&
             std::fabs(r16 - 0.125) < kDensityTol;
    o.detail = fmt("q=3 x=%ld n1=%ld: ratio4=%.6f ratio8=%.6f ratio16=%.6f (tol %.2f)",
                   kDensityXMax, rep.n1, r4, r8, r16, kDensityTol);
    return o;
}

/* 4: the signed sum of e_p cancels: at every power-of-two checkpoint and at
 *    the end, |sum| <= kCancelFactor * sqrt(max(1, #p with 8|h so far)). */
Outcome criterion4() {
    RunConfig cfg;
    cfg.qs = {3};
    cfg.x_max = kDensityXMax;
    cfg.method = RunMethod::CRITERION;
    std::vector<EpRecord> records = run_batch(cfg);

    long n1 = 0, n8 = 0;
    long long partial = 0, worst_sum = 0;
    double worst = 0.0;
    bool ok = true;
    auto inspect = [&]() {
        long long mag = partial < 0 ? -partial : partial;
        double bound = kCancelFactor * std::sqrt(n8 > 0 ? double(n8) : 1.0);
        double load = double(mag) / bound;
        if (load > worst) {
            worst = load;
            worst_sum = partial;
        }
        if (double(mag) > bound) ok = false;
    };
    for (const EpRecord& r : records) {
        ++n1;
        if (r.chi4_known && r.chi4 == 1) ++n8;
        partial += r.e;
        if ((n1 & (n1 - 1)) == 0) inspect();
    }
    inspect();

    Outcome o;
    o.pass = ok && n8 > 5000;
    o.detail = fmt("q=3 x=%ld: final sum %lld over %ld nonzero terms; "
                   "worst checkpoint |sum|/bound = %.3f at sum %lld (factor %.1f)",
                   kDensityXMax, partial, n8, worst, worst_sum, kCancelFactor);
    return o;
}

/* 5: the tabulated eta^4 coefficient rows and the mod-4 orbit picture. */
Outcome criterion5() {
    Outcome o;
    for (int q : kSupportedQ) {
        QContext ctx(q);
        if (!unit_coeff_check(ctx)) {
            o.pass = false;
            o.detail = fmt("eta^4 coefficient row failed at q=%d", q);
            return o;
        }
        if (!orbit_structure_check(ctx)) {
            o.pass = false;
            o.detail = fmt("orbit structure failed at q=%d", q);
            return o;
        }
    }
    o.detail = "eta^4 rows and mod-4 unit orbits verified for all 7 q";
    return o;
}

/* 6: invariance of the ideal machinery at sampled prime generators: the
 *    s-indicator hits once per unit orbit, the bracket ignores nu and eps^4,
 *    a_(w) ignores the generator, and a equals e_p at the norm. */
Outcome criterion6() {
    Outcome o;
    long total = 0;
    for (int q : kSupportedQ) {
        QContext ctx(q);
        std::mt19937 rng(20260813u + static_cast<unsigned>(q));
        std::uniform_int_distribution<int> coord(-9, 9);
        MqElement eps4 = unit_power(ctx, UnitBase::EPS, 4);

        int found = 0;
        long draws = 0;
        while (found < kGeneratorSamples) {
            if (++draws > 200000) {
                o.pass = false;
                o.detail = fmt("q=%d: sampling stalled after %ld draws", q, draws);
                return o;
            }
            MqElement w(coord(rng), coord(rng), coord(rng), coord(rng));
            if (w.is_zero()) continue;
            bigint n = norm_to_q(ctx, w);
            if (n == 2 || n == ctx.q() || !is_probable_prime(n)) continue;
            ++found;
            ++total;

            int ssum = 0;
            MqElement orbit = w;
            for (int k = 0; k < 4; ++k) {
                ssum += s_indicator(ctx, orbit);
                orbit = mq_mul(ctx, ctx.eps(), orbit);
            }
            bool row = ssum == 1;

            SymbolValue br = bracket(ctx, w);
            row = row && bracket(ctx, mq_mul(ctx, eps4, w)) == br;
            row = row && bracket(ctx, mq_mul(ctx, ctx.nu(), w)) == br;

            HalfComplex a = a_ideal(ctx, w);
            MqElement w2 = mq_mul(ctx, ctx.nu(), mq_mul(ctx, ctx.eps(), w));
            row = row && a_ideal(ctx, w2) == a;
            row = row && a.is_integer() && a.integer() == e_p(ctx, n);

            if (!row) {
                o.pass = false;
                o.detail = fmt("q=%d: invariant failed at generator %s (norm %s)", q,
                               w.str().c_str(), n.get_str().c_str());
                return o;
            }
        }
    }
    o.detail = fmt("%ld prime generators (%d per q): s-sum, bracket, a_(w) all invariant "
                   "and a = e_p",
                   total, kGeneratorSamples);
    return o;
}

/* 7: the residue-symbol laws on randomized inputs: multiplicativity in both
 *    entries, square of the quartic symbol, 32a-periodicity of the modulus,
 *    reciprocity-ratio constancy mod 32w, the lowering identities, and the
 *    twisted multiplicativity factorization. */
Outcome criterion7() {
    Outcome o;
    for (int q : kSupportedQ) {
        QContext ctx(q);
        std::mt19937 rng(7700u + static_cast<unsigned>(q));
        std::uniform_int_distribution<int> coord(-7, 7);

        auto draw_valid = [&]() {
            for (;;) {
                MqElement a(coord(rng), coord(rng), coord(rng), coord(rng));
                if (a.is_zero()) continue;
                bigint n = norm_to_q(ctx, a);
                if (n % 2 == 0 || n % ctx.q() == 0) continue;
                return a;
            }
        };

        for (int trial = 0; trial < 6; ++trial) {
            MqElement a = draw_valid(), b = draw_valid(), c = draw_valid();
            SymbolValue sa = power_residue(ctx, a, c, 4);
            SymbolValue sb = power_residue(ctx, b, c, 4);
            if (power_residue(ctx, mq_mul(ctx, a, b), c, 4) != sym_mul(sa, sb)) {
                o.pass = false;
                o.detail = fmt("q=%d: upper multiplicativity failed", q);
                return o;
            }
            if (power_residue(ctx, a, mq_mul(ctx, b, c), 4) !=
                sym_mul(power_residue(ctx, a, b, 4), sa)) {
                o.pass = false;
                o.detail = fmt("q=%d: lower multiplicativity failed", q);
                return o;
            }
            if (sym_pow(sa, 2) != power_residue(ctx, a, c, 2)) {
                o.pass = false;
                o.detail = fmt("q=%d: quartic square != quadratic", q);
                return o;
            }
        }

        // periodicity of (a / .)_4 mod 32a and of the reciprocity ratio mod 32w
        int periodic = 0, ratios = 0;
        for (int trial = 0; trial < 40 && (periodic < 3 || ratios < 3); ++trial) {
            MqElement a = draw_valid(), b = draw_valid();
            MqElement t(coord(rng), coord(rng), coord(rng), coord(rng));
            MqElement shift = mq_mul(ctx, MqElement::from_int(32), mq_mul(ctx, a, t));
            MqElement b2 = b + shift;
            bigint n2 = norm_to_q(ctx, b2);
            if (b2.is_zero() || n2 % 2 == 0 || n2 % ctx.q() == 0) continue;
            if (power_residue(ctx, a, b2, 4) != power_residue(ctx, a, b, 4)) {
                o.pass = false;
                o.detail = fmt("q=%d: 32a-periodicity failed", q);
                return o;
            }
            ++periodic;
            if (ideal_sum_coprime(IdealLattice::principal(ctx, a),
                                  IdealLattice::principal(ctx, b)) &&
                ideal_sum_coprime(IdealLattice::principal(ctx, a),
                                  IdealLattice::principal(ctx, b2))) {
                if (reciprocity_ratio(ctx, a, b2) != reciprocity_ratio(ctx, a, b)) {
                    o.pass = false;
                    o.detail = fmt("q=%d: ratio not constant mod 32w", q);
                    return o;
                }
                ++ratios;
            }
        }
        if (periodic < 3 || ratios < 3) {
            o.pass = false;
            o.detail = fmt("q=%d: too few periodicity samples (%d, %d)", q, periodic, ratios);
            return o;
        }

        // lowering to Z[i] at one split and one inert prime
        bool split_done = false, inert_done = false;
        for (long p : sieve_primes(500)) {
            if (p == ctx.q() || p % ctx.q() == 0) continue;
            bigint s = canonical_sqrt_minus_one(bigint(p));
            int j = jacobi(bigint(ctx.q()), bigint(p));
            if (j == 1 && !split_done) {
                if (!lowering_check(ctx, bigint(p), s, LoweringMode::SPLIT, 8, 501u + q)) {
                    o.pass = false;
                    o.detail = fmt("q=%d: split lowering failed at p=%ld", q, p);
                    return o;
                }
                split_done = true;
            } else if (j == -1 && !inert_done) {
                if (!lowering_check(ctx, bigint(p), s, LoweringMode::INERT, 8, 502u + q)) {
                    o.pass = false;
                    o.detail = fmt("q=%d: inert lowering failed at p=%ld", q, p);
                    return o;
                }
                inert_done = true;
            }
            if (split_done && inert_done) break;
        }
        if (!split_done || !inert_done) {
            o.pass = false;
            o.detail = fmt("q=%d: no split/inert prime found below 500", q);
            return o;
        }

        // twisted multiplicativity of the bracket
        int twisted = 0;
        for (int trial = 0; trial < 400 && twisted < 4; ++trial) {
            MqElement w = draw_valid(), z = draw_valid();
            TwistedRatio tr = twisted_ratio(ctx, w, z);
            if (tr.degenerate) continue;
            if (tr.mu3 == SymbolValue::ZERO) {
                o.pass = false;
                o.detail = fmt("q=%d: twisted ratio vanished on nondegenerate pair", q);
                return o;
            }
            ++twisted;
        }
        if (twisted < 4) {
            o.pass = false;
            o.detail = fmt("q=%d: only %d nondegenerate twisted pairs", q, twisted);
            return o;
        }
    }
    o.detail = "multiplicativity, square law, 32a-periodicity, ratio constancy, "
               "lowering and twisted factorization hold for all 7 q";
    return o;
}

/* 8: the trace-form discriminant of the order and the count of ambiguous
 *    classes of discriminant -qp. */
Outcome criterion8() {
    Outcome o;
    const long sample_p[] = {5, 13, 17, 29, 37};
    for (int q : kSupportedQ) {
        QContext ctx(q);
        if (!order_discriminant_check(ctx)) {
            o.pass = false;
            o.detail = fmt("trace-form discriminant failed at q=%d", q);
            return o;
        }
        for (long p : sample_p) {
            std::int64_t D = -static_cast<std::int64_t>(q) * p;
            if (ambiguous_count(D) != 2) {
                o.pass = false;
                o.detail = fmt("ambiguous class count at D=%lld is not 2",
                               static_cast<long long>(D));
                return o;
            }
            if (class_number(D) != class_number_symmetric(D)) {
                o.pass = false;
                o.detail = fmt("class number routes disagree at D=%lld",
                               static_cast<long long>(D));
                return o;
            }
        }
    }
    o.detail = "|det| = 16 q^2 for all 7 q; 2 ambiguous classes at 35 sampled -qp";
    return o;
}

const char* kTitles[8] = {
    "criterion chain matches the class-number oracle",
    "dual-route spot checks at q=3, p in {13, 61, 157}",
    "densities of 4|h, 8|h, 16|h",
    "cancellation of the e_p partial sums",
    "unit coefficient rows and orbit structure",
    "invariance at sampled prime generators",
    "residue-symbol laws on randomized inputs",
    "order discriminants and ambiguous classes",
};

Outcome run_criterion(int n) {
    switch (n) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
    }
    return {false, "unknown criterion"};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            wanted.push_back(std::atoi(argv[++i]));
        } else if (std::strncmp(argv[i], "--criterion=", 12) == 0) {
            wanted.push_back(std::atoi(argv[i] + 12));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (wanted.empty())
        for (int n = 1; n <= 8; ++n) wanted.push_back(n);

    bool all = true;
    for (int n : wanted) {
        if (n < 1 || n > 8) {
            std::fprintf(stderr, "criterion number must be 1..8\n");
            return 2;
        }
        Outcome o = run_criterion(n);
        all = all && o.pass;
        std::printf("[%s] criterion %d: %s — %s\n", o.pass ? "PASS" : "FAIL", n,
                    kTitles[n - 1], o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
