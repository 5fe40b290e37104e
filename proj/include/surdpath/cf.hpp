#pragma once

// Regular continued fractions of quadratic surds, the run-length compression
// of the LPP, and the bridge between the two: a_n = t_n with the complete
// quotients tracking -y_n* / -1/y_n* by parity. On top of that sit the two
// classical shape theorems this library verifies on concrete inputs:
// Legendre (sqrt of a rational R > 1 has period [a_1..a_2,a_1,2a_0] with a
// palindromic interior) and Galois (reduced surds have purely periodic
// expansions whose reversal expands -1/x*).

#include <cstddef>
#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "surdpath/errors.hpp"
#include "surdpath/int_util.hpp"
#include "surdpath/lpp.hpp"
#include "surdpath/surd.hpp"

namespace surdpath {

// ---------------------------------------------------------------------------
// Direction runs
// ---------------------------------------------------------------------------

enum class RunOrientation : uint8_t { Start, LR, RL };

inline const char* orientation_name(RunOrientation o) {
    switch (o) {
        case RunOrientation::Start: return "start";
        case RunOrientation::LR: return "LR";
        case RunOrientation::RL: return "RL";
    }
    return "?";
}

/// One maximal block of same-direction steps: starts at y, runs t steps.
struct DirectionRun {
    QuadraticSurd y;
    RunOrientation orientation;
    int64_t t;
};

/// First n_runs maximal runs of the LPP, reading the period cyclically.
/// Runs ignore the period boundary: a block continuing across x_T counts
/// as one run, which is what makes t_n line up with the CF terms.
inline std::vector<DirectionRun> direction_runs(const LppTrace& trace, size_t n_runs) {
    if (n_runs == 0) fail(Errc::PreconditionViolated, "n_runs must be positive");
    auto T = static_cast<size_t>(trace.period);
    auto step_at = [&](size_t j) { return trace.steps[j % T]; };
    std::vector<DirectionRun> runs;
    size_t pos = 0;
    while (runs.size() < n_runs) {
        Step dir = step_at(pos);
        size_t len = 1;
        while (step_at(pos + len) == dir) {
            ++len;
            if (len > 2 * T) fail(Errc::PreconditionViolated, "trace has only one direction");
        }
        RunOrientation o = RunOrientation::Start;
        if (pos > 0)
            o = step_at(pos - 1) == Step::Left ? RunOrientation::LR : RunOrientation::RL;
        runs.push_back({trace.nodes[pos % T], o, static_cast<int64_t>(len)});
        pos += len;
    }
    return runs;
}

/// Number of runs in one period, when the period boundary is itself a
/// direction change (true for reduced roots); nullopt when a run straddles it.
inline std::optional<size_t> runs_per_period(const LppTrace& trace) {
    auto T = static_cast<size_t>(trace.period);
    auto step_at = [&](size_t j) { return trace.steps[j % T]; };
    size_t pos = 0, count = 0;
    while (pos < T) {
        Step dir = step_at(pos);
        size_t len = 1;
        while (step_at(pos + len) == dir) {
            ++len;
            if (len > 2 * T) return std::nullopt;
        }
        pos += len;
        ++count;
    }
    if (pos != T) return std::nullopt;
    return count;
}

// ---------------------------------------------------------------------------
// Continued fraction expansion
// ---------------------------------------------------------------------------

/// Partial quotients a_0.. plus the detected period of the complete-quotient
/// sequence. `quotients[i]` is the exact complete quotient the term a_i was
/// floored from, kept for the reconstruction identities.
struct CfExpansion {
    QuadraticSurd root;
    std::vector<int64_t> terms;
    std::vector<QuadraticSurd> quotients;
    std::optional<size_t> period_start;
    std::optional<size_t> period_len;

    std::vector<int64_t> least_period() const {
        if (!period_start) fail(Errc::PreconditionViolated, "no period detected");
        return {terms.begin() + static_cast<long>(*period_start),
                terms.begin() + static_cast<long>(*period_start + *period_len)};
    }
};

/// ζ_0 = x, a_n = floor(ζ_n), ζ_{n+1} = 1/(ζ_n - a_n), all exact. By default
/// the walk stops at the first recurrence of a complete quotient (which for
/// quadratic surds is the least period) and raises StepBudgetExceeded if
/// n_terms runs out first; with exact_terms=true it emits exactly n_terms
/// terms and never raises, which is the mode the oracle comparison uses.
inline CfExpansion cf_expand(const QuadraticSurd& x, size_t n_terms = 0,
                             bool exact_terms = false) {
    if (n_terms == 0) n_terms = static_cast<size_t>(default_max_steps(x.radicand()));
    CfExpansion e{x, {}, {}, std::nullopt, std::nullopt};
    std::map<std::tuple<int, int64_t, int64_t>, size_t> seen;
    QuadraticSurd z = x;
    for (size_t i = 0; i < n_terms; ++i) {
        if (!e.period_start) {
            auto [it, fresh] = seen.try_emplace({z.eps(), z.c(), z.d()}, i);
            if (!fresh) {
                e.period_start = it->second;
                e.period_len = i - it->second;
                if (!exact_terms) return e;
            }
        }
        int64_t a = floor_surd(z);
        e.terms.push_back(a);
        e.quotients.push_back(z);
        QuadraticSurd frac =
            make_surd(z.radicand(), z.eps(), checked_sub(z.c(), checked_mul(a, z.d())), z.d());
        z = reciprocal(frac);
    }
    if (!exact_terms && !e.period_start)
        fail(Errc::StepBudgetExceeded,
             "no complete quotient recurred within " + std::to_string(n_terms) + " terms");
    return e;
}

/// Smallest rho dividing v.size() such that v is rho-periodic.
inline size_t minimal_period(const std::vector<int64_t>& v) {
    for (size_t rho = 1; rho <= v.size(); ++rho) {
        if (v.size() % rho != 0) continue;
        bool ok = true;
        for (size_t i = rho; i < v.size() && ok; ++i) ok = v[i] == v[i - rho];
        if (ok) return rho;
    }
    return v.size();
}

// ---------------------------------------------------------------------------
// Convergents
// ---------------------------------------------------------------------------

/// Convergent numerator/denominator in lowest terms. Unbounded integers:
/// q_n grows geometrically, far past 64 bits within a few dozen terms.
struct ConvergentPair {
    mpz_class p;
    mpz_class q;
};

namespace detail {
/// sign of m*sqrt(N) - t, exact.
inline int cmp_radical(const mpz_class& m, int64_t N, const mpz_class& t) {
    if (m == 0) return t > 0 ? -1 : 1;  // t != 0 along irrational comparisons
    if (m > 0 && t <= 0) return 1;
    if (m < 0 && t >= 0) return -1;
    mpz_class lhs = m * m * static_cast<long>(N), rhs = t * t;
    int mag = cmp(lhs, rhs);
    return m > 0 ? mag : -mag;
}
}  // namespace detail

/// First n convergents p_k/q_k by the standard recurrence. Each step is
/// cross-checked: determinant p_k q_{k-1} - p_{k-1} q_k = ±1 (which also
/// certifies coprimality) and the stored complete quotient must satisfy
/// x = (p_{k-1} ζ_k + p_{k-2})/(q_{k-1} ζ_k + q_{k-2}), compared exactly by
/// matching sqrt(N) coefficients.
inline std::vector<ConvergentPair> convergents(const CfExpansion& e, size_t n) {
    if (n > e.terms.size()) fail(Errc::PreconditionViolated, "fewer terms than requested");
    int64_t N = e.root.radicand();
    mpz_class f(e.root.eps()), g(static_cast<long>(e.root.c())), h(static_cast<long>(e.root.d()));
    std::vector<ConvergentPair> out;
    mpz_class p_prev2 = 0, p_prev1 = 1, q_prev2 = 1, q_prev1 = 0;
    for (size_t k = 0; k < n; ++k) {
        mpz_class a(static_cast<long>(e.terms[k]));
        mpz_class p = a * p_prev1 + p_prev2;
        mpz_class q = a * q_prev1 + q_prev2;
        mpz_class det = p * q_prev1 - p_prev1 * q;
        if (det != 1 && det != -1)
            fail(Errc::PreconditionViolated, "convergent determinant is not ±1");
        if (k < e.quotients.size()) {
            const QuadraticSurd& zeta = e.quotients[k];
            mpz_class ez(zeta.eps()), u(static_cast<long>(zeta.c())),
                v(static_cast<long>(zeta.d()));
            mpz_class qg_ph = q_prev1 * g - p_prev1 * h;
            bool radical_ok = ez * qg_ph + u * q_prev1 * f == -v * q_prev2 * f;
            bool rational_ok =
                ez * q_prev1 * f * static_cast<long>(N) + u * qg_ph == v * (p_prev2 * h - q_prev2 * g);
            if (!radical_ok || !rational_ok)
                fail(Errc::PreconditionViolated, "complete quotient reconstruction failed");
        }
        out.push_back({p, q});
        p_prev2 = p_prev1;
        p_prev1 = p;
        q_prev2 = q_prev1;
        q_prev1 = q;
    }
    return out;
}

/// |x - p_n/q_n| < 1/q_n^2 for every computed convergent, as an exact
/// integer inequality: (wq-h) < uq*sqrt(N) < (wq+h) with u=q*eps, w=ph-qc.
inline bool convergent_error_bound_ok(const CfExpansion& e,
                                      const std::vector<ConvergentPair>& pairs) {
    int64_t N = e.root.radicand();
    mpz_class f(e.root.eps()), g(static_cast<long>(e.root.c())), h(static_cast<long>(e.root.d()));
    for (const auto& [p, q] : pairs) {
        mpz_class u = q * f, w = p * h - q * g, m = u * q;
        if (detail::cmp_radical(m, N, w * q - h) <= 0) return false;
        if (detail::cmp_radical(m, N, w * q + h) >= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Legendre: continued fractions of square roots of rationals
// ---------------------------------------------------------------------------

struct LegendreReport {
    int64_t r_num = 0, r_den = 0;  // R in lowest terms
    int64_t radicand = 0, q = 0;   // sqrt(R) = sqrt(N)/q with N = f*g, q = g
    CfExpansion expansion;
    int64_t a0 = 0;
    std::vector<int64_t> period;
    bool periodic_from_one = false;
    bool interior_palindrome = false;
    bool terminal_twice_a0 = false;

    bool ok() const { return periodic_from_one && interior_palindrome && terminal_twice_a0; }
};

/// CF of sqrt(R) for rational R = f/g > 1, not a rational square, plus the
/// verdicts on the Legendre shape [a0; a1,..,a2,a1, 2*a0].
inline LegendreReport sqrt_cf(int64_t r_num, int64_t r_den, size_t n_terms = 0) {
    if (r_num <= 0 || r_den <= 0)
        fail(Errc::PreconditionViolated, "R must be a positive rational");
    int64_t common = std::gcd(r_num, r_den);
    int64_t f = r_num / common, g = r_den / common;
    if (f <= g) fail(Errc::NotGreaterThanOne, "R must be greater than 1");
    if (is_perfect_square(f) && is_perfect_square(g))
        fail(Errc::RationalSquare, "R must not be the square of a rational");
    QuadraticSurd alpha = make_surd(checked_mul(f, g), 1, 0, g);

    LegendreReport rep{f, g, alpha.radicand(), g, cf_expand(alpha, n_terms), 0, {}, false,
                       false, false};
    rep.a0 = rep.expansion.terms.at(0);
    rep.periodic_from_one = rep.expansion.period_start && *rep.expansion.period_start == 1;
    if (rep.expansion.period_start) {
        rep.period = rep.expansion.least_period();
        rep.terminal_twice_a0 = !rep.period.empty() && rep.period.back() == 2 * rep.a0;
        rep.interior_palindrome = true;
        size_t n = rep.period.size() - 1;  // interior a_1..a_{n}
        for (size_t i = 0; i < n; ++i)
            if (rep.period[i] != rep.period[n - 1 - i]) rep.interior_palindrome = false;
    }
    return rep;
}

/// a_n = t_n and the parity chain ζ_n = -y_n* (n even) / -1/y_n* (n odd),
/// for roots sqrt(N)/q with N > q^2, verified exactly out to `horizon` terms.
inline bool lpp_cf_agreement_sqrt(const QuadraticSurd& alpha, size_t horizon) {
    if (alpha.c() != 0 || alpha.eps() != 1 ||
        alpha.radicand() <= checked_mul(alpha.d(), alpha.d()))
        fail(Errc::PreconditionViolated, "agreement check needs p=0 and N > q^2");
    LppTrace trace = trace_lpp(alpha);
    std::vector<DirectionRun> runs = direction_runs(trace, horizon);
    CfExpansion cf = cf_expand(alpha, horizon, /*exact_terms=*/true);
    for (size_t n = 0; n < horizon; ++n) {
        if (cf.terms[n] != runs[n].t) return false;
        QuadraticSurd expected = (n % 2 == 0) ? neg_conjugate(runs[n].y)
                                              : reciprocal(neg_conjugate(runs[n].y));
        if (!(cf.quotients[n] == expected)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Galois: reduced quadratic surds
// ---------------------------------------------------------------------------

/// x > 1 and -1 < x* < 0, decided by integer comparisons only.
inline bool is_reduced_surd(const QuadraticSurd& x) {
    if (x.eps() != 1) return false;
    int64_t N = x.radicand(), c = x.c(), d = x.d();
    int64_t dc = checked_sub(d, c);
    bool greater_than_one = dc < 0 || checked_mul(dc, dc) < N;
    bool conj_negative = c < 0 || checked_mul(c, c) < N;
    int64_t s = checked_add(c, d);
    bool conj_above_minus_one = s > 0 && checked_mul(s, s) > N;
    return greater_than_one && conj_negative && conj_above_minus_one;
}

/// aX^2 + bX + c with a > 0, c < 0; the positive root is (sqrt(Δ)-b)/(2a).
struct QuadraticPoly {
    int64_t a;
    int64_t b;
    int64_t c;

    int64_t discriminant() const {
        return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c)));
    }
};

/// Positive root of P as a surd (sqrt(Δ)+p)/q with p=-b, q=2a, with every
/// consequence of reducedness asserted: p>0, p^2<Δ, (p-q)^2<Δ<(p+q)^2.
/// The radicand is left as Δ (possibly non-squarefree); use reduce_radicand
/// for the small form.
inline QuadraticSurd reduced_from_poly(const QuadraticPoly& poly) {
    if (poly.a <= 0) fail(Errc::PreconditionViolated, "leading coefficient must be positive");
    int64_t delta = poly.discriminant();
    if (delta <= 1 || is_perfect_square(delta))
        fail(Errc::NotReduced, "discriminant must be positive and not a perfect square");
    int64_t p = checked_neg(poly.b), q = checked_mul(2, poly.a);
    if (p <= 0) fail(Errc::NotReduced, "positive root needs -b > 0");
    if (checked_mul(p, p) >= delta) fail(Errc::NotReduced, "needs p^2 < discriminant");
    int64_t pm = checked_sub(p, q), pp = checked_add(p, q);
    if (checked_mul(pm, pm) >= delta) fail(Errc::NotReduced, "needs (p-q)^2 < discriminant");
    if (checked_mul(pp, pp) <= delta) fail(Errc::NotReduced, "needs (p+q)^2 > discriminant");
    QuadraticSurd x = make_surd(delta, 1, p, q);
    if (!is_reduced_surd(x)) fail(Errc::NotReduced, "root is not a reduced surd");
    return x;
}

struct GaloisReport {
    QuadraticSurd x;
    QuadraticSurd recip_neg_conj;  // -1/x*
    CfExpansion expansion;
    std::vector<int64_t> period;        // least period of CF(x), from a_0
    std::vector<int64_t> recip_period;  // least period of CF(-1/x*)
    std::vector<int64_t> t_pattern;     // t'_0..t'_{m-1} of the LPP of x
    size_t m_lpp = 0;                   // runs per LPP period of x
    bool purely_periodic = false;
    bool m_even = false;
    bool reversal_ok = false;         // CF(-1/x*) period is CF(x) period reversed
    bool a_eq_t_ok = false;           // a_n(x) = t_n of the LPP of -1/x*
    bool parity_chain_ok = false;     // ζ_n = -1/y_n* (n even) / -y_n* (n odd)
    bool reverse_reading_ok = false;  // a_i(x) = t'_{m-1-i}

    bool ok() const {
        return purely_periodic && m_even && reversal_ok && a_eq_t_ok && parity_chain_ok &&
               reverse_reading_ok;
    }
};

/// Verify Galois' theorem on a reduced surd: purely periodic expansion,
/// reversal law for -1/x*, and both LPP readings of the terms. `horizon`
/// is the number of a_n = t_n terms to compare (0 = two LPP periods).
inline GaloisReport galois_check(const QuadraticSurd& x, size_t horizon = 0) {
    if (!is_reduced_surd(x)) fail(Errc::NotReduced, "galois_check needs a reduced surd");
    QuadraticSurd alpha = reciprocal(neg_conjugate(x));  // also reduced
    GaloisReport rep{x,     alpha, cf_expand(x), {},    {},    {},
                     0,     false, false,        false, false, false,
                     false};
    rep.purely_periodic = rep.expansion.period_start && *rep.expansion.period_start == 0;
    if (!rep.purely_periodic) return rep;
    rep.period = rep.expansion.least_period();

    CfExpansion recip_cf = cf_expand(alpha);
    bool recip_pure = recip_cf.period_start && *recip_cf.period_start == 0;
    if (recip_pure) rep.recip_period = recip_cf.least_period();
    std::vector<int64_t> reversed(rep.period.rbegin(), rep.period.rend());
    rep.reversal_ok = recip_pure && rep.recip_period == reversed;

    LppTrace trace_x = trace_lpp(x);
    auto m = runs_per_period(trace_x);
    if (!m) return rep;  // cannot happen for reduced roots; reported as failure
    rep.m_lpp = *m;
    rep.m_even = rep.m_lpp % 2 == 0;
    std::vector<DirectionRun> runs_x = direction_runs(trace_x, rep.m_lpp);
    for (const auto& run : runs_x) rep.t_pattern.push_back(run.t);

    rep.reverse_reading_ok = true;
    for (size_t i = 0; i < rep.m_lpp; ++i)
        if (rep.period[i % rep.period.size()] != rep.t_pattern[rep.m_lpp - 1 - i])
            rep.reverse_reading_ok = false;

    LppTrace trace_alpha = trace_lpp(alpha);
    auto m_alpha = runs_per_period(trace_alpha);
    if (horizon == 0) horizon = m_alpha ? 2 * *m_alpha : 2 * rep.m_lpp;
    std::vector<DirectionRun> runs_alpha = direction_runs(trace_alpha, horizon);
    CfExpansion zetas = cf_expand(x, horizon, /*exact_terms=*/true);
    rep.a_eq_t_ok = rep.parity_chain_ok = true;
    for (size_t n = 0; n < horizon; ++n) {
        if (rep.period[n % rep.period.size()] != runs_alpha[n].t) rep.a_eq_t_ok = false;
        QuadraticSurd expected = (n % 2 == 0) ? reciprocal(neg_conjugate(runs_alpha[n].y))
                                              : neg_conjugate(runs_alpha[n].y);
        if (!(zetas.quotients[n] == expected)) rep.parity_chain_ok = false;
    }
    return rep;
}

}  // namespace surdpath
