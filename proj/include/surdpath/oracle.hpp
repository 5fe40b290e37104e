#pragma once

// Independent verification path. Values are bracketed by exact rational
// intervals around sqrt(N) at k decimal digits, and floors / CF terms are
// recomputed from the intervals alone, escalating k on ambiguity. Nothing
// here calls the exact kernel's floor or CF recursion - agreement between
// the two routes is what the test suite is buying.

#include <algorithm>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "surdpath/errors.hpp"
#include "surdpath/surd.hpp"

namespace surdpath::oracle {

inline constexpr int kInitialDigits = 20;
inline constexpr int kMaxDigits = 256;    // cap for single-floor escalation
inline constexpr int kCfMaxDigits = 1024; // CF brackets widen as q_n^2, so go deeper

/// Open rational bracket lo < sqrt(N) < hi with hi - lo <= 10^-k.
struct IntervalApprox {
    mpq_class lo;
    mpq_class hi;
};

inline IntervalApprox sqrt_interval(int64_t N, int k) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
    mpz_class root;
    mpz_class scaled = mpz_class(static_cast<long>(N)) * scale * scale;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    IntervalApprox iv{mpq_class(root, scale), mpq_class(root + 1, scale)};
    iv.lo.canonicalize();
    iv.hi.canonicalize();
    return iv;
}

/// Bracket for the value of x at k digits of sqrt precision.
inline IntervalApprox value_interval(const QuadraticSurd& x, int k) {
    IntervalApprox root = sqrt_interval(x.radicand(), k);
    mpq_class c(static_cast<long>(x.c())), d(static_cast<long>(x.d()));
    if (x.eps() == 1) return {(root.lo + c) / d, (root.hi + c) / d};
    return {(c - root.hi) / d, (c - root.lo) / d};
}

inline mpz_class rational_floor(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

namespace detail {
inline int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) fail(Errc::Overflow, "oracle result exceeds 64 bits");
    return static_cast<int64_t>(z.get_si());
}
}  // namespace detail

/// Floor of the value from one bracket, or nullopt when the endpoints
/// straddle an integer and the caller should retry at higher precision.
inline std::optional<int64_t> oracle_floor(const QuadraticSurd& x, int k) {
    IntervalApprox iv = value_interval(x, k);
    mpz_class lo_floor = rational_floor(iv.lo);
    if (lo_floor != rational_floor(iv.hi)) return std::nullopt;
    return detail::to_int64(lo_floor);
}

/// Floor with internal precision escalation. Terminates because the value
/// is irrational; the digit cap exists only to surface logic errors.
inline int64_t oracle_floor_auto(const QuadraticSurd& x) {
    for (int k = kInitialDigits;; k = std::min(2 * k, kMaxDigits)) {
        if (auto f = oracle_floor(x, k)) return *f;
        if (k >= kMaxDigits) break;
    }
    fail(Errc::Overflow, "oracle floor still ambiguous at the digit cap");
}

/// First n_terms regular CF terms recomputed purely on intervals.
inline std::vector<int64_t> oracle_cf(const QuadraticSurd& x, size_t n_terms) {
    for (int k = kInitialDigits;; k = std::min(2 * k, kCfMaxDigits)) {
        std::vector<int64_t> terms;
        IntervalApprox z = value_interval(x, k);
        bool ambiguous = false;
        while (terms.size() < n_terms) {
            mpz_class lo_floor = rational_floor(z.lo);
            if (lo_floor != rational_floor(z.hi)) {
                ambiguous = true;
                break;
            }
            terms.push_back(detail::to_int64(lo_floor));
            if (terms.size() == n_terms) break;
            mpq_class a(lo_floor);
            mpq_class frac_lo = z.lo - a, frac_hi = z.hi - a;
            if (sgn(frac_lo) <= 0) {  // reciprocal would cross zero
                ambiguous = true;
                break;
            }
            z = {1 / frac_hi, 1 / frac_lo};
        }
        if (!ambiguous) return terms;
        if (k >= kCfMaxDigits) break;
    }
    fail(Errc::Overflow, "oracle CF still ambiguous at the digit cap");
}

/// Exact three-way value comparison, valid across different radicands.
/// Equality is decided algebraically; strict order by interval separation.
inline int compare_values(const QuadraticSurd& a, const QuadraticSurd& b) {
    // (e1 sqrt(N1)+c1)/d1 = (e2 sqrt(N2)+c2)/d2 iff the rational parts match
    // and the radical parts do: d1 c2 = d2 c1, e1 = e2, d2^2 N1 = d1^2 N2.
    mpz_class d1(static_cast<long>(a.d())), d2(static_cast<long>(b.d()));
    mpz_class c1(static_cast<long>(a.c())), c2(static_cast<long>(b.c()));
    mpz_class n1(static_cast<long>(a.radicand())), n2(static_cast<long>(b.radicand()));
    if (a.eps() == b.eps() && d1 * c2 == d2 * c1 && d2 * d2 * n1 == d1 * d1 * n2) return 0;
    for (int k = kInitialDigits;; k = std::min(2 * k, kMaxDigits)) {
        IntervalApprox ia = value_interval(a, k), ib = value_interval(b, k);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        if (k >= kMaxDigits) break;
    }
    fail(Errc::Overflow, "values still inseparable at the digit cap");
}

/// Truncated decimal expansion "i.ffff" with `digits` fractional digits.
inline std::string decimal_annotation(const QuadraticSurd& x, int digits = 12) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    for (int k = kInitialDigits;; k = std::min(2 * k, kMaxDigits)) {
        IntervalApprox iv = value_interval(x, k);
        mpz_class lo_scaled = rational_floor(mpq_class(scale) * iv.lo);
        if (lo_scaled == rational_floor(mpq_class(scale) * iv.hi)) {
            mpz_class whole = lo_scaled / scale, frac = lo_scaled % scale;
            std::string f = frac.get_str();
            return whole.get_str() + "." +
                   std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
        }
        if (k >= kMaxDigits) break;
    }
    fail(Errc::Overflow, "decimal annotation still ambiguous at the digit cap");
}

}  // namespace surdpath::oracle
