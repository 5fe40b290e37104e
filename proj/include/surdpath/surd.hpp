#pragma once

// Exact representation of quadratic surds (eps*sqrt(N)+c)/d.
//
// Every node of the Calkin-Wilf tree of (sqrt(N)+p)/q has this shape with
// eps in {-1,+1}, c an integer and d a positive integer dividing N - c^2.
// That closure property is what makes the whole library run on integer
// arithmetic: child steps, parent steps, reciprocals and floors all stay
// inside the representation. The divisibility invariant is enforced at
// construction and is therefore a standing runtime check on every step.

#include <cstdint>
#include <string>

#include "surdpath/errors.hpp"
#include "surdpath/int_util.hpp"

namespace surdpath {

class QuadraticSurd {
public:
    /// Validating factory for (eps*sqrt(N)+c)/d.
    static QuadraticSurd make(int64_t N, int eps, int64_t c, int64_t d) {
        if (d <= 0) fail(Errc::NonPositiveDenominator, "denominator must be positive");
        if (N <= 1 || is_perfect_square(N))
            fail(Errc::SquareRadicand, "radicand must be >= 2 and not a perfect square");
        if (eps != 1 && eps != -1) fail(Errc::PreconditionViolated, "eps must be +1 or -1");
        int64_t residue = checked_sub(N, checked_mul(c, c));
        if (residue % d != 0) fail(Errc::DivisibilityViolation, "denominator must divide N - c^2");
        // Positivity: eps=+1 needs c > -sqrt(N); eps=-1 needs c > sqrt(N).
        bool positive = (eps == 1) ? (c >= 0 || c * c < N) : (c > 0 && c * c > N);
        if (!positive) fail(Errc::NonPositiveValue, "value (eps*sqrt(N)+c)/d must be positive");
        return QuadraticSurd(N, eps, c, d);
    }

    int64_t radicand() const { return N_; }
    int eps() const { return eps_; }
    int64_t c() const { return c_; }
    int64_t d() const { return d_; }

    /// Componentwise equality. Comparing surds over different radicands is
    /// an error: equal values can have unequal components there (use the
    /// oracle's value comparison instead).
    bool equals(const QuadraticSurd& other) const {
        if (N_ != other.N_)
            fail(Errc::PreconditionViolated, "cross-radicand comparison is not defined");
        return eps_ == other.eps_ && c_ == other.c_ && d_ == other.d_;
    }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return a.equals(b); }
    friend bool operator!=(const QuadraticSurd& a, const QuadraticSurd& b) { return !a.equals(b); }

private:
    QuadraticSurd(int64_t N, int eps, int64_t c, int64_t d) : N_(N), eps_(eps), c_(c), d_(d) {}

    int64_t N_;
    int eps_;
    int64_t c_;
    int64_t d_;
};

inline QuadraticSurd make_surd(int64_t N, int eps, int64_t c, int64_t d) {
    return QuadraticSurd::make(N, eps, c, d);
}

/// x + 1. Keeps eps, shifts c by d.
inline QuadraticSurd right_child(const QuadraticSurd& x) {
    return make_surd(x.radicand(), x.eps(), checked_add(x.c(), x.d()), x.d());
}

/// x/(x+1), normalized back into (eps,c,d) form. Two branches: when
/// N-(c+d)^2 > 0 the sign flips, otherwise it is kept.
inline QuadraticSurd left_child(const QuadraticSurd& x) {
    int64_t N = x.radicand(), c = x.c(), d = x.d();
    int64_t residue = (N - c * c) / d;  // exact by the divisibility invariant
    int64_t s = checked_add(c, d);
    int64_t gap = checked_sub(N, checked_mul(s, s));  // N - (c+d)^2, never 0
    if (gap > 0) {
        return make_surd(N, -x.eps(), checked_sub(residue, c), gap / d);
    }
    return make_surd(N, x.eps(), checked_sub(c, residue), checked_neg(gap) / d);
}

/// Inverse of right_child: x - 1 = (sqrt(N)+c-d)/d. Defined on nodes with
/// eps=+1 and (c-d)^2 < N, the shape every in-tree right child has.
inline QuadraticSurd right_parent(const QuadraticSurd& x) {
    int64_t diff = checked_sub(x.c(), x.d());
    if (x.eps() != 1 || checked_mul(diff, diff) > x.radicand())
        fail(Errc::PreconditionViolated, "right_parent needs eps=+1 and (c-d)^2 < N");
    return make_surd(x.radicand(), 1, diff, x.d());
}

/// Inverse of left_child: x/(1-x) renormalized. Defined on nodes with
/// eps=+1 and d-c > sqrt(N), the shape every in-tree left child has
/// (left children lie in (0,1), which forces c < d on top of (c-d)^2 > N).
inline QuadraticSurd left_parent(const QuadraticSurd& x) {
    int64_t N = x.radicand(), c = x.c(), d = x.d();
    int64_t diff = checked_sub(c, d);
    if (x.eps() != 1 || diff >= 0 || checked_mul(diff, diff) < N)
        fail(Errc::PreconditionViolated, "left_parent needs eps=+1 and d-c > sqrt(N)");
    int64_t residue = (N - c * c) / d;
    return make_surd(N, 1, checked_add(c, residue), (checked_mul(diff, diff) - N) / d);
}

/// An exact, possibly negative surd value: sign * magnitude.
struct SignedSurd {
    bool negative;
    QuadraticSurd magnitude;
};

/// Algebraic conjugate x* = (-eps*sqrt(N)+c)/d, as sign + magnitude.
inline SignedSurd conjugate(const QuadraticSurd& x) {
    int64_t N = x.radicand(), c = x.c(), d = x.d();
    // x* > 0 iff -eps*sqrt(N)+c > 0.
    bool positive = (x.eps() == 1) ? (c > 0 && c * c > N) : (c >= 0 || c * c < N);
    if (positive) return {false, make_surd(N, -x.eps(), c, d)};
    return {true, make_surd(N, x.eps(), checked_neg(c), d)};
}

/// -x* = (eps*sqrt(N)-c)/d as a surd; requires the conjugate to be negative.
inline QuadraticSurd neg_conjugate(const QuadraticSurd& x) {
    SignedSurd conj = conjugate(x);
    if (!conj.negative)
        fail(Errc::PreconditionViolated, "neg_conjugate needs a negative conjugate");
    return conj.magnitude;
}

/// 1/x via (eps*sqrt(N)+c)/d -> d*(eps*sqrt(N)-c)/(N-c^2), renormalized.
inline QuadraticSurd reciprocal(const QuadraticSurd& x) {
    int64_t N = x.radicand(), c = x.c(), d = x.d();
    int64_t residue = checked_sub(N, checked_mul(c, c));  // divisible by d
    if (x.eps() == -1) return make_surd(N, 1, c, checked_neg(residue) / d);
    if (residue > 0) return make_surd(N, 1, checked_neg(c), residue / d);
    return make_surd(N, -1, c, checked_neg(residue) / d);
}

/// Exact floor. sqrt(N) is irrational, so the value never sits on an
/// integer boundary and isqrt settles it without any floating point.
inline int64_t floor_surd(const QuadraticSurd& x) {
    int64_t a = isqrt(x.radicand());
    if (x.eps() == 1) return floor_div(checked_add(a, x.c()), x.d());
    return floor_div(checked_sub(x.c(), checked_add(a, 1)), x.d());
}

/// Exact comparison of x with the rational num/den (den > 0): -1, or +1.
/// Never 0, since the surd is irrational.
inline int compare_to_rational(const QuadraticSurd& x, int64_t num, int64_t den) {
    if (den <= 0) fail(Errc::PreconditionViolated, "comparison denominator must be positive");
    // eps*sqrt(N) vs (num*d - den*c)/den: compare A*sqrt(N) with B, A=eps*den.
    int64_t B = checked_sub(checked_mul(num, x.d()), checked_mul(den, x.c()));
    if (x.eps() > 0) {
        if (B <= 0) return 1;
        int64_t lhs = checked_mul(checked_mul(den, den), x.radicand());
        return lhs > checked_mul(B, B) ? 1 : -1;
    }
    if (B >= 0) return -1;
    int64_t lhs = checked_mul(checked_mul(den, den), x.radicand());
    return lhs < checked_mul(B, B) ? 1 : -1;
}

/// Divide shared square factors out of the radicand where the result still
/// satisfies the divisibility invariant: (sqrt(k^2 M)+kc')/kd' -> (sqrt(M)+c')/d'.
/// Returns the smallest reachable radicand representation of the same value.
inline QuadraticSurd reduce_radicand(const QuadraticSurd& x) {
    int64_t N = x.radicand();
    for (int64_t k = isqrt(N); k >= 2; --k) {
        if (N % (k * k) != 0 || x.c() % k != 0 || x.d() % k != 0) continue;
        int64_t M = N / (k * k), c = x.c() / k, d = x.d() / k;
        if (M < 2 || (M - c * c) % d != 0) continue;
        return reduce_radicand(make_surd(M, x.eps(), c, d));
    }
    return x;
}

/// Canonical display form, e.g. "sqrt(5)", "sqrt(5)+2", "(sqrt(19)+4)/3",
/// "-sqrt(2)+2", "sqrt(5)/5".
inline std::string format_surd(const QuadraticSurd& x) {
    std::string num = (x.eps() < 0 ? "-sqrt(" : "sqrt(") + std::to_string(x.radicand()) + ")";
    if (x.c() > 0) num += "+" + std::to_string(x.c());
    if (x.c() < 0) num += std::to_string(x.c());
    if (x.d() == 1) return num;
    if (x.c() == 0) return num + "/" + std::to_string(x.d());
    return "(" + num + ")/" + std::to_string(x.d());
}

}  // namespace surdpath
