#pragma once

// The left-positive path (LPP): from a root (sqrt(N)+p)/q with p^2 < N,
// repeatedly take the left child when that child keeps a positive sign,
// i.e. exactly when (c+d)^2 > N, and the right child otherwise. The path
// is purely periodic; tracing one period yields the irrationality
// certificate and the c/d/step symmetry data.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "surdpath/errors.hpp"
#include "surdpath/int_util.hpp"
#include "surdpath/surd.hpp"

namespace surdpath {

enum class Step : uint8_t { Left, Right };

inline char step_char(Step s) { return s == Step::Left ? 'l' : 'r'; }

/// One full period of the left-positive path of `root`.
struct LppTrace {
    QuadraticSurd root;
    std::vector<QuadraticSurd> nodes;  // x_0 .. x_T, with nodes[T] == root
    std::vector<int64_t> c_seq;        // c_0 .. c_T
    std::vector<int64_t> d_seq;        // d_0 .. d_T
    std::vector<Step> steps;           // s_0 .. s_{T-1}
    int64_t period = 0;                // T
    std::optional<int64_t> symmetry_index;  // least m in 1..T with x_m = -root*
};

struct IrrationalityCertificate {
    int64_t index_a;
    int64_t index_b;
    QuadraticSurd repeated;
};

/// Step choice at x (eps must be +1): Left keeps the sign positive exactly
/// when (c+d)^2 > N; equality is impossible since N is not a square.
inline std::pair<Step, QuadraticSurd> lpp_step(const QuadraticSurd& x) {
    if (x.eps() != 1) fail(Errc::PreconditionViolated, "lpp_step needs eps=+1");
    int64_t s = checked_add(x.c(), x.d());
    if (checked_mul(s, s) > x.radicand()) return {Step::Left, left_child(x)};
    return {Step::Right, right_child(x)};
}

/// Default step budget: far above the pigeonhole bound T <= (2*isqrt(N)+1)*N.
inline int64_t default_max_steps(int64_t N) {
    return checked_mul(checked_mul(4, N), checked_add(checked_mul(2, isqrt(N)), 2));
}

namespace detail {
struct CdHash {
    size_t operator()(const std::pair<int64_t, int64_t>& cd) const {
        auto mix = static_cast<uint64_t>(cd.first) * 0x9e3779b97f4a7c15ULL;
        return std::hash<uint64_t>()(mix ^ static_cast<uint64_t>(cd.second));
    }
};
}  // namespace detail

/// Walk the LPP of `alpha` until the root value recurs. `max_steps` of 0
/// selects the default budget; exhausting the budget raises rather than
/// truncating. A hash set of visited (c,d) pairs turns the pure-periodicity
/// theorem into a runtime check: any interior repeat is an implementation bug.
inline LppTrace trace_lpp(const QuadraticSurd& alpha, int64_t max_steps = 0) {
    if (alpha.eps() != 1 || checked_mul(alpha.c(), alpha.c()) >= alpha.radicand())
        fail(Errc::PreconditionViolated, "LPP root needs eps=+1 and p^2 < N");
    if (max_steps == 0) max_steps = default_max_steps(alpha.radicand());
    if (max_steps < 1) fail(Errc::PreconditionViolated, "max_steps must be positive");

    LppTrace trace{alpha, {alpha}, {alpha.c()}, {alpha.d()}, {}, 0, std::nullopt};
    std::unordered_set<std::pair<int64_t, int64_t>, detail::CdHash> seen;
    seen.insert({alpha.c(), alpha.d()});

    QuadraticSurd x = alpha;
    for (int64_t n = 1; n <= max_steps; ++n) {
        auto [step, child] = lpp_step(x);
        trace.steps.push_back(step);
        trace.nodes.push_back(child);
        trace.c_seq.push_back(child.c());
        trace.d_seq.push_back(child.d());
        if (!trace.symmetry_index && child.c() == -alpha.c() && child.d() == alpha.d())
            trace.symmetry_index = n;
        if (child == alpha) {
            trace.period = n;
            if (trace.period < 2) fail(Errc::PreconditionViolated, "period below 2");
            return trace;
        }
        if (!seen.insert({child.c(), child.d()}).second)
            fail(Errc::PreconditionViolated, "interior repeat before the root recurred");
        x = child;
    }
    fail(Errc::StepBudgetExceeded, "no recurrence of the root within " +
                                       std::to_string(max_steps) + " steps");
}

/// No value within one period may occur both as a left child and as a right
/// child (arrival directions are read cyclically, so x_0 arrives via s_{T-1}).
inline bool check_unique_parentage(const LppTrace& trace) {
    std::unordered_set<std::pair<int64_t, int64_t>, detail::CdHash> as_left, as_right;
    auto T = static_cast<size_t>(trace.period);
    for (size_t n = 0; n < T; ++n) {
        std::pair<int64_t, int64_t> child{trace.c_seq[n + 1], trace.d_seq[n + 1]};
        (trace.steps[n] == Step::Left ? as_left : as_right).insert(child);
    }
    for (const auto& cd : as_left)
        if (as_right.count(cd)) return false;
    return true;
}

/// The canonical certificate: the root value occurs at indices 0 and T.
inline IrrationalityCertificate irrationality_certificate(const LppTrace& trace) {
    return {0, trace.period, trace.root};
}

/// Symmetry facts about one period. Checks are reported, not assumed: a
/// false flag here means the corresponding theorem failed on this input.
struct PalindromeReport {
    std::optional<int64_t> symmetry_index;
    bool steps_palindrome_to_m = false;   // s_0..s_{m-1} reads the same reversed
    bool c_antisymmetric = false;         // c_{m-n} = -c_n for 0 <= n <= m
    bool d_symmetric = false;             // d_{m-n} = d_n for 0 <= n <= m
    std::optional<bool> even_center_zero; // when m=2k: c_k = 0
    bool root_c_zero = false;             // p = 0 case
    std::optional<bool> full_period_palindrome;  // s_0..s_{T-1}, p = 0 only
};

inline PalindromeReport palindrome_checks(const LppTrace& trace) {
    PalindromeReport report;
    report.symmetry_index = trace.symmetry_index;
    if (trace.symmetry_index) {
        auto m = static_cast<size_t>(*trace.symmetry_index);
        report.steps_palindrome_to_m = true;
        for (size_t j = 0; j < m; ++j)
            if (trace.steps[j] != trace.steps[m - 1 - j]) report.steps_palindrome_to_m = false;
        report.c_antisymmetric = report.d_symmetric = true;
        for (size_t n = 0; n <= m; ++n) {
            if (trace.c_seq[m - n] != -trace.c_seq[n]) report.c_antisymmetric = false;
            if (trace.d_seq[m - n] != trace.d_seq[n]) report.d_symmetric = false;
        }
        if (m % 2 == 0) report.even_center_zero = (trace.c_seq[m / 2] == 0);
    }
    report.root_c_zero = (trace.root.c() == 0);
    if (report.root_c_zero) {
        auto T = static_cast<size_t>(trace.period);
        bool pal = true;
        for (size_t j = 0; j < T; ++j)
            if (trace.steps[j] != trace.steps[T - 1 - j]) pal = false;
        report.full_period_palindrome = pal;
    }
    return report;
}

}  // namespace surdpath
