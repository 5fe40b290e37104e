#pragma once

// Batch verification: run every applicable identity from the LPP / CF side
// on one root and report named pass/fail results. This is what the sweep
// command executes over all valid (N, p, q) triples.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "surdpath/cf.hpp"
#include "surdpath/lpp.hpp"
#include "surdpath/oracle.hpp"
#include "surdpath/surd.hpp"

namespace surdpath {

struct VerificationReport {
    QuadraticSurd root;
    int64_t period = 0;
    std::optional<int64_t> symmetry_index;
    bool palindrome_s = true;   // applicable step-palindrome facts
    bool palindrome_cf = true;  // applicable CF-shape facts (Legendre/Galois)
    size_t cf_period_len = 0;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_passed() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }

    std::string first_failure() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return name;
        return "";
    }
};

/// Trace the LPP and the CF of `alpha` and verify every identity that
/// applies. `oracle_terms` CF terms are cross-checked against the interval
/// oracle; 0 skips the oracle (for quick sweeps).
inline VerificationReport verify_root(const QuadraticSurd& alpha, int64_t max_steps = 0,
                                      size_t oracle_terms = 20) {
    VerificationReport rep{alpha, 0, std::nullopt, true, true, 0, {}};
    auto add = [&rep](const std::string& name, bool ok) { rep.checks.emplace_back(name, ok); };

    LppTrace trace = trace_lpp(alpha, max_steps);
    rep.period = trace.period;
    rep.symmetry_index = trace.symmetry_index;
    int64_t N = alpha.radicand();
    auto T = static_cast<size_t>(trace.period);

    bool bounds = true;
    for (size_t n = 0; n <= T; ++n) {
        int64_t c = trace.c_seq[n], d = trace.d_seq[n];
        if (!(c * c < N && 0 < d && d <= N - c * c)) bounds = false;
        if (trace.nodes[n].eps() != 1) bounds = false;
    }
    add("node_bounds", bounds);
    add("pigeonhole_cap", trace.period <= checked_mul(checked_add(2 * isqrt(N), 1), N));
    add("cyclic_closure", trace.nodes[0] == trace.nodes[T] && trace.nodes[0] == alpha);
    add("unique_parentage", check_unique_parentage(trace));

    PalindromeReport pal = palindrome_checks(trace);
    if (trace.symmetry_index) {
        auto m = static_cast<size_t>(*trace.symmetry_index);
        bool sym = pal.steps_palindrome_to_m && pal.c_antisymmetric && pal.d_symmetric &&
                   pal.even_center_zero.value_or(true);
        bool block = true;
        for (size_t n = 0; n <= m; ++n)
            if (!(trace.nodes[m - n] == neg_conjugate(trace.nodes[n]))) block = false;
        // Every -x_n* within one period appears somewhere in the period.
        bool closure = true;
        for (size_t n = 0; n < T && closure; ++n) {
            QuadraticSurd want = neg_conjugate(trace.nodes[n]);
            bool found = false;
            for (size_t j = 0; j <= T && !found; ++j) found = trace.nodes[j] == want;
            closure = found;
        }
        add("symmetry_block", sym && block);
        add("conjugate_closure", closure);
        rep.palindrome_s = rep.palindrome_s && sym;
    }
    if (alpha.c() == 0) {
        bool p0 = trace.symmetry_index.value_or(-1) == trace.period &&
                  pal.full_period_palindrome.value_or(false);
        if (N > alpha.d() * alpha.d()) p0 = p0 && trace.steps[0] == Step::Right;
        add("p_zero_facts", p0);
        rep.palindrome_s = rep.palindrome_s && p0;
    }

    // Direction runs over two periods: alternation, the exact run relations
    // and the floor identities t_n = floor(-y_n*) / floor(-1/y_n*).
    size_t n_runs = 0;
    for (int64_t covered = 0; covered < 2 * trace.period; ++n_runs) {
        covered = 0;
        for (const auto& r : direction_runs(trace, n_runs + 1)) covered += r.t;
    }
    std::vector<DirectionRun> runs = direction_runs(trace, n_runs + 1);
    bool runs_ok = runs[0].orientation == RunOrientation::Start;
    for (size_t n = 0; n + 1 < runs.size(); ++n) {
        const DirectionRun& cur = runs[n];
        const DirectionRun& next = runs[n + 1];
        if (n >= 1 && next.orientation == cur.orientation) runs_ok = false;
        if (next.orientation == RunOrientation::RL) {
            QuadraticSurd shifted =
                make_surd(N, 1, checked_add(cur.y.c(), checked_mul(cur.t, cur.y.d())), cur.y.d());
            if (!(next.y == shifted)) runs_ok = false;
            if (floor_surd(neg_conjugate(cur.y)) != cur.t) runs_ok = false;
        } else {
            QuadraticSurd recip = reciprocal(cur.y);
            QuadraticSurd shifted =
                make_surd(N, 1, checked_add(recip.c(), checked_mul(cur.t, recip.d())), recip.d());
            if (!(reciprocal(next.y) == shifted)) runs_ok = false;
            if (floor_surd(reciprocal(neg_conjugate(cur.y))) != cur.t) runs_ok = false;
        }
        if (n >= 1) {
            bool rl = cur.orientation == RunOrientation::RL;
            int above_one = compare_to_rational(cur.y, 1, 1);
            int conj_below_one = compare_to_rational(neg_conjugate(cur.y), 1, 1);
            if (rl && !(above_one > 0 && conj_below_one < 0)) runs_ok = false;
            if (!rl && !(above_one < 0 && conj_below_one > 0)) runs_ok = false;
        }
    }
    add("direction_runs", runs_ok);

    // CF side: period detection, convergent soundness, oracle agreement.
    CfExpansion cf = cf_expand(alpha);
    rep.cf_period_len = cf.period_len ? *cf.period_len : 0;
    add("cf_period_found", cf.period_start.has_value());
    bool conv_ok = true;
    try {
        auto pairs = convergents(cf, cf.terms.size());
        conv_ok = convergent_error_bound_ok(cf, pairs);
    } catch (const SurdError&) {
        conv_ok = false;
    }
    add("convergents", conv_ok);
    if (oracle_terms > 0) {
        CfExpansion literal = cf_expand(alpha, oracle_terms, /*exact_terms=*/true);
        add("oracle_cf_agreement", literal.terms == oracle::oracle_cf(alpha, oracle_terms));
        add("oracle_floor_agreement", floor_surd(alpha) == oracle::oracle_floor_auto(alpha));
    }

    if (alpha.c() == 0 && N > alpha.d() * alpha.d()) {
        LegendreReport leg = sqrt_cf(N, checked_mul(alpha.d(), alpha.d()));
        add("legendre_shape", leg.ok());
        add("lpp_cf_agreement", lpp_cf_agreement_sqrt(alpha, n_runs));
        rep.palindrome_cf = rep.palindrome_cf && leg.ok();
    }
    if (is_reduced_surd(alpha)) {
        GaloisReport gal = galois_check(alpha);
        add("galois", gal.ok());
        rep.palindrome_cf = rep.palindrome_cf && gal.ok();
    }
    return rep;
}

/// All valid roots (sqrt(N)+p)/q with 2 <= N <= n_max, p^2 < N, q | N - p^2,
/// ordered by (N, p, q).
inline std::vector<QuadraticSurd> enumerate_roots(int64_t n_max) {
    std::vector<QuadraticSurd> roots;
    for (int64_t N = 2; N <= n_max; ++N) {
        if (is_perfect_square(N)) continue;
        int64_t bound = isqrt(N);
        for (int64_t p = -bound; p <= bound; ++p) {
            int64_t residue = N - p * p;
            for (int64_t q = 1; q <= residue; ++q)
                if (residue % q == 0) roots.push_back(make_surd(N, 1, p, q));
        }
    }
    return roots;
}

struct SweepRow {
    int64_t N = 0, p = 0, q = 0;
    int64_t period = 0;
    std::optional<int64_t> symmetry_index;
    bool palindrome_s = false;
    bool palindrome_cf = false;
    size_t cf_period_len = 0;
    bool checks_passed = false;
    std::string first_failure;
};

/// Verify every root with N <= n_max on `jobs` workers. Rows come back in
/// enumeration order regardless of the worker count.
inline std::vector<SweepRow> run_sweep(int64_t n_max, unsigned jobs = 1,
                                       size_t oracle_terms = 20) {
    std::vector<QuadraticSurd> roots = enumerate_roots(n_max);
    std::vector<SweepRow> rows(roots.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < roots.size(); i = cursor.fetch_add(1)) {
            SweepRow& row = rows[i];
            const QuadraticSurd& root = roots[i];
            row.N = root.radicand();
            row.p = root.c();
            row.q = root.d();
            try {
                VerificationReport rep = verify_root(root, 0, oracle_terms);
                row.period = rep.period;
                row.symmetry_index = rep.symmetry_index;
                row.palindrome_s = rep.palindrome_s;
                row.palindrome_cf = rep.palindrome_cf;
                row.cf_period_len = rep.cf_period_len;
                row.checks_passed = rep.all_passed();
                row.first_failure = rep.first_failure();
            } catch (const SurdError& e) {
                row.checks_passed = false;
                row.first_failure = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace surdpath
