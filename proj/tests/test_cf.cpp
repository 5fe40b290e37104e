#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <surdpath/cf.hpp>
#include <surdpath/checks.hpp>
#include <surdpath/oracle.hpp>

#include "test_support.hpp"

using namespace surdpath;
using surdpath::testing::random_surds;
using surdpath::testing::throws_code;

TEST_CASE("direction runs of (sqrt(19)+4)/3", "[cf]") {
    LppTrace t = trace_lpp(make_surd(19, 1, 4, 3));
    std::vector<DirectionRun> runs = direction_runs(t, 6);
    std::vector<int64_t> lengths;
    for (const auto& r : runs) lengths.push_back(r.t);
    CHECK(lengths == std::vector<int64_t>{8, 2, 1, 3, 1, 2});
    CHECK(runs[0].orientation == RunOrientation::Start);
    CHECK(runs[1].orientation == RunOrientation::LR);
    CHECK(runs[2].orientation == RunOrientation::RL);
    CHECK(runs[3].orientation == RunOrientation::LR);
    CHECK(runs[4].orientation == RunOrientation::RL);
    CHECK(runs[5].orientation == RunOrientation::LR);
    CHECK(runs[1].y == make_surd(19, 1, -4, 3));
    CHECK(runs[2].y == make_surd(19, 1, 2, 3));
    CHECK(runs[3].y == make_surd(19, 1, -3, 2));
    CHECK(runs[4].y == make_surd(19, 1, 3, 2));
    CHECK(runs[5].y == make_surd(19, 1, -2, 3));
}

TEST_CASE("runs are read cyclically across the period boundary", "[cf]") {
    // sqrt(5): steps r,r,l,l,l,l,r,r repeat, so the right-run at the end
    // merges with the one at the start: t = 2, 4, 4, 4, ...
    LppTrace t5 = trace_lpp(make_surd(5, 1, 0, 1));
    std::vector<DirectionRun> runs = direction_runs(t5, 4);
    std::vector<int64_t> lengths;
    for (const auto& r : runs) lengths.push_back(r.t);
    CHECK(lengths == std::vector<int64_t>{2, 4, 4, 4});
    CHECK(runs[1].y == make_surd(5, 1, 2, 1));
    CHECK(runs[1].orientation == RunOrientation::RL);
    CHECK(runs[2].y == make_surd(5, 1, -2, 1));
    CHECK(runs[2].orientation == RunOrientation::LR);

    LppTrace t3 = trace_lpp(make_surd(3, 1, 1, 2));
    lengths.clear();
    for (const auto& r : direction_runs(t3, 5)) lengths.push_back(r.t);
    CHECK(lengths == std::vector<int64_t>{2, 1, 2, 1, 2});
}

TEST_CASE("run relations and floor identities hold exactly", "[cf]") {
    for (const auto& alpha : random_surds(150, 300, 37, /*lpp_roots_only=*/true)) {
        LppTrace trace = trace_lpp(alpha);
        std::vector<DirectionRun> runs = direction_runs(trace, 12);
        for (size_t n = 0; n + 1 < runs.size(); ++n) {
            const auto& cur = runs[n];
            const auto& next = runs[n + 1];
            if (next.orientation == RunOrientation::RL) {
                CHECK(next.y == make_surd(alpha.radicand(), 1, cur.y.c() + cur.t * cur.y.d(),
                                          cur.y.d()));
                CHECK(floor_surd(neg_conjugate(cur.y)) == cur.t);
            } else {
                QuadraticSurd r = reciprocal(cur.y);
                CHECK(reciprocal(next.y) ==
                      make_surd(alpha.radicand(), 1, r.c() + cur.t * r.d(), r.d()));
                CHECK(floor_surd(reciprocal(neg_conjugate(cur.y))) == cur.t);
            }
            if (n >= 1) {
                CHECK(next.orientation != cur.orientation);
                bool rl = cur.orientation == RunOrientation::RL;
                int above_one = compare_to_rational(cur.y, 1, 1);
                int conj_vs_one = compare_to_rational(neg_conjugate(cur.y), 1, 1);
                CHECK((rl ? above_one > 0 : above_one < 0));
                CHECK((rl ? conj_vs_one < 0 : conj_vs_one > 0));
            }
        }
    }
}

TEST_CASE("cf_expand finds the periods of the worked examples", "[cf]") {
    CfExpansion e19 = cf_expand(make_surd(19, 1, 4, 3));
    CHECK(e19.terms == std::vector<int64_t>{2, 1, 3, 1, 2, 8});
    CHECK(e19.period_start.value_or(99) == 0);
    CHECK(e19.period_len.value_or(0) == 6);

    CfExpansion e37 = cf_expand(make_surd(37, 1, 5, 3));
    CHECK(e37.period_start.value_or(99) == 0);
    CHECK(e37.period_len.value_or(0) == 3);
    CHECK(e37.least_period() == std::vector<int64_t>{3, 1, 2});

    CfExpansion e2 = cf_expand(make_surd(2, 1, 0, 1));
    CHECK(e2.terms == std::vector<int64_t>{1, 2});
    CHECK(e2.period_start.value_or(99) == 1);
    CHECK(e2.period_len.value_or(0) == 1);
}

TEST_CASE("values in (0,1) get a_0 = 0 and positive terms afterwards", "[cf]") {
    CfExpansion e = cf_expand(make_surd(5, 1, 1, 4));  // ~0.809
    CHECK(e.terms.at(0) == 0);
    for (size_t i = 1; i < e.terms.size(); ++i) CHECK(e.terms[i] >= 1);
    CHECK(e.terms == std::vector<int64_t>{0, 1, 4});
    CHECK(oracle::oracle_cf(make_surd(5, 1, 1, 4), 5) ==
          std::vector<int64_t>{0, 1, 4, 4, 4});
}

TEST_CASE("cf_expand budget and exact-terms mode", "[cf]") {
    CHECK(throws_code([] { cf_expand(make_surd(19, 1, 4, 3), 3); }, Errc::StepBudgetExceeded));
    CfExpansion literal = cf_expand(make_surd(19, 1, 4, 3), 13, /*exact_terms=*/true);
    CHECK(literal.terms == std::vector<int64_t>{2, 1, 3, 1, 2, 8, 2, 1, 3, 1, 2, 8, 2});
    CHECK(literal.quotients.size() == literal.terms.size());
}

TEST_CASE("minimal_period", "[cf]") {
    CHECK(minimal_period({3, 1, 2, 3, 1, 2}) == 3);
    CHECK(minimal_period({1}) == 1);
    CHECK(minimal_period({2, 1, 3, 1, 2, 8}) == 6);
    CHECK(minimal_period({4, 4, 4, 4}) == 1);
}

TEST_CASE("first quotient recurrence already yields the least period", "[cf]") {
    for (const auto& x : random_surds(200, 400, 41)) {
        CfExpansion e = cf_expand(x);
        REQUIRE(e.period_start.has_value());
        CHECK(minimal_period(e.least_period()) == *e.period_len);
    }
}

TEST_CASE("convergents follow the recurrence on the worked examples", "[cf]") {
    CfExpansion sqrt2 = cf_expand(make_surd(2, 1, 0, 1), 3, /*exact_terms=*/true);
    auto pairs = convergents(sqrt2, 3);
    REQUIRE(pairs.size() == 3);
    CHECK((pairs[0].p == 1 && pairs[0].q == 1));
    CHECK((pairs[1].p == 3 && pairs[1].q == 2));
    CHECK((pairs[2].p == 7 && pairs[2].q == 5));

    CfExpansion head = cf_expand(make_surd(19, 1, 4, 3), 1, /*exact_terms=*/true);
    auto first = convergents(head, 1);
    CHECK((first[0].p == 2 && first[0].q == 1));

    CfExpansion e19 = cf_expand(make_surd(19, 1, 4, 3), 3, /*exact_terms=*/true);
    auto three = convergents(e19, 3);
    CHECK((three[1].p == 3 && three[1].q == 1));
    CHECK((three[2].p == 11 && three[2].q == 4));
}

TEST_CASE("convergent reconstruction and error bounds over long expansions", "[cf]") {
    for (const auto& x : {make_surd(2, 1, 0, 1), make_surd(1999, 1, 0, 1),
                          make_surd(1141, 1, 23, 34), make_surd(997, 1, -11, 12)}) {
        CfExpansion e = cf_expand(x, 40, /*exact_terms=*/true);
        auto pairs = convergents(e, e.terms.size());  // throws if any identity fails
        CHECK(convergent_error_bound_ok(e, pairs));
    }
}

TEST_CASE("sqrt_cf verifies the Legendre shape", "[cf]") {
    LegendreReport r19 = sqrt_cf(19, 1);
    CHECK(r19.a0 == 4);
    CHECK(r19.period == std::vector<int64_t>{2, 1, 3, 1, 2, 8});
    CHECK(r19.ok());

    LegendreReport r2 = sqrt_cf(2, 1);
    CHECK(r2.a0 == 1);
    CHECK(r2.period == std::vector<int64_t>{2});
    CHECK(r2.ok());

    LegendreReport r53 = sqrt_cf(5, 3);
    CHECK(r53.radicand == 15);
    CHECK(r53.q == 3);
    CHECK(r53.a0 == 1);
    CHECK(r53.period == std::vector<int64_t>{3, 2});
    CHECK(r53.ok());

    CHECK(throws_code([] { sqrt_cf(1, 2); }, Errc::NotGreaterThanOne));
    CHECK(throws_code([] { sqrt_cf(3, 3); }, Errc::NotGreaterThanOne));
    CHECK(throws_code([] { sqrt_cf(9, 4); }, Errc::RationalSquare));
    CHECK(throws_code([] { sqrt_cf(4, 1); }, Errc::RationalSquare));
    CHECK(throws_code([] { sqrt_cf(-3, 1); }, Errc::PreconditionViolated));
}

TEST_CASE("Legendre shape across a small sweep", "[cf]") {
    for (int64_t f = 2; f <= 25; ++f)
        for (int64_t g = 1; g <= 25; ++g) {
            if (std::gcd(f, g) != 1 || f <= g) continue;
            if (is_perfect_square(f) && is_perfect_square(g)) continue;
            CHECK(sqrt_cf(f, g).ok());
        }
}

TEST_CASE("a_n = t_n with the parity chain for p=0 roots", "[cf]") {
    CHECK(lpp_cf_agreement_sqrt(make_surd(5, 1, 0, 1), 12));
    CHECK(lpp_cf_agreement_sqrt(make_surd(2, 1, 0, 1), 12));
    CHECK(lpp_cf_agreement_sqrt(make_surd(15, 1, 0, 3), 12));
    CHECK(throws_code([] { lpp_cf_agreement_sqrt(make_surd(19, 1, 4, 3), 4); },
                      Errc::PreconditionViolated));
    CHECK(throws_code([] { lpp_cf_agreement_sqrt(make_surd(2, 1, 0, 2), 4); },
                      Errc::PreconditionViolated));
}

TEST_CASE("is_reduced_surd", "[cf]") {
    CHECK(is_reduced_surd(make_surd(5, 1, 1, 2)));    // golden ratio
    CHECK(is_reduced_surd(make_surd(19, 1, 4, 3)));
    CHECK(is_reduced_surd(make_surd(5, 1, 2, 1)));    // sqrt(5)+2
    CHECK_FALSE(is_reduced_surd(make_surd(2, 1, 0, 1)));   // conjugate < -1
    CHECK_FALSE(is_reduced_surd(make_surd(34, 1, 1, 3)));  // conjugate < -1
    CHECK_FALSE(is_reduced_surd(make_surd(5, 1, 1, 4)));   // value < 1
    CHECK_FALSE(is_reduced_surd(make_surd(2, -1, 2, 1)));  // eps = -1
}

TEST_CASE("reduced_from_poly", "[cf]") {
    CHECK(reduced_from_poly({1, -1, -1}) == make_surd(5, 1, 1, 2));

    QuadraticSurd unreduced = reduced_from_poly({3, -8, -1});
    CHECK(unreduced == make_surd(76, 1, 8, 6));
    CHECK(oracle::compare_values(unreduced, make_surd(19, 1, 4, 3)) == 0);
    CHECK(reduce_radicand(unreduced) == make_surd(19, 1, 4, 3));

    CHECK(throws_code([] { reduced_from_poly({1, 0, -2}); }, Errc::NotReduced));
    CHECK(throws_code([] { reduced_from_poly({1, -3, 2}); }, Errc::NotReduced));
    CHECK(throws_code([] { reduced_from_poly({-1, 1, 1}); }, Errc::PreconditionViolated));
}

TEST_CASE("galois_check on the worked examples", "[cf]") {
    GaloisReport g19 = galois_check(make_surd(19, 1, 4, 3));
    CHECK(g19.period == std::vector<int64_t>{2, 1, 3, 1, 2, 8});
    CHECK(g19.recip_neg_conj == make_surd(19, 1, 4, 1));
    CHECK(g19.recip_period == std::vector<int64_t>{8, 2, 1, 3, 1, 2});
    CHECK(g19.m_lpp == 6);
    CHECK(g19.t_pattern == std::vector<int64_t>{8, 2, 1, 3, 1, 2});
    CHECK(g19.ok());

    GaloisReport g37 = galois_check(make_surd(37, 1, 5, 3));
    CHECK(g37.m_lpp == 6);
    CHECK(g37.t_pattern == std::vector<int64_t>{2, 1, 3, 2, 1, 3});
    CHECK(g37.period == std::vector<int64_t>{3, 1, 2});
    CHECK(minimal_period(g37.period) == 3);
    CHECK(g37.ok());
    // the two-period t pattern is a rotation of 3,2,1,3,2,1
    std::vector<int64_t> doubled{g37.t_pattern};
    doubled.insert(doubled.end(), g37.t_pattern.begin(), g37.t_pattern.end());
    std::vector<int64_t> claimed{3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 1};
    bool rotation = false;
    for (size_t shift = 0; shift < 6; ++shift) {
        bool match = true;
        for (size_t i = 0; i < doubled.size(); ++i)
            if (doubled[i] != claimed[(i + shift) % claimed.size()]) match = false;
        rotation = rotation || match;
    }
    CHECK(rotation);

    CHECK(g19.parity_chain_ok);
    CHECK(g37.parity_chain_ok);

    GaloisReport golden = galois_check(make_surd(5, 1, 1, 2));
    CHECK(golden.period == std::vector<int64_t>{1});
    CHECK(golden.recip_period == std::vector<int64_t>{1});
    CHECK(golden.m_lpp == 2);
    CHECK(golden.ok());

    CHECK(throws_code([] { galois_check(make_surd(2, 1, 0, 1)); }, Errc::NotReduced));
}

TEST_CASE("Galois shape across a small sweep", "[cf]") {
    for (const auto& x : enumerate_roots(60)) {
        if (!is_reduced_surd(x)) continue;
        GaloisReport rep = galois_check(x);
        CHECK(rep.ok());
        CHECK(rep.m_lpp % 2 == 0);
    }
}

TEST_CASE("exact expansion matches the interval oracle", "[cf][oracle]") {
    for (const auto& x : random_surds(60, 800, 43)) {
        CfExpansion e = cf_expand(x, 60, /*exact_terms=*/true);
        CHECK(e.terms == oracle::oracle_cf(x, 60));
    }
}
