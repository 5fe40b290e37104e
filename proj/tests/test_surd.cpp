#include <catch2/catch_amalgamated.hpp>

#include <surdpath/oracle.hpp>
#include <surdpath/surd.hpp>

#include "test_support.hpp"

using namespace surdpath;
using surdpath::testing::random_surds;
using surdpath::testing::throws_code;

TEST_CASE("make_surd accepts valid inputs", "[core]") {
    QuadraticSurd r2 = make_surd(2, 1, 0, 1);
    CHECK(r2.radicand() == 2);
    CHECK(r2.eps() == 1);
    CHECK(make_surd(34, 1, 1, 3) == make_surd(34, 1, 1, 3));  // 3 | 33
}

TEST_CASE("make_surd rejects each invalid input with its own code", "[core]") {
    CHECK(throws_code([] { make_surd(4, 1, 0, 1); }, Errc::SquareRadicand));
    CHECK(throws_code([] { make_surd(1, 1, 0, 1); }, Errc::SquareRadicand));
    CHECK(throws_code([] { make_surd(0, 1, 0, 1); }, Errc::SquareRadicand));
    CHECK(throws_code([] { make_surd(5, 1, 0, 0); }, Errc::NonPositiveDenominator));
    CHECK(throws_code([] { make_surd(5, 1, 0, -2); }, Errc::NonPositiveDenominator));
    CHECK(throws_code([] { make_surd(5, 1, 1, 3); }, Errc::DivisibilityViolation));
    CHECK(throws_code([] { make_surd(2, 1, -2, 2); }, Errc::NonPositiveValue));
    CHECK(throws_code([] { make_surd(2, -1, 0, 1); }, Errc::NonPositiveValue));
    CHECK(throws_code([] { make_surd(2, -1, 1, 1); }, Errc::NonPositiveValue));
}

TEST_CASE("child steps match the worked trees", "[core]") {
    CHECK(right_child(make_surd(2, 1, 0, 1)) == make_surd(2, 1, 1, 1));
    CHECK(right_child(make_surd(5, 1, 1, 1)) == make_surd(5, 1, 2, 1));
    CHECK(right_child(make_surd(3, 1, -1, 2)) == make_surd(3, 1, 1, 2));

    CHECK(left_child(make_surd(2, 1, 0, 1)) == make_surd(2, -1, 2, 1));
    CHECK(left_child(make_surd(3, 1, 1, 2)) == make_surd(3, 1, 0, 3));
    CHECK(left_child(make_surd(5, 1, 2, 1)) == make_surd(5, 1, 1, 4));
    // sign-keeping branch from an eps=-1 node
    CHECK(left_child(make_surd(2, -1, 2, 1)) == make_surd(2, -1, 4, 7));
}

TEST_CASE("parent steps invert the child steps", "[core]") {
    CHECK(right_parent(make_surd(5, 1, 1, 1)) == make_surd(5, 1, 0, 1));
    CHECK(right_parent(make_surd(5, 1, 2, 1)) == make_surd(5, 1, 1, 1));
    QuadraticSurd back = right_parent(make_surd(19, 1, 3, 2));
    CHECK(back == make_surd(19, 1, 1, 2));
    CHECK(right_child(back) == make_surd(19, 1, 3, 2));

    CHECK(left_parent(make_surd(5, 1, 1, 4)) == make_surd(5, 1, 2, 1));
    CHECK(left_parent(make_surd(5, 1, 0, 5)) == make_surd(5, 1, 1, 4));
    CHECK(left_parent(make_surd(3, 1, -1, 2)) == make_surd(3, 1, 0, 3));

    CHECK(throws_code([] { right_parent(make_surd(19, 1, 8, 3)); }, Errc::PreconditionViolated));
    CHECK(throws_code([] { left_parent(make_surd(5, 1, 1, 1)); }, Errc::PreconditionViolated));
    CHECK(throws_code([] { right_parent(make_surd(2, -1, 2, 1)); }, Errc::PreconditionViolated));
    // (c-d)^2 > N alone is not enough: sqrt(2)+3 > 1 is nobody's left child
    CHECK(throws_code([] { left_parent(make_surd(2, 1, 3, 1)); }, Errc::PreconditionViolated));
}

TEST_CASE("child/parent round-trips hold on their precondition domains", "[core]") {
    for (const auto& x : random_surds(2000, 400, 11)) {
        if (x.eps() == 1) {
            if (x.c() * x.c() < x.radicand()) CHECK(right_parent(right_child(x)) == x);
            QuadraticSurd lc = left_child(x);
            if (lc.eps() == 1) CHECK(left_parent(lc) == x);
            int64_t diff = x.c() - x.d();
            if (diff * diff < x.radicand()) CHECK(right_child(right_parent(x)) == x);
            if (diff < 0 && diff * diff > x.radicand()) CHECK(left_child(left_parent(x)) == x);
        }
    }
}

TEST_CASE("conjugation", "[core]") {
    SignedSurd conj = conjugate(make_surd(5, 1, 1, 4));
    CHECK(conj.negative);
    CHECK(conj.magnitude == make_surd(5, 1, -1, 4));  // -x* = (sqrt(5)-1)/4

    CHECK(neg_conjugate(make_surd(5, 1, 0, 1)) == make_surd(5, 1, 0, 1));  // -sqrt(5)* = sqrt(5)
    CHECK(neg_conjugate(make_surd(19, 1, 4, 3)) == make_surd(19, 1, -4, 3));

    SignedSurd positive_conj = conjugate(make_surd(2, 1, 3, 1));  // (3-sqrt2) > 0
    CHECK_FALSE(positive_conj.negative);
    CHECK(positive_conj.magnitude == make_surd(2, -1, 3, 1));

    CHECK(throws_code([] { neg_conjugate(make_surd(2, 1, 3, 1)); }, Errc::PreconditionViolated));
}

TEST_CASE("conjugate is an involution and the norm is rational", "[core]") {
    for (const auto& x : random_surds(500, 300, 13)) {
        SignedSurd once = conjugate(x);
        SignedSurd twice = conjugate(once.magnitude);
        // x** = x: the sign flips introduced by the two steps cancel
        bool final_negative = once.negative != twice.negative;
        QuadraticSurd back = twice.magnitude;
        CHECK_FALSE(final_negative);
        CHECK(back == x);

        // x * x* = (c^2 - N)/d^2 exactly, checked on a high-precision bracket
        mpq_class expected(static_cast<long>(x.c() * x.c() - x.radicand()),
                           static_cast<long>(x.d() * x.d()));
        expected.canonicalize();
        oracle::IntervalApprox ix = oracle::value_interval(x, 40);
        oracle::IntervalApprox ic = oracle::value_interval(once.magnitude, 40);
        mpq_class sign = once.negative ? -1 : 1;
        mpq_class lo = sign * ix.lo * ic.lo, hi = sign * ix.hi * ic.hi;
        if (lo > hi) std::swap(lo, hi);
        CHECK(lo <= expected);
        CHECK(expected <= hi);
    }
}

TEST_CASE("reciprocal inverts the value", "[core]") {
    CHECK(reciprocal(make_surd(5, 1, 2, 1)) == make_surd(5, 1, -2, 1));   // 1/(sqrt5+2)=sqrt5-2
    CHECK(reciprocal(make_surd(2, 1, 0, 2)) == make_surd(2, 1, 0, 1));    // 1/(sqrt2/2)=sqrt2
    CHECK(reciprocal(make_surd(2, 1, 3, 1)) == make_surd(2, -1, 3, 7));   // c^2 > N branch
    CHECK(reciprocal(make_surd(2, -1, 3, 7)) == make_surd(2, 1, 3, 1));   // eps=-1 branch
    for (const auto& x : random_surds(500, 300, 17)) CHECK(reciprocal(reciprocal(x)) == x);
}

TEST_CASE("floor_surd matches the worked values", "[core]") {
    CHECK(floor_surd(make_surd(19, 1, 4, 3)) == 2);   // ~2.7863
    CHECK(floor_surd(make_surd(2, 1, 0, 1)) == 1);
    CHECK(floor_surd(make_surd(2, -1, 2, 1)) == 0);   // ~0.5858
    CHECK(floor_surd(make_surd(5, 1, 1, 4)) == 0);    // ~0.8090
    CHECK(floor_surd(make_surd(5, 1, 1, 2)) == 1);    // golden ratio
}

TEST_CASE("floor_surd agrees with the interval oracle", "[core][oracle]") {
    for (const auto& x : random_surds(1500, 800, 19))
        CHECK(floor_surd(x) == oracle::oracle_floor_auto(x));
}

TEST_CASE("componentwise equality is numerical equality within one radicand", "[core]") {
    CHECK(throws_code(
        [] { return make_surd(2, 1, 0, 1) == make_surd(3, 1, 0, 1); },
        Errc::PreconditionViolated));
    // distinct triples over the same N never collide in value: their
    // 50-digit brackets are disjoint
    auto sample = random_surds(300, 150, 23);
    for (size_t i = 0; i < sample.size(); ++i)
        for (size_t j = i + 1; j < sample.size(); ++j) {
            if (sample[i].radicand() != sample[j].radicand()) continue;
            if (sample[i] == sample[j]) continue;
            oracle::IntervalApprox a = oracle::value_interval(sample[i], 50);
            oracle::IntervalApprox b = oracle::value_interval(sample[j], 50);
            CHECK((a.hi < b.lo || b.hi < a.lo));
        }
}

TEST_CASE("reduce_radicand strips shared square factors when legal", "[core]") {
    CHECK(reduce_radicand(make_surd(76, 1, 8, 6)) == make_surd(19, 1, 4, 3));
    CHECK(reduce_radicand(make_surd(19, 1, 4, 3)) == make_surd(19, 1, 4, 3));
    CHECK(reduce_radicand(make_surd(8, 1, 2, 2)) == make_surd(2, 1, 1, 1));
    // (sqrt(12)+2)/8 is valid, but (sqrt(3)+1)/4 would break d | N - c^2
    CHECK(reduce_radicand(make_surd(12, 1, 2, 8)) == make_surd(12, 1, 2, 8));
    for (const auto& x : random_surds(400, 500, 29)) {
        QuadraticSurd reduced = reduce_radicand(x);
        CHECK(oracle::compare_values(x, reduced) == 0);
    }
}

TEST_CASE("format_surd follows the display convention", "[core]") {
    CHECK(format_surd(make_surd(5, 1, 0, 1)) == "sqrt(5)");
    CHECK(format_surd(make_surd(5, 1, 2, 1)) == "sqrt(5)+2");
    CHECK(format_surd(make_surd(5, 1, -2, 1)) == "sqrt(5)-2");
    CHECK(format_surd(make_surd(19, 1, 4, 3)) == "(sqrt(19)+4)/3");
    CHECK(format_surd(make_surd(19, 1, -4, 3)) == "(sqrt(19)-4)/3");
    CHECK(format_surd(make_surd(2, -1, 2, 1)) == "-sqrt(2)+2");
    CHECK(format_surd(make_surd(2, -1, 4, 7)) == "(-sqrt(2)+4)/7");
    CHECK(format_surd(make_surd(5, 1, 0, 5)) == "sqrt(5)/5");
}
