#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>
#include <surdpath/int_util.hpp>

using namespace surdpath;

TEST_CASE("isqrt on small values", "[int_util]") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(2) == 1);
    CHECK(isqrt(19) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(isqrt(26) == 5);
    CHECK(isqrt(35) == 5);
    CHECK(isqrt(36) == 6);
}

TEST_CASE("isqrt brackets its argument everywhere", "[int_util]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> pick(0, std::numeric_limits<int64_t>::max());
    for (int i = 0; i < 20000; ++i) {
        int64_t n = pick(rng);
        int64_t k = isqrt(n);
        auto uk = static_cast<uint64_t>(k);
        auto un = static_cast<uint64_t>(n);
        CHECK(uk * uk <= un);
        CHECK((uk + 1) * (uk + 1) > un);
    }
    // near the top of the range, where the double seed is least trustworthy
    for (int64_t n = std::numeric_limits<int64_t>::max(); n > std::numeric_limits<int64_t>::max() - 50; --n) {
        int64_t k = isqrt(n);
        CHECK(static_cast<uint64_t>(k) * static_cast<uint64_t>(k) <= static_cast<uint64_t>(n));
    }
}

TEST_CASE("is_perfect_square", "[int_util]") {
    CHECK(is_perfect_square(0));
    CHECK_FALSE(is_perfect_square(19));
    CHECK(is_perfect_square(36));
    CHECK(is_perfect_square(1));
    CHECK_FALSE(is_perfect_square(-4));
    CHECK(is_perfect_square(1LL << 60));
}

TEST_CASE("checked arithmetic raises on overflow", "[int_util]") {
    int64_t big = std::numeric_limits<int64_t>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_MATCHES(checked_add(big, 1), SurdError,
                         Catch::Matchers::Predicate<SurdError>(
                             [](const SurdError& e) { return e.code() == Errc::Overflow; }));
    CHECK_THROWS_AS(checked_mul(big, 2), SurdError);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<int64_t>::min(), 1), SurdError);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<int64_t>::min()), SurdError);
}

TEST_CASE("floor_div rounds toward minus infinity", "[int_util]") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-8, 2) == -4);
    CHECK(floor_div(0, 5) == 0);
}
