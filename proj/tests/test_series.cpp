#include <random>

#include "doctest.h"
#include "fishburn/genfun.hpp"
#include "fishburn/series.hpp"

using namespace fb;

namespace {

RatSeries random_series(std::mt19937_64& rng, int N, bool unit) {
    RatSeries s("r", N);
    for (int k = 0; k <= N; ++k) s.set(k, random_rat(rng));
    if (unit && s[0] == 0) s.set(0, 1);
    return s;
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(to_string(parse_rat("-3/6")) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("ring operations") {
    const RatSeries r = RatSeries::variable("r", 3);
    const RatSeries one = RatSeries::constant(1, "r", 3);
    CHECK((one + r) * (one - r) == one - r * r);
    CHECK(((one + r) * Rat(0)).is_zero());
    CHECK_THROWS_AS(one + RatSeries::constant(1, "t", 3), std::invalid_argument);
    CHECK_THROWS_AS(one + RatSeries::constant(1, "r", 4), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const RatSeries a = random_series(rng, 6, false), b = random_series(rng, 6, false),
                        c = random_series(rng, 6, false);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("inverse") {
    const int N = 8;
    const RatSeries r = RatSeries::variable("r", N);
    const RatSeries geo = (1 - r).inverse();
    for (int k = 0; k <= N; ++k) CHECK(geo[k] == 1);
    CHECK(RatSeries::constant(2, "r", N).inverse() == RatSeries::constant(Rat(1, 2), "r", N));
    CHECK_THROWS_AS(r.inverse(), std::domain_error);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const RatSeries f = random_series(rng, N, true);
        CHECK(f.inverse().inverse() == f);
        CHECK(f * f.inverse() == RatSeries::constant(1, "r", N));
    }
}

TEST_CASE("powers match Pascal's triangle") {
    const int N = 12;
    const RatSeries r = RatSeries::variable("r", N);
    CHECK((1 - r).pow(0) == RatSeries::constant(1, "r", N));
    CHECK((1 - r).pow(2) == 1 - 2 * r + r * r);
    std::vector<long> row{1};
    for (int n = 1; n <= 10; ++n) {
        std::vector<long> next(n + 1, 1);
        for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
        row = next;
    }
    const RatSeries p = (1 - r).pow(10);
    for (int k = 0; k <= N; ++k) CHECK(p[k] == (k <= 10 ? Rat((k % 2 ? -1 : 1) * row[k]) : Rat(0)));
    CHECK(q_power(10, "r", N) == p);
    CHECK(q_power(-1, "r", N) == (1 - r).inverse());
}

TEST_CASE("q-shifted factorial") {
    const int N = 6;
    const RatSeries r = RatSeries::variable("r", N);
    const RatSeries q = 1 - r;
    CHECK(poch(RatSeries::constant(5, "r", N), 0) == RatSeries::constant(1, "r", N));
    for (int k = 1; k <= 4; ++k) CHECK(poch(RatSeries::constant(1, "r", N), k).is_zero());
    CHECK(poch(q, 2) == r * (2 * r - r * r));
}

TEST_CASE("truncation and valuation") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 10; ++k) {
        const RatSeries a = random_series(rng, 10, true), b = random_series(rng, 10, true);
        CHECK((a * b.inverse()).truncated(5) == a.truncated(5) * b.truncated(5).inverse());
    }
    const RatSeries r = RatSeries::variable("r", 6);
    CHECK((r * r * r).valuation() == 3);
    CHECK_FALSE(RatSeries("r", 6).valuation().has_value());
    CHECK((r * r).divided_by_var(2) == RatSeries::constant(1, "r", 4));
    CHECK_THROWS_AS(r.divided_by_var(2), std::domain_error);
}
