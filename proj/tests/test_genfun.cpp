#include <set>

#include "doctest.h"
#include "fishburn/genfun.hpp"

using namespace fb;

namespace {

ParamPoint draw(std::mt19937_64& rng, bool (*admissible)(const ParamPoint&)) {
    for (;;) {
        ParamPoint p;
        p.x = random_rat(rng), p.y = random_rat(rng), p.u = random_rat(rng);
        p.z = random_rat(rng), p.v = random_rat(rng), p.w = random_rat(rng);
        if (admissible(p)) return p;
    }
}

Rat power(const Rat& b, int e) {
    Rat out = 1;
    for (int k = 0; k < e; ++k) out *= b;
    return out;
}

}  // namespace

TEST_CASE("random rationals stay in range") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        const Rat q = random_rat(rng);
        CHECK(abs(q.get_num()) <= 7);
        CHECK(q.get_den() <= 7);
    }
}

TEST_CASE("brute force at all-ones gives Fishburn numbers") {
    for (Selector s : {Selector::Quadruple, Selector::Tilde, Selector::Quintuple}) {
        const RatSeries f = brute_force_gf(3, s, ParamPoint{});
        CHECK(f[1] == 1);
        CHECK(f[2] == 2);
        CHECK(f[3] == 5);
    }
    const RatSeries f = eval_fishburn(9);
    for (int n = 1; n <= 9; ++n) CHECK(f[n] == Rat(static_cast<unsigned long>(kFishburn[n])));
}

TEST_CASE("brute force against a direct monomial sum") {
    std::mt19937_64 rng(2);
    ParamPoint p;
    p.x = random_rat(rng), p.y = random_rat(rng), p.u = random_rat(rng), p.z = random_rat(rng);
    p.v = random_rat(rng);
    const RatSeries f = brute_force_gf(6, Selector::Quintuple, p);
    for (int n = 1; n <= 6; ++n) {
        Rat c = 0;
        for (const Seq& s : ascent_sequences(n))
            c += power(p.x, rep(s)) * power(p.y, max_stat(s)) * power(p.u, asc(s)) * power(p.z, zero(s)) *
                 power(p.v, rmin(s));
        CHECK(f[n] == c);
    }
    ParamPoint x0;
    x0.x = 0;
    const RatSeries g = brute_force_gf(4, Selector::Quadruple, x0);
    for (int n = 1; n <= 4; ++n) {
        long distinct = 0;
        for (const Seq& s : ascent_sequences(n)) distinct += std::set<int>(s.begin(), s.end()).size() == s.size();
        CHECK(g[n] == distinct);
    }
}

TEST_CASE("closed forms at all-ones and at random points") {
    const RatSeries f = eval_fishburn(8);
    CHECK(eval_G_quadruple(ParamPoint{}, 8) == f);
    CHECK(eval_G_tilde(ParamPoint{}, 8) == f);
    CHECK(eval_G_quintuple(ParamPoint{}, 8) == f);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2; ++k) {
        const ParamPoint p = draw(rng, admissible_closed_form);
        CHECK(eval_G_quadruple(p, 8) == brute_force_gf(8, Selector::Quadruple, p));
        CHECK(eval_G_tilde(p, 8) == brute_force_gf(8, Selector::Tilde, p));
        CHECK(eval_G_quintuple(p, 7) == brute_force_gf(7, Selector::Quintuple, p));
        CHECK(eval_G_quintuple(p, 7) == eval_G_quintuple(p, 7, 12));
        CHECK(eval_G_quadruple(p, 10).truncated(6) == eval_G_quadruple(p, 6));
    }
}

TEST_CASE("degenerate points are rejected") {
    ParamPoint p;
    p.x = 2, p.u = 2;  // x + u - xu = 0
    CHECK_FALSE(admissible_closed_form(p));
    CHECK_THROWS_AS(eval_G_quadruple(p, 5), std::domain_error);
    ParamPoint w;
    w.w = 1;
    CHECK_FALSE(admissible_functional_equation(w));
}

TEST_CASE("functional equation and its pieces") {
    std::mt19937_64 rng(13);
    const ParamPoint p = draw(rng, admissible_functional_equation);
    CHECK(check_functional_equation(p, 6).verdict);
    for (int c = 1; c <= 4; ++c) CHECK(check_case_form(c, p, 6).verdict);
}

TEST_CASE("subset distributions partition the non-staircase sequences") {
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t total = 0, parts = 0;
        for (const auto& [k, c] : stat_distribution(n, Family::Ascent, Subset::NonStaircase)) total += c;
        for (Subset s : {Subset::D1, Subset::D2, Subset::S3, Subset::S4})
            for (const auto& [k, c] : stat_distribution(n, Family::Ascent, s)) parts += c;
        CHECK(total == parts);
        CHECK(total + 1 == kFishburn[n]);
    }
    CHECK_THROWS(stat_distribution(3, Family::Inversion, Subset::D1));
}

TEST_CASE("Garsia-Gessel checks") {
    const GarsiaGesselReport g = garsia_gessel_check(5);
    CHECK(g.h_symmetric);
    CHECK(g.b_symmetric);
    CHECK(g.b_relation);
    CHECK(g.foata);
    CHECK(g.series_identity);
    CHECK_FALSE(g.printed_exponent);
    // H_2: (0,0) has asc 0, rep 1; (0,1) has asc 1, rep 0.
    CHECK(g.H[2][0][0] == 1);
    CHECK(g.H[2][1][1] == 1);
    CHECK(g.H[2][0][1] == 0);
}
