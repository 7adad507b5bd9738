#include <set>

#include "doctest.h"
#include "fishburn/bijections.hpp"
#include "fishburn/classify.hpp"

using namespace fb;

TEST_CASE("worked examples") {
    const auto [i, t] = f2({0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4});
    CHECK(i == 2);
    CHECK(t == Seq{0, 0, 1, 2, 0, 1, 2, 1, 3, 4});
    CHECK(f2_inv(2, {0, 0, 1, 2, 0, 1, 2, 1, 3, 4}) == Seq{0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4});
    CHECK(phi1({0, 1}) == Seq{0});
    CHECK(phi1({0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7}) == Seq{0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5});
    CHECK(f3({0, 0, 1, 2, 0, 1, 2, 1, 2, 4, 3, 5}) == Seq{0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7});
    CHECK(f3_inv({0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7}) == Seq{0, 0, 1, 2, 0, 1, 2, 1, 2, 4, 3, 5});
    CHECK(f4({0, 0, 1, 2, 0, 1, 2, 1, 4, 3, 5}) == Seq{0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5});
    CHECK(g({0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8}) == Seq{0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 2, 3});
    CHECK(g53({0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 2, 3}) == Seq{0, 1, 2, 0, 1, 2, 3, 6, 5, 5, 8, 6, 3, 2, 3});
    CHECK(g53({0, 1, 2, 0, 1, 2, 5, 2, 3, 3}) == Seq{0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3});
    CHECK(f53({0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8}) == Seq{0, 1, 2, 0, 1, 2, 3, 6, 5, 5, 8, 6, 3, 2, 3});
    CHECK(insert_R3({0, 1, 3, 2}, 3) == Seq{0, 1, 3, 2, 3});
    CHECK(f54({0, 1, 2, 0, 1, 2, 5, 2, 3, 2, 3, 8, 8, 4}) == Seq{0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 7, 7, 4});
    CHECK(f54({0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4}) == Seq{0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4});
    CHECK(f54_inv({0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4}) == Seq{0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4});
}

TEST_CASE("substitution rules with mid states and traces") {
    const Seq r1{0, 1, 2, 0, 1, 4, 1, 2, 1, 1};
    std::vector<int> tr;
    CHECK(substitute_R1(r1, 1, 4, &tr) == Seq{0, 1, 2, 0, 1, 4, 2, 4, 4, 1});
    CHECK(tr == std::vector<int>{3, 1});
    CHECK(substitute_R1(r1, 1, 4, nullptr, 1) == Seq{0, 1, 2, 0, 1, 4, 2, 4, 1, 1});
    CHECK(rule_R1(r1, 1, 0, 4) == substitute_R1(r1, 1, 4));

    const Seq r2{0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1};
    tr.clear();
    CHECK(substitute_R2(r2, 1, 4, &tr) == Seq{0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 4, 3, 1});
    CHECK(tr == std::vector<int>{6, 5});
    CHECK(substitute_R2(r2, 1, 4, nullptr, 1) == Seq{0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 1, 3, 1});
}

TEST_CASE("R2 changes max when the first substituted entry follows a maximal prefix ending in m") {
    const Seq s{0, 1, 2, 1, 3, 1};
    const Seq t = substitute_R2(s, 1, 2);
    CHECK(t == Seq{0, 1, 2, 3, 2, 1});
    CHECK(is_ascent_sequence(t));
    CHECK(max_stat(s) == 3);
    CHECK(max_stat(t) == 4);
    CHECK(asc(t) == asc(s));
    CHECK(rep(t) == rep(s));
    CHECK(rmin(t) == rmin(s));
}

TEST_CASE("rules reject inputs outside their preconditions") {
    CHECK_THROWS_AS(substitute_R1({0, 1, 2, 0, 1, 4, 1, 2, 1, 1}, 1, 1), DomainError);
    CHECK_THROWS_AS(g53({0, 0, 1, 2, 3}), DomainError);
}

TEST_CASE("Phi base cases") {
    CHECK(Phi({0, 1, 0}) == Seq{0, 0, 1});
    CHECK(Phi_inv({0, 0, 1}) == Seq{0, 1, 0});
    for (int p = 1; p <= 8; ++p) {
        Seq st(p);
        for (int k = 0; k < p; ++k) st[k] = k;
        CHECK(Phi(st) == st);
    }
}

TEST_CASE("Phi transports the septuple and is a bijection on A_n, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        std::set<Seq> image;
        for_each_ascent_sequence(n, [&](const Seq& s) {
            const Seq t = Phi(s);
            const Septuple a = septuple(s), b = septuple(t);
            CHECK(Septuple{a[0], a[1], a[2], a[5], a[6], a[3], a[4]} == b);
            CHECK(Phi_inv(t) == s);
            image.insert(t);
        });
        CHECK(image.size() == kFishburn[n]);
    }
    clear_caches();
}

TEST_CASE("round trips of the small maps on A_6") {
    for (const Seq& s : ascent_sequences(6)) {
        if (is_staircase(s)) continue;
        if (t_label(s) == TLabel::T2) {
            const auto [i, t] = f2(s);
            CHECK(f2_inv(i, t) == s);
        }
        if (in_P1(s)) CHECK(phi1_inv(phi1(s)) == s);
        if (in_P2(s)) CHECK(phi2_inv(phi2(s)) == s);
        if (d_label(s) == DLabel::D2) {
            const auto [i, t] = h2(s);
            CHECK(h2_inv(i, t) == s);
        }
    }
}
