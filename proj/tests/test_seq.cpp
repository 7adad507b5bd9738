#include <algorithm>
#include <set>

#include "doctest.h"
#include "fishburn/seq.hpp"

using namespace fb;

namespace {

// Ascent sequences grown entry by entry from the defining inequality.
std::vector<Seq> grow(int n) {
    std::vector<Seq> cur = {{}};
    for (int len = 0; len < n; ++len) {
        std::vector<Seq> next;
        for (const Seq& s : cur) {
            int a = 0;
            for (std::size_t k = 1; k < s.size(); ++k) a += s[k - 1] < s[k];
            const int top = s.empty() ? 0 : a + 1;
            for (int v = 0; v <= top; ++v) {
                Seq t = s;
                t.push_back(v);
                next.push_back(t);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

TEST_CASE("ascent sequence membership") {
    CHECK(is_ascent_sequence({0, 1, 2, 0, 1, 3, 5}));
    CHECK(is_ascent_sequence({0}));
    CHECK_FALSE(is_ascent_sequence({0, 2}));
    CHECK_FALSE(is_ascent_sequence({1}));
    CHECK_FALSE(is_ascent_sequence({0, 1, 0, 3}));
}

TEST_CASE("enumeration matches the Fishburn numbers and the growth oracle") {
    CHECK(ascent_sequences(1) == std::vector<Seq>{{0}});
    CHECK(ascent_sequences(3).size() == 5);
    for (int n = 0; n <= 8; ++n) {
        const auto a = ascent_sequences(n);
        CHECK(a.size() == kFishburn[n]);
        std::set<Seq> mine(a.begin(), a.end()), oracle;
        for (const Seq& s : grow(n)) oracle.insert(s);
        CHECK(mine == oracle);
    }
    std::uint64_t c = 0;
    for_each_ascent_sequence(10, [&](const Seq&) { ++c; });
    CHECK(c == 201608);
}

TEST_CASE("inversion sequences") {
    CHECK(inversion_sequences(2) == std::vector<Seq>{{0, 0}, {0, 1}});
    CHECK(inversion_sequences(4).size() == 24);
    CHECK(inversion_sequences(0).size() == 1);
    for (const Seq& s : inversion_sequences(5)) CHECK(is_inversion_sequence(s));
    for (const Seq& s : ascent_sequences(6)) CHECK(is_inversion_sequence(s));
}

TEST_CASE("statistics on the introductory example") {
    const Seq s{0, 1, 2, 0, 1, 3, 5};
    CHECK(asc(s) == 5);
    CHECK(rep(s) == 2);
    CHECK(zero(s) == 2);
    CHECK(max_stat(s) == 3);
    CHECK(rmin(s) == 4);
    const StatVector v = statistics(s);
    CHECK(v.asc == 5);
    CHECK(v.rmin == 4);
    CHECK(v.ealm.has_value());
}

TEST_CASE("ealm and rpos examples") {
    CHECK(ealm({0, 1, 0, 1, 3, 0, 2}) == 0);
    CHECK(rpos({0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4}) == 2);
    CHECK(rpos({0, 0, 1, 2, 3, 4}) == 0);
    CHECK(rmin({0, 0}) == 1);
}

TEST_CASE("statistics agree with their definitions on A_7") {
    for (const Seq& s : ascent_sequences(7)) {
        const int n = static_cast<int>(s.size());
        int a = 0, z = 0, mx = 0, rm = 0;
        for (int k = 1; k < n; ++k) a += s[k - 1] < s[k];
        for (int x : s) z += x == 0;
        for (int k = 0; k < n; ++k) mx += s[k] == k;
        for (int k = 0; k < n; ++k) rm += std::all_of(s.begin() + k + 1, s.end(), [&](int y) { return s[k] < y; });
        const std::set<int> distinct(s.begin(), s.end());
        CHECK(asc(s) == a);
        CHECK(zero(s) == z);
        CHECK(max_stat(s) == mx);
        CHECK(rmin(s) == rm);
        CHECK(rep(s) == n - static_cast<int>(distinct.size()));
        const Septuple t = septuple(s);
        CHECK(t[0] == a);
        CHECK(t[3] == mx);
        CHECK(t[5] == rm);
        if (mx < n) CHECK(t[4] == s[mx]);
    }
}

TEST_CASE("staircase") {
    CHECK(is_staircase({0, 1, 2}));
    CHECK_FALSE(is_staircase({0, 1, 1}));
}
