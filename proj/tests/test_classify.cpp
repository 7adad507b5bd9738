#include <set>

#include "doctest.h"
#include "fishburn/classify.hpp"

using namespace fb;

TEST_CASE("right-to-left minima, sebr, Masc") {
    const Seq s{0, 0, 1, 2, 0, 1, 2, 1, 3, 4, 5, 3, 4};
    CHECK(rpos(s) == 2);
    CHECK(rmins(s).X[2] == 3);
    CHECK(sebr(s) == 4);

    const Seq m{0, 1, 2, 1, 3, 4, 4, 3, 5};
    CHECK(rpos(m) == 2);
    CHECK(min_masc(m) == 4);

    CHECK(masc_positions({0, 1, 2, 0, 3, 2}) == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("T-labels of small examples") {
    CHECK(t_label({0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4}) == TLabel::T2);
    CHECK(t_label({0, 0}) == TLabel::T1);
    CHECK(t_label({0, 1, 2}) == TLabel::Staircase);
    CHECK(d_label({0, 1, 2}) == DLabel::Staircase);
}

TEST_CASE("labels are total on non-staircase sequences") {
    for (int n = 1; n <= 8; ++n)
        for_each_ascent_sequence(n, [&](const Seq& s) {
            if (is_staircase(s)) return;
            CHECK(t_label(s) != TLabel::Staircase);
            CHECK(d_label(s) != DLabel::Staircase);
            const TLabel t = t_label(s);
            const bool t5 = t == TLabel::T51 || t == TLabel::T52 || t == TLabel::T53 || t == TLabel::T54;
            CHECK(t5 == (m_label(s) != MLabel::None));
            CHECK((d_label(s) == DLabel::D5) == (d5_label(s) != D5Label::None));
            CHECK_FALSE((in_S3(s) && in_S4(s)));
        });
}

TEST_CASE("rmins lists positions and values left to right") {
    for (const Seq& s : ascent_sequences(7)) {
        const Rmins r = rmins(s);
        CHECK(r.X.size() == r.P.size());
        CHECK(static_cast<int>(r.X.size()) == rmin(s));
        for (std::size_t k = 0; k < r.X.size(); ++k) {
            CHECK(s[r.P[k]] == r.X[k]);
            if (k) CHECK(r.X[k - 1] < r.X[k]);
        }
        CHECK(r.P.back() == static_cast<int>(s.size()) - 1);
    }
}
