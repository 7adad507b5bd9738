#include <random>

#include "doctest.h"
#include "fishburn/genfun.hpp"
#include "fishburn/qhyper.hpp"

using namespace fb;

namespace {

// Term-by-term expansion of sum_k (q^2;q)_k (b;q)_k / ((q;q)_k (c;q)_k) q^k with b = 1 - beta r.
RatSeries naive_2phi1(const Rat& beta, const Rat& c, int N) {
    const int M = N + 1;
    const RatSeries r = RatSeries::variable("r", M), one = RatSeries::constant(1, "r", M);
    const RatSeries q = one - r;
    const RatSeries b = one - beta * r;
    RatSeries sum("r", N), term = RatSeries::constant(1, "r", N);
    RatSeries qi = one;  // q^i
    for (int k = 0; k <= N; ++k) {
        sum += term;
        const RatSeries ratio =
            ((one - qi * q * q).divided_by_var(1) / (one - qi * q).divided_by_var(1)).truncated(N);
        term *= ratio * (one - b * qi).truncated(N) / (one - c * qi).truncated(N) * q.truncated(N);
        qi *= q;
    }
    return sum;
}

PhiSpec spec_2phi1(const Rat& beta, const Rat& c, int N) {
    PhiSpec s;
    const RatSeries r = RatSeries::variable("r", N);
    s.upper = {q_tag(2, N), q_series(1 - beta * r)};
    s.lower = {q_const(c, N)};
    s.order = N;
    return s;
}

}  // namespace

TEST_CASE("phi_series against a naive summation") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 5; ++k) {
        const Rat beta = random_rat(rng);
        Rat c = random_rat(rng);
        if (c == 1 || c == 0) c = 3;
        CHECK(phi_series(spec_2phi1(beta, c, 5)) == naive_2phi1(beta, c, 5));
    }
}

TEST_CASE("term valuations grow with k") {
    const auto terms = phi_terms(spec_2phi1(Rat(2, 3), Rat(5), 10));
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto v = terms[k].valuation();
        if (v) CHECK(*v >= static_cast<int>(k));
    }
}

TEST_CASE("upper parameter 1 truncates to the constant series") {
    PhiSpec s;
    s.upper = {q_tag(0, 8), q_const(Rat(3), 8)};
    s.lower = {q_const(Rat(5), 8)};
    s.order = 8;
    CHECK(phi_series(s) == RatSeries::constant(1, "r", 8));
}

TEST_CASE("invalid specs are rejected") {
    PhiSpec s;
    s.upper = {q_const(Rat(3), 6)};
    s.order = 6;
    CHECK_THROWS_AS(phi_series(s), std::invalid_argument);
    PhiSpec t;
    t.upper = {q_tag(1, 6), q_const(Rat(3), 6)};
    t.lower = {q_const(Rat(5), 6)};
    t.order = 6;
    CHECK_THROWS_AS(phi_series(t), std::invalid_argument);
}

TEST_CASE("terminating series and Sears") {
    CHECK(phi_terminating(0, {Rat(2)}, {Rat(3)}, Rat(1, 2), Rat(1, 2)) == 1);
    // 1phi0 terminating q-binomial: sum (q^-n;q)_k/(q;q)_k z^k = (z q^-n; q)_n.
    const Rat q(1, 3), z(2, 5);
    for (int n = 1; n <= 4; ++n) {
        Rat rhs = 1, qn = 1;
        for (int k = 0; k < n; ++k) qn /= q;
        Rat qi = 1;
        for (int i = 0; i < n; ++i, qi *= q) rhs *= 1 - z * qn * qi;
        CHECK(phi_terminating(n, {}, {}, q, z) == rhs);
    }
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 10) {
        const SearsPoint p{random_rat(rng), random_rat(rng), random_rat(rng),
                           random_rat(rng), random_rat(rng), random_rat(rng)};
        bool holds = false;
        try {
            holds = verify_sears(1 + done % 5, p);
        } catch (const std::domain_error&) {
            continue;
        }
        CHECK(holds);
        ++done;
    }
}

TEST_CASE("transformations at a few points") {
    std::mt19937_64 rng(23);
    auto R = [&] { return random_rat(rng); };
    for (int j = 0; j <= 2; ++j) {
        Tf43Point a{R(), R(), R(), R(), R()};
        while (!admissible_tf43(a)) a = {R(), R(), R(), R(), R()};
        CHECK(verify_tf43(j, a, 8).verdict);
        Cor32Point b{R(), R(), R(), R()};
        while (!admissible_cor32(b)) b = {R(), R(), R(), R()};
        CHECK(verify_cor32(j, b, 8).verdict);
        Cor2Point c{R(), R(), R(), R()};
        while (!admissible_cor2_32(c)) c = {R(), R(), R(), R()};
        CHECK(verify_cor2_32(j, c, 8).verdict);
    }
    CHECK_FALSE(admissible_cor2_32(Cor2Point{1, 2, 3, 1}));
}

TEST_CASE("proof identities") {
    std::mt19937_64 rng(29);
    auto R = [&] { return random_rat(rng); };
    TffPoint p{R(), R(), R(), R(), R()};
    while (!admissible_tff(p)) p = {R(), R(), R(), R(), R()};
    const TffReport r = verify_tff_identities(p, 8);
    CHECK(r.tff0.verdict);
    CHECK(r.tff.verdict);
    CHECK_FALSE(r.tff_printed.verdict);
    CHECK(r.sym1);
    CHECK(r.sym2);
    CHECK(r.routes_agree());
}
