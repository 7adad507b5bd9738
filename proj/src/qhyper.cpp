#include "fishburn/qhyper.hpp"

#include <stdexcept>

#include "fishburn/genfun.hpp"

namespace fb {

namespace {

const char* const kVar = "r";

RatSeries one_series(int N) { return RatSeries::constant(1, kVar, N); }
RatSeries q_series_base(int N) { return q_power(1, kVar, N); }
RatSeries r_series(int N) { return RatSeries::variable(kVar, N); }

// (1 - (1 - r)^m) / r, exact to order N.
RatSeries one_minus_q_over_r(int m, int N) { return (1 - q_power(m, kVar, N + 1)).divided_by_var(1); }

}  // namespace

RatSeries QParam::value() const { return c * q_power(j, c.var(), c.order()); }

QParam q_tag(int j, int N) { return {one_series(N), j}; }
QParam q_const(const Rat& c, int N) { return {RatSeries::constant(c, kVar, N), 0}; }
QParam q_series(const RatSeries& c, int j) { return {c, j}; }

std::vector<RatSeries> phi_terms(const PhiSpec& spec) {
    const int N = spec.order;
    if (spec.upper.empty()) throw std::invalid_argument("phi: no upper parameters");
    for (const auto* list : {&spec.upper, &spec.lower})
        for (const QParam& p : *list)
            if (p.c.var() != kVar || p.c.order() != N) throw std::invalid_argument("phi: parameter series mismatch");
    const QParam& tag = spec.upper[0];
    if (tag.c != one_series(N)) throw std::invalid_argument("phi: first upper parameter must be (1-r)^j");
    const int j = tag.j;

    std::vector<RatSeries> others, lows;
    int unit_uppers = 0;
    for (std::size_t i = 1; i < spec.upper.size(); ++i) {
        others.push_back(spec.upper[i].value());
        if (others.back()[0] == 1) ++unit_uppers;
    }
    for (const QParam& b : spec.lower) {
        lows.push_back(b.value());
        if (lows.back()[0] == 1) throw std::invalid_argument("phi: lower parameter with constant term 1");
    }

    int K;
    if (spec.ceiling)
        K = *spec.ceiling;
    else if (j <= 0)
        K = -j;
    else if (unit_uppers > 0)
        K = N / unit_uppers;
    else
        throw std::invalid_argument("phi: no valuation bound and no explicit ceiling");
    if (j <= 0) K = std::min(K, -j);

    const RatSeries one = one_series(N), q = q_series_base(N);
    const RatSeries z = spec.argument ? *spec.argument : q;
    const int expo = 1 + static_cast<int>(spec.lower.size()) - static_cast<int>(spec.upper.size());
    std::vector<RatSeries> terms;
    RatSeries term = one, qk = one;
    for (int k = 0;; ++k) {
        terms.push_back(term);
        if (k == K) break;
        RatSeries ratio = one_minus_q_over_r(j + k, N) / one_minus_q_over_r(k + 1, N);
        for (const RatSeries& a : others) ratio *= one - a * qk;
        for (const RatSeries& b : lows) ratio = ratio / (one - b * qk);
        ratio *= z;
        if (expo != 0) {
            const RatSeries f = -qk;
            ratio *= expo > 0 ? f.pow(static_cast<unsigned>(expo)) : f.inverse().pow(static_cast<unsigned>(-expo));
        }
        term *= ratio;
        qk *= q;
    }
    return terms;
}

RatSeries phi_series(const PhiSpec& spec) {
    RatSeries total = one_series(spec.order) * 0;
    for (const RatSeries& t : phi_terms(spec)) total += t;
    return total;
}

namespace {

Rat poch_rat(const Rat& a, const Rat& q, int k) {
    Rat p = 1, qi = 1;
    for (int i = 0; i < k; ++i) {
        p *= 1 - a * qi;
        qi *= q;
    }
    return p;
}

Rat rat_pow(const Rat& b, int e) {
    Rat p = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= b;
    if (e < 0) {
        if (p == 0) throw std::domain_error("zero to a negative power");
        p = 1 / p;
    }
    return p;
}

}  // namespace

Rat phi_terminating(int n, const std::vector<Rat>& upper_rest, const std::vector<Rat>& lower, const Rat& q,
                    const Rat& z) {
    if (q == 0 || q == 1 || n < 0) throw std::domain_error("phi_terminating: invalid base or length");
    const int expo = 1 + static_cast<int>(lower.size()) - static_cast<int>(upper_rest.size() + 1);
    Rat total = 0;
    for (int k = 0; k <= n; ++k) {
        Rat num = poch_rat(rat_pow(q, -n), q, k), den = poch_rat(q, q, k);
        for (const Rat& a : upper_rest) num *= poch_rat(a, q, k);
        for (const Rat& b : lower) den *= poch_rat(b, q, k);
        if (den == 0) throw std::domain_error("phi_terminating: vanishing denominator");
        const Rat sign = k % 2 ? -1 : 1;
        total += num / den * rat_pow(z, k) * rat_pow(sign * rat_pow(q, k * (k - 1) / 2), expo);
    }
    return total;
}

bool verify_sears(int n, const SearsPoint& p) {
    const Rat &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d, &e = p.e;
    for (const Rat* v : {&q, &a, &b, &c, &d, &e})
        if (*v == 0) throw std::domain_error("verify_sears: zero parameter");
    const Rat q1n = rat_pow(q, 1 - n);
    const Rat lhs = phi_terminating(n, {a, b, c}, {d, e, a * b * c * q1n / (d * e)}, q, q);
    const Rat den = poch_rat(e, q, n) * poch_rat(d * e / (a * b * c), q, n);
    if (den == 0) throw std::domain_error("verify_sears: vanishing prefactor");
    const Rat pre = poch_rat(e / a, q, n) * poch_rat(d * e / (b * c), q, n) / den;
    const Rat rhs = pre * phi_terminating(n, {a, d / b, d / c}, {d, a * q1n / e, d * e / (b * c)}, q, q);
    return lhs == rhs;
}

namespace {

using Sides = std::pair<RatSeries, RatSeries>;

Sides tf43_sides(int j, const QParam& A, const RatSeries& b, const RatSeries& c, const RatSeries& d,
                 const RatSeries& e, int N) {
    const RatSeries q = q_series_base(N), Av = A.value();
    const RatSeries bc_de = b * c / (d * e);
    PhiSpec L{{q_tag(j, N), A, q_series(b), q_series(c)}, {q_series(d), q_series(e), q_series(A.c * bc_de, A.j + j + 1)}, {}, N, {}};
    PhiSpec R{{q_tag(j, N), A, q_series(d / b), q_series(d / c)},
              {q_series(d), q_series(d * e / (b * c)), q_series(A.c / e, A.j + j + 1)}, {}, N, {}};
    const RatSeries pre = poch(q / e, j) * poch(q * Av * bc_de, j) / (poch(q * Av / e, j) * poch(q * bc_de, j));
    return {phi_series(L), pre * phi_series(R)};
}

Sides tf32_sides(int j, const RatSeries& b, const RatSeries& c, const RatSeries& d, const RatSeries& e, int N) {
    const RatSeries q = q_series_base(N);
    PhiSpec L{{q_tag(j, N), q_series(b), q_series(c)}, {q_series(d), q_series(e)}, {}, N, {}};
    PhiSpec R{{q_tag(j, N), q_series(d / b), q_series(d / c)}, {q_series(d), q_series(d * e / (b * c))}, {}, N, {}};
    return {phi_series(L), poch(q / e, j) / poch(q * b * c / (d * e), j) * phi_series(R)};
}

Sides tf232_sides(int j, const QParam& A, const RatSeries& b, const RatSeries& c, const RatSeries& e, int N) {
    const RatSeries q = q_series_base(N), Av = A.value();
    const RatSeries b_ce = b / (c * e);
    PhiSpec L{{q_tag(j, N), A, q_series(b)}, {q_series(e), q_series(A.c * b_ce, A.j + j + 1)}, {}, N, {}};
    PhiSpec R{{q_tag(j, N), A, q_series(c)}, {q_series(c * e / b), q_series(A.c / e, A.j + j + 1)}, {}, N, {}};
    const RatSeries pre = poch(q / e, j) * poch(q * Av * b_ce, j) / (poch(q * Av / e, j) * poch(q * b_ce, j));
    return {phi_series(L), pre * phi_series(R)};
}

RatSeries K(const Rat& v, int N) { return RatSeries::constant(v, kVar, N); }

std::vector<std::pair<std::string, Rat>> named(std::initializer_list<std::pair<std::string, Rat>> l) { return l; }

}  // namespace

bool admissible_tf43(const Tf43Point& p) {
    return p.b != 0 && p.c != 0 && p.d != 0 && p.e != 0 && p.d != 1 && p.e != 1 && p.b * p.c != p.d * p.e;
}

GfReport verify_tf43(int j, const Tf43Point& p, int N) {
    if (!admissible_tf43(p)) throw std::domain_error("verify_tf43: degenerate point");
    const QParam A = q_series(1 - r_series(N) * p.alpha);
    const auto [l, r] = tf43_sides(j, A, K(p.b, N), K(p.c, N), K(p.d, N), K(p.e, N), N);
    return compare_series("4phi3 transformation j=" + std::to_string(j),
                          named({{"alpha", p.alpha}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e}}), l, r);
}

std::vector<GfReport> verify_tf43_anchor(int n, int j, const Tf43Point& p, int N) {
    if (!admissible_tf43(p)) throw std::domain_error("verify_tf43_anchor: degenerate point");
    const RatSeries b = K(p.b, N), c = K(p.c, N), d = K(p.d, N), e = K(p.e, N);
    const auto [l, r] = tf43_sides(j, q_tag(-n, N), b, c, d, e, N);

    // Terminating transformation with upper parameters q^{-n}, q^j, b, c.
    const RatSeries q = q_series_base(N), aS = q_power(j, kVar, N);
    PhiSpec SL{{q_tag(-n, N), q_tag(j, N), q_series(b), q_series(c)},
               {q_series(d), q_series(e), q_series(b * c / (d * e), j + 1 - n)}, {}, N, {}};
    PhiSpec SR{{q_tag(-n, N), q_tag(j, N), q_series(d / b), q_series(d / c)},
               {q_series(d), q_series(1 / e, j + 1 - n), q_series(d * e / (b * c))}, {}, N, {}};
    const RatSeries pre = poch(e / aS, n) * poch(d * e / (b * c), n) / (poch(e, n) * poch(d * e / (aS * b * c), n));
    const RatSeries sl = phi_series(SL), sr = pre * phi_series(SR);
    const auto pt = named({{"n", n}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e}});
    const std::string tag = " j=" + std::to_string(j) + " n=" + std::to_string(n);
    return {compare_series("anchor: 4phi3 transformation" + tag, pt, l, r),
            compare_series("anchor: left side vs terminating left side" + tag, pt, l, sl),
            compare_series("anchor: right side vs terminating right side" + tag, pt, r, sr)};
}

bool admissible_cor32(const Cor32Point& p) { return p.c != 0 && p.c != 1 && p.e != 0 && p.e != 1; }

namespace {

std::tuple<RatSeries, RatSeries, RatSeries, RatSeries> cor32_params(const Cor32Point& p, int N) {
    const RatSeries q = q_series_base(N), r = r_series(N);
    return {(1 - r * p.beta) * q, K(p.c, N), p.c * (1 - r * p.delta) * q, K(p.e, N)};
}

}  // namespace

GfReport verify_cor32(int j, const Cor32Point& p, int N) {
    if (!admissible_cor32(p)) throw std::domain_error("verify_cor32: degenerate point");
    const auto [b, c, d, e] = cor32_params(p, N);
    const auto [l, r] = tf32_sides(j, b, c, d, e, N);
    return compare_series("3phi2 transformation j=" + std::to_string(j),
                          named({{"beta", p.beta}, {"c", p.c}, {"delta", p.delta}, {"e", p.e}}), l, r);
}

std::vector<GfReport> verify_cor32_from_tf43(int j, const Cor32Point& p, int N) {
    if (!admissible_cor32(p)) throw std::domain_error("verify_cor32_from_tf43: degenerate point");
    const auto [b, c, d, e] = cor32_params(p, N);
    const auto [l32, r32] = tf32_sides(j, b, c, d, e, N);
    const auto [l43, r43] = tf43_sides(j, q_series(K(0, N)), b, c, d, e, N);
    const auto pt = named({{"beta", p.beta}, {"c", p.c}, {"delta", p.delta}, {"e", p.e}});
    const std::string tag = " j=" + std::to_string(j);
    return {compare_series("4phi3 at 1-a=0 vs 3phi2, left" + tag, pt, l43, l32),
            compare_series("4phi3 at 1-a=0 vs 3phi2, right" + tag, pt, r43, r32)};
}

bool admissible_cor2_32(const Cor2Point& p) {
    return p.b != 0 && p.c != 0 && p.e != 0 && p.e != 1 && p.b != p.c * p.e;
}

GfReport verify_cor2_32(int j, const Cor2Point& p, int N) {
    if (!admissible_cor2_32(p)) throw std::domain_error("verify_cor2_32: degenerate point");
    const QParam A = q_series(1 - r_series(N) * p.alpha);
    const auto [l, r] = tf232_sides(j, A, K(p.b, N), K(p.c, N), K(p.e, N), N);
    return compare_series("second 3phi2 transformation j=" + std::to_string(j),
                          named({{"alpha", p.alpha}, {"b", p.b}, {"c", p.c}, {"e", p.e}}), l, r);
}

bool admissible_tff(const TffPoint& p) {
    return p.x != 0 && p.x != 1 && p.u != 0 && p.u != 1 && p.x + p.u - p.x * p.u != 0;
}

namespace {

// sum_{k=0}^{N} prod_a (a;q)_k / prod_b (b;q)_k * extra(k) * q^k.
template <class Extra>
RatSeries qsum(const std::vector<RatSeries>& nums, const std::vector<RatSeries>& dens, Extra extra, int N) {
    const RatSeries one = one_series(N), q = q_series_base(N);
    RatSeries total = one * 0, ratio = one, qk = one;
    for (int k = 0; k <= N; ++k) {
        total += ratio * extra(qk) * qk;
        for (const RatSeries& a : nums) ratio *= one - a * qk;
        for (const RatSeries& b : dens) ratio = ratio / (one - b * qk);
        qk *= q;
    }
    return total;
}

}  // namespace

TffReport verify_tff_identities(const TffPoint& p, int N) {
    if (!admissible_tff(p)) throw std::domain_error("verify_tff_identities: degenerate point");
    const Rat &x = p.x, &y = p.y, &u = p.u, &v = p.v, &z = p.z;
    const RatSeries one = one_series(N), q = q_series_base(N), r = r_series(N);
    const RatSeries Y = 1 - r * y, V = 1 - r * v, Z = 1 - r * z;
    const auto unit = [&](const RatSeries&) { return one; };
    const auto pt = named({{"x", x}, {"y", y}, {"u", u}, {"v", v}, {"z", z}});
    TffReport rep;

    // First identity, with its 3phi2 instance.
    const Rat ux = u / (x * (u - 1)), xu = u * (x - 1) / x;
    const RatSeries l0 = qsum({Y * q, ux * Y}, {xu * Y * q, ux * V * Y * q}, unit, N);
    const RatSeries r0 = (1 - 1 / (xu * Y)) / (1 - 1 / (xu * V)) * qsum({V * q, ux * V}, {xu * V * q, ux * V * Y * q}, unit, N);
    rep.tff0 = compare_series("first proof identity", pt, l0, r0);
    {
        const auto [l, rr] = tf32_sides(1, Y * q, ux * Y, ux * V * Y * q, xu * Y * q, N);
        rep.instances.push_back(compare_series("first proof identity, left vs 3phi2 instance", pt, l0, l));
        rep.instances.push_back(compare_series("first proof identity, right vs 3phi2 instance", pt, r0, rr));
    }

    // Second identity, with its instance of the second 3phi2 transformation.
    const RatSeries B = ux * Y, C = Z * (x / (u * (x - 1)));
    const auto ratio_B = [&](const RatSeries& qk) { return (one - B) / (one - B * qk); };
    const auto ratio_C = [&](const RatSeries& qk) { return (one - C) / (one - C * qk); };
    const RatSeries l1 = qsum({Z * Y}, {xu * Y * q}, ratio_B, N);
    const RatSeries pre = (one - B) * (1 - 1 / (xu * Y)) / ((one - C) * (1 - ux / Z));
    auto right = [&](const Rat& k) { return pre * qsum({Z * Y}, {k * (u - 1) / u * Z * q}, ratio_C, N); };
    rep.tff = compare_series("second proof identity", pt, l1, right(x));
    try {
        rep.tff_printed = compare_series("second proof identity, printed lower parameter", pt, l1, right(z));
    } catch (const std::domain_error&) {
        rep.tff_printed = GfReport{"second proof identity, printed lower parameter", pt, N, {}, {}, false, std::nullopt};
    }
    {
        const auto [l, rr] = tf232_sides(1, q_series(Z * Y), B, C, B * q, N);
        rep.instances.push_back(compare_series("second proof identity, left vs second 3phi2 instance", pt, l1, l));
        rep.instances.push_back(compare_series("second proof identity, right vs second 3phi2 instance", pt, right(x), rr));
    }

    ParamPoint g;
    g.x = x, g.y = y, g.u = u, g.z = z, g.v = v;
    ParamPoint swapped1 = g, swapped2 = g;
    swapped1.x = u, swapped1.y = z, swapped1.u = x, swapped1.z = y;
    swapped2.y = v, swapped2.v = y;
    rep.sym1 = eval_G_quadruple(g, N) == eval_G_quadruple(swapped1, N);
    rep.sym2 = eval_G_tilde(g, N) == eval_G_tilde(swapped2, N);
    return rep;
}

}  // namespace fb
