#include <algorithm>
#include <stdexcept>

#include "fishburn/bijections.hpp"
#include "fishburn/qhyper.hpp"
#include "suites_util.hpp"

namespace fb {

using nlohmann::json;
using namespace detail;

namespace {

ParamPoint random_point(std::mt19937_64& rng) {
    ParamPoint p;
    p.x = random_rat(rng), p.y = random_rat(rng), p.u = random_rat(rng);
    p.z = random_rat(rng), p.v = random_rat(rng), p.w = random_rat(rng);
    return p;
}

ParamPoint swap_quadruple(ParamPoint p) {
    std::swap(p.x, p.u);
    std::swap(p.y, p.z);
    return p;
}

ParamPoint swap_tilde(ParamPoint p) {
    std::swap(p.y, p.v);
    return p;
}

// Draws points until `count` of them pass `run` without a vanishing denominator.
template <class Admissible, class Run>
void at_points(std::mt19937_64& rng, int count, Admissible&& admissible, Run&& run) {
    int done = 0, attempts = 0;
    while (done < count) {
        if (++attempts > 1000 * count) throw std::runtime_error("no admissible evaluation points found");
        const ParamPoint p = random_point(rng);
        if (!admissible(p)) continue;
        try {
            run(p);
            ++done;
        } catch (const std::domain_error&) {
        }
    }
}

bool both_closed_form(const ParamPoint& p) {
    return admissible_closed_form(p) && admissible_closed_form(swap_quadruple(p)) &&
           admissible_closed_form(swap_tilde(p));
}

std::string order_scale(int N, int points) {
    return "order " + std::to_string(N) + ", " + std::to_string(points) + " points";
}

Distribution project(const Distribution& d, std::vector<int> idx) { return permuted(d, idx); }

}  // namespace

std::vector<Check> symmetry_checks(const Scale& sc) {
    std::vector<Check> out;
    const int N = sc.bound(9, 10);
    struct Pair {
        std::string name, anchor;
        std::vector<int> lhs, rhs;
    };
    // Indices into (asc, rep, zero, max, ealm, rmin).
    const std::vector<Pair> pairs = {
        {"sym.asc_rep_zero_max", "(asc,rep,zero,max) ~ (rep,asc,max,zero)", {0, 1, 2, 3}, {1, 0, 3, 2}},
        {"sym.asc_rep_max_rmin", "(asc,rep,max,rmin) ~ (asc,rep,rmin,max)", {0, 1, 3, 5}, {0, 1, 5, 3}},
        {"sym.asc_rep_zero_rmin", "(asc,rep,zero,rmin) ~ (rep,asc,rmin,zero)", {0, 1, 2, 5}, {1, 0, 5, 2}},
    };
    for (const Pair& pr : pairs) {
        bool ok = true;
        json failing = json::array();
        for (int n = 1; n <= N; ++n) {
            sc.note("distribution of length " + std::to_string(n) + " for " + pr.name);
            const Distribution& d = stat_distribution(n);
            if (project(d, pr.lhs) != project(d, pr.rhs)) {
                ok = false;
                failing.push_back(n);
            }
        }
        out.push_back(make_check(pr.name, pr.anchor, upto(N), ok, {{"failing_n", failing}}));
    }

    const int order = sc.trunc(10);
    auto rng = group_rng(sc.seed, 4);
    ReportTally s1, s2;
    at_points(rng, std::max(sc.points, 5), both_closed_form, [&](const ParamPoint& p) {
        const RatSeries g = eval_G_quadruple(p, order), gs = eval_G_quadruple(swap_quadruple(p), order);
        const RatSeries h = eval_G_tilde(p, order), hs = eval_G_tilde(swap_tilde(p), order);
        const RatSeries b = brute_force_gf(std::min(order, 10), Selector::Quadruple, p);
        const RatSeries bt = brute_force_gf(std::min(order, 10), Selector::Tilde, p);
        s1.add(compare_series("G(x,y,u,z) = G(u,z,x,y)", p.named(), g, gs));
        s1.add(compare_series("closed form against enumeration", p.named(), g.truncated(b.order()), b));
        s2.add(compare_series("G~(x,y,u,v) = G~(x,v,u,y)", p.named(), h, hs));
        s2.add(compare_series("closed form against enumeration", p.named(), h.truncated(bt.order()), bt));
    });
    const std::string scale = order_scale(order, std::max(sc.points, 5));
    out.push_back(make_check("sym.series_quadruple", "quadruple generating function is symmetric under x<->u, y<->z",
                             scale, s1.ok, s1.details()));
    out.push_back(make_check("sym.series_tilde", "tilde generating function is symmetric under y<->v", scale, s2.ok,
                             s2.details()));
    return out;
}

std::vector<Check> closed_form_checks(const Scale& sc) {
    const int points = std::max(sc.points, 5);
    const int n4 = sc.trunc(10), n5 = sc.order ? *sc.order : 9;
    auto rng = group_rng(sc.seed, 5);
    ReportTally quad, tilde, quint, spec_v, spec_z;
    at_points(rng, points, admissible_closed_form, [&](const ParamPoint& p) {
        sc.note("closed forms at a random point");
        const RatSeries q = eval_G_quadruple(p, n4), t = eval_G_tilde(p, n4), f = eval_G_quintuple(p, n5);
        ParamPoint pv = p, pz = p;
        pv.v = 1;
        pz.z = 1;
        const RatSeries fv = eval_G_quintuple(pv, n5), fz = eval_G_quintuple(pz, n5);
        const RatSeries qv = eval_G_quadruple(pv, n5), tz = eval_G_tilde(pz, n5);
        quad.add(compare_series("quadruple closed form", p.named(), q, brute_force_gf(n4, Selector::Quadruple, p)));
        tilde.add(compare_series("tilde closed form", p.named(), t, brute_force_gf(n4, Selector::Tilde, p)));
        quint.add(compare_series("quintuple closed form", p.named(), f, brute_force_gf(n5, Selector::Quintuple, p)));
        spec_v.add(compare_series("quintuple at v=1", pv.named(), fv, qv));
        spec_z.add(compare_series("quintuple at z=1", pz.named(), fz, tz));
    });
    return {
        make_check("genfun.quadruple", "closed form of the (rep,max,asc,zero) generating function",
                   order_scale(n4, points), quad.ok, quad.details()),
        make_check("genfun.tilde", "closed form of the (rep,max,asc,rmin) generating function", order_scale(n4, points),
                   tilde.ok, tilde.details()),
        make_check("genfun.quintuple", "closed form of the (rep,max,asc,zero,rmin) generating function",
                   order_scale(n5, points), quint.ok, quint.details()),
        make_check("genfun.quintuple_at_v1", "quintuple form specializes to the quadruple form at v=1",
                   order_scale(n5, points), spec_v.ok, spec_v.details()),
        make_check("genfun.quintuple_at_z1", "quintuple form specializes to the tilde form at z=1",
                   order_scale(n5, points), spec_z.ok, spec_z.details()),
    };
}

std::vector<Check> functional_equation_checks(const Scale& sc) {
    const int points = std::max(sc.points, 5);
    const int N = sc.trunc(8);
    auto rng = group_rng(sc.seed, 6);
    ReportTally fe, cases[4];
    at_points(rng, points, admissible_functional_equation, [&](const ParamPoint& p) {
        sc.note("functional equation at a random point");
        const GfReport r = check_functional_equation(p, N);
        GfReport c[4];
        for (int k = 0; k < 4; ++k) c[k] = check_case_form(k + 1, p, N);
        fe.add(r);
        for (int k = 0; k < 4; ++k) cases[k].add(c[k]);
    });
    const std::string scale = order_scale(N, points);
    std::vector<Check> out = {make_check("genfun.functional_equation",
                                         "functional equation of the sextuple generating function", scale, fe.ok,
                                         fe.details())};
    const char* names[] = {"D1", "D2", "S3", "S4"};
    for (int k = 0; k < 4; ++k)
        out.push_back(make_check(std::string("genfun.case_") + names[k],
                                 std::string("contribution of ") + names[k] + " to the sextuple generating function",
                                 scale, cases[k].ok, cases[k].details()));
    return out;
}

std::vector<Check> qseries_checks(const Scale& sc) {
    std::vector<Check> out;
    const int points = std::max(sc.points, 5);
    const int N = sc.trunc(12), Nt = sc.order ? *sc.order : 10;
    auto rng = group_rng(sc.seed, 7);
    auto R = [&] { return random_rat(rng); };
    const auto draw = [&](auto make, auto admissible, auto run) {
        int done = 0, attempts = 0;
        while (done < points) {
            if (++attempts > 1000 * points) throw std::runtime_error("no admissible evaluation points found");
            const auto p = make();
            if (!admissible(p)) continue;
            try {
                run(p);
                ++done;
            } catch (const std::domain_error&) {
            }
        }
    };

    ReportTally tf43, tf43_anchor, cor32, cor32_limit, cor2;
    for (int j = 0; j <= 3; ++j) {
        sc.note("q-series transformations with j = " + std::to_string(j));
        draw([&] { return Tf43Point{R(), R(), R(), R(), R()}; }, admissible_tf43,
             [&](const Tf43Point& p) { tf43.add(verify_tf43(j, p, N)); });
        draw([&] { return Cor32Point{R(), R(), R(), R()}; }, admissible_cor32, [&](const Cor32Point& p) {
            const GfReport r = verify_cor32(j, p, N);
            const auto lim = verify_cor32_from_tf43(j, p, N);
            cor32.add(r);
            for (const GfReport& l : lim) cor32_limit.add(l);
        });
        draw([&] { return Cor2Point{R(), R(), R(), R()}; }, admissible_cor2_32,
             [&](const Cor2Point& p) { cor2.add(verify_cor2_32(j, p, N)); });
        for (int n = 1; n <= 2; ++n)
            draw([&] { return Tf43Point{R(), R(), R(), R(), R()}; }, admissible_tf43, [&](const Tf43Point& p) {
                for (const GfReport& r : verify_tf43_anchor(n, j, p, N)) tf43_anchor.add(r);
            });
    }
    const std::string scale = "order " + std::to_string(N) + ", j=0..3, " + std::to_string(points) + " points each";
    out.push_back(make_check("qseries.tf43", "4phi3 transformation", scale, tf43.ok, tf43.details()));
    out.push_back(make_check("qseries.tf43_terminating_anchor",
                             "4phi3 transformation against the terminating transformation at a = 1 - q^-n, n=1,2",
                             scale, tf43_anchor.ok, tf43_anchor.details()));
    out.push_back(make_check("qseries.tf32", "3phi2 transformation", scale, cor32.ok, cor32.details()));
    out.push_back(make_check("qseries.tf32_from_tf43", "3phi2 transformation as the a -> 1 case of the 4phi3 one",
                             scale, cor32_limit.ok, cor32_limit.details()));
    out.push_back(make_check("qseries.tf2_32", "second 3phi2 transformation", scale, cor2.ok, cor2.details()));

    // Sears' balanced 4phi3 transformation, exact over the rationals.
    int sears_total = 0;
    bool sears_ok = true;
    json sears_fail = json::array();
    for (int n = 0; n <= 5; ++n) {
        int done = 0;
        while (done < points) {
            const SearsPoint p{R(), R(), R(), R(), R(), R()};
            try {
                const bool ok = verify_sears(n, p);
                ++done;
                ++sears_total;
                if (!ok) {
                    sears_ok = false;
                    sears_fail.push_back({{"n", n}, {"q", to_string(p.q)}, {"a", to_string(p.a)}});
                }
            } catch (const std::domain_error&) {
            }
        }
    }
    out.push_back(make_check("qseries.sears", "Sears' balanced terminating 4phi3 transformation",
                             "n<=5, " + std::to_string(points) + " points each", sears_ok,
                             {{"comparisons", sears_total}, {"failures", sears_fail}}));

    ReportTally tff0, tff, inst;
    json printed = json::array(), routes = json::array();
    bool routes_ok = true;
    draw([&] { return TffPoint{R(), R(), R(), R(), R()}; }, admissible_tff, [&](const TffPoint& p) {
        sc.note("generating-function identities at a random point");
        const TffReport r = verify_tff_identities(p, Nt);
        tff0.add(r.tff0);
        tff.add(r.tff);
        for (const GfReport& i : r.instances) inst.add(i);
        printed.push_back(r.tff_printed.verdict);
        routes.push_back({{"sym1", r.sym1}, {"sym2", r.sym2}});
        routes_ok = routes_ok && r.routes_agree() && r.sym1 && r.sym2;
    });
    const std::string tscale = order_scale(Nt, points);
    out.push_back(make_check("qseries.tff0", "first proof identity", tscale, tff0.ok, tff0.details()));
    json td = tff.details();
    td["printed_lower_parameter_holds"] = printed;
    out.push_back(make_check("qseries.tff", "second proof identity with lower parameter x(u-1)(1-zr)q/u", tscale,
                             tff.ok, td));
    out.push_back(make_check("qseries.tff_instances", "second proof identity as a 3phi2 instance", tscale, inst.ok,
                             inst.details()));
    out.push_back(make_check("qseries.symmetry_routes",
                             "identities agree with the generating-function symmetries at the same points", tscale,
                             routes_ok, {{"symmetries", routes}}));
    return out;
}

std::vector<Check> inversion_checks(const Scale& sc) {
    std::vector<Check> out;
    const int N = sc.bound(7, 7), S = sc.order ? *sc.order : 6;
    sc.note("inversion-sequence polynomials up to length " + std::to_string(N));
    const GarsiaGesselReport g = garsia_gessel_check(N);
    const GarsiaGesselReport gs = S == N ? g : garsia_gessel_check(S);
    out.push_back(make_check("inv.h_symmetric", "H_n(u,x) = H_n(x,u) for (asc,rep) on inversion sequences", upto(N),
                             g.h_symmetric));
    out.push_back(make_check("inv.b_symmetric", "B_n(u,x) from (des,iasc) on permutations is symmetric", upto(N),
                             g.b_symmetric && g.b_relation,
                             {{"symmetric", g.b_symmetric}, {"relation_to_H", g.b_relation}}));
    out.push_back(make_check("inv.foata", "(des,iasc) on permutations ~ (asc,rep) on inversion sequences", upto(N),
                             g.foata));
    out.push_back(make_check("inv.generating_series", "generating series of H_n with exponent (k+1)(m+1)",
                             "N=" + std::to_string(S), gs.series_identity,
                             {{"printed_exponent_km_holds", gs.printed_exponent}}));

    const int C = sc.bound(8, 10);
    bool conj = true, prop = true;
    json cf = json::array(), pf = json::array();
    for (int n = 1; n <= C; ++n) {
        sc.note("inversion-sequence quintuple at length " + std::to_string(n));
        if (!check_conjecture_quintuple(n)) conj = false, cf.push_back(n);
    }
    const int P = sc.bound(8, 8);
    for (int n = 1; n <= P; ++n)
        if (!check_prop_syminv(n)) prop = false, pf.push_back(n);
    out.push_back(make_check("inv.conjecture_quintuple", "(asc,rep,zero,max,rmin) ~ (asc,rep,zero,rmin,max)",
                             upto(C), conj, {{"failing_n", cf}}));
    out.push_back(make_check("inv.asc_rep_zero_max", "(asc,rep,zero,max) ~ (rep,asc,rmin,zero)", upto(P), prop,
                             {{"failing_n", pf}}));
    return out;
}

std::vector<Check> family_checks(const Scale& sc) {
    const int N = sc.bound(8, 9);
    bool five = true, four_l = true, four_r = true, mat = true, perm = true;
    for (int n = 1; n <= N; ++n) {
        sc.note("permutations and matrices of size " + std::to_string(n));
        Distribution p5, pz, mz;
        for_each_permutation(n, [&](const Perm& p) {
            if (!avoids_pattern(p)) return;
            const PermStats s = perm_stats(p);
            ++p5[{s.des, s.iasc, s.lmax, s.lmin, s.rmax}];
            ++pz[{s.des, s.lmax}];
        });
        for_each_fishburn_matrix(n, [&](const Matrix& m) {
            ++mz[{static_cast<int>(m.size()) - 1, matrix_stats(m).rowsum1}];
        });
        const Distribution az = project(stat_distribution(n), {0, 2});
        const Distribution swapped = project(p5, {1, 0, 3, 2});
        five = five && project(p5, {0, 1, 2, 4, 3}) == p5;
        four_l = four_l && project(p5, {0, 1, 2, 3}) == swapped;
        four_r = four_r && project(p5, {0, 1, 2, 4}) == swapped;
        mat = mat && mz == az;
        perm = perm && pz == az;
    }
    const std::string scale = upto(N);
    return {
        make_check("family.perm_lmin_rmax", "(des,iasc,lmax,lmin,rmax) ~ (des,iasc,lmax,rmax,lmin) on avoiders", scale,
                   five),
        make_check("family.perm_lmin_swap", "(des,iasc,lmax,lmin) ~ (iasc,des,lmin,lmax) on avoiders", scale, four_l),
        make_check("family.perm_rmax_swap", "(des,iasc,lmax,rmax) ~ (iasc,des,lmin,lmax) on avoiders", scale, four_r),
        make_check("family.matrix_asc_zero", "(dim-1,rowsum1) on matrices ~ (asc,zero) on ascent sequences", scale,
                   mat),
        make_check("family.perm_asc_zero", "(des,lmax) on avoiders ~ (asc,zero) on ascent sequences", scale, perm),
    };
}

std::vector<Check> matrix_checks(const Scale& sc) {
    const int N = sc.bound(7, 8);
    bool triple = true, ne_pair = true, tr_pair = true;
    json per_n = json::object();
    for (int n = 1; n <= N; ++n) {
        sc.note("Fishburn matrices of weight " + std::to_string(n));
        Distribution d;
        for_each_fishburn_matrix(n, [&](const Matrix& m) {
            const MatrixStats s = matrix_stats(m);
            ++d[{s.rowsum1, s.ne, s.tr}];
        });
        const bool t = permuted(d, {0, 2, 1}) == d;
        const Distribution a = project(d, {0, 1}), b = project(d, {0, 2});
        const bool pn = permuted(a, {1, 0}) == a, pt = permuted(b, {1, 0}) == b;
        triple = triple && t;
        ne_pair = ne_pair && pn;
        tr_pair = tr_pair && pt;
        Distribution r1 = project(d, {0}), trm = project(d, {2});
        json m1 = json::object(), m2 = json::object();
        for (const auto& [k, c] : r1) m1[std::to_string(k[0])] = c;
        for (const auto& [k, c] : trm) m2[std::to_string(k[0])] = c;
        per_n[std::to_string(n)] = {{"triple", t}, {"rowsum1_ne", pn}, {"rowsum1_tr", pt},
                                    {"rowsum1_marginal", m1}, {"tr_marginal", m2}};
    }
    const std::string scale = upto(N);
    return {
        make_check("matrix.rowsum1_ne_tr", "(rowsum1,ne,tr) ~ (rowsum1,tr,ne) on Fishburn matrices", scale, triple,
                   {{"per_n", per_n}}),
        make_check("matrix.rowsum1_ne", "(rowsum1,ne) is symmetric on Fishburn matrices", scale, ne_pair,
                   {{"per_n", per_n}}),
        make_check("matrix.rowsum1_tr", "(rowsum1,tr) is symmetric on Fishburn matrices", scale, tr_pair,
                   {{"per_n", per_n}}),
    };
}

std::vector<Check> stability_checks(const Scale& sc) {
    const int N = sc.trunc(8), extra = 5;
    auto rng = group_rng(sc.seed, 8);
    ReportTally ceil_t, trunc_t;
    at_points(rng, std::max(sc.points, 5), admissible_closed_form, [&](const ParamPoint& p) {
        sc.note("truncation stability at a random point");
        using Eval = RatSeries (*)(const ParamPoint&, int, int);
        const std::pair<const char*, Eval> evals[] = {
            {"quadruple", eval_G_quadruple}, {"tilde", eval_G_tilde}, {"quintuple", eval_G_quintuple}};
        for (const auto& [name, f] : evals) {
            const RatSeries a = f(p, N, -1), b = f(p, N, N + extra), c = f(p, N + extra, -1);
            ceil_t.add(compare_series(std::string(name) + " summation ceiling N vs N+5", p.named(), a, b));
            trunc_t.add(compare_series(std::string(name) + " order N vs truncated N+5", p.named(), a,
                                       c.truncated(N)));
        }
        const RatSeries d = delta(p, 3, N), e = delta(p, 3, N + extra);
        trunc_t.add(compare_series("delta order N vs truncated N+5", p.named(), d, e.truncated(N)));
    });
    ceil_t.add(compare_series("Fishburn series summation ceiling N vs N+5", {}, eval_fishburn(N),
                              eval_fishburn(N, N + extra)));
    trunc_t.add(compare_series("Fishburn series order N vs truncated N+5", {}, eval_fishburn(N),
                               eval_fishburn(N + extra).truncated(N)));

    // A 2phi1 with a unit upper parameter, where the term count is bounded by the valuation.
    auto phi = [&](int order, std::optional<int> ceiling) {
        PhiSpec s;
        s.upper = {q_tag(2, order), q_series(RatSeries::constant(1, "r", order) -
                                             RatSeries::variable("r", order) * Rat(2, 3))};
        s.lower = {q_const(Rat(3), order)};
        s.order = order;
        s.ceiling = ceiling;
        return phi_series(s);
    };
    ceil_t.add(compare_series("2phi1 term ceiling N vs N+5", {}, phi(N, std::nullopt), phi(N, N + extra)));
    trunc_t.add(compare_series("2phi1 order N vs truncated N+5", {}, phi(N, std::nullopt),
                               phi(N + extra, std::nullopt).truncated(N)));
    const std::string scale = "order " + std::to_string(N) + " against " + std::to_string(N + extra);
    return {
        make_check("stability.summation_ceiling", "summands beyond the truncation order vanish", scale, ceil_t.ok,
                   ceil_t.details()),
        make_check("stability.truncation_order", "lower-order evaluation equals truncation of a higher one", scale,
                   trunc_t.ok, trunc_t.details()),
    };
}

namespace {

using Group = std::vector<Check> (*)(const Scale&);

std::vector<Check> examples_group(const Scale&) { return example_checks(); }

const std::vector<std::pair<std::string, std::vector<Group>>>& suite_table() {
    static const std::vector<std::pair<std::string, std::vector<Group>>> table = {
        {"lemmas", {lemma_checks, examples_group, label_checks}},
        {"phi", {phi_checks}},
        {"distributions", {count_checks, family_checks, matrix_checks}},
        {"genfun", {closed_form_checks, functional_equation_checks, stability_checks}},
        {"qseries", {qseries_checks}},
        {"conjecture", {symmetry_checks, inversion_checks}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, groups] : suite_table()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

std::vector<Check> run_suite(const std::string& suite, const Scale& sc) {
    std::vector<Check> out;
    bool found = false;
    for (const auto& [name, groups] : suite_table()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        for (Group g : groups) {
            std::vector<Check> part = g(sc);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    if (!found) throw std::invalid_argument("unknown suite: " + suite);
    std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.check < b.check; });
    return out;
}

}  // namespace fb
