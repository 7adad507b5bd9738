#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "fishburn/bijections.hpp"
#include "fishburn/classify.hpp"
#include "fishburn/structures.hpp"
#include "suites_util.hpp"

namespace fb {

using nlohmann::json;
using namespace detail;

nlohmann::json to_json(const Check& c) {
    return {{"check", c.check}, {"anchor", c.anchor}, {"scale", c.scale}, {"verdict", c.verdict}, {"details", c.details}};
}

std::vector<Check> count_checks(const Scale& sc) {
    std::vector<Check> out;
    const int na = sc.bound(10, 10), ni = sc.bound(8, 8), np = sc.bound(9, 9), nm = sc.bound(8, 8);

    json d = json::object();
    bool ok = true;
    for (int n = 0; n <= na; ++n) {
        sc.note("counting ascent sequences of length " + std::to_string(n));
        std::uint64_t c = 0;
        for_each_ascent_sequence(n, [&](const Seq&) { ++c; });
        d[std::to_string(n)] = c;
        ok = ok && c == kFishburn[n];
    }
    out.push_back(make_check("counts.ascent_sequences", "Fishburn numbers count ascent sequences", upto(na), ok, d));

    d = json::object();
    ok = true;
    std::uint64_t fact = 1;
    for (int n = 0; n <= ni; ++n) {
        if (n > 0) fact *= static_cast<std::uint64_t>(n);
        std::uint64_t c = 0;
        for_each_inversion_sequence(n, [&](const Seq&) { ++c; });
        d[std::to_string(n)] = c;
        ok = ok && c == fact;
    }
    out.push_back(make_check("counts.inversion_sequences", "inversion sequences number n!", upto(ni), ok, d));

    d = json::object();
    ok = true;
    for (int n = 1; n <= np; ++n) {
        sc.note("counting pattern-avoiding permutations of length " + std::to_string(n));
        std::uint64_t c = 0;
        for_each_permutation(n, [&](const Perm& p) { c += avoids_pattern(p) ? 1 : 0; });
        d[std::to_string(n)] = c;
        ok = ok && c == kFishburn[n];
    }
    out.push_back(make_check("counts.avoiding_permutations", "Fishburn numbers count bivincular-pattern avoiders",
                             upto(np), ok, d));

    d = json::object();
    ok = true;
    for (int n = 1; n <= nm; ++n) {
        sc.note("counting Fishburn matrices of weight " + std::to_string(n));
        std::uint64_t c = 0;
        for_each_fishburn_matrix(n, [&](const Matrix&) { ++c; });
        d[std::to_string(n)] = c;
        ok = ok && c == kFishburn[n];
    }
    out.push_back(make_check("counts.fishburn_matrices", "Fishburn numbers count Fishburn matrices", upto(nm), ok, d));

    const int order = std::min(sc.trunc(10), 12);
    sc.note("evaluating the Fishburn series to order " + std::to_string(order));
    const RatSeries f = eval_fishburn(order);
    ok = true;
    json coeffs = json::array();
    for (int k = 0; k <= order; ++k) {
        coeffs.push_back(to_string(f[k]));
        if (k >= 1) ok = ok && f[k] == Rat(static_cast<unsigned long>(kFishburn[k]));
    }
    ok = ok && f == brute_force_gf(order, Selector::Quadruple, ParamPoint{});
    out.push_back(make_check("counts.fishburn_series", "basic hypergeometric generating function of Fishburn numbers",
                             "order " + std::to_string(order), ok, {{"coefficients", coeffs}}));
    return out;
}

std::vector<Check> phi_checks(const Scale& sc) {
    std::vector<Check> out;
    const int N = sc.bound(9, 10);
    json per_n = json::object();
    long transport_bad = 0, inverse_bad = 0, errors = 0;
    bool bijective = true, stair_fixed = true;
    for (int n = 1; n <= N; ++n) {
        sc.note("applying Phi to every ascent sequence of length " + std::to_string(n));
        std::set<Seq> image;
        long count = 0, tb = 0, ib = 0;
        for_each_ascent_sequence(n, [&](const Seq& s) {
            ++count;
            try {
                const Seq t = Phi(s);
                const Septuple a = septuple(s), b = septuple(t);
                const bool ok = is_ascent_sequence(t) && t.size() == s.size() && a[0] == b[0] && a[1] == b[1] &&
                                a[2] == b[2] && a[3] == b[5] && a[4] == b[6] && a[5] == b[3] && a[6] == b[4];
                if (!ok) ++tb;
                if (Phi_inv(t) != s) ++ib;
                image.insert(t);
                if (is_staircase(s) && t != s) stair_fixed = false;
            } catch (const std::exception&) {
                ++errors;
            }
        });
        transport_bad += tb;
        inverse_bad += ib;
        bijective = bijective && static_cast<long>(image.size()) == count;
        per_n[std::to_string(n)] = {{"sequences", count}, {"distinct_images", image.size()}, {"transport_failures", tb},
                                    {"inverse_failures", ib}};
        clear_caches();
    }
    const std::string scale = upto(N);
    out.push_back(make_check("phi.septuple_transport", "master bijection transports the septuple", scale,
                             transport_bad == 0 && errors == 0, {{"per_n", per_n}, {"errors", errors}}));
    out.push_back(make_check("phi.bijective", "master bijection is a bijection of A_n", scale, bijective && errors == 0,
                             {{"per_n", per_n}}));
    out.push_back(make_check("phi.inverse_round_trip", "master bijection inverse", scale,
                             inverse_bad == 0 && errors == 0, {{"inverse_failures", inverse_bad}}));
    out.push_back(make_check("phi.staircase_fixed", "staircase is a fixed point", scale, stair_fixed));
    const bool base = Phi({0, 1, 0}) == Seq{0, 0, 1} && Phi_inv({0, 0, 1}) == Seq{0, 1, 0};
    out.push_back(make_check("phi.base_case", "base case (0,1,0) -> (0,0,1)", "n=3", base));
    return out;
}

namespace {

struct Tally {
    long domain = 0, transport = 0, inverse = 0, errors = 0, image = 0;
    json per_n = json::object();
    bool ok() const { return transport == 0 && inverse == 0 && errors == 0 && image == 0; }
    json details() const {
        return {{"domain_size", domain}, {"transport_failures", transport}, {"inverse_failures", inverse},
                {"errors", errors}, {"image_mismatches", image}, {"per_n", per_n}};
    }
};

bool not_empty_or_stair(const Seq& s) { return !s.empty() && !is_staircase(s); }

// Codomain bullets of f51 and f52, restated from their definitions.
bool f5x_codomain(const Seq& t, bool first) {
    if (t.empty() || is_staircase(t)) return false;
    const int j = rpos(t);
    if (j == 0) return false;
    const Rmins r = rmins(t);
    const auto [a, b] = two_rightmost(t, r.X[j]);
    const bool next_to = r.P[j - 1] + 1 == a;
    if (!first) return !next_to && b != a + 1;
    if (!next_to || b == a + 1) return false;
    for (int k = a + 1; k < b; ++k)
        if (is_masc(t, k)) return false;
    return true;
}

// Transport of f53 and f54: asc, rep, rmin kept, rpos raised by one, zero corrected by chi(rpos=0), and
// (max,ealm) raised by one exactly when the second rightmost Rmin_rpos is maximal.
bool star_transport(const Seq& s, const Seq& u) {
    const Septuple a = septuple(s), b = septuple(u);
    const int i = a[6];
    const Rmins r = rmins(s);
    const int second = two_rightmost(s, r.X[i]).first;
    const int raise = chi(s[second] == second);
    return a[0] == b[0] && a[1] == b[1] && a[5] == b[5] && b[6] == a[6] + 1 && a[2] == b[2] + chi(a[6] == 0) &&
           b[3] == a[3] + raise && b[4] == a[4] + raise;
}

template <class F>
void guarded(Tally& t, F&& body) {
    try {
        body();
    } catch (const std::exception&) {
        ++t.errors;
    }
}

}  // namespace

std::vector<Check> lemma_checks(const Scale& sc) {
    const int N = sc.bound(8, 9);
    std::map<std::string, Tally> T;
    const TLabel t5[] = {TLabel::T51, TLabel::T52, TLabel::T53, TLabel::T54};

    for (int n = 1; n <= N; ++n) {
        sc.note("lemma sweep over length " + std::to_string(n));
        const std::vector<Seq> A = ascent_sequences(n), prev = ascent_sequences(n - 1);
        std::map<Seq, Septuple> st;
        std::map<Seq, Rmins> rm;
        for (const Seq& s : A) {
            st[s] = septuple(s);
            rm[s] = rmins(s);
        }
        const std::string key = std::to_string(n);

        // f2
        {
            Tally& t = T["f2"];
            std::set<std::pair<int, Seq>> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || t_label(s) != TLabel::T2) continue;
                ++t.domain;
                guarded(t, [&] {
                    const auto [i, u] = f2(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const bool ok = is_ascent_sequence(u) && !is_staircase(u) && S[0] == U[0] && S[3] == U[3] &&
                                    S[4] == U[4] && S[5] == U[5] && S[2] == U[2] + chi(S[6] == 0) &&
                                    S[1] == U[1] + 1 && U[6] <= i && i < U[5];
                    t.transport += !ok;
                    t.inverse += f2_inv(i, u) != s;
                    img.insert({i, u});
                });
            }
            for (const Seq& u : prev)
                if (not_empty_or_stair(u))
                    for (int i = rpos(u); i < rmin(u); ++i) cod.insert({i, u});
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // phi1
        {
            Tally& t = T["phi1"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || !in_P1(s)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = phi1(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const bool ok = S == Septuple{U[0] + 1, U[1], U[2], U[3], U[4], U[5] + 1, U[6]};
                    t.transport += !ok;
                    t.inverse += phi1_inv(u) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : prev)
                if (not_empty_or_stair(u)) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // f3, f4
        for (const bool third : {true, false}) {
            Tally& t = T[third ? "f3" : "f4"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || t_label(s) != (third ? TLabel::T3 : TLabel::T4)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = third ? f3(s) : f4(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const int rp = S[6], M = S[3];
                    const bool ok = is_ascent_sequence(u) && S[0] == U[0] && S[3] == U[3] && S[5] == U[5] - 1 &&
                                    S[6] == U[6] - 1 && S[2] == U[2] + chi(rp == 0) &&
                                    S[4] == U[4] - chi(rm[s].P[rp] == M) && S[1] == U[1] + chi(third);
                    t.transport += !ok;
                    t.inverse += (third ? f3_inv(u) : f4_inv(u)) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A)
                if (!is_staircase(u) && in_P1(u) == third && st[u][6] != 0) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // f51, f52
        for (const bool first : {true, false}) {
            Tally& t = T[first ? "f51" : "f52"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || t_label(s) != (first ? TLabel::T51 : TLabel::T52)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = first ? f51(s) : f52(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const int rp = S[6], M = S[3];
                    bool ok = is_ascent_sequence(u) && S[0] == U[0] && S[1] == U[1] && S[3] == U[3] &&
                              S[5] == U[5] && S[6] == U[6] - 1 && S[2] == U[2] + chi(rp == 0);
                    ok = ok && S[4] == U[4] - (first ? 0 : chi(rm[s].P[rp] == M));
                    t.transport += !ok;
                    t.inverse += (first ? f51_inv(u) : f52_inv(u)) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A)
                if (f5x_codomain(u, first)) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // g
        {
            Tally& t = T["g"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || t_label(s) != TLabel::T53) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = g(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const int rp = S[6], M = S[3];
                    const bool ok = is_ascent_sequence(u) && S[0] == U[0] + 1 && S[1] == U[1] && S[3] == U[3] &&
                                    S[5] == U[5] && S[6] == U[6] - 1 && S[2] == U[2] + chi(rp == 0) &&
                                    S[4] == U[4] - chi(rm[s].P[rp] == M);
                    t.transport += !ok;
                    t.inverse += g_inv(u) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : prev)
                if (!u.empty() && rpos(u) != 0) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // g53: {rpos != 0} in A_{n-1} onto B1 in A_n
        {
            Tally& t = T["g53"];
            std::set<Seq> img, cod;
            for (const Seq& s : prev) {
                if (s.empty() || rpos(s) == 0) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = g53(s);
                    t.transport += !(is_ascent_sequence(u) && u.size() == s.size() + 1 && in_B1(u));
                    t.inverse += g53_inv(u) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A)
                if (in_B1(u)) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // f53, f54
        for (const bool third : {true, false}) {
            Tally& t = T[third ? "f53" : "f54"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || t_label(s) != (third ? TLabel::T53 : TLabel::T54)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = third ? f53(s) : f54(s);
                    t.transport += !(is_ascent_sequence(u) && star_transport(s, u));
                    t.inverse += (third ? f53_inv(u) : f54_inv(u)) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A)
                if (in_B(u) && in_B1(u) == third) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // f5
        {
            Tally& t = T["f5"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || std::find(std::begin(t5), std::end(t5), t_label(s)) == std::end(t5)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = f5(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    bool ok = is_ascent_sequence(u) && S[0] == U[0] && S[1] == U[1] && S[5] == U[5] &&
                              U[6] == S[6] + 1 && S[2] == U[2] + chi(S[6] == 0);
                    switch (m_label(s)) {
                        case MLabel::M51: ok = ok && U[3] == S[3] && U[4] == S[4]; break;
                        case MLabel::M52: ok = ok && U[3] == S[3] && U[4] == S[4] + 1; break;
                        case MLabel::M53: ok = ok && U[3] == S[3] + 1 && U[4] == S[4] + 1; break;
                        case MLabel::None: ok = false; break;
                    }
                    t.transport += !ok;
                    t.inverse += f5_inv(u) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A) {
                if (is_staircase(u) || st[u][6] == 0) continue;
                const TLabel l = t_label(u);
                if (l != TLabel::T1 && l != TLabel::T2) cod.insert(u);
            }
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // h2
        {
            Tally& t = T["h2"];
            std::set<std::pair<int, Seq>> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || d_label(s) != DLabel::D2) continue;
                ++t.domain;
                guarded(t, [&] {
                    const auto [i, u] = h2(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const bool ok = is_ascent_sequence(u) && !is_staircase(u) && S[0] == U[0] && S[5] == U[5] &&
                                    S[6] == U[6] && S[3] == U[3] && S[2] == U[2] + chi(S[4] == 0) &&
                                    S[1] == U[1] + 1 && U[4] <= i && i < U[3];
                    t.transport += !ok;
                    t.inverse += h2_inv(i, u) != s;
                    img.insert({i, u});
                });
            }
            for (const Seq& u : prev)
                if (not_empty_or_stair(u))
                    for (int i = ealm(u); i < max_stat(u); ++i) cod.insert({i, u});
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // phi2
        {
            Tally& t = T["phi2"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (!in_P2(s)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = phi2(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const bool ok =
                        is_ascent_sequence(u) && S == Septuple{U[0] + 1, U[1], U[2], U[3] + 1, U[4], U[5], U[6]};
                    t.transport += !ok;
                    t.inverse += phi2_inv(u) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : prev)
                if (not_empty_or_stair(u)) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // h3, h4
        for (const bool third : {true, false}) {
            Tally& t = T[third ? "h3" : "h4"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || d_label(s) != (third ? DLabel::D3 : DLabel::D4)) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = third ? h3(s) : h4(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    const int rp = S[6], M = S[3];
                    const bool ok = is_ascent_sequence(u) && S[0] == U[0] && S[5] == U[5] && S[3] == U[3] - 1 &&
                                    S[4] == U[4] - 1 && S[2] == U[2] + chi(S[4] == 0) &&
                                    S[6] == U[6] - chi(rm[s].P[rp] == M) && S[1] == U[1] + chi(third);
                    t.transport += !ok;
                    t.inverse += (third ? h3_inv(u) : h4_inv(u)) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A)
                if (!is_staircase(u) && in_P2(u) == third && st[u][4] != 0) cod.insert(u);
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        // h5
        {
            Tally& t = T["h5"];
            std::set<Seq> img, cod;
            for (const Seq& s : A) {
                if (is_staircase(s) || d_label(s) != DLabel::D5) continue;
                ++t.domain;
                guarded(t, [&] {
                    const Seq u = h5(s);
                    const Septuple& S = st[s];
                    const Septuple U = septuple(u);
                    bool ok = is_ascent_sequence(u) && S[0] == U[0] && S[1] == U[1] && S[3] == U[3] &&
                              S[4] == U[4] - 1 && S[2] == U[2] + chi(S[4] == 0);
                    switch (d5_label(s)) {
                        case D5Label::D51: ok = ok && S[5] == U[5] && S[6] == U[6]; break;
                        case D5Label::D52: ok = ok && S[5] == U[5] && S[6] == U[6] - 1; break;
                        case D5Label::D53: ok = ok && S[5] == U[5] - 1 && S[6] == U[6] - 1; break;
                        case D5Label::None: ok = false; break;
                    }
                    t.transport += !ok;
                    t.inverse += h5_inv(u) != s;
                    img.insert(u);
                });
            }
            for (const Seq& u : A) {
                if (is_staircase(u) || st[u][4] == 0) continue;
                const DLabel l = d_label(u);
                if (l == DLabel::D3 || l == DLabel::D4 || l == DLabel::D5) cod.insert(u);
            }
            t.image += img != cod;
            t.per_n[key] = img.size();
        }
        clear_caches();
    }

    static const std::map<std::string, std::string> anchors = {
        {"f2", "f2: remove the rightmost repeated right-to-left minimum"},
        {"phi1", "phi1: remove a final maximal ascent"},
        {"f3", "f3: T3 onto P1 with rpos != 0"},
        {"f4", "f4: T4 onto the complement of P1 with rpos != 0"},
        {"f51", "f51: T51 onto its two-bullet codomain"},
        {"f52", "f52: T52 onto its two-bullet codomain"},
        {"g", "g: T53 onto shorter sequences with rpos != 0"},
        {"g53", "g53: rpos != 0 onto B1 by the four insertion cases"},
        {"f53", "f53 = g53 after g: T53 onto B1"},
        {"f54", "f54: recursive map T54 onto B - B1"},
        {"f5", "f5: T5 onto T3, T4, T5 with rpos != 0"},
        {"h2", "h2: remove the entry after the last maximal"},
        {"phi2", "phi2: P2 onto A*"},
        {"h3", "h3: D3 onto P2 with ealm != 0"},
        {"h4", "h4: D4 onto the complement of P2 with ealm != 0"},
        {"h5", "h5: D5 onto D3, D4, D5 with ealm != 0"},
    };
    std::vector<Check> out;
    for (const auto& [name, t] : T)
        out.push_back(make_check("lemma." + name, anchors.at(name), upto(N), t.ok() && t.domain > 0, t.details()));
    return out;
}

std::vector<Check> example_checks() {
    json d = json::object();
    bool all = true;
    auto expect = [&](const std::string& name, auto&& compute, const Seq& want) {
        bool ok = false;
        try {
            ok = compute() == want;
        } catch (const std::exception&) {
        }
        d[name] = ok;
        all = all && ok;
    };
    expect("f2", [] { return f2({0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4}).second; }, {0, 0, 1, 2, 0, 1, 2, 1, 3, 4});
    expect("f2 index", [] { return Seq{f2({0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4}).first}; }, {2});
    expect("f2_inv", [] { return f2_inv(2, {0, 0, 1, 2, 0, 1, 2, 1, 3, 4}); }, {0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4});
    expect("phi1", [] { return phi1({0, 1}); }, {0});
    expect("phi1 long", [] { return phi1({0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7}); }, {0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5});
    expect("f3", [] { return f3({0, 0, 1, 2, 0, 1, 2, 1, 2, 4, 3, 5}); }, {0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7});
    expect("f3_inv", [] { return f3_inv({0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7}); }, {0, 0, 1, 2, 0, 1, 2, 1, 2, 4, 3, 5});
    expect("f4", [] { return f4({0, 0, 1, 2, 0, 1, 2, 1, 4, 3, 5}); }, {0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5});
    expect("f4_inv", [] { return f4_inv({0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5}); }, {0, 0, 1, 2, 0, 1, 2, 1, 4, 3, 5});
    expect("R1", [] { return substitute_R1({0, 1, 2, 0, 1, 4, 1, 2, 1, 1}, 1, 4); }, {0, 1, 2, 0, 1, 4, 2, 4, 4, 1});
    expect("R1 mid state", [] { return substitute_R1({0, 1, 2, 0, 1, 4, 1, 2, 1, 1}, 1, 4, nullptr, 1); },
           {0, 1, 2, 0, 1, 4, 2, 4, 1, 1});
    expect("R2", [] { return substitute_R2({0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1}, 1, 4); },
           {0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 4, 3, 1});
    expect("R2 mid state", [] { return substitute_R2({0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1}, 1, 4, nullptr, 1); },
           {0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 1, 3, 1});
    expect("R1 trace", [] {
        std::vector<int> tr;
        substitute_R1({0, 1, 2, 0, 1, 4, 1, 2, 1, 1}, 1, 4, &tr);
        return Seq(tr.begin(), tr.end());
    }, {3, 1});
    expect("R2 trace", [] {
        std::vector<int> tr;
        substitute_R2({0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1}, 1, 4, &tr);
        return Seq(tr.begin(), tr.end());
    }, {6, 5});
    expect("g", [] { return g({0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8}); }, {0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 2, 3});
    expect("g53", [] { return g53({0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 2, 3}); },
           {0, 1, 2, 0, 1, 2, 3, 6, 5, 5, 8, 6, 3, 2, 3});
    expect("g53 second", [] { return g53({0, 1, 2, 0, 1, 2, 5, 2, 3, 3}); }, {0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3});
    expect("f53", [] { return f53({0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8}); },
           {0, 1, 2, 0, 1, 2, 3, 6, 5, 5, 8, 6, 3, 2, 3});
    expect("R3", [] { return insert_R3({0, 1, 3, 2}, 3); }, {0, 1, 3, 2, 3});
    expect("f54", [] { return f54({0, 1, 2, 0, 1, 2, 5, 2, 3, 2, 3, 8, 8, 4}); },
           {0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 7, 7, 4});
    expect("f54 second", [] { return f54({0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4}); },
           {0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4});
    expect("f54_inv", [] { return f54_inv({0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4}); },
           {0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4});
    expect("Phi base case", [] { return Phi({0, 1, 0}); }, {0, 0, 1});
    clear_caches();
    return {make_check("lemma.worked_examples", "worked examples of the bijections", "fixed inputs", all, d)};
}

namespace {

// T-set memberships re-evaluated from their definitions.
std::vector<TLabel> t_memberships(const Seq& s) {
    std::vector<TLabel> in;
    const Rmins r = rmins(s);
    const int p = static_cast<int>(r.X.size()), n = static_cast<int>(s.size()), i = rpos(s);
    const auto sb = sebr(s);
    if (n == p + 1) in.push_back(TLabel::T1);
    if (n != p + 1 && !sb) in.push_back(TLabel::T2);
    if (n == p + 1 || !sb) return in;
    const long next = i + 1 < p ? r.X[i + 1] : std::numeric_limits<long>::max();
    const bool A1 = *sb >= next, A2 = *sb < next;
    const bool adjacent = i + 1 < p && r.P[i + 1] == r.P[i] + 1;
    bool masc_after = false;
    for (int k = r.P[i] + 1; k < n; ++k) masc_after = masc_after || is_masc(s, k);
    const bool last_masc = is_masc(s, n - 1);
    if (A1 && *sb == next && adjacent && !masc_after) in.push_back(TLabel::T3);
    if (A2 && !last_masc) in.push_back(TLabel::T4);
    if (A1 && *sb > next && adjacent) in.push_back(TLabel::T51);
    if (A1 && !adjacent) in.push_back(TLabel::T52);
    if (A2 && last_masc) in.push_back(TLabel::T53);
    if (A1 && *sb == next && adjacent && masc_after) in.push_back(TLabel::T54);
    return in;
}

std::vector<DLabel> d_memberships(const Seq& s) {
    std::vector<DLabel> in;
    const int n = static_cast<int>(s.size()), M = max_stat(s);
    if (n == M + 1) {
        in.push_back(DLabel::D1);
        return in;
    }
    const int e = s[M], nxt = s[M + 1];
    const bool later = std::find(s.begin() + M + 1, s.end(), M) != s.end();
    if (nxt <= e) in.push_back(DLabel::D2);
    if (nxt == e + 1 && !later) in.push_back(DLabel::D3);
    if (nxt == e + 1 && later) in.push_back(DLabel::D4);
    if (nxt >= e + 2) in.push_back(DLabel::D5);
    return in;
}

// 0 = neither, 3 = S3, 4 = S4.
int s_membership(const Seq& s) {
    const int n = static_cast<int>(s.size()), M = max_stat(s);
    if (n == M + 1 || !(s[M] < s[M + 1])) return 0;
    return std::find(s.begin() + M + 1, s.end(), M) != s.end() ? 4 : 3;
}

}  // namespace

std::vector<Check> label_checks(const Scale& sc) {
    std::vector<Check> out;
    const int N = sc.bound(9, 10);
    long t_bad = 0, d_bad = 0, s_bad = 0, union_bad = 0, total = 0;
    for (int n = 1; n <= N; ++n) {
        sc.note("classifying ascent sequences of length " + std::to_string(n));
        for_each_ascent_sequence(n, [&](const Seq& s) {
            if (is_staircase(s)) return;
            ++total;
            const auto tm = t_memberships(s);
            const auto dm = d_memberships(s);
            t_bad += !(tm.size() == 1 && tm[0] == t_label(s));
            d_bad += !(dm.size() == 1 && dm[0] == d_label(s));
            const int sm = s_membership(s);
            s_bad += (sm == 3) != in_S3(s) || (sm == 4) != in_S4(s);
            const DLabel d = dm.empty() ? DLabel::Staircase : dm[0];
            const bool in_d345 = d == DLabel::D3 || d == DLabel::D4 || d == DLabel::D5;
            union_bad += in_d345 != (sm != 0);
        });
    }
    const std::string scale = upto(N);
    out.push_back(make_check("labels.t_partition", "T-sets partition the non-staircase ascent sequences", scale,
                             t_bad == 0, {{"sequences", total}, {"violations", t_bad}}));
    out.push_back(make_check("labels.d_partition", "D-sets partition the non-staircase ascent sequences", scale,
                             d_bad == 0, {{"sequences", total}, {"violations", d_bad}}));
    out.push_back(make_check("labels.s_sets", "S3 and S4 memberships match their definitions", scale, s_bad == 0,
                             {{"sequences", total}, {"violations", s_bad}}));
    out.push_back(make_check("labels.s_union", "S3 u S4 = D3 u D4 u D5", scale, union_bad == 0,
                             {{"sequences", total}, {"violations", union_bad}}));

    // Substitution and insertion rules on every instance where their preconditions hold.
    const int R = sc.bound(8, 9);
    struct RuleTally {
        long applied = 0, rejected = 0, bad = 0;
    };
    RuleTally r1, r2, r3, r4;
    long r3_cascade = 0, r2_shape = 0, r2_shape_bad = 0;
    json r2_examples = json::array();
    auto same5 = [](const Seq& a, const Seq& b) {
        return asc(a) == asc(b) && rep(a) == rep(b) && zero(a) == zero(b) && max_stat(a) == max_stat(b) &&
               rmin(a) == rmin(b);
    };
    for (int n = 2; n <= R; ++n) {
        sc.note("rule sweep over length " + std::to_string(n));
        for_each_ascent_sequence(n, [&](const Seq& s) {
            const Rmins r = rmins(s);
            std::set<int> masc_values;
            for (int k : masc_positions(s)) masc_values.insert(s[k]);
            for (int i = 1; i < static_cast<int>(r.X.size()); ++i) {
                const int after = static_cast<int>(std::count(s.begin() + r.P[i - 1] + 1, s.end(), r.X[i]));
                if (after < 2) continue;
                const auto [a, b] = two_rightmost(s, r.X[i]);
                for (int m : masc_values) {
                    if (m <= r.X[i]) continue;
                    for (const bool second : {false, true}) {
                        if (second && b == a + 1) continue;
                        RuleTally& t = second ? r2 : r1;
                        try {
                            const Seq u = second ? substitute_R2(s, i, m) : substitute_R1(s, i, m);
                            ++t.applied;
                            const bool bad = !(is_ascent_sequence(u) && same5(s, u));
                            t.bad += bad;
                            if (second) {
                                // First substituted x_i directly after a maximal prefix that ends in m.
                                const int lm = static_cast<int>(std::find(s.begin(), s.end(), m) - s.begin());
                                int p = std::max(lm, r.P[i - 1]) + 1;
                                while (s[p] != r.X[i]) ++p;
                                const bool shape = p == max_stat(s) && s[p - 1] == m;
                                r2_shape += shape;
                                r2_shape_bad += bad && !shape;
                                if (bad && r2_examples.size() < 3)
                                    r2_examples.push_back({{"s", s}, {"i", i}, {"m", m}, {"result", u}});
                            }
                        } catch (const DomainError&) {
                            ++t.rejected;
                        }
                    }
                }
            }
            for (int m : masc_values) {
                if (std::count(s.begin(), s.end(), m) != 1 || std::count(r.X.begin(), r.X.end(), m) != 0) continue;
                try {
                    const Seq u = insert_R3(s, m);
                    ++r3.applied;
                    r3_cascade += u.back() != m;
                    r3.bad += !(is_ascent_sequence(u) && rmin(u) == rmin(s) + 1);
                } catch (const DomainError&) {
                    ++r3.rejected;
                }
                int k = -1;
                for (int l = 0; l < static_cast<int>(r.X.size()); ++l)
                    if (r.X[l] <= m - 1) k = l;
                if (k < 0 || k >= rpos(s)) continue;
                try {
                    const Seq u = insert_R4(s, m);
                    ++r4.applied;
                    r4.bad += !(is_ascent_sequence(u) && rmin(u) == rmin(s));
                } catch (const DomainError&) {
                    ++r4.rejected;
                }
            }
        });
    }
    auto rule_details = [](const RuleTally& t) {
        return json{{"applied", t.applied}, {"rejected_by_preconditions", t.rejected}, {"violations", t.bad}};
    };
    const std::string rscale = upto(R);
    out.push_back(make_check("rules.R1_preserves", "rule R1 keeps asc, rep, zero, max, rmin", rscale,
                             r1.bad == 0 && r1.applied > 0, rule_details(r1)));
    json d2 = rule_details(r2);
    d2["counterexamples"] = r2_examples;
    out.push_back(make_check("rules.R2_preserves", "rule R2 keeps asc, rep, zero, max, rmin", rscale,
                             r2.bad == 0 && r2.applied > 0, d2));
    out.push_back(make_check("rules.R2_preserves_off_maximal_prefix",
                             "rule R2 keeps the statistics unless the first substituted x_i follows a maximal "
                             "prefix ending in m",
                             rscale, r2_shape_bad == 0 && r2.applied > r2_shape,
                             {{"instances_of_that_shape", r2_shape}, {"violations_elsewhere", r2_shape_bad}}));
    json d3 = rule_details(r3);
    d3["cascade_instances"] = r3_cascade;
    out.push_back(make_check("rules.R3_adds_rmin", "rule R3 adds one right-to-left minimum", rscale,
                             r3.bad == 0 && r3.applied > 0 && r3_cascade > 0, d3));
    out.push_back(make_check("rules.R4_keeps_rmin", "rule R4 keeps the number of right-to-left minima", rscale,
                             r4.bad == 0 && r4.applied > 0, rule_details(r4)));
    return out;
}

}  // namespace fb
