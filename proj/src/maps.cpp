#include <algorithm>
#include <optional>

#include "fishburn/bijections.hpp"

namespace fb {

namespace {

int prefix_max(const Seq& s) {
    int m = 0;
    while (m < static_cast<int>(s.size()) && s[m] == m) ++m;
    return m;
}

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

bool contains(const Seq& s, int v, int from = 0, int to = -1) {
    if (to < 0) to = static_cast<int>(s.size());
    for (int k = std::max(from, 0); k < to; ++k)
        if (s[k] == v) return true;
    return false;
}

}  // namespace

std::pair<int, Seq> f2(const Seq& s) {
    require(t_label(s) == TLabel::T2, "f2: input not in T2");
    const int i = rpos(s);
    const auto r = rmins(s);
    Seq t = s;
    t.erase(t.begin() + r.P[i]);
    return {i, t};
}

Seq f2_inv(int i, const Seq& t) {
    require(!t.empty() && is_ascent_sequence(t) && !is_staircase(t), "f2_inv: sequence not in A*");
    const auto r = rmins(t);
    require(rpos(t) <= i && i < static_cast<int>(r.X.size()), "f2_inv: index out of range");
    Seq u = t;
    u.insert(u.begin() + r.P[i], r.X[i]);
    return u;
}

Seq phi1(const Seq& s) {
    require(s.size() >= 2 && is_masc(s, static_cast<int>(s.size()) - 1), "phi1: last entry is not a Masc");
    return Seq(s.begin(), s.end() - 1);
}

Seq phi1_inv(const Seq& t) {
    require(!t.empty() && is_ascent_sequence(t) && !is_staircase(t), "phi1_inv: sequence not in A*");
    Seq u = t;
    u.push_back(asc(t) + 1);
    return u;
}

Seq f3(const Seq& s) {
    require(t_label(s) == TLabel::T3, "f3: input not in T3");
    const int i = rpos(s);
    const auto r = rmins(s);
    Seq t = s;
    t.erase(t.begin() + r.P[i]);
    t.push_back(asc(s));
    return t;
}

Seq f3_inv(const Seq& t) {
    require(in_P1(t) && rpos(t) != 0, "f3_inv: sequence not in P1 with rpos != 0");
    const int j = rpos(t);
    const auto r = rmins(t);
    Seq u(t.begin(), t.end() - 1);
    u.insert(u.begin() + r.P[j], r.X[j - 1]);
    return u;
}

Seq f4(const Seq& s) {
    require(t_label(s) == TLabel::T4, "f4: input not in T4");
    const int i = rpos(s);
    const auto r = rmins(s);
    Seq t = s;
    t[r.P[i]] = *sebr(s);
    return t;
}

Seq f4_inv(const Seq& t) {
    require(!t.empty() && !is_staircase(t) && !in_P1(t) && rpos(t) != 0, "f4_inv: sequence not in P1^c with rpos != 0");
    const int j = rpos(t);
    const auto r = rmins(t);
    Seq u = t;
    u[r.P[j]] = r.X[j - 1];
    return u;
}

Seq f51(const Seq& s) {
    require(t_label(s) == TLabel::T51, "f51: input not in T51");
    const int i = rpos(s);
    const auto r = rmins(s);
    const auto [a, b] = two_rightmost(s, r.X[i]);
    Seq t = s;
    t.erase(t.begin() + b);
    t.insert(t.begin() + a + 1, r.X[i + 1]);
    return t;
}

bool in_f51_image(const Seq& t) {
    if (t.empty() || is_staircase(t)) return false;
    const int j = rpos(t);
    if (j == 0) return false;
    const auto r = rmins(t);
    const auto [a, b] = two_rightmost(t, r.X[j]);
    if (r.P[j - 1] + 1 != a || b == a + 1) return false;
    for (int k = a + 1; k < b; ++k)
        if (is_masc(t, k)) return false;
    return true;
}

bool in_f52_image(const Seq& t) {
    if (t.empty() || is_staircase(t)) return false;
    const int j = rpos(t);
    if (j == 0) return false;
    const auto r = rmins(t);
    const auto [a, b] = two_rightmost(t, r.X[j]);
    return r.P[j - 1] + 1 != a && b != a + 1;
}

Seq f51_inv(const Seq& t) {
    require(in_f51_image(t), "f51_inv: sequence not in the image of f51");
    const int j = rpos(t);
    const auto r = rmins(t);
    Seq u = t;
    u.erase(u.begin() + r.P[j - 1] + 1);
    u.insert(u.begin() + r.P[j] - 1, r.X[j - 1]);
    return u;
}

Seq f52(const Seq& s) {
    require(t_label(s) == TLabel::T52, "f52: input not in T52");
    const int i = rpos(s);
    const auto r = rmins(s);
    Seq t = s;
    t[r.P[i]] = r.X[i + 1];
    return t;
}

Seq f52_inv(const Seq& t) {
    require(in_f52_image(t), "f52_inv: sequence not in the image of f52");
    const int j = rpos(t);
    const auto r = rmins(t);
    Seq u = t;
    u[two_rightmost(t, r.X[j]).first] = r.X[j - 1];
    return u;
}

Seq g(const Seq& s) {
    require(t_label(s) == TLabel::T53, "g: input not in T53");
    const int i = rpos(s);
    const auto r = rmins(s);
    Seq t = s;
    t[r.P[i]] = *sebr(s);
    t.pop_back();
    return t;
}

Seq g_inv(const Seq& t) {
    require(!t.empty() && is_ascent_sequence(t) && rpos(t) != 0, "g_inv: rpos must be nonzero");
    const int j = rpos(t);
    const auto r = rmins(t);
    Seq u = t;
    u[r.P[j]] = r.X[j - 1];
    u.push_back(asc(u) + 1);
    return u;
}

// ---- substitution rules ----

namespace {

// First non-rightmost x_i satisfying conditions (ii) and (iii), or -1.
int rule_candidate(const Seq& s, int xi, int xprev, int m, int& rightmost) {
    std::vector<int> occ;
    for (int k = 0; k < static_cast<int>(s.size()); ++k)
        if (s[k] == xi) occ.push_back(k);
    if (occ.empty()) throw DomainError("rule: x_i absent");
    rightmost = occ.back();
    const auto lm_it = std::find(s.begin(), s.end(), m);
    const int lm = lm_it == s.end() ? -1 : static_cast<int>(lm_it - s.begin());
    int rprev = -1;
    for (int k = 0; k < static_cast<int>(s.size()); ++k)
        if (s[k] == xprev) rprev = k;
    for (std::size_t idx = 0; idx + 1 < occ.size(); ++idx) {
        const int p = occ[idx];
        if (lm < 0 || p < lm || p < rprev) continue;
        if (contains(s, m, p + 1, rightmost)) continue;
        return p;
    }
    return -1;
}

bool inside(int v, int xi, int m) { return xi < v && v < m; }

}  // namespace

Seq rule_R1(Seq s, int xi, int xprev, int m, std::vector<int>* trace, int max_steps) {
    for (int step = 0; max_steps < 0 || step < max_steps; ++step) {
        int rightmost = 0;
        const int p = rule_candidate(s, xi, xprev, m, rightmost);
        if (p < 0) return s;
        const int k1 = s.at(p - 1), k2 = s.at(p + 1);
        const bool left_ok = k1 >= m || k1 == xprev;
        int scenario;
        if ((inside(k1, xi, m) && inside(k2, xi, m)) || (left_ok && (k2 > m || k2 == xi))) {
            s[p] = m;
            scenario = 1;
        } else if (inside(k1, xi, m) && (k2 > m || k2 == xi)) {
            int q = p - 1;
            while (q - 1 >= 0 && inside(s[q - 1], xi, m)) --q;
            s.erase(s.begin() + p);
            s.insert(s.begin() + q, m);
            scenario = 2;
        } else if (left_ok && inside(k2, xi, m)) {
            int q = p + 1;
            while (q + 1 < static_cast<int>(s.size()) && inside(s[q + 1], xi, m)) ++q;
            s.insert(s.begin() + q + 1, m);
            s.erase(s.begin() + p);
            scenario = 3;
        } else {
            throw DomainError("R1: no substitution applies");
        }
        if (trace) trace->push_back(scenario);
    }
    return s;
}

namespace {

// Substitutions (5)-(7) on the x_i at p; returns the position of the new m.
int r2_single(Seq& s, int p, int xi, int xprev, int m, int& scenario) {
    const int k1 = s.at(p - 1), k2 = s.at(p + 1);
    if ((inside(k1, xi, m) && inside(k2, xi, m)) || ((k1 > m || k1 == xprev) && k2 > m)) {
        s[p] = m;
        scenario = 5;
        return p;
    }
    if (xi < k1 && k1 <= m && k2 > m) {
        int q = p + 1;
        while (q + 1 < static_cast<int>(s.size()) && s[q + 1] > m) ++q;
        s.insert(s.begin() + q + 1, m);
        s.erase(s.begin() + p);
        scenario = 6;
        return q;
    }
    if ((k1 >= m || k1 == xprev) && inside(k2, xi, m)) {
        int q = p + 1;
        while (q + 1 < static_cast<int>(s.size()) && inside(s[q + 1], xi, m)) ++q;
        s.insert(s.begin() + q + 1, m);
        s.erase(s.begin() + p);
        scenario = 7;
        return q;
    }
    throw DomainError("R2: no substitution applies");
}

}  // namespace

Seq rule_R2(Seq s, int xi, int xprev, int m, std::vector<int>* trace, int max_steps) {
    for (int step = 0; max_steps < 0 || step < max_steps; ++step) {
        int rightmost = 0;
        const int p = rule_candidate(s, xi, xprev, m, rightmost);
        if (p < 0) return s;
        int scenario = 0;
        if (s.at(p + 1) == xi) {
            // Substitution (4): a run of non-rightmost x_i follows.
            int q = p + 1;
            while (q + 1 < rightmost && s[q + 1] == xi) ++q;
            const int k = q - (p + 1);
            s.erase(s.begin() + p + 1, s.begin() + q + 1);
            const int at = r2_single(s, p, xi, xprev, m, scenario);
            s.insert(s.begin() + at + 1, k + 1, m);
            if (trace) trace->push_back(40 + scenario);
        } else {
            r2_single(s, p, xi, xprev, m, scenario);
            if (trace) trace->push_back(scenario);
        }
    }
    return s;
}

Seq substitute_R1(const Seq& s, int i, int m, std::vector<int>* trace, int max_steps) {
    const auto r = rmins(s);
    if (i < 1 || i >= static_cast<int>(r.X.size()) || !(r.X[i] < m)) throw DomainError("R1: bad index or value");
    return rule_R1(s, r.X[i], r.X[i - 1], m, trace, max_steps);
}

Seq substitute_R2(const Seq& s, int i, int m, std::vector<int>* trace, int max_steps) {
    const auto r = rmins(s);
    if (i < 1 || i >= static_cast<int>(r.X.size()) || !(r.X[i] < m)) throw DomainError("R2: bad index or value");
    const auto [a, b] = two_rightmost(s, r.X[i]);
    if (b == a + 1) throw DomainError("R2: two rightmost x_i are adjacent");
    return rule_R2(s, r.X[i], r.X[i - 1], m, trace, max_steps);
}

// ---- insertion rules ----

namespace {

int largest_below(const std::vector<int>& X, int m) {
    int k = -1;
    for (int l = 0; l < static_cast<int>(X.size()); ++l)
        if (X[l] <= m - 1) k = l;
    if (k < 0) throw DomainError("no right-to-left minimum below m");
    return k;
}

}  // namespace

Seq insert_R3(const Seq& s, int m) {
    const auto r = rmins(s);
    const int R = static_cast<int>(r.X.size());
    const int k = largest_below(r.X, m);
    Seq t = s;
    if (k == R - 1) {
        t.push_back(m);
        return t;
    }
    t[r.P[k + 1]] = m;
    for (int q = k + 1; q < R - 1; ++q) t[r.P[q + 1]] = r.X[q];
    t.push_back(r.X[R - 1]);
    return t;
}

Seq insert_R4(const Seq& s, int m) {
    const auto r = rmins(s);
    const int rp = rpos(s);
    const int k = largest_below(r.X, m);
    if (k >= rp) throw DomainError("R4: requires k < rpos");
    Seq t = s;
    t[r.P[k + 1]] = m;
    for (int q = k + 1; q < rp; ++q) t[r.P[q + 1]] = r.X[q];
    return t;
}

// ---- g53 ----

int g53_case(const Seq& s) {
    const int i = rpos(s);
    if (i == 0) throw DomainError("g53: rpos must be nonzero");
    const auto r = rmins(s);
    const int R = r.P[i - 1];
    const int xi = r.X[i];
    std::vector<int> after;
    for (int k = R + 1; k < static_cast<int>(s.size()); ++k)
        if (s[k] == xi) after.push_back(k);
    if (s.at(R + 1) == xi) {
        for (int k = after.at(0) + 1; k < after.at(1); ++k)
            if (is_masc(s, k)) return 1;
        return 2;
    }
    return after.at(after.size() - 2) + 1 == after.back() ? 4 : 3;
}

Seq g53(const Seq& input, std::vector<int>* trace) {
    const int c = g53_case(input);
    Seq s = input;
    const int i = rpos(s);
    const auto r = rmins(s);
    const int R = r.P[i - 1];
    const int xi = r.X[i], xprev = r.X[i - 1];
    std::vector<int> after;
    for (int k = R + 1; k < static_cast<int>(s.size()); ++k)
        if (s[k] == xi) after.push_back(k);
    if (trace) trace->push_back(-c);
    const auto shift_from = [&](int from, int m) {
        for (int k = from; k < static_cast<int>(s.size()); ++k)
            if (s[k] >= m) ++s[k];
    };
    if (c == 1) {
        std::optional<int> m;
        for (int k = after[0] + 1; k < after[1]; ++k)
            if (is_masc(s, k) && (!m || s[k] < *m)) m = s[k];
        const int L = static_cast<int>(std::find(s.begin(), s.end(), *m) - s.begin());
        s.insert(s.begin() + L + 1, *m + 1);
        shift_from(L + 2, *m);
        if (after.size() > 2) s = rule_R1(s, xi, xprev, *m, trace);
    } else if (c == 2) {
        const int q1 = after[1];
        const int m = asc_prefix(s, q1 + 1) + 1;
        s.insert(s.begin() + q1, m);
        shift_from(q1 + 1, m);
        if (after.size() > 2) s = rule_R1(s, xi, xprev, m, trace);
    } else if (c == 3) {
        const int q0 = after[0];
        const int m = asc_prefix(s, q0 + 1) + 2;
        s.insert(s.begin() + R + 1, xi);
        const int p = q0 + 1;
        int q = p;
        while (s.at(q + 1) == xi && q + 1 != after.back() + 1) ++q;
        for (int k = p; k <= q; ++k) s[k] = m;
        shift_from(q + 1, m);
        s = rule_R2(s, xi, xprev, m, trace);
    } else {
        const int m = asc_prefix(s, R + 1) + 2;
        const int last = after.back();
        int q = last;
        while (s.at(q - 1) == xi) --q;
        const int k = last - q;
        s.erase(s.begin() + q + 1, s.begin() + last + 1);
        s.insert(s.begin() + R + 1, xi);
        s.insert(s.begin() + R + 2, m);
        shift_from(R + 3, m);
        s = rule_R2(s, xi, xprev, m, trace);
        const int L = static_cast<int>(std::find(s.begin(), s.end(), m) - s.begin());
        if (k > 1) s.insert(s.begin() + L + 1, k - 1, m);
    }
    return s;
}

namespace {

// Reverts every R1 substitution by m located after `start`, right to left.
Seq undo_R1_after(Seq s, int xi, int m, int start) {
    std::vector<int> ps;
    for (int p = start + 1; p < static_cast<int>(s.size()); ++p)
        if (s[p] == m) ps.push_back(p);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        const int p = *it;
        const bool ai = inside(s.at(p - 1), xi, m), bi = inside(s.at(p + 1), xi, m);
        if (ai == bi) {
            s[p] = xi;
        } else if (bi) {
            s.erase(s.begin() + p);
            int q = p;
            while (q + 1 < static_cast<int>(s.size()) && inside(s[q + 1], xi, m)) ++q;
            s.insert(s.begin() + q + 1, xi);
        } else {
            s.erase(s.begin() + p);
            int q = p - 1;
            while (q - 1 >= 0 && inside(s[q - 1], xi, m)) --q;
            s.insert(s.begin() + q, xi);
        }
    }
    return s;
}

int undo_R2_single(Seq& s, int p, int xi, int m) {
    const int a = s.at(p - 1), b = s.at(p + 1);
    if (inside(a, xi, m)) {
        if (inside(b, xi, m)) {
            s[p] = xi;
            return p;
        }
        s.erase(s.begin() + p);
        int q = p - 1;
        while (q - 1 >= 0 && inside(s[q - 1], xi, m)) --q;
        s.insert(s.begin() + q, xi);
        return q;
    }
    if (a > m && b <= m) {
        s.erase(s.begin() + p);
        int q = p - 1;
        while (q - 1 >= 0 && s[q - 1] > m) --q;
        s.insert(s.begin() + q, xi);
        return q;
    }
    s[p] = xi;
    return p;
}

Seq undo_R2_after(Seq s, int xi, int m, int start) {
    std::vector<std::pair<int, int>> runs;
    for (int p = start + 1; p < static_cast<int>(s.size());) {
        if (s[p] != m) {
            ++p;
            continue;
        }
        int q = p;
        while (q + 1 < static_cast<int>(s.size()) && s[q + 1] == m) ++q;
        runs.emplace_back(p, q - p + 1);
        p = q + 1;
    }
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        const auto [p, len] = *it;
        if (len >= 2) {
            s.erase(s.begin() + p + 1, s.begin() + p + len);
            const int at = undo_R2_single(s, p, xi, m);
            s.insert(s.begin() + at + 1, len - 1, xi);
        } else {
            undo_R2_single(s, p, xi, m);
        }
    }
    return s;
}

}  // namespace

int g53_inv_case(const Seq& t) {
    if (!in_B1(t)) throw DomainError("g53_inv: sequence not in B1");
    const int i = rpos(t);
    const auto r = rmins(t);
    const auto [a, b] = two_rightmost(t, r.X[i]);
    const int mh = *min_masc(t);
    const int first = static_cast<int>(std::find(t.begin(), t.end(), mh) - t.begin());
    bool all_le = true;
    for (int k = a + 1; k < b; ++k)
        if (t[k] > mh) all_le = false;
    if (all_le) {
        if (t[b - 1] == mh) return 2;
        return first != a + 1 ? 3 : 4;
    }
    if (first + 1 < static_cast<int>(t.size()) && t[first + 1] == mh + 1) return 1;
    int fg = a + 1;
    while (t[fg] <= mh) ++fg;
    if (t[fg - 1] == mh && fg - 1 != first) return 2;
    return first != a + 1 ? 3 : 4;
}

Seq g53_inv(const Seq& t) {
    const int c = g53_inv_case(t);
    const int i = rpos(t);
    const auto r = rmins(t);
    const int xi = r.X[i];
    const int R = r.P[i - 1];
    const int m = *min_masc(t);
    const int L = static_cast<int>(std::find(t.begin(), t.end(), m) - t.begin());
    const auto unshift = [m](Seq& s, int from) {
        for (int k = std::max(from, 0); k < static_cast<int>(s.size()); ++k)
            if (s[k] > m) --s[k];
    };
    if (c == 1) {
        Seq s = undo_R1_after(t, xi, m, L);
        if (s.at(L + 1) != m + 1) throw DomainError("g53_inv: case 1 marker missing");
        s.erase(s.begin() + L + 1);
        unshift(s, L + 1);
        return s;
    }
    if (c == 2) {
        Seq s = undo_R1_after(t, xi, m, L);
        s.erase(s.begin() + L);
        unshift(s, L);
        return s;
    }
    int e = L;
    while (t.at(e + 1) == m) ++e;
    if (c == 3) {
        Seq s = undo_R2_after(t, xi, m, e);
        for (int k = L; k <= e; ++k) s[k] = xi;
        unshift(s, e + 1);
        if (s.at(R + 1) != xi) throw DomainError("g53_inv: case 3 marker missing");
        s.erase(s.begin() + R + 1);
        return s;
    }
    if (L != R + 2) throw DomainError("g53_inv: case 4 layout");
    const int k = e - L + 1;
    Seq s(t.begin(), t.begin() + L + 1);
    s.insert(s.end(), t.begin() + e + 1, t.end());
    s = undo_R2_after(s, xi, m, L);
    s.erase(s.begin() + R + 1, s.begin() + R + 3);
    unshift(s, R + 1);
    int last = -1;
    for (int q = 0; q < static_cast<int>(s.size()); ++q)
        if (s[q] == xi) last = q;
    s.insert(s.begin() + last + 1, k, xi);
    return s;
}

Seq f53(const Seq& s) { return g53(g(s)); }

Seq f53_inv(const Seq& t) { return g_inv(g53_inv(t)); }

// ---- ealm side ----

std::pair<int, Seq> h2(const Seq& s) {
    require(d_label(s) == DLabel::D2, "h2: input not in D2");
    const int m = prefix_max(s);
    Seq t = s;
    t.erase(t.begin() + m);
    return {s[m], t};
}

Seq h2_inv(int i, const Seq& t) {
    require(!t.empty() && is_ascent_sequence(t) && !is_staircase(t), "h2_inv: sequence not in A*");
    const int m = prefix_max(t);
    require(ealm(t) <= i && i < m, "h2_inv: index out of range");
    Seq u = t;
    u.insert(u.begin() + m, i);
    return u;
}

Seq phi2(const Seq& s) {
    require(in_P2(s), "phi2: input not in P2");
    const int m = prefix_max(s);
    Seq u = s;
    u.erase(std::find(u.begin(), u.end(), m - 1));
    for (int& y : u)
        if (y >= m) --y;
    return u;
}

Seq phi2_inv(const Seq& t) {
    require(!t.empty() && is_ascent_sequence(t) && !is_staircase(t), "phi2_inv: sequence not in A*");
    const int m = prefix_max(t);
    Seq u = t;
    for (int& y : u)
        if (y >= m) ++y;
    u.insert(u.begin() + m, m);
    return u;
}

namespace {

Seq h34(const Seq& s) {
    const int m = prefix_max(s);
    Seq t = s;
    t[m] = m;
    return t;
}

Seq h34_inv(const Seq& t) {
    const int m = prefix_max(t);
    Seq u = t;
    u[m - 1] = t.at(m) - 1;
    return u;
}

}  // namespace

Seq h3(const Seq& s) {
    require(d_label(s) == DLabel::D3, "h3: input not in D3");
    return h34(s);
}

Seq h3_inv(const Seq& t) {
    require(in_P2(t) && ealm(t) != 0, "h3_inv: sequence not in P2 with ealm != 0");
    return h34_inv(t);
}

Seq h4(const Seq& s) {
    require(d_label(s) == DLabel::D4, "h4: input not in D4");
    return h34(s);
}

Seq h4_inv(const Seq& t) {
    require(!t.empty() && !is_staircase(t) && !in_P2(t) && ealm(t) != 0, "h4_inv: sequence not in P2^c with ealm != 0");
    return h34_inv(t);
}

Seq h5(const Seq& s) {
    require(d_label(s) == DLabel::D5, "h5: input not in D5");
    Seq t = s;
    ++t[prefix_max(s)];
    return t;
}

Seq h5_inv(const Seq& t) {
    const DLabel d = d_label(t);
    require((d == DLabel::D3 || d == DLabel::D4 || d == DLabel::D5) && ealm(t) != 0, "h5_inv: sequence outside the image of h5");
    Seq u = t;
    --u[prefix_max(t)];
    return u;
}

}  // namespace fb
