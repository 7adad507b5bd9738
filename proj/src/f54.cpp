#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "fishburn/bijections.hpp"

namespace fb {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

bool contains(const Seq& s, int v, int from) {
    return std::find(s.begin() + std::min<std::size_t>(std::max(from, 0), s.size()), s.end(), v) != s.end();
}

int index_of(const std::vector<int>& v, int x) {
    const auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw DomainError("value not found");
    return static_cast<int>(it - v.begin());
}

int largest_strictly_below(const std::vector<int>& X, int m) {
    int k = -1;
    for (int l = 0; l < static_cast<int>(X.size()); ++l)
        if (X[l] < m) k = l;
    if (k < 0) throw DomainError("no right-to-left minimum below m");
    return k;
}

// Smallest Masc strictly between the two rightmost Rmin_t.
int masc_between_rightmost(const Seq& s, int t) {
    const auto r = rmins(s);
    const auto [a, b] = two_rightmost(s, r.X.at(t));
    std::optional<int> best;
    for (int k = a + 1; k < b; ++k)
        if (is_masc(s, k) && (!best || s[k] < *best)) best = s[k];
    if (!best) throw DomainError("no Masc between the two rightmost minima");
    return *best;
}

// Applies R1 for t = u+2 .. k where Rmin_k is the largest minimum below m.
Seq r1_range(Seq s, int u, int m) {
    const int k = largest_strictly_below(rmins(s).X, m);
    for (int t = u + 2; t <= k; ++t) {
        const auto r = rmins(s);
        s = rule_R1(s, r.X.at(t), r.X.at(t - 1), m);
    }
    return s;
}

std::pair<int, int> case_and_j(const Seq& s) {
    const int i = rpos(s);
    const auto r = rmins(s);
    int q = -1;
    for (int k = r.P.at(i) + 1; k < static_cast<int>(s.size()); ++k)
        if (is_masc(s, k)) {
            q = k;
            break;
        }
    if (q < 0) throw DomainError("f54: no Masc after the rightmost Rmin_rpos");
    const auto it = std::find(r.P.begin(), r.P.end(), q);
    if (it != r.P.end()) return {1, static_cast<int>(it - r.P.begin())};
    int j = 0;
    while (r.P.at(j) <= q) ++j;
    return {contains(s, s[q], r.P[j] + 1) ? 3 : 2, j};
}

Seq step1(const Seq& s, int u) {
    const int i = rpos(s);
    const auto r = rmins(s);
    const int R = static_cast<int>(r.X.size());
    const int j = case_and_j(s).second;
    Seq cur(s.begin(), s.begin() + r.P.at(j - 1) + 1);
    cur.erase(cur.begin() + r.P[i]);
    if (u == i) cur = g53(cur);
    const int m = masc_between_rightmost(cur, u + 1);
    cur = insert_R3(cur, m);
    cur = r1_range(cur, u, m);
    for (int c = 0; c < R - j - 1; ++c) cur.push_back(asc(cur) + 1);
    return cur;
}

// Steps shared by Case 2 and Case 3: drop the rightmost Rmin_i and place Rmin_j
// after the rightmost Rmin_{j-1}, with g53 applied to the left part when u = i.
Seq pre23(const Seq& s, int u) {
    const int i = rpos(s);
    const auto r = rmins(s);
    const int j = case_and_j(s).second;
    Seq cur = s;
    cur.erase(cur.begin() + r.P[i]);
    const int pos = r.P.at(j - 1) - 1;
    cur.insert(cur.begin() + pos + 1, r.X[j]);
    if (u == i) {
        Seq left(cur.begin(), cur.begin() + pos + 1);
        Seq right(cur.begin() + pos + 1, cur.end());
        left = g53(left);
        const int m = masc_between_rightmost(left, u + 1);
        for (int& y : right)
            if (y >= m) ++y;
        cur = left;
        cur.insert(cur.end(), right.begin(), right.end());
    }
    return cur;
}

Seq step2(const Seq& s, int u) {
    const int j = case_and_j(s).second;
    Seq cur = g53_inv(pre23(s, u));
    const int m = masc_between_rightmost(cur, u + 1);
    const int k = largest_strictly_below(rmins(cur).X, m);
    if (k < j) cur = insert_R4(cur, m);
    return r1_range(cur, u, m);
}

thread_local std::map<Seq, Seq> f54_memo;
thread_local std::map<Seq, Seq> f54_inv_memo;

Seq f54_unchecked(const Seq& input) {
    if (const auto it = f54_memo.find(input); it != f54_memo.end()) return it->second;
    const int u = rpos(input);
    Seq s = input;
    Seq out;
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw std::logic_error("f54: step loop did not terminate");
        const int c = case_and_j(s).first;
        if (c == 1) {
            out = step1(s, u);
            break;
        }
        if (c == 2) {
            out = step2(s, u);
            break;
        }
        s = f54_inv(pre23(s, u));
    }
    f54_memo.emplace(input, out);
    return out;
}

template <class F>
std::optional<Seq> attempt(F&& f) {
    try {
        return f();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// ---- reversal helpers ----

bool inside(int v, int xi, int m) { return xi < v && v < m; }

// Reverts R1 for index t: the m's strictly between the rightmost Rmin_{t-1} and Rmin_t.
Seq undo_R1_interval(Seq s, int t, int m) {
    const auto r = rmins(s);
    const int xi = r.X.at(t);
    std::vector<int> ps;
    for (int p = r.P.at(t - 1) + 1; p < r.P[t]; ++p)
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

Seq undo_r1_range(Seq s, int u, int m) {
    const int k = largest_strictly_below(rmins(s).X, m);
    for (int t = k; t > u + 1; --t) s = undo_R1_interval(s, t, m);
    return s;
}

Seq undo_R3(Seq s, int m) {
    const auto r = rmins(s);
    const int a = index_of(r.X, m);
    const int R = static_cast<int>(r.X.size());
    if (a == R - 1) {
        if (s.back() != m) throw DomainError("R3 reversal: last entry");
        s.pop_back();
        return s;
    }
    for (int q = a; q < R - 1; ++q) s[r.P[q]] = r.X[q + 1];
    s.pop_back();
    return s;
}

std::vector<Seq> undo_R4(const Seq& s, int m) {
    const auto r = rmins(s);
    std::vector<Seq> out;
    const auto it = std::find(r.X.begin(), r.X.end(), m);
    if (it == r.X.end()) return out;
    const int a = static_cast<int>(it - r.X.begin());
    const int R = static_cast<int>(r.X.size());
    for (int rp = a; rp < R; ++rp) {
        Seq base = s;
        for (int q = a; q < rp; ++q) base[r.P[q]] = r.X[q + 1];
        const int hi = rp + 1 < R ? r.X[rp + 1] : kInf;
        const int lo = rp > a ? r.X[rp] : m;
        const int start = rp >= 1 ? r.P[rp - 1] + 1 : 0;
        std::set<int> vals;
        for (int k = start; k < r.P[rp]; ++k)
            if (lo < s[k] && s[k] < hi) vals.insert(s[k]);
        for (int v : vals) {
            Seq c = base;
            c[r.P[rp]] = v;
            const auto ok = attempt([&] {
                if (rpos(c) < 1) throw DomainError("rpos");
                return insert_R4(c, m);
            });
            if (ok && *ok == s) out.push_back(c);
        }
    }
    return out;
}

// Sequences s with: remove the rightmost Rmin_i, then insert Rmin_j after the rightmost Rmin_{j-1}, giving cur.
std::vector<Seq> undo_first_bullets(const Seq& cur) {
    std::vector<Seq> out;
    const auto r = rmins(cur);
    for (int j = 1; j < static_cast<int>(r.X.size()); ++j) {
        const int q = r.P[j - 1] + 1;
        if (q >= static_cast<int>(cur.size()) || cur[q] != r.X[j] || q == r.P[j]) continue;
        Seq c = cur;
        c.erase(c.begin() + q);
        const auto r2 = rmins(c);
        for (int i = 0; i + 1 < static_cast<int>(r2.X.size()); ++i) {
            Seq d = c;
            d.insert(d.begin() + r2.P[i + 1], r2.X[i]);
            out.push_back(d);
        }
    }
    return out;
}

std::vector<Seq> undo_pre(const Seq& sigma, int u, bool with_g) {
    if (!with_g) return {sigma};
    std::vector<Seq> out;
    for (int q = 1; q < static_cast<int>(sigma.size()); ++q) {
        const Seq left(sigma.begin(), sigma.begin() + q);
        const Seq right(sigma.begin() + q, sigma.end());
        int m = 0;
        const auto ok = attempt([&] {
            if (!in_B1(left)) throw DomainError("B1");
            m = masc_between_rightmost(left, u + 1);
            if (std::find(right.begin(), right.end(), m) != right.end()) throw DomainError("m on right");
            return g53_inv(left);
        });
        if (!ok) continue;
        Seq c = *ok;
        for (int y : right) c.push_back(y > m ? y - 1 : y);
        out.push_back(c);
    }
    return out;
}

bool is_T54(const Seq& s) { return is_ascent_sequence(s) && t_label(s) == TLabel::T54; }

std::set<Seq> pre_candidates(const Seq& sigma, int u) {
    std::set<Seq> res;
    for (bool with_g : {true, false})
        for (const Seq& cur : undo_pre(sigma, u, with_g))
            for (const Seq& s : undo_first_bullets(cur))
                if (is_T54(s) && (rpos(s) == u) == with_g) res.insert(s);
    return res;
}

std::vector<Seq> unstep2(const Seq& hat, int u) {
    std::set<Seq> res;
    const int m = *min_masc(hat);
    const auto cur = attempt([&] { return undo_r1_range(hat, u, m); });
    if (!cur) return {};
    const auto X = rmins(*cur).X;
    std::vector<Seq> c2s;
    if (std::find(X.begin(), X.end(), m) != X.end())
        c2s = undo_R4(*cur, m);
    else
        c2s = {*cur};
    for (const Seq& c2 : c2s) {
        if (rpos(c2) == 0) continue;
        const auto c1 = attempt([&] { return g53(c2); });
        if (!c1) continue;
        for (const Seq& s : pre_candidates(*c1, u)) res.insert(s);
    }
    std::vector<Seq> out;
    for (const Seq& s : res) {
        const auto back = attempt([&] {
            if (case_and_j(s).first != 2) throw DomainError("case");
            return step2(s, u);
        });
        if (back && *back == hat) out.push_back(s);
    }
    return out;
}

std::vector<Seq> unstep1(const Seq& hat, int u) {
    std::set<Seq> res;
    const int n = static_cast<int>(hat.size());
    int run = 0;
    while (run < n && n - 1 - run > 0 && is_masc(hat, n - 1 - run)) ++run;
    const int m = *min_masc(hat);
    for (int c = 0; c <= run; ++c) {
        const Seq base(hat.begin(), hat.end() - c);
        const auto cur = attempt([&] { return undo_R3(undo_r1_range(base, u, m), m); });
        if (!cur) continue;
        for (bool with_g : {true, false}) {
            Seq cur0 = *cur;
            if (with_g) {
                const auto inv = attempt([&] {
                    if (!in_B1(*cur)) throw DomainError("B1");
                    return g53_inv(*cur);
                });
                if (!inv) continue;
                cur0 = *inv;
            }
            const auto r = rmins(cur0);
            for (int i = 0; i + 1 < static_cast<int>(r.X.size()); ++i) {
                Seq d = cur0;
                d.insert(d.begin() + r.P[i + 1], r.X[i]);
                for (int e = 0; e <= c; ++e) d.push_back(asc(d) + 1);
                if (!is_T54(d) || (rpos(d) == u) != with_g) continue;
                res.insert(d);
            }
        }
    }
    std::vector<Seq> out;
    for (const Seq& s : res) {
        const auto back = attempt([&] {
            if (case_and_j(s).first != 1) throw DomainError("case");
            return step1(s, u);
        });
        if (back && *back == hat) out.push_back(s);
    }
    return out;
}

}  // namespace

int f54_case(const Seq& s) {
    if (t_label(s) != TLabel::T54) throw DomainError("f54: input not in T54");
    return case_and_j(s).first;
}

Seq f54(const Seq& s) {
    if (!is_T54(s)) throw DomainError("f54: input not in T54");
    return f54_unchecked(s);
}

Seq f54_inv(const Seq& hat) {
    if (const auto it = f54_inv_memo.find(hat); it != f54_inv_memo.end()) return it->second;
    const int u = rpos(hat) - 1;
    std::vector<Seq> cands;
    for (auto* fn : {&unstep1, &unstep2}) {
        try {
            const auto found = fn(hat, u);
            cands.insert(cands.end(), found.begin(), found.end());
        } catch (const std::exception&) {
        }
    }
    if (cands.size() != 1) throw std::logic_error("f54_inv: preimage not unique");
    Seq sb = cands[0];
    for (int guard = 0; rpos(sb) != u; ++guard) {
        if (guard > 10000) throw std::logic_error("f54_inv: unwinding did not terminate");
        const Seq sigma = f54_unchecked(sb);
        std::vector<Seq> prev;
        for (const Seq& s : pre_candidates(sigma, u)) {
            const auto fwd = attempt([&] {
                if (case_and_j(s).first != 3) throw DomainError("case");
                return pre23(s, u);
            });
            if (fwd && *fwd == sigma) prev.push_back(s);
        }
        if (prev.size() != 1) throw std::logic_error("f54_inv: Case 3 predecessor not unique");
        sb = prev[0];
    }
    f54_inv_memo.emplace(hat, sb);
    return sb;
}

void clear_f54_caches() {
    f54_memo.clear();
    f54_inv_memo.clear();
}

}  // namespace fb
