#include "fishburn/seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace fb {

bool is_ascent_sequence(const Seq& s) {
    if (s.empty()) return true;
    if (s[0] != 0) return false;
    int a = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] > a + 1) return false;
        if (s[k] > s[k - 1]) ++a;
    }
    return true;
}

bool is_inversion_sequence(const Seq& s) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] < 0 || s[k] > static_cast<int>(k)) return false;
    return true;
}

namespace {

void ascent_rec(Seq& cur, int n, int a, const std::function<void(const Seq&)>& f) {
    if (static_cast<int>(cur.size()) == n) {
        f(cur);
        return;
    }
    const int last = cur.back();
    for (int v = 0; v <= a + 1; ++v) {
        cur.push_back(v);
        ascent_rec(cur, n, a + (v > last ? 1 : 0), f);
        cur.pop_back();
    }
}

}  // namespace

void for_each_ascent_sequence(int n, const std::function<void(const Seq&)>& f) {
    Seq cur;
    if (n <= 0) {
        f(cur);
        return;
    }
    cur.reserve(n);
    cur.push_back(0);
    ascent_rec(cur, n, 0, f);
}

std::vector<Seq> ascent_sequences(int n) {
    std::vector<Seq> out;
    for_each_ascent_sequence(n, [&](const Seq& s) { out.push_back(s); });
    return out;
}

void for_each_inversion_sequence(int n, const std::function<void(const Seq&)>& f) {
    Seq cur(std::max(n, 0), 0);
    while (true) {
        f(cur);
        int k = n - 1;
        while (k >= 0 && cur[k] == k) cur[k--] = 0;
        if (k < 0) return;
        ++cur[k];
    }
}

std::vector<Seq> inversion_sequences(int n) {
    std::vector<Seq> out;
    for_each_inversion_sequence(n, [&](const Seq& s) { out.push_back(s); });
    return out;
}

int asc_prefix(const Seq& s, int len) {
    int a = 0;
    for (int k = 0; k + 1 < len; ++k)
        if (s[k] < s[k + 1]) ++a;
    return a;
}

int asc(const Seq& s) { return asc_prefix(s, static_cast<int>(s.size())); }

int rep(const Seq& s) {
    Seq t = s;
    std::sort(t.begin(), t.end());
    return static_cast<int>(s.size() - (std::unique(t.begin(), t.end()) - t.begin()));
}

int zero(const Seq& s) { return static_cast<int>(std::count(s.begin(), s.end(), 0)); }

int max_stat(const Seq& s) {
    int m = 0;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] == static_cast<int>(k)) ++m;
    return m;
}

int ealm(const Seq& s) {
    // On ascent sequences the maximal entries form the initial staircase.
    std::size_t m = 0;
    while (m < s.size() && s[m] == static_cast<int>(m)) ++m;
    return m == s.size() ? 0 : s[m];
}

int rmin(const Seq& s) {
    int count = 0;
    int cur = 0;
    for (std::size_t k = s.size(); k-- > 0;) {
        if (count == 0 || s[k] < cur) {
            ++count;
            cur = s[k];
        }
    }
    return count;
}

int rpos(const Seq& s) {
    // Right-to-left minima, left to right.
    std::vector<int> pos;
    int cur = 0;
    for (std::size_t k = s.size(); k-- > 0;) {
        if (pos.empty() || s[k] < cur) {
            pos.push_back(static_cast<int>(k));
            cur = s[k];
        }
    }
    std::reverse(pos.begin(), pos.end());
    if (pos.size() == s.size()) return 0;
    int best = 0;
    for (std::size_t m = 0; m < pos.size(); ++m) {
        const int start = m > 0 ? pos[m - 1] + 1 : 0;
        const int v = s[pos[m]];
        int cnt = 0;
        for (std::size_t k = start; k < s.size(); ++k)
            if (s[k] == v) ++cnt;
        if (cnt >= 2) best = static_cast<int>(m);
    }
    return best;
}

StatVector statistics(const Seq& s) {
    if (!is_inversion_sequence(s)) throw std::invalid_argument("not an inversion sequence");
    StatVector v;
    if (s.empty()) {
        v.ealm = 0;
        v.rpos = 0;
        return v;
    }
    v.asc = asc(s);
    v.rep = rep(s);
    v.zero = zero(s);
    v.max = max_stat(s);
    v.rmin = rmin(s);
    if (is_ascent_sequence(s)) {
        v.ealm = ealm(s);
        v.rpos = rpos(s);
    }
    return v;
}

Septuple septuple(const Seq& s) { return {asc(s), rep(s), zero(s), max_stat(s), ealm(s), rmin(s), rpos(s)}; }

bool is_staircase(const Seq& s) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] != static_cast<int>(k)) return false;
    return true;
}

}  // namespace fb
