#include "fishburn/classify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fb {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();

int prefix_max(const Seq& s) {
    int m = 0;
    while (m < static_cast<int>(s.size()) && s[m] == m) ++m;
    return m;
}
}  // namespace

Rmins rmins(const Seq& s) {
    Rmins r;
    for (int k = static_cast<int>(s.size()) - 1; k >= 0; --k) {
        if (r.P.empty() || s[k] < r.X.back()) {
            r.P.push_back(k);
            r.X.push_back(s[k]);
        }
    }
    std::reverse(r.P.begin(), r.P.end());
    std::reverse(r.X.begin(), r.X.end());
    return r;
}

bool is_masc(const Seq& s, int k) { return k == 0 || s.at(k) == asc_prefix(s, k) + 1; }

std::vector<int> masc_positions(const Seq& s) {
    std::vector<int> out;
    int a = 0;
    for (int k = 0; k < static_cast<int>(s.size()); ++k) {
        if (k == 0 || s[k] == a + 1) out.push_back(k);
        if (k > 0 && s[k - 1] < s[k]) ++a;
    }
    return out;
}

std::pair<int, int> two_rightmost(const Seq& s, int v) {
    int b = -1;
    for (int k = static_cast<int>(s.size()) - 1; k >= 0; --k) {
        if (s[k] != v) continue;
        if (b < 0) {
            b = k;
        } else {
            return {k, b};
        }
    }
    throw std::out_of_range("value occurs fewer than twice");
}

std::optional<int> sebr(const Seq& s) {
    const auto r = rmins(s);
    const auto [a, b] = two_rightmost(s, r.X.at(rpos(s)));
    if (b == a + 1) return std::nullopt;
    return *std::min_element(s.begin() + a + 1, s.begin() + b);
}

std::optional<int> min_masc(const Seq& s) {
    const auto r = rmins(s);
    const int v = r.X.at(rpos(s));
    if (std::count(s.begin(), s.end(), v) < 2) return std::nullopt;
    const auto [a, b] = two_rightmost(s, v);
    std::optional<int> best;
    for (int k = a + 1; k < b; ++k)
        if (is_masc(s, k) && (!best || s[k] < *best)) best = s[k];
    return best;
}

SetStats set_stats(const Seq& s) {
    if (s.empty() || !is_ascent_sequence(s)) throw std::invalid_argument("not a nonempty ascent sequence");
    SetStats st;
    const auto r = rmins(s);
    st.rmin_values = r.X;
    for (int p : r.P) st.prm_positions.push_back(p + 1);
    for (int p : masc_positions(s)) st.masc_positions.push_back(p + 1);
    st.rpos_zero_witness = std::count(s.begin(), s.end(), r.X[0]) >= 2;
    if (r.X.size() < s.size()) {
        const int i = rpos(s);
        if (std::count(s.begin() + (i > 0 ? r.P[i - 1] + 1 : 0), s.end(), r.X[i]) >= 2) {
            st.sebr = sebr(s);
            st.min_masc = min_masc(s);
        }
    }
    return st;
}

TLabel t_label(const Seq& s) {
    if (is_staircase(s)) return TLabel::Staircase;
    const auto r = rmins(s);
    const int n = static_cast<int>(s.size());
    const int R = static_cast<int>(r.X.size());
    const int i = rpos(s);
    if (n == R + 1) return TLabel::T1;
    const auto sb = sebr(s);
    if (!sb) return TLabel::T2;
    const int next = i + 1 < R ? r.X[i + 1] : kInf;
    const bool adjacent = i + 1 < R && r.P[i + 1] == r.P[i] + 1;
    if (*sb >= next) {
        if (*sb == next && adjacent) {
            for (int k = r.P[i] + 1; k < n; ++k)
                if (is_masc(s, k)) return TLabel::T54;
            return TLabel::T3;
        }
        if (adjacent) return TLabel::T51;
        return TLabel::T52;
    }
    return is_masc(s, n - 1) ? TLabel::T53 : TLabel::T4;
}

DLabel d_label(const Seq& s) {
    if (is_staircase(s)) return DLabel::Staircase;
    const int n = static_cast<int>(s.size());
    const int m = prefix_max(s);
    const int e = s[m];
    if (n == m + 1) return DLabel::D1;
    const int nx = s[m + 1];
    if (nx <= e) return DLabel::D2;
    if (nx == e + 1) return std::find(s.begin() + m + 1, s.end(), m) != s.end() ? DLabel::D4 : DLabel::D3;
    return DLabel::D5;
}

MLabel m_label(const Seq& s) {
    const TLabel t = t_label(s);
    if (t != TLabel::T51 && t != TLabel::T52 && t != TLabel::T53 && t != TLabel::T54) return MLabel::None;
    const auto r = rmins(s);
    const int i = rpos(s);
    const int M = prefix_max(s);
    if (t == TLabel::T52) return r.P[i] == M ? MLabel::M52 : MLabel::M51;
    const int second = two_rightmost(s, r.X[i]).first;
    if (second >= M || t == TLabel::T51) return MLabel::M51;
    return MLabel::M53;
}

D5Label d5_label(const Seq& s) {
    if (d_label(s) != DLabel::D5) return D5Label::None;
    const int m = prefix_max(s);
    const int e = s[m];
    const int mn = *std::min_element(s.begin() + m + 1, s.end());
    const int rp = rpos(s);
    if (mn <= e || (mn == e + 1 && rp >= e + 1)) return D5Label::D51;
    if (mn == e + 1 && rp == e) return D5Label::D52;
    if (mn >= e + 2) return D5Label::D53;
    return D5Label::None;
}

bool in_P1(const Seq& s) { return !is_staircase(s) && is_masc(s, static_cast<int>(s.size()) - 1); }

bool in_P2(const Seq& s) {
    if (is_staircase(s)) return false;
    return std::count(s.begin(), s.end(), prefix_max(s) - 1) == 1;
}

bool in_S3(const Seq& s) {
    if (is_staircase(s)) return false;
    const int m = prefix_max(s);
    if (static_cast<int>(s.size()) <= m + 1 || !(s[m] < s[m + 1])) return false;
    return std::find(s.begin() + m + 1, s.end(), m) == s.end();
}

bool in_S4(const Seq& s) {
    if (is_staircase(s)) return false;
    const int m = prefix_max(s);
    if (static_cast<int>(s.size()) <= m + 1 || !(s[m] < s[m + 1])) return false;
    return std::find(s.begin() + m + 1, s.end(), m) != s.end();
}

bool in_B(const Seq& s) {
    if (is_staircase(s)) return false;
    const int j = rpos(s);
    if (j == 0 || !min_masc(s)) return false;
    const auto r = rmins(s);
    return r.P[j - 1] + 1 == two_rightmost(s, r.X[j]).first;
}

bool in_B1(const Seq& s) {
    if (!in_B(s)) return false;
    const auto r = rmins(s);
    const int mm = *min_masc(s);
    return std::find(s.begin() + r.P[rpos(s)] + 1, s.end(), mm) == s.end();
}

bool in_C1(const Seq& s) {
    if (!in_B(s) || in_B1(s)) return false;
    const int m = *min_masc(s);
    const auto r = rmins(s);
    const auto it = std::find(r.X.begin(), r.X.end(), m);
    if (it == r.X.end()) return false;
    const int R = static_cast<int>(r.X.size());
    for (int t = std::max<int>(1, it - r.X.begin()); t < R; ++t) {
        const int a = r.P[t - 1], b = r.P[t];
        if (b == a + 1) continue;
        const int next = t + 1 < R ? r.X[t + 1] : kInf;
        if (*std::min_element(s.begin() + a + 1, s.begin() + b) >= next) continue;
        return false;
    }
    return true;
}

bool in_C2(const Seq& s) { return in_B(s) && !in_B1(s) && !in_C1(s); }

SubsetLabel classify(const Seq& s) {
    if (!is_ascent_sequence(s)) throw std::invalid_argument("not an ascent sequence");
    SubsetLabel l;
    l.t = t_label(s);
    l.d = d_label(s);
    if (l.t == TLabel::Staircase) return l;
    l.m = m_label(s);
    l.d5 = d5_label(s);
    l.S3 = in_S3(s);
    l.S4 = in_S4(s);
    l.P1 = in_P1(s);
    l.P2 = in_P2(s);
    l.B = in_B(s);
    l.B1 = in_B1(s);
    l.C1 = in_C1(s);
    l.C2 = in_C2(s);
    return l;
}

std::string to_string(TLabel l) {
    static const char* names[] = {"staircase", "T1", "T2", "T3", "T4", "T51", "T52", "T53", "T54"};
    return names[static_cast<int>(l)];
}
std::string to_string(DLabel l) {
    static const char* names[] = {"staircase", "D1", "D2", "D3", "D4", "D5"};
    return names[static_cast<int>(l)];
}
std::string to_string(MLabel l) {
    static const char* names[] = {"none", "M51", "M52", "M53"};
    return names[static_cast<int>(l)];
}
std::string to_string(D5Label l) {
    static const char* names[] = {"none", "D51", "D52", "D53"};
    return names[static_cast<int>(l)];
}

}  // namespace fb
