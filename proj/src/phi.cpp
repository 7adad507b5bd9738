#include <map>
#include <numeric>

#include "fishburn/bijections.hpp"

namespace fb {

void clear_f54_caches();

Seq f5(const Seq& s) {
    switch (t_label(s)) {
        case TLabel::T51: return f51(s);
        case TLabel::T52: return f52(s);
        case TLabel::T53: return f53(s);
        case TLabel::T54: return f54(s);
        default: throw DomainError("f5: input not in T5");
    }
}

Seq f5_inv(const Seq& t) {
    if (rpos(t) == 0) throw DomainError("f5_inv: rpos must be nonzero");
    if (in_f51_image(t)) return f51_inv(t);
    if (in_f52_image(t)) return f52_inv(t);
    if (in_B1(t)) return f53_inv(t);
    if (in_B(t)) return f54_inv(t);
    throw DomainError("f5_inv: sequence outside the image of f5");
}

namespace {

thread_local std::map<Seq, Seq> phi_memo;
thread_local std::map<Seq, Seq> phi_inv_memo;

Seq iota(int from, int to) {
    Seq v(static_cast<std::size_t>(std::max(0, to - from)));
    std::iota(v.begin(), v.end(), from);
    return v;
}

Seq alpha(const Seq& x) { return phi1_inv(Phi(phi2(x))); }
Seq alpha_inv(const Seq& y) { return phi2_inv(Phi_inv(phi1(y))); }

// Phi restricted to the complement of P2, landing outside P1.
Seq Psi(const Seq& x) {
    Seq y = Phi(x);
    while (in_P1(y)) y = Phi(alpha_inv(y));
    return y;
}

Seq Psi_inv(const Seq& y) {
    Seq x = Phi_inv(y);
    while (in_P2(x)) x = Phi_inv(alpha(x));
    return x;
}

Seq phi_uncached(const Seq& s) {
    switch (d_label(s)) {
        case DLabel::Staircase: return s;
        case DLabel::D1: {
            const int p = static_cast<int>(s.size()) - 1;
            const int i = s.back();
            Seq t = iota(0, i + 1);
            const Seq tail = iota(i, p);
            t.insert(t.end(), tail.begin(), tail.end());
            return t;
        }
        case DLabel::D2: {
            const auto [e, t] = h2(s);
            return f2_inv(e, Phi(t));
        }
        case DLabel::D3: return f3_inv(phi1_inv(Phi(phi2(h3(s)))));
        case DLabel::D4: return f4_inv(Psi(h4(s)));
        case DLabel::D5: return f5_inv(Phi(h5(s)));
    }
    throw std::logic_error("Phi: unknown label");
}

Seq phi_inv_uncached(const Seq& t) {
    switch (t_label(t)) {
        case TLabel::Staircase: return t;
        case TLabel::T1: {
            std::size_t k = 1;
            while (t[k] != t[k - 1]) ++k;
            Seq s = iota(0, static_cast<int>(t.size()) - 1);
            s.push_back(t[k]);
            return s;
        }
        case TLabel::T2: {
            const auto [i, u] = f2(t);
            return h2_inv(i, Phi_inv(u));
        }
        case TLabel::T3: return h3_inv(phi2_inv(Phi_inv(phi1(f3(t)))));
        case TLabel::T4: return h4_inv(Psi_inv(f4(t)));
        default: return h5_inv(Phi_inv(f5(t)));
    }
}

}  // namespace

Seq Phi(const Seq& s) {
    if (const auto it = phi_memo.find(s); it != phi_memo.end()) return it->second;
    if (!is_ascent_sequence(s)) throw DomainError("Phi: not an ascent sequence");
    Seq t = phi_uncached(s);
    phi_memo.emplace(s, t);
    return t;
}

Seq Phi_inv(const Seq& t) {
    if (const auto it = phi_inv_memo.find(t); it != phi_inv_memo.end()) return it->second;
    if (!is_ascent_sequence(t)) throw DomainError("Phi_inv: not an ascent sequence");
    Seq s = phi_inv_uncached(t);
    phi_inv_memo.emplace(t, s);
    return s;
}

void clear_caches() {
    phi_memo.clear();
    phi_inv_memo.clear();
    clear_f54_caches();
}

}  // namespace fb
