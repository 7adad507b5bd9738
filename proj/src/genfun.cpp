#include "fishburn/genfun.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fb {

std::vector<std::pair<std::string, Rat>> ParamPoint::named() const {
    return {{"x", x}, {"y", y}, {"u", u}, {"z", z}, {"v", v}, {"w", w}};
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
    const int a = num(rng);
    Rat q(a, den(rng));
    q.canonicalize();
    return q;
}

namespace {

bool in_subset(const Seq& s, Subset sub) {
    if (sub == Subset::All) return true;
    if (is_staircase(s)) return false;
    const int m = max_stat(s);
    const int n = static_cast<int>(s.size());
    switch (sub) {
        case Subset::NonStaircase: return true;
        case Subset::D1: return n == m + 1;
        case Subset::D2: return n > m + 1 && s[m + 1] <= s[m];
        case Subset::S3:
        case Subset::S4: {
            if (n <= m + 1 || !(s[m] < s[m + 1])) return false;
            const bool again = std::find(s.begin() + m + 1, s.end(), m) != s.end();
            return again == (sub == Subset::S4);
        }
        default: return false;
    }
}

std::vector<Rat> powers(const Rat& b, int n) {
    std::vector<Rat> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * b;
    return p;
}

}  // namespace

const Distribution& stat_distribution(int n, Family family, Subset subset) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Distribution> cache;
    if (family == Family::Inversion && subset != Subset::All)
        throw std::invalid_argument("stat_distribution: inversion sequences admit only the full set");
    const auto key = std::make_tuple(n, static_cast<int>(family), static_cast<int>(subset));
    std::lock_guard<std::mutex> lock(mu);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
    Distribution d;
    auto add = [&](const Seq& s) {
        if (!in_subset(s, subset)) return;
        const StatVector st = statistics(s);
        ++d[{st.asc, st.rep, st.zero, st.max, st.ealm.value_or(0), st.rmin}];
    };
    if (family == Family::Ascent)
        for_each_ascent_sequence(n, add);
    else
        for_each_inversion_sequence(n, add);
    return cache.emplace(key, std::move(d)).first->second;
}

RatSeries brute_force_gf(int n_max, Selector sel, const ParamPoint& p, Family family, Subset subset) {
    if (sel == Selector::Sextuple) {
        if (family != Family::Ascent) throw std::invalid_argument("brute_force_gf: ealm needs ascent sequences");
        if (subset == Subset::All) subset = Subset::NonStaircase;
    }
    const bool use_z = sel != Selector::Tilde;
    const bool use_v = sel != Selector::Quadruple;
    const bool use_w = sel == Selector::Sextuple;
    const auto px = powers(p.x, n_max), py = powers(p.y, n_max), pu = powers(p.u, n_max);
    const auto pz = powers(use_z ? p.z : Rat(1), n_max), pv = powers(use_v ? p.v : Rat(1), n_max);
    const auto pw = powers(use_w ? p.w : Rat(1), n_max);
    RatSeries out("t", n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rat c = 0;
        for (const auto& [k, count] : stat_distribution(n, family, subset)) {
            // k = (asc, rep, zero, max, ealm, rmin)
            const auto at = [&](int i) { return static_cast<std::size_t>(k[static_cast<std::size_t>(i)]); };
            c += Rat(mpz_class(static_cast<unsigned long>(count))) * pu[at(0)] * px[at(1)] * pz[at(2)] * py[at(3)] * pw[at(4)] * pv[at(5)];
        }
        out.set(n, c);
    }
    return out;
}

bool admissible_closed_form(const ParamPoint& p) { return p.x + p.u - p.x * p.u != 0; }

bool admissible_functional_equation(const ParamPoint& p) {
    return admissible_closed_form(p) && p.w != 1 && p.y != 0 && p.z != 0;
}

namespace {

struct Ring {
    int N;
    RatSeries one, t, r, q;
    Rat c;

    Ring(const ParamPoint& p, int order)
        : N(order),
          one(RatSeries::constant(1, "t", order)),
          t(RatSeries::variable("t", order)),
          r(t),
          q(t),
          c(p.x + p.u - p.x * p.u) {
        if (c == 0) throw std::domain_error("degenerate point: x + u - xu = 0");
        r = t * c;
        q = one - r;
    }
};

int summation_ceiling(int N, int ceiling) { return ceiling < 0 ? N : ceiling; }

}  // namespace

RatSeries delta(const ParamPoint& p, int m, int N) {
    const Ring R(p, N + 1);
    const RatSeries A = (R.one - p.y * R.r) * R.q.pow(static_cast<unsigned>(m));
    return (R.one - A).divided_by_var(1) / R.c;
}

RatSeries eval_G_quadruple(const ParamPoint& p, int N, int ceiling) {
    const Ring R(p, N);
    const Rat &x = p.x, &y = p.y, &u = p.u, &z = p.z;
    RatSeries total(R.one * 0), prod(R.one), qm(R.one);
    Rat xm = 1;
    for (int m = 0; m <= summation_ceiling(N, ceiling); ++m) {
        const RatSeries A = (R.one - y * R.r) * qm;
        const RatSeries den = (x * (1 - u) + u * A) * (x + u * (1 - x) * A);
        total += Rat(z * y * xm * R.c) * (R.r * A) / den * prod;
        prod *= (R.one + (z * R.r - 1) * A) / (x + u * (1 - x) * A);
        qm *= R.q;
        xm *= x;
    }
    return total;
}

RatSeries eval_G_tilde(const ParamPoint& p, int N, int ceiling) {
    const Ring R(p, N);
    const Rat &x = p.x, &y = p.y, &u = p.u, &v = p.v;
    const RatSeries tuvy = R.t * Rat(u * v * y);
    RatSeries total = Rat(v * y) * R.t / (R.one - tuvy);
    RatSeries prod(R.one), qm(R.one);
    for (int m = 0; m <= summation_ceiling(N, ceiling); ++m) {
        const RatSeries A = (R.one - y * R.r) * qm;
        const RatSeries shifted = x - x * u + u * A;
        prod *= x * (R.one - A) * shifted / ((x - u * (x - 1) * A) * (x - x * u + u * (R.one - v * R.r) * A));
        total += v * R.r * A / (shifted * (R.one - tuvy)) * prod;
        qm *= R.q;
    }
    return total;
}

RatSeries eval_G_quintuple(const ParamPoint& p, int N, int ceiling) {
    const Ring R(p, N);
    const Rat &x = p.x, &y = p.y, &u = p.u, &z = p.z, &v = p.v;
    const int M = summation_ceiling(N, ceiling);
    const RatSeries tuv = R.t * Rat(u * v);

    std::vector<RatSeries> A, E;  // A(m), and 1 - tuv * delta_m
    RatSeries qm(R.one);
    for (int m = 0; m <= M + 1; ++m) {
        A.push_back((R.one - y * R.r) * qm);
        E.push_back(R.one - tuv * delta(p, m, N));
        qm *= R.q;
    }
    // inner[k] = sum_{m=k}^{M+1} rvA(m)/(x-xu+uA(m)) prod_{i=k}^{m} g(i)
    std::vector<RatSeries> inner(static_cast<std::size_t>(M) + 3, R.one * 0);
    for (int m = M + 1; m >= 0; --m) {
        const RatSeries& a = A[static_cast<std::size_t>(m)];
        const RatSeries shifted = x - x * u + u * a;
        const RatSeries g = x * (R.one - a) * shifted / ((x - u * (x - 1) * a) * (x - x * u + u * (R.one - v * R.r) * a));
        inner[static_cast<std::size_t>(m)] = g * (v * R.r * a / shifted + inner[static_cast<std::size_t>(m) + 1]);
    }

    RatSeries total = Rat(v * y * z) * R.t / (R.one - tuv * y);
    RatSeries pj(R.one);
    for (int k = 0; k <= M; ++k) {
        const auto K = static_cast<std::size_t>(k);
        const RatSeries& a = A[K];
        const RatSeries num = tuv + z * (R.r - tuv) - (1 - z) * tuv * a;
        const RatSeries lower = x - u * (x - 1) * a;
        total += Rat(y * v * x * z) * R.r * num * a / ((x - u * x + u * a) * E[K + 1] * lower) * pj;
        const RatSeries pre = Rat(y * u * u * v * z * (1 - v)) * R.t * num * a / ((x - x * u + u * a) * E[K + 1] * E[K]);
        total += pre * inner[K] * pj;
        pj *= (x - x * (R.one - z * R.r) * a) / lower;
    }
    return total;
}

RatSeries eval_fishburn(int N, int ceiling) {
    const RatSeries one = RatSeries::constant(1, "t", N);
    const RatSeries q = q_power(1, "t", N);
    RatSeries total = one * 0, prod = one, qi = one;
    for (int k = 1; k <= summation_ceiling(N, ceiling); ++k) {
        qi *= q;
        prod *= one - qi;
        total += prod;
    }
    return total;
}

namespace {

// F(t; x, yy, ww, u, zz, v) by brute force.
RatSeries brute_F(const ParamPoint& p, int N, const Rat& yy, const Rat& ww, const Rat& zz, Subset sub = Subset::NonStaircase) {
    ParamPoint q = p;
    q.y = yy;
    q.w = ww;
    q.z = zz;
    return brute_force_gf(N, Selector::Sextuple, q, Family::Ascent, sub);
}

void require_admissible(const ParamPoint& p) {
    if (!admissible_functional_equation(p)) throw std::domain_error("degenerate point for the functional equation");
}

}  // namespace

GfReport check_functional_equation(const ParamPoint& p, int N) {
    require_admissible(p);
    const Ring R(p, N);
    const Rat &x = p.x, &y = p.y, &u = p.u, &z = p.z, &v = p.v, &w = p.w;
    const RatSeries &t = R.t, &r = R.r, &one = R.one;
    const RatSeries Fw = brute_F(p, N, y, w, z);
    const RatSeries lhs = (one - (r * y - 1) / Rat(y * (1 - w))) * Fw;

    const RatSeries ytu = t * Rat(y * u), ytuvw = t * Rat(y * u * v * w);
    const RatSeries kernel = y - y * z * r + z;            // y - yzr + z
    const RatSeries tail = z * (y - y * r + 1);            // z(y - yr + 1)
    const RatSeries coef = t * Rat(u * x - u) + Rat(1 / y);  // tux + 1/y - tu
    RatSeries rhs = Rat(x * y * z * v) * t * t * (Rat(y * y * u * w * v * (1 - z)) * t + tail) /
                    ((one - ytu) * (one - ytuvw) * kernel);
    rhs -= t * Rat(x / (1 - w)) * brute_F(p, N, w * y, 1, z);
    rhs += coef * ((Rat(w * y * (1 - z)) + tail) / (Rat(1 - w) * kernel)) * brute_F(p, N, y, 1, z);
    rhs += Rat(y * y * u * u * v * z * (1 - v)) * t * t * coef / (one - ytu) *
           ((Rat(y * y * u * v * w * (1 - z)) * t + tail) / ((one - ytuvw) * kernel)) * brute_F(p, N, y, 1, 1);
    return compare_series("functional equation for F", p.named(), lhs, rhs);
}

GfReport check_case_form(int which, const ParamPoint& p, int N) {
    require_admissible(p);
    const Ring R(p, N);
    const Rat &x = p.x, &y = p.y, &u = p.u, &z = p.z, &v = p.v, &w = p.w;
    const RatSeries &t = R.t, &one = R.one;
    const RatSeries tuy = t * Rat(u * y), tuywv = t * Rat(u * y * w * v);
    auto F = [&](const Rat& yy, const Rat& ww, const Rat& zz) { return brute_F(p, N, yy, ww, zz); };
    RatSeries closed(one * 0);
    Subset sub = Subset::D1;
    switch (which) {
        case 1:
            closed = Rat(x * y * z * v) * t * t * (z + tuywv - z * tuywv) / ((one - tuy) * (one - tuywv));
            sub = Subset::D1;
            break;
        case 2:
            closed = t * Rat(x / (1 - w)) * (F(y, w, z) - F(y * w, 1, z)) + t * Rat(x * (z - 1)) * F(y, 0, z);
            sub = Subset::D2;
            break;
        case 3:
            closed = t * Rat(u * x * (w + z - w * z) / (1 - w)) * F(y, 1, z) - t * Rat(u * x / (1 - w)) * F(y, w, z) -
                     t * Rat(u * x * (z - 1)) * F(y, 0, z) +
                     Rat(y * y * u * u * u * v * x * z * (1 - v)) * t * t * t * (z * (one - tuywv) + tuywv) /
                         ((one - tuywv) * (one - tuy)) * F(y, 1, 1);
            sub = Subset::S3;
            break;
        case 4:
            closed = Rat((w + z - w * z) / ((1 - w) * y)) * (one - tuy) * F(y, 1, z) +
                     (Rat(1 - v) * tuywv / (one - tuywv) + Rat(z - z * v)) * Rat(y * v * u * u * z) * t * t * F(y, 1, 1) -
                     Rat(1 / ((1 - w) * y)) * (one - tuy) * F(y, w, z) - Rat((z - 1) / y) * (one - tuy) * F(y, 0, z);
            sub = Subset::S4;
            break;
        default: throw std::invalid_argument("check_case_form: case must be 1..4");
    }
    static const char* names[] = {"", "D1", "D2", "S3", "S4"};
    return compare_series(std::string("case form over ") + names[which], p.named(), closed,
                          brute_F(p, N, y, w, z, sub));
}

namespace {

BiPoly zero_poly(int N) {
    return BiPoly(static_cast<std::size_t>(N) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(N) + 1, 0));
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

bool symmetric(const BiPoly& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p[a][b] != p[b][a]) return false;
    return true;
}

}  // namespace

GarsiaGesselReport garsia_gessel_check(int N) {
    if (N < 1 || N > 8) throw std::invalid_argument("garsia_gessel_check: order must be in 1..8");
    GarsiaGesselReport out;
    out.order = N;
    out.h_symmetric = out.b_symmetric = out.b_relation = out.foata = true;
    out.H.push_back(zero_poly(N));
    out.H[0][0][0] = 1;
    for (int n = 1; n <= N; ++n) {
        BiPoly H = zero_poly(N), B = zero_poly(N), Bperm = zero_poly(N);
        for_each_inversion_sequence(n, [&](const Seq& s) {
            const auto a = static_cast<std::size_t>(asc(s)), r = static_cast<std::size_t>(rep(s));
            ++H[a][static_cast<std::size_t>(n - 1) - r];
            ++B[a][r];
        });
        for_each_permutation(n, [&](const Perm& p) {
            const PermStats st = perm_stats(p);
            ++Bperm[static_cast<std::size_t>(st.des)][static_cast<std::size_t>(st.iasc)];
        });
        out.h_symmetric = out.h_symmetric && symmetric(H);
        out.b_symmetric = out.b_symmetric && symmetric(B);
        out.foata = out.foata && Bperm == B;
        for (int a = 0; a <= N; ++a)
            for (int b = 0; b < n; ++b)
                if (Bperm[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                    H[static_cast<std::size_t>(a)][static_cast<std::size_t>(n - 1 - b)])
                    out.b_relation = false;
        out.H.push_back(std::move(H));
    }
    // Coefficient of t^n u^K x^M on each side.
    auto lhs = [&](int n, int K, int M) {
        mpz_class total = 0;
        const BiPoly& H = out.H[static_cast<std::size_t>(n)];
        for (int a = 0; a <= K; ++a)
            for (int b = 0; b <= M; ++b) {
                const auto h = H[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                if (h == 0) continue;
                total += mpz_class(static_cast<long>(h)) * binom(static_cast<unsigned long>(n + K - a), static_cast<unsigned long>(K - a)) *
                         binom(static_cast<unsigned long>(n + M - b), static_cast<unsigned long>(M - b));
            }
        return total;
    };
    auto rhs = [](int n, long e) {
        if (n == 0) return mpz_class(1);
        if (e == 0) return mpz_class(0);
        return binom(static_cast<unsigned long>(e + n - 1), static_cast<unsigned long>(n));
    };
    out.series_identity = out.printed_exponent = true;
    for (int n = 0; n <= N; ++n)
        for (int K = 0; K <= N; ++K)
            for (int M = 0; M <= N; ++M) {
                const mpz_class l = lhs(n, K, M);
                if (l != rhs(n, static_cast<long>(K + 1) * (M + 1))) out.series_identity = false;
                if (l != rhs(n, static_cast<long>(K) * M)) out.printed_exponent = false;
            }
    return out;
}

}  // namespace fb
