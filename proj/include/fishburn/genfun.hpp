#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/report.hpp"
#include "fishburn/series.hpp"
#include "fishburn/structures.hpp"

namespace fb {

// Rational specialization of the generating-function variables.
struct ParamPoint {
    Rat x = 1, y = 1, u = 1, z = 1, v = 1, w = 1;
    std::vector<std::pair<std::string, Rat>> named() const;
};

// Numerator in [-7, 7], denominator in [1, 7].
Rat random_rat(std::mt19937_64& rng);

enum class Family { Ascent, Inversion };
// Quadruple: x^rep y^max u^asc z^zero.   Tilde: x^rep y^max u^asc v^rmin.
// Quintuple: Quadruple times v^rmin.     Sextuple: Quintuple times w^ealm, non-staircase only.
enum class Selector { Quadruple, Tilde, Quintuple, Sextuple };
enum class Subset { All, NonStaircase, D1, D2, S3, S4 };

// Multiset of (asc, rep, zero, max, ealm, rmin) over the length-n members of a subset.
// Inversion sequences carry ealm = 0 and admit only Subset::All. Results are cached.
const Distribution& stat_distribution(int n, Family family = Family::Ascent, Subset subset = Subset::All);

// Series in t whose n-th coefficient sums the selected monomial over length n (n >= 1).
RatSeries brute_force_gf(int n_max, Selector sel, const ParamPoint& p, Family family = Family::Ascent,
                         Subset subset = Subset::All);

// The closed forms use r = t (x + u - xu), which must have non-zero t-coefficient.
bool admissible_closed_form(const ParamPoint& p);
// The functional equation additionally needs w != 1, y != 0, z != 0.
bool admissible_functional_equation(const ParamPoint& p);

// Closed forms, truncated at order N. The summation index runs to `ceiling` (default N);
// every summand beyond N vanishes modulo t^{N+1}. Throw std::domain_error at inadmissible points.
RatSeries eval_G_quadruple(const ParamPoint& p, int N, int ceiling = -1);
RatSeries eval_G_tilde(const ParamPoint& p, int N, int ceiling = -1);
RatSeries eval_G_quintuple(const ParamPoint& p, int N, int ceiling = -1);
RatSeries eval_fishburn(int N, int ceiling = -1);
// (1 - (1 - yr)(1 - r)^m) / r as a series in t.
RatSeries delta(const ParamPoint& p, int m, int N);

// Both sides of the functional equation for F with F computed by brute force.
GfReport check_functional_equation(const ParamPoint& p, int N);
// Closed form of the sum of F's monomials over D1, D2, S3 or S4 (which = 1..4) against brute force.
GfReport check_case_form(int which, const ParamPoint& p, int N);

// Bivariate polynomial: coefficient of u^a x^b at [a][b].
using BiPoly = std::vector<std::vector<std::int64_t>>;

struct GarsiaGesselReport {
    int order = 0;
    std::vector<BiPoly> H;          // H_n(u,x) from inversion sequences, n = 0..order
    bool h_symmetric = false;       // H_n(u,x) = H_n(x,u)
    bool b_symmetric = false;       // B_n(u,x) = B_n(x,u)
    bool b_relation = false;        // B_n from permutations equals x^{n-1} H_n(u, 1/x)
    bool foata = false;             // (des, iasc) on permutations ~ (asc, rep) on inversion sequences
    bool series_identity = false;   // with the exponent (k+1)(m+1)
    bool printed_exponent = false;  // with the exponent km
    bool all() const { return h_symmetric && b_symmetric && b_relation && foata && series_identity; }
};
GarsiaGesselReport garsia_gessel_check(int N);

}  // namespace fb
