#pragma once

#include <optional>
#include <vector>

#include "fishburn/report.hpp"
#include "fishburn/series.hpp"

namespace fb {

// A parameter c(r) * (1 - r)^j of a basic hypergeometric series in base q = 1 - r.
struct QParam {
    RatSeries c;
    int j = 0;
    RatSeries value() const;
};
QParam q_tag(int j, int N);                 // (1 - r)^j
QParam q_const(const Rat& c, int N);        // rational constant
QParam q_series(const RatSeries& c, int j = 0);

// upper[0] must be a tag (1 - r)^j. It is paired with (q;q)_k exactly. When j <= 0 the sum stops at k = -j.
// Otherwise every other upper parameter with constant term 1 adds one to the r-valuation of each step,
// which bounds the number of contributing terms; without such a parameter an explicit ceiling is required.
// Lower parameters must have constant term different from 1. The argument defaults to q.
struct PhiSpec {
    std::vector<QParam> upper, lower;
    std::optional<RatSeries> argument;
    int order = 12;
    std::optional<int> ceiling;
};

// Individual summands k = 0, 1, ...; throws std::invalid_argument on an invalid spec.
std::vector<RatSeries> phi_terms(const PhiSpec& spec);
RatSeries phi_series(const PhiSpec& spec);

// Terminating series with rational base q and first upper parameter q^{-n}, summed exactly.
Rat phi_terminating(int n, const std::vector<Rat>& upper_rest, const std::vector<Rat>& lower, const Rat& q,
                    const Rat& z);

struct SearsPoint {
    Rat q, a, b, c, d, e;
};
// Throws std::domain_error when a denominator vanishes at the point.
bool verify_sears(int n, const SearsPoint& p);

// Upper parameter 1 - a is taken with a = r * alpha, which keeps both sides r-adically convergent.
struct Tf43Point {
    Rat alpha, b, c, d, e;
};
bool admissible_tf43(const Tf43Point& p);
GfReport verify_tf43(int j, const Tf43Point& p, int N);
// Anchor family a = 1 - (1 - r)^{-n}: both sides of the transformation against both sides of
// the terminating transformation with first upper parameter q^{-n}, all as r-series.
std::vector<GfReport> verify_tf43_anchor(int n, int j, const Tf43Point& p, int N);

// b = (1 - beta r)(1 - r) and d = c (1 - delta r)(1 - r), so that b and d/c have constant term 1.
struct Cor32Point {
    Rat beta, c, delta, e;
};
bool admissible_cor32(const Cor32Point& p);
GfReport verify_cor32(int j, const Cor32Point& p, int N);
// The 4phi3 transformation with upper parameter 1 - a set to 0 against the 3phi2 one.
std::vector<GfReport> verify_cor32_from_tf43(int j, const Cor32Point& p, int N);

// a = r * alpha as for the 4phi3 transformation.
struct Cor2Point {
    Rat alpha, b, c, e;
};
bool admissible_cor2_32(const Cor2Point& p);
GfReport verify_cor2_32(int j, const Cor2Point& p, int N);

struct TffPoint {
    Rat x, y, u, v, z;
};
bool admissible_tff(const TffPoint& p);

struct TffReport {
    GfReport tff0;             // as displayed
    GfReport tff;              // lower parameter x(u-1)(1-zr)(1-r)/u on the right
    GfReport tff_printed;      // lower parameter z(u-1)(1-zr)(1-r)/u on the right
    std::vector<GfReport> instances;  // both sides against the 3phi2 transformation instances
    bool sym1 = false, sym2 = false;  // the generating-function symmetries at the same point
    bool routes_agree() const { return tff.verdict == sym1 && tff0.verdict == sym2; }
};
TffReport verify_tff_identities(const TffPoint& p, int N);

}  // namespace fb
