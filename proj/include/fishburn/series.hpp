#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fb {

using Rat = mpq_class;

// Parses "p/q" or "p"; throws std::invalid_argument on malformed text or zero denominator.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);

// Truncated power series c_0 + c_1 v + ... + c_N v^N in a named variable v.
// Binary operations require equal variable and order and throw std::invalid_argument otherwise.
class RatSeries {
public:
    RatSeries(std::string var, int order);
    static RatSeries constant(const Rat& c, std::string var, int order);
    static RatSeries variable(std::string var, int order);
    static RatSeries from_coeffs(std::vector<Rat> coeffs, std::string var, int order);

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    // Coefficient of v^k; zero beyond the order.
    Rat operator[](int k) const;
    void set(int k, const Rat& value);

    RatSeries& operator+=(const RatSeries& o);
    RatSeries& operator-=(const RatSeries& o);
    RatSeries& operator*=(const RatSeries& o);
    RatSeries& operator*=(const Rat& k);
    RatSeries operator-() const;

    // Throws std::domain_error when the constant term is zero.
    RatSeries inverse() const;
    RatSeries pow(unsigned k) const;
    // Index of the first non-zero coefficient; empty for the zero series.
    std::optional<int> valuation() const;
    bool is_zero() const { return !valuation(); }
    RatSeries truncated(int order) const;
    // Exact division by v^k; the result has order N - k. Throws std::domain_error if v^k does not divide.
    RatSeries divided_by_var(int k) const;

    bool operator==(const RatSeries& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const RatSeries& o) const { return !(*this == o); }
    std::string str() const;

private:
    void check_compatible(const RatSeries& o) const;
    std::string var_;
    std::vector<Rat> c_;
};

RatSeries operator+(RatSeries a, const RatSeries& b);
RatSeries operator-(RatSeries a, const RatSeries& b);
RatSeries operator*(RatSeries a, const RatSeries& b);
RatSeries operator/(const RatSeries& a, const RatSeries& b);
RatSeries operator+(RatSeries a, const Rat& k);
RatSeries operator+(const Rat& k, RatSeries a);
RatSeries operator-(RatSeries a, const Rat& k);
RatSeries operator-(const Rat& k, const RatSeries& a);
RatSeries operator*(RatSeries a, const Rat& k);
RatSeries operator*(const Rat& k, RatSeries a);
RatSeries operator/(RatSeries a, const Rat& k);
RatSeries operator/(const Rat& k, const RatSeries& a);

// (1 - v)^j for any integer j.
RatSeries q_power(int j, const std::string& var, int order);
// (a; q)_k = prod_{i<k} (1 - a q^i) with q = 1 - v.
RatSeries poch(const RatSeries& a, int k);

}  // namespace fb
