#include "fishburn/series.hpp"

#include <stdexcept>

namespace fb {

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid = [](const std::string& s, bool allow_sign) {
        std::size_t i = allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false)) throw std::invalid_argument("malformed rational: " + text);
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

RatSeries::RatSeries(std::string var, int order) : var_(std::move(var)), c_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("negative series order");
}

RatSeries RatSeries::constant(const Rat& c, std::string var, int order) {
    RatSeries s(std::move(var), order);
    s.c_[0] = c;
    return s;
}

RatSeries RatSeries::variable(std::string var, int order) {
    RatSeries s(std::move(var), order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

RatSeries RatSeries::from_coeffs(std::vector<Rat> coeffs, std::string var, int order) {
    RatSeries s(std::move(var), order);
    for (std::size_t k = 0; k < coeffs.size() && k < s.c_.size(); ++k) s.c_[k] = coeffs[k];
    return s;
}

Rat RatSeries::operator[](int k) const {
    if (k < 0 || k > order()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

void RatSeries::set(int k, const Rat& value) { c_.at(static_cast<std::size_t>(k)) = value; }

void RatSeries::check_compatible(const RatSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("series variable mismatch: " + var_ + " vs " + o.var_);
    if (c_.size() != o.c_.size()) throw std::invalid_argument("series order mismatch");
}

RatSeries& RatSeries::operator+=(const RatSeries& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

RatSeries& RatSeries::operator*=(const RatSeries& o) {
    check_compatible(o);
    const std::size_t n = c_.size();
    std::vector<Rat> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (sgn(o.c_[j]) != 0) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    return *this;
}

RatSeries& RatSeries::operator*=(const Rat& k) {
    for (auto& x : c_) x *= k;
    return *this;
}

RatSeries RatSeries::operator-() const {
    RatSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

RatSeries RatSeries::inverse() const {
    if (sgn(c_[0]) == 0) throw std::domain_error("series inverse: zero constant term");
    const std::size_t n = c_.size();
    RatSeries r(var_, order());
    const Rat inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        Rat acc = 0;
        for (std::size_t k = 1; k <= m; ++k)
            if (sgn(c_[k]) != 0) acc += c_[k] * r.c_[m - k];
        r.c_[m] = -acc * inv0;
    }
    return r;
}

RatSeries RatSeries::pow(unsigned k) const {
    RatSeries result = constant(1, var_, order());
    RatSeries base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

std::optional<int> RatSeries::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return static_cast<int>(k);
    return std::nullopt;
}

RatSeries RatSeries::truncated(int order) const {
    if (order < 0 || order > this->order()) throw std::invalid_argument("truncation order out of range");
    return from_coeffs({c_.begin(), c_.begin() + order + 1}, var_, order);
}

RatSeries RatSeries::divided_by_var(int k) const {
    if (k < 0 || k > order()) throw std::invalid_argument("division by a power beyond the order");
    for (int i = 0; i < k; ++i)
        if (sgn(c_[static_cast<std::size_t>(i)]) != 0) throw std::domain_error("series not divisible by the variable power");
    return from_coeffs({c_.begin() + k, c_.end()}, var_, order() - k);
}

std::string RatSeries::str() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        const bool neg = sgn(c_[k]) < 0;
        const Rat mag = abs(c_[k]);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var_;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var_ + "^" + std::to_string(c_.size()) + ")";
}

RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
RatSeries operator*(RatSeries a, const RatSeries& b) { return a *= b; }
RatSeries operator/(const RatSeries& a, const RatSeries& b) { return a * b.inverse(); }
RatSeries operator+(RatSeries a, const Rat& k) { return a += RatSeries::constant(k, a.var(), a.order()); }
RatSeries operator+(const Rat& k, RatSeries a) { return std::move(a) + k; }
RatSeries operator-(RatSeries a, const Rat& k) { return a -= RatSeries::constant(k, a.var(), a.order()); }
RatSeries operator-(const Rat& k, const RatSeries& a) { return -a + k; }
RatSeries operator*(RatSeries a, const Rat& k) { return a *= k; }
RatSeries operator*(const Rat& k, RatSeries a) { return a *= k; }
RatSeries operator/(RatSeries a, const Rat& k) {
    if (k == 0) throw std::domain_error("series division by zero");
    return a *= Rat(1 / k);
}
RatSeries operator/(const Rat& k, const RatSeries& a) { return a.inverse() *= k; }

RatSeries q_power(int j, const std::string& var, int order) {
    const RatSeries q = RatSeries::constant(1, var, order) - RatSeries::variable(var, order);
    if (j >= 0) return q.pow(static_cast<unsigned>(j));
    return q.inverse().pow(static_cast<unsigned>(-j));
}

RatSeries poch(const RatSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("poch: negative length");
    const RatSeries q = q_power(1, a.var(), a.order());
    RatSeries result = RatSeries::constant(1, a.var(), a.order());
    RatSeries qi = RatSeries::constant(1, a.var(), a.order());
    for (int i = 0; i < k; ++i) {
        result *= 1 - a * qi;
        qi *= q;
    }
    return result;
}

}  // namespace fb
