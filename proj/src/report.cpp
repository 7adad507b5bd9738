#include "fishburn/report.hpp"

#include <stdexcept>

namespace fb {

GfReport compare_series(std::string identity, std::vector<std::pair<std::string, Rat>> point, const RatSeries& lhs,
                        const RatSeries& rhs) {
    if (lhs.var() != rhs.var() || lhs.order() != rhs.order())
        throw std::invalid_argument("compare_series: incompatible series for " + identity);
    GfReport r{std::move(identity), std::move(point), lhs.order(), lhs.coeffs(), rhs.coeffs(), true, std::nullopt};
    for (int k = 0; k <= r.order; ++k)
        if (r.lhs[static_cast<std::size_t>(k)] != r.rhs[static_cast<std::size_t>(k)]) {
            r.verdict = false;
            r.first_divergence = k;
            break;
        }
    return r;
}

nlohmann::json to_json(const GfReport& r) {
    nlohmann::json point = nlohmann::json::object();
    for (const auto& [name, value] : r.point) point[name] = to_string(value);
    nlohmann::json j{{"identity", r.identity}, {"point", point}, {"order", r.order}, {"verdict", r.verdict}};
    if (r.first_divergence) {
        const auto k = static_cast<std::size_t>(*r.first_divergence);
        j["first_divergence"] = {{"index", *r.first_divergence}, {"lhs", to_string(r.lhs[k])}, {"rhs", to_string(r.rhs[k])}};
    }
    return j;
}

}  // namespace fb
