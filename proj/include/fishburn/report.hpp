#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/series.hpp"
#include "json.hpp"

namespace fb {

// Outcome of comparing two truncated series.
struct GfReport {
    std::string identity;
    std::vector<std::pair<std::string, Rat>> point;
    int order = 0;
    std::vector<Rat> lhs, rhs;
    bool verdict = false;
    std::optional<int> first_divergence;
};

GfReport compare_series(std::string identity, std::vector<std::pair<std::string, Rat>> point, const RatSeries& lhs,
                        const RatSeries& rhs);
nlohmann::json to_json(const GfReport& r);

}  // namespace fb
