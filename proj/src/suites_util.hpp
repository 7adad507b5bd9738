#pragma once

#include <random>
#include <string>
#include <vector>

#include "fishburn/genfun.hpp"
#include "fishburn/report.hpp"
#include "fishburn/suites.hpp"

namespace fb::detail {

inline int chi(bool b) { return b ? 1 : 0; }

inline std::string upto(int n) { return "n<=" + std::to_string(n); }

inline Check make_check(std::string name, std::string anchor, std::string scale, bool verdict,
                        nlohmann::json details = nlohmann::json::object()) {
    return Check{std::move(name), std::move(anchor), std::move(scale), verdict, std::move(details)};
}

// Aggregates series comparisons into one check; details keep the failing reports in full.
struct ReportTally {
    bool ok = true;
    int count = 0;
    nlohmann::json failures = nlohmann::json::array();
    void add(const GfReport& r) {
        ++count;
        if (!r.verdict) {
            ok = false;
            failures.push_back(to_json(r));
        }
    }
    nlohmann::json details() const { return {{"comparisons", count}, {"failures", failures}}; }
};

// A seeded stream per check group, so groups do not shift each other's points.
inline std::mt19937_64 group_rng(std::uint64_t seed, std::uint64_t group) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(group)};
    return std::mt19937_64(seq);
}

}  // namespace fb::detail
