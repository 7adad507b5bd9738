#include <algorithm>

#include "doctest.h"
#include "fishburn/suites.hpp"

using namespace fb;

TEST_CASE("suite names") {
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK_THROWS_AS(run_suite("nope", Scale{}), std::invalid_argument);
}

TEST_CASE("small suites pass and are sorted") {
    Scale sc;
    sc.n = 6;  // smallest n at which every component domain is non-empty
    sc.order = 6;
    sc.points = 2;
    for (const std::string suite : {"phi", "lemmas", "qseries", "conjecture"}) {
        const auto checks = run_suite(suite, sc);
        REQUIRE_FALSE(checks.empty());
        CHECK(std::is_sorted(checks.begin(), checks.end(),
                             [](const Check& a, const Check& b) { return a.check < b.check; }));
        for (const Check& c : checks) {
            INFO(c.check);
            if (c.check != "rules.R2_preserves") CHECK(c.verdict);
            CHECK_FALSE(c.anchor.empty());
        }
    }
}

TEST_CASE("reports serialize") {
    Scale sc;
    sc.n = 4;
    const auto checks = run_suite("phi", sc);
    const auto j = to_json(checks.front());
    CHECK(j.contains("check"));
    CHECK(j.contains("verdict"));
    CHECK(j.contains("details"));
}
