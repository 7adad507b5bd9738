// Prints one PASS/FAIL line per acceptance criterion.
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fishburn/suites.hpp"

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> prefixes;
};

const std::vector<Criterion> kCriteria = {
    {1, "Fishburn counts", {"counts."}},
    {2, "septuple transport of the master bijection", {"phi."}},
    {3, "component bijections and worked examples", {"lemma."}},
    {4, "(asc,rep,zero,max) symmetry, both routes", {"sym.asc_rep_zero_max", "sym.series_quadruple"}},
    {5, "closed-form generating functions", {"genfun.quadruple", "genfun.tilde", "genfun.quintuple"}},
    {6, "functional equation and case forms", {"genfun.functional_equation", "genfun.case_"}},
    {7, "q-series transformations", {"qseries."}},
    {8, "inversion sequences", {"inv."}},
    {9, "Fishburn matrix symmetries", {"matrix."}},
    {10, "property suites", {"labels.", "rules.R1_preserves", "rules.R2_preserves", "stability."}},
};

bool matches(const std::string& name, const std::string& prefix) {
    // A prefix ending in '.' or '_' selects a group, otherwise an exact check or its suffixed variants
    // that carry no further qualifier.
    if (prefix.back() == '.' || prefix.back() == '_') return name.rfind(prefix, 0) == 0;
    return name == prefix || (name.rfind(prefix + "_at_", 0) == 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance report"};
    fb::Scale sc;
    std::vector<int> expect_fail;
    app.add_flag("--heavy", sc.heavy, "run the n = 10 variants");
    app.add_option("--seed", sc.seed, "random seed");
    app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit 0 iff exactly these fail")
        ->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const auto checks = fb::run_suite("all", sc);
    std::set<int> failed;
    for (const Criterion& c : kCriteria) {
        int total = 0;
        std::vector<std::string> bad;
        for (const fb::Check& ch : checks)
            for (const std::string& p : c.prefixes)
                if (matches(ch.check, p)) {
                    ++total;
                    if (!ch.verdict) bad.push_back(ch.check);
                    break;
                }
        const bool pass = total > 0 && bad.empty();
        if (!pass) failed.insert(c.id);
        std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << " (" << total
                  << " checks";
        for (const std::string& b : bad) std::cout << ", failed " << b;
        std::cout << ")\n";
    }
    if (app.count("--expect-fail")) return failed == std::set<int>(expect_fail.begin(), expect_fail.end()) ? 0 : 1;
    return failed.empty() ? 0 : 1;
}
