#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fb {

// One verified claim: what was checked, which statement it exercises, at what scale, and the outcome.
struct Check {
    std::string check;
    std::string anchor;
    std::string scale;
    bool verdict = false;
    nlohmann::json details = nlohmann::json::object();
};
nlohmann::json to_json(const Check& c);

// Scale knobs shared by every group of checks. Unset fields fall back to per-check defaults.
struct Scale {
    std::optional<int> n;      // bound of every exhaustive sweep
    std::optional<int> order;  // truncation order of every series comparison
    std::uint64_t seed = 42;
    int points = 5;
    bool heavy = false;        // raises the sweeps that have an opt-in n = 10 variant
    std::function<void(const std::string&)> progress;

    int bound(int dflt, int heavy_dflt) const { return n.value_or(heavy ? heavy_dflt : dflt); }
    int trunc(int dflt) const { return order.value_or(dflt); }
    void note(const std::string& msg) const {
        if (progress) progress(msg);
    }
};

std::vector<Check> count_checks(const Scale& sc);
std::vector<Check> phi_checks(const Scale& sc);
std::vector<Check> lemma_checks(const Scale& sc);
std::vector<Check> example_checks();
std::vector<Check> symmetry_checks(const Scale& sc);
std::vector<Check> closed_form_checks(const Scale& sc);
std::vector<Check> functional_equation_checks(const Scale& sc);
std::vector<Check> qseries_checks(const Scale& sc);
std::vector<Check> inversion_checks(const Scale& sc);
std::vector<Check> family_checks(const Scale& sc);
std::vector<Check> matrix_checks(const Scale& sc);
std::vector<Check> label_checks(const Scale& sc);
std::vector<Check> stability_checks(const Scale& sc);

// lemmas | phi | distributions | genfun | qseries | conjecture | all. Results are sorted by check name.
// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const Scale& sc);
const std::vector<std::string>& suite_names();

}  // namespace fb
