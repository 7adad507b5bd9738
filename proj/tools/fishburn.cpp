// Command-line frontend: enumeration counts, the master bijection, verification suites and joint distributions.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fishburn/bijections.hpp"
#include "fishburn/genfun.hpp"
#include "fishburn/structures.hpp"
#include "fishburn/suites.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace fb;

constexpr const char* kSchema = "fishburn-report/1";
constexpr int kMaxN = 12;
constexpr int kMaxOrder = 30;

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out;
}

Seq parse_seq(const std::string& text) {
    Seq s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw UsageError("not an integer: '" + item + "'");
        s.push_back(v);
    }
    return s;
}

// ---- count ----

std::uint64_t count_family(const std::string& family, int n) {
    std::uint64_t c = 0;
    if (family == "ascent") {
        for_each_ascent_sequence(n, [&](const Seq&) { ++c; });
    } else if (family == "inversion") {
        for_each_inversion_sequence(n, [&](const Seq&) { ++c; });
    } else if (family == "permutation") {
        for_each_permutation(n, [&](const Perm& p) { c += avoids_pattern(p) ? 1 : 0; });
    } else {
        for_each_fishburn_matrix(n, [&](const Matrix&) { ++c; });
    }
    return c;
}

int cmd_count(const std::string& family, int n, const std::string& format) {
    const std::uint64_t c = count_family(family, n);
    std::uint64_t expected = 1;
    if (family == "inversion")
        for (int k = 2; k <= n; ++k) expected *= static_cast<std::uint64_t>(k);
    else
        expected = kFishburn[n];
    const bool match = c == expected;
    if (format == "json") {
        std::cout << json{{"schema", kSchema}, {"command", "count"}, {"family", family}, {"n", n}, {"count", c},
                          {"expected", expected}, {"match", match}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "family,n,count,expected,match\n"
                  << family << "," << n << "," << c << "," << expected << "," << (match ? "true" : "false") << "\n";
    } else {
        std::cout << family << " n=" << n << ": " << c << " (expected " << expected << ", "
                  << (match ? "match" : "MISMATCH") << ")\n";
    }
    return match ? kPass : kFail;
}

// ---- phi ----

json septuple_json(const Septuple& s) {
    return {{"asc", s[0]}, {"rep", s[1]}, {"zero", s[2]}, {"max", s[3]}, {"ealm", s[4]}, {"rmin", s[5]}, {"rpos", s[6]}};
}

int cmd_phi(const std::string& text, const std::string& format) {
    const Seq s = parse_seq(text);
    if (s.empty() || !is_ascent_sequence(s)) throw UsageError("not an ascent sequence: " + text);
    if (static_cast<int>(s.size()) > kMaxN) throw UsageError("sequence longer than " + std::to_string(kMaxN));
    const Seq t = Phi(s);
    const Septuple a = septuple(s), b = septuple(t);
    const Septuple moved{b[0], b[1], b[2], b[5], b[6], b[3], b[4]};
    const bool transport = a == moved;
    const bool round_trip = Phi_inv(t) == s;
    const bool ok = transport && round_trip;
    if (format == "json") {
        std::cout << json{{"schema", kSchema},
                          {"command", "phi"},
                          {"input", s},
                          {"output", t},
                          {"input_stats", septuple_json(a)},
                          {"output_stats", septuple_json(b)},
                          {"transport", transport},
                          {"round_trip", round_trip}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "sequence,asc,rep,zero,max,ealm,rmin,rpos\n";
        std::cout << '"' << join(s) << "\"," << join({a.begin(), a.end()}) << "\n";
        std::cout << '"' << join(t) << "\"," << join({b.begin(), b.end()}) << "\n";
    } else {
        std::cout << "Phi(" << join(s) << ") = " << join(t) << "\n"
                  << "(asc,rep,zero,max,ealm,rmin,rpos) s      = (" << join({a.begin(), a.end()}) << ")\n"
                  << "(asc,rep,zero,max,ealm,rmin,rpos) Phi(s) = (" << join({b.begin(), b.end()}) << ")\n"
                  << "transport (asc,rep,zero,max,ealm,rmin,rpos)s = (asc,rep,zero,rmin,rpos,max,ealm)Phi(s): "
                  << (transport ? "holds" : "FAILS") << "\n"
                  << "inverse round trip: " << (round_trip ? "holds" : "FAILS") << "\n";
    }
    return ok ? kPass : kFail;
}

// ---- verify ----

int cmd_verify(const std::string& suite, Scale sc, const std::string& format) {
    const bool noisy = sc.heavy || sc.n.value_or(0) >= 10;
    const auto start = std::chrono::steady_clock::now();
    if (noisy)
        sc.progress = [start](const std::string& msg) {
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::cerr << "[" << std::fixed << std::setprecision(1) << secs << "s] " << msg << "\n";
        };
    const std::vector<Check> checks = run_suite(suite, sc);
    bool all = true;
    for (const Check& c : checks) all = all && c.verdict;
    if (format == "json") {
        json results = json::array();
        for (const Check& c : checks) results.push_back(to_json(c));
        json config = {{"seed", sc.seed}, {"points", sc.points}, {"heavy", sc.heavy}};
        config["n"] = sc.n ? json(*sc.n) : json(nullptr);
        config["order"] = sc.order ? json(*sc.order) : json(nullptr);
        std::cout << json{{"schema", kSchema}, {"command", "verify"}, {"suite", suite}, {"config", config},
                          {"passed", all}, {"results", results}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "check,anchor,scale,verdict\n";
        for (const Check& c : checks)
            std::cout << c.check << ",\"" << c.anchor << "\",\"" << c.scale << "\"," << (c.verdict ? "pass" : "fail")
                      << "\n";
    } else {
        for (const Check& c : checks)
            std::cout << (c.verdict ? "PASS " : "FAIL ") << c.check << "  [" << c.scale << "]  " << c.anchor << "\n";
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? kPass : kFail;
}

// ---- distribution ----

struct Table {
    std::vector<std::string> names;
    Distribution rows;
};

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

const std::vector<std::string>& family_stats(const std::string& family) {
    static const std::map<std::string, std::vector<std::string>> stats = {
        {"ascent", {"asc", "rep", "zero", "max", "ealm", "rmin", "rpos"}},
        {"inversion", {"asc", "rep", "zero", "max", "rmin"}},
        {"permutation", {"des", "iasc", "lmax", "lmin", "rmax", "rmin"}},
        {"matrix", {"rowsum1", "ne", "tr", "dim"}},
    };
    return stats.at(family);
}

std::vector<std::string> resolve_stats(const std::string& family, const std::string& selector) {
    if (selector.empty()) return family_stats(family);
    if (selector == "quadruple") return {"asc", "rep", "zero", "max"};
    if (selector == "septuple" && family == "ascent") return family_stats(family);
    const std::vector<std::string> names = split_names(selector);
    const auto& known = family_stats(family);
    for (const std::string& s : names)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw UsageError("statistic '" + s + "' is not defined on family " + family);
    if (names.empty()) throw UsageError("empty statistics selector");
    return names;
}

Table distribution_table(const std::string& family, int n, const std::vector<std::string>& names) {
    const auto& known = family_stats(family);
    std::vector<int> idx;
    for (const std::string& s : names) idx.push_back(static_cast<int>(std::find(known.begin(), known.end(), s) - known.begin()));
    Table t{names, {}};
    auto add = [&](const std::vector<int>& all) {
        std::vector<int> key;
        for (int k : idx) key.push_back(all[k]);
        ++t.rows[key];
    };
    if (family == "ascent") {
        for_each_ascent_sequence(n, [&](const Seq& s) {
            const Septuple v = septuple(s);
            add({v.begin(), v.end()});
        });
    } else if (family == "inversion") {
        for_each_inversion_sequence(n, [&](const Seq& s) {
            const StatVector v = statistics(s);
            add({v.asc, v.rep, v.zero, v.max, v.rmin});
        });
    } else if (family == "permutation") {
        for_each_permutation(n, [&](const Perm& p) {
            if (!avoids_pattern(p)) return;
            const PermStats v = perm_stats(p);
            add({v.des, v.iasc, v.lmax, v.lmin, v.rmax, v.rmin});
        });
    } else {
        for_each_fishburn_matrix(n, [&](const Matrix& m) {
            const MatrixStats v = matrix_stats(m);
            add({v.rowsum1, v.ne, v.tr, static_cast<int>(m.size())});
        });
    }
    return t;
}

int cmd_distribution(const std::string& family, int n, const std::string& selector, const std::string& format) {
    const Table t = distribution_table(family, n, resolve_stats(family, selector));
    if (format == "json") {
        json rows = json::array();
        for (const auto& [key, count] : t.rows) rows.push_back({{"tuple", key}, {"count", count}});
        std::cout << json{{"schema", kSchema}, {"command", "distribution"}, {"family", family}, {"n", n},
                          {"stats", t.names}, {"rows", rows}}
                         .dump(2)
                  << "\n";
    } else {
        for (const std::string& s : t.names) std::cout << s << ",";
        std::cout << "count\n";
        for (const auto& [key, count] : t.rows) std::cout << join(key) << "," << count << "\n";
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ascent sequences, Fishburn structures and their statistics"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format;
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    const std::vector<std::string> families = {"ascent", "inversion", "permutation", "matrix"};

    std::string count_family_name;
    int count_n = 0;
    auto* count = app.add_subcommand("count", "Count a family of size n and compare with the known formula");
    count->add_option("family", count_family_name, "ascent | inversion | permutation | matrix")
        ->required()
        ->check(CLI::IsMember(families));
    auto* count_n_opt = count->add_option("size", count_n, "size n")->check(CLI::Range(0, kMaxN));
    count->add_option("--n", count_n, "size")->check(CLI::Range(0, kMaxN))->excludes(count_n_opt);

    std::string phi_seq;
    auto* phi = app.add_subcommand("phi", "Apply the master bijection to an ascent sequence");
    phi->add_option("sequence", phi_seq, "comma-separated entries, e.g. 0,1,0")->required();

    std::string suite = "all", suite_pos;
    Scale sc;
    int verify_n = 0, verify_order = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    auto* suite_opt = verify->add_option("name", suite_pos, "lemmas | phi | distributions | genfun | qseries | "
                                                             "conjecture | all")
                          ->check(CLI::IsMember(suite_names()));
    verify->add_option("--suite", suite, "same as the positional suite")
        ->check(CLI::IsMember(suite_names()))
        ->excludes(suite_opt);
    auto* vn = verify->add_option("--n", verify_n, "bound of every exhaustive sweep")->check(CLI::Range(1, kMaxN));
    auto* vo = verify->add_option("--order", verify_order, "truncation order of series checks")
                   ->check(CLI::Range(1, kMaxOrder));
    verify->add_option("--seed", sc.seed, "seed of the random evaluation points");
    verify->add_option("--points", sc.points, "random points per identity (at least 5 are always used)")
        ->check(CLI::Range(1, 1000));
    verify->add_flag("--heavy", sc.heavy, "raise the sweeps with an opt-in n = 10 variant");

    std::string dist_family, dist_stats;
    int dist_n = 0;
    auto* dist = app.add_subcommand("distribution", "Joint distribution of statistics over a family");
    dist->add_option("family", dist_family, "ascent | inversion | permutation | matrix")
        ->required()
        ->check(CLI::IsMember(families));
    auto* dist_n_opt = dist->add_option("size", dist_n, "size n")->check(CLI::Range(1, kMaxN));
    dist->add_option("--n", dist_n, "size")->check(CLI::Range(1, kMaxN))->excludes(dist_n_opt);
    dist->add_option("--stats", dist_stats, "comma-separated statistics or 'quadruple'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const auto need_n = [](CLI::App* sub, CLI::Option* pos) {
            if (pos->count() == 0 && sub->get_option("--n")->count() == 0) throw UsageError("size n is required");
        };
        if (*count) need_n(count, count_n_opt);
        if (*dist) need_n(dist, dist_n_opt);
        if (*count) return cmd_count(count_family_name, count_n, format.empty() ? "text" : format);
        if (*phi) return cmd_phi(phi_seq, format.empty() ? "text" : format);
        if (*verify) {
            if (!suite_pos.empty()) suite = suite_pos;
            if (*vn) sc.n = verify_n;
            if (*vo) sc.order = verify_order;
            return cmd_verify(suite, sc, format.empty() ? "json" : format);
        }
        if (*dist) return cmd_distribution(dist_family, dist_n, dist_stats, format.empty() ? "csv" : format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
