#include <algorithm>
#include <set>

#include "doctest.h"
#include "fishburn/structures.hpp"

using namespace fb;

namespace {

// Pattern occurrence straight from the definition: i < i+1 < j with p_i < p_{i+1} and p_j = p_i - 1.
bool contains_naive(const Perm& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (p[i] < p[i + 1] && p[j] == p[i] - 1) return true;
    return false;
}

}  // namespace

TEST_CASE("pattern avoidance") {
    CHECK(avoids_pattern({1, 2, 3, 4}));
    CHECK_FALSE(avoids_pattern({2, 3, 1}));
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Perm& p) { CHECK(avoids_pattern(p) == !contains_naive(p)); });
    std::uint64_t c4 = 0, c9 = 0;
    for_each_permutation(4, [&](const Perm& p) { c4 += avoids_pattern(p); });
    for_each_permutation(9, [&](const Perm& p) { c9 += avoids_pattern(p); });
    CHECK(c4 == 15);
    CHECK(c9 == 31240);
}

TEST_CASE("permutation statistics") {
    const PermStats id = perm_stats({1, 2, 3});
    CHECK(id.des == 0);
    CHECK(id.iasc == 2);
    CHECK(id.lmin == 1);
    CHECK(id.lmax == 3);
    CHECK(id.rmax == 1);
    CHECK(id.rmin == 3);
    const PermStats rev = perm_stats({5, 4, 3, 2, 1});
    CHECK(rev.des == 4);
    CHECK(rev.iasc == 0);
}

TEST_CASE("Lehmer code") {
    CHECK(lehmer_code({1, 2, 3, 4}) == Seq{0, 0, 0, 0});
    CHECK(lehmer_code({2, 1}) == Seq{0, 1});
    std::set<Seq> codes;
    for_each_permutation(6, [&](const Perm& p) {
        const Seq c = lehmer_code(p);
        CHECK(is_inversion_sequence(c));
        codes.insert(c);
    });
    CHECK(codes.size() == 720);
}

TEST_CASE("Fishburn matrices") {
    std::vector<Matrix> one;
    for_each_fishburn_matrix(1, [&](const Matrix& m) { one.push_back(m); });
    CHECK(one == std::vector<Matrix>{{{1}}});
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t c = 0;
        for_each_fishburn_matrix(n, [&](const Matrix& m) {
            ++c;
            CHECK(is_fishburn_matrix(m));
            int sum = 0;
            for (const auto& row : m)
                for (int v : row) sum += v;
            CHECK(sum == n);
        });
        CHECK(c == kFishburn[n]);
    }
    CHECK_FALSE(is_fishburn_matrix({{0, 1}, {1, 0}}));
    CHECK_FALSE(is_fishburn_matrix({{1, 0}, {0, 0}}));
}

TEST_CASE("matrix statistics") {
    for (int v = 1; v <= 4; ++v) {
        const MatrixStats s = matrix_stats({{v}});
        CHECK(s.rowsum1 == v);
        CHECK(s.ne == 1);
        CHECK(s.tr == 1);
    }
    const MatrixStats s = matrix_stats({{1, 1}, {0, 1}});
    CHECK(s.rowsum1 == 2);
    CHECK(s.tr == 2);
}

TEST_CASE("inversion-sequence equidistributions") {
    CHECK(check_conjecture_quintuple(3));
    CHECK(check_prop_syminv(3));
    CHECK(check_prop_syminv(6));
    for (int n = 1; n <= 8; ++n) CHECK(check_conjecture_quintuple(n));
}

TEST_CASE("permuted reorders and projects") {
    const Distribution d = {{{1, 2, 3}, 4}, {{1, 5, 3}, 1}};
    CHECK(permuted(d, {2, 0}) == Distribution{{{3, 1}, 5}});
    CHECK(permuted(d, {1, 0, 2}) == Distribution{{{2, 1, 3}, 4}, {{5, 1, 3}, 1}});
}
