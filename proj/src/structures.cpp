#include "fishburn/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fb {

Distribution permuted(const Distribution& d, const std::vector<int>& order) {
    Distribution out;
    for (const auto& [key, count] : d) {
        std::vector<int> k(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) k[i] = key.at(static_cast<std::size_t>(order[i]));
        out[k] += count;
    }
    return out;
}

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

void for_each_permutation(int n, const std::function<void(const Perm&)>& f) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

bool avoids_pattern(const Perm& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (p[i] > p[i + 1]) continue;
        for (int j = i + 2; j < n; ++j)
            if (p[j] == p[i] - 1) return false;
    }
    return true;
}

PermStats perm_stats(const Perm& p) {
    const int n = static_cast<int>(p.size());
    PermStats st;
    std::vector<int> pos(static_cast<std::size_t>(n) + 2);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(p[i])] = i;
    for (int i = 0; i + 1 < n; ++i) st.des += p[i] > p[i + 1];
    for (int v = 1; v < n; ++v) st.iasc += pos[static_cast<std::size_t>(v + 1)] > pos[static_cast<std::size_t>(v)];
    int lo = n + 1, hi = 0;
    for (int v : p) {
        if (v < lo) lo = v, ++st.lmin;
        if (v > hi) hi = v, ++st.lmax;
    }
    lo = n + 1, hi = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (*it < lo) lo = *it, ++st.rmin;
        if (*it > hi) hi = *it, ++st.rmax;
    }
    return st;
}

Seq lehmer_code(const Perm& p) {
    if (!is_permutation(p)) throw std::invalid_argument("lehmer_code: not a permutation");
    Seq s(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) s[i] += p[j] > p[i];
    return s;
}

bool is_fishburn_matrix(const Matrix& m) {
    const std::size_t d = m.size();
    if (d == 0) return false;
    std::vector<bool> row(d), col(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (m[i].size() != d) return false;
        for (std::size_t j = 0; j < d; ++j) {
            if (m[i][j] < 0 || (j < i && m[i][j] != 0)) return false;
            if (m[i][j] > 0) row[i] = col[j] = true;
        }
    }
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; }) &&
           std::all_of(col.begin(), col.end(), [](bool b) { return b; });
}

namespace {

struct MatrixEnumerator {
    int d;
    Matrix m;
    const std::function<void(const Matrix&)>& f;

    void fill(int i, int j, int budget) {
        if (j == d) {
            if (std::all_of(m[i].begin(), m[i].end(), [](int v) { return v == 0; })) return;
            ++i;
            j = i;
            if (i == d) {
                if (budget != 0) return;
                for (int c = 0; c < d; ++c) {
                    bool nz = false;
                    for (int r = 0; r <= c; ++r) nz = nz || m[r][c] > 0;
                    if (!nz) return;
                }
                f(m);
                return;
            }
        }
        if (budget < d - i - (j > i ? 1 : 0)) return;
        for (int v = 0; v <= budget; ++v) {
            m[i][j] = v;
            fill(i, j + 1, budget - v);
        }
        m[i][j] = 0;
    }
};

}  // namespace

void for_each_fishburn_matrix(int n, const std::function<void(const Matrix&)>& f) {
    if (n < 1) return;
    for (int d = 1; d <= n; ++d) {
        MatrixEnumerator e{d, Matrix(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), 0)), f};
        e.fill(0, 0, n);
    }
}

MatrixStats matrix_stats(const Matrix& m) {
    if (!is_fishburn_matrix(m)) throw std::invalid_argument("matrix_stats: not a Fishburn matrix");
    const int d = static_cast<int>(m.size());
    MatrixStats st;
    for (int v : m[0]) st.rowsum1 += v;
    for (int i = 0; i < d; ++i) {
        st.tr += m[i][i] != 0;
        for (int j = 0; j < d; ++j) {
            if (m[i][j] == 0) continue;
            bool ne = true;
            // Weakly north, strictly east.
            for (int s = 0; s <= i && ne; ++s)
                for (int t = j + 1; t < d && ne; ++t)
                    if (m[s][t] != 0) ne = false;
            st.ne += ne;
        }
    }
    return st;
}

namespace {

Distribution inversion_distribution(int n, const std::vector<int>& which) {
    Distribution d;
    for_each_inversion_sequence(n, [&](const Seq& s) {
        const StatVector st = statistics(s);
        const int all[] = {st.asc, st.rep, st.zero, st.max, st.rmin};
        std::vector<int> key;
        for (int w : which) key.push_back(all[w]);
        ++d[key];
    });
    return d;
}

}  // namespace

bool check_conjecture_quintuple(int n) {
    const Distribution d = inversion_distribution(n, {0, 1, 2, 3, 4});
    return d == permuted(d, {0, 1, 2, 4, 3});
}

bool check_prop_syminv(int n) {
    const Distribution d = inversion_distribution(n, {0, 1, 2, 3, 4});
    return permuted(d, {0, 1, 2, 3}) == permuted(d, {1, 0, 4, 2});
}

}  // namespace fb
