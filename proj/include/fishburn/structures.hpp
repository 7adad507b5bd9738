#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fishburn/seq.hpp"

namespace fb {

// Multiset of statistic tuples.
using Distribution = std::map<std::vector<int>, std::uint64_t>;

// Reorders every tuple: the k-th component of the result is the order[k]-th of the input.
Distribution permuted(const Distribution& d, const std::vector<int>& order);

// One-line notation over 1..n.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
// Lexicographic order.
void for_each_permutation(int n, const std::function<void(const Perm&)>& f);
// No i, j > i+1 with p[i] < p[i+1] and p[j] = p[i] - 1.
bool avoids_pattern(const Perm& p);

struct PermStats {
    int des = 0, iasc = 0, lmin = 0, lmax = 0, rmin = 0, rmax = 0;
};
PermStats perm_stats(const Perm& p);
Seq lehmer_code(const Perm& p);

// Upper-triangular, no zero row or column.
using Matrix = std::vector<std::vector<int>>;

bool is_fishburn_matrix(const Matrix& m);
// Matrices with entry sum n, ordered by dimension then row-major entries.
void for_each_fishburn_matrix(int n, const std::function<void(const Matrix&)>& f);

struct MatrixStats {
    int rowsum1 = 0, ne = 0, tr = 0;
};
MatrixStats matrix_stats(const Matrix& m);

// (asc,rep,zero,max,rmin) ~ (asc,rep,zero,rmin,max) on inversion sequences of length n.
bool check_conjecture_quintuple(int n);
// (asc,rep,zero,max) ~ (rep,asc,rmin,zero) on inversion sequences of length n.
bool check_prop_syminv(int n);

}  // namespace fb
