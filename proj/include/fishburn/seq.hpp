#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace fb {

// Entries are stored 0-indexed; s[k] is the k+1-st entry in 1-based notation.
using Seq = std::vector<int>;

// Fishburn numbers |A_n| for n = 0..12.
inline constexpr std::uint64_t kFishburn[] = {1,     1,      2,       5,        15,        53,      217,
                                              1014,  5335,   31240,   201608,   1422074,   10886503};

bool is_ascent_sequence(const Seq& s);
bool is_inversion_sequence(const Seq& s);

// Lexicographic order. The callback receives a reference that is only valid during the call.
void for_each_ascent_sequence(int n, const std::function<void(const Seq&)>& f);
std::vector<Seq> ascent_sequences(int n);
void for_each_inversion_sequence(int n, const std::function<void(const Seq&)>& f);
std::vector<Seq> inversion_sequences(int n);

int asc(const Seq& s);
int asc_prefix(const Seq& s, int len);  // ascents among s[0..len-1]
int rep(const Seq& s);
int zero(const Seq& s);
int max_stat(const Seq& s);  // #{k : s[k] == k}
int ealm(const Seq& s);      // ascent sequences only
int rmin(const Seq& s);
int rpos(const Seq& s);      // ascent sequences only

struct StatVector {
    int asc = 0, rep = 0, zero = 0, max = 0, rmin = 0;
    std::optional<int> ealm, rpos;  // absent for inversion sequences that are not ascent sequences
    bool operator==(const StatVector&) const = default;
};

// Throws std::invalid_argument unless s is an inversion sequence.
StatVector statistics(const Seq& s);

// The septuple (asc, rep, zero, max, ealm, rmin, rpos) of an ascent sequence.
using Septuple = std::array<int, 7>;
Septuple septuple(const Seq& s);

bool is_staircase(const Seq& s);

}  // namespace fb
