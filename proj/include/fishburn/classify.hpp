#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/seq.hpp"

namespace fb {

// Right-to-left minima: values X (strictly increasing) and their 0-based positions P.
struct Rmins {
    std::vector<int> X, P;
};
Rmins rmins(const Seq& s);

bool is_masc(const Seq& s, int k);  // position 0 counts as a Masc
std::vector<int> masc_positions(const Seq& s);

// Positions of the two rightmost occurrences of v; throws if v occurs fewer than twice.
std::pair<int, int> two_rightmost(const Seq& s, int v);

std::optional<int> sebr(const Seq& s);
std::optional<int> min_masc(const Seq& s);

struct SetStats {
    std::vector<int> rmin_values;
    std::vector<int> prm_positions;   // 1-based
    std::vector<int> masc_positions;  // 1-based
    std::optional<int> sebr, min_masc;
    bool rpos_zero_witness = false;   // Rmin_0 occurs at least twice
};
SetStats set_stats(const Seq& s);

enum class TLabel { Staircase, T1, T2, T3, T4, T51, T52, T53, T54 };
enum class DLabel { Staircase, D1, D2, D3, D4, D5 };
enum class MLabel { None, M51, M52, M53 };
enum class D5Label { None, D51, D52, D53 };

TLabel t_label(const Seq& s);
DLabel d_label(const Seq& s);
MLabel m_label(const Seq& s);
D5Label d5_label(const Seq& s);

bool in_P1(const Seq& s);  // last entry is a Masc
bool in_P2(const Seq& s);  // max(s)-1 occurs once
bool in_S3(const Seq& s);
bool in_S4(const Seq& s);
bool in_B(const Seq& s);
bool in_B1(const Seq& s);
bool in_C1(const Seq& s);
bool in_C2(const Seq& s);

struct SubsetLabel {
    TLabel t = TLabel::Staircase;
    DLabel d = DLabel::Staircase;
    MLabel m = MLabel::None;
    D5Label d5 = D5Label::None;
    bool S3 = false, S4 = false, P1 = false, P2 = false, B = false, B1 = false, C1 = false, C2 = false;
};

// Throws std::invalid_argument on non-ascent input.
SubsetLabel classify(const Seq& s);

std::string to_string(TLabel l);
std::string to_string(DLabel l);
std::string to_string(MLabel l);
std::string to_string(D5Label l);

}  // namespace fb
