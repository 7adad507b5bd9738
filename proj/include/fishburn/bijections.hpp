#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/classify.hpp"
#include "fishburn/seq.hpp"

namespace fb {

// Raised when a map is applied outside its domain or a rule's preconditions fail.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Rpos side (T-sets).
std::pair<int, Seq> f2(const Seq& s);
Seq f2_inv(int i, const Seq& t);
Seq phi1(const Seq& s);
Seq phi1_inv(const Seq& t);
Seq f3(const Seq& s);
Seq f3_inv(const Seq& t);
Seq f4(const Seq& s);
Seq f4_inv(const Seq& t);
Seq f51(const Seq& s);
Seq f51_inv(const Seq& t);
Seq f52(const Seq& s);
Seq f52_inv(const Seq& t);
Seq g(const Seq& s);
Seq g_inv(const Seq& t);

// Codomain predicates of f51 and f52.
bool in_f51_image(const Seq& t);
bool in_f52_image(const Seq& t);

// Substitution rules. `i` is the rmin index of x_i, `m` the Masc value.
// A non-null trace receives the scenario number of each substitution, in order
// (R2's substitution (4) is recorded as 40 + the scenario applied to the run head).
// A non-negative max_steps stops after that many substitutions.
Seq substitute_R1(const Seq& s, int i, int m, std::vector<int>* trace = nullptr, int max_steps = -1);
Seq substitute_R2(const Seq& s, int i, int m, std::vector<int>* trace = nullptr, int max_steps = -1);
// Same rules addressed by values x_i and x_{i-1}.
Seq rule_R1(Seq s, int xi, int xprev, int m, std::vector<int>* trace = nullptr, int max_steps = -1);
Seq rule_R2(Seq s, int xi, int xprev, int m, std::vector<int>* trace = nullptr, int max_steps = -1);

// Insertion rules.
Seq insert_R3(const Seq& s, int m);
Seq insert_R4(const Seq& s, int m);

// g53: {rpos != 0} -> B1, one entry longer.
int g53_case(const Seq& s);
Seq g53(const Seq& s, std::vector<int>* trace = nullptr);
int g53_inv_case(const Seq& t);
Seq g53_inv(const Seq& t);

Seq f53(const Seq& s);
Seq f53_inv(const Seq& t);

// f54: T54 -> B - B1.
int f54_case(const Seq& s);
Seq f54(const Seq& s);
Seq f54_inv(const Seq& t);

// f5: T5 -> (T3 u T4 u T5) with rpos != 0.
Seq f5(const Seq& s);
Seq f5_inv(const Seq& t);

// Ealm side (D-sets).
std::pair<int, Seq> h2(const Seq& s);
Seq h2_inv(int i, const Seq& t);
Seq phi2(const Seq& s);
Seq phi2_inv(const Seq& t);
Seq h3(const Seq& s);
Seq h3_inv(const Seq& t);
Seq h4(const Seq& s);
Seq h4_inv(const Seq& t);
Seq h5(const Seq& s);
Seq h5_inv(const Seq& t);

// The master bijection on A_n and its inverse.
Seq Phi(const Seq& s);
Seq Phi_inv(const Seq& t);

// Drops memoized values of Phi, Phi_inv, f54 and f54_inv held by the calling thread.
void clear_caches();

}  // namespace fb
