#pragma once

#include "viracomb/qseries.hpp"

#include <string>
#include <vector>

namespace viracomb {

struct CharacterLabel {
    int p = 0;
    int pp = 0;
    int r = 0;
    int s = 0;
    friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
};

void validate(const CharacterLabel& label);

// Alternating-sum formula divided by (q)_inf; validates the label.
QSeries bosonic_character(const CharacterLabel& label, int order);
// Same formula with no label checks (used for the p <-> p' swapped side).
QSeries bosonic_formula(int p, int pp, int r, int s, int order);

// Sum over occupation vectors for chi_{1,2} at t = T/2.
QSeries fermionic_character_12(int T, int order);
QSeries fermionic_character_12_serial(int T, int order);

// Label of the character equal to the half-lattice generating function.
CharacterLabel theorem1_label(int T, int aHat, int bHat);

// Label (t, 2t+1, 1, 2) or (t+1/2, 2t, 1, 2) for the fermionic sum.
CharacterLabel fermionic_label(int T);

struct IdentityCheck {
    std::string identity;
    bool pass;
    int power = -1;  // first mismatch when failing
    Int left = 0;
    Int right = 0;
};

// r,s -> p-r,p'-s and p,p',r,s -> p',p,s,r.
std::vector<IdentityCheck> verify_symmetries(const CharacterLabel& label, int order);

// All valid labels with p' <= max_pp.
std::vector<CharacterLabel> labels_up_to(int max_pp);

// Closed-form fermionic examples.
QSeries closed_form_2_5(int order);  // sum q^{n^2}/(q)_n
QSeries closed_form_3_7(int order);  // sum q^{(n1+n2)^2+2 n2^2}/((q)_{n1} (q)_{2 n2})
QSeries closed_form_3_4(int order);  // sum q^{2n^2+2n}/(q)_{2n+1}
QSeries closed_form_4_7(int order);  // sum q^{(n1+2n2)^2+2n2^2}/(q)_{2n1+4n2} [n1+2n2 choose n1]

}  // namespace viracomb
