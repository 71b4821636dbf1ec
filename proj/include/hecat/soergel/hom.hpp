#pragma once

#include "hecat/hecke/hecke.hpp"
#include "hecat/soergel/bimodule.hpp"

namespace hecat {

struct HomSpace {
    int degree = 0;
    int cutoff = 0;
    int dimension = 0;
    std::vector<BimoduleMorphism> basis;
};

// Largest grading degree a matrix entry of a degree-d map M -> N can need.
int hom_required_cutoff(const GradedBimodule& M, const GradedBimodule& N, int degree);

// Degree-d bimodule maps M -> N whose entries have grading degree <= cutoff,
// by solving the intertwining equations degree by degree over Q. Throws
// CutoffTooSmall when the cutoff would truncate entries; the dimension is
// recomputed at cutoff + 2 and + 4 and asserted equal.
HomSpace hom_space(BimodulePtr M, BimodulePtr N, int degree, int cutoff);
// Same solve without the cutoff checks (cutoff = hom_required_cutoff).
std::vector<BimoduleMorphism> hom_basis(BimodulePtr M, BimodulePtr N, int degree);

// Character of BS(word): product of the KL generators C_s = v(T_e + T_s), v-form.
HeckeElem hecke_character(std::shared_ptr<const HeckeAlgebra> alg, const std::vector<int>& word);
// Graded rank read off a character: T_w -> q^{l(w)}, then v -> v^{-1}
// (shifts <1> lower basis degrees but multiply classes by v).
LaurentPoly character_rank(const HeckeElem& h);

}  // namespace hecat
