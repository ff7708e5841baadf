#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/bicharacter.hpp"
#include "colorlie/cyclotomic.hpp"
#include "colorlie/report.hpp"

namespace colorlie {

// A vector of the algebra: sparse combination of basis names, zeros erased.
using AlgebraElement = std::map<std::string, CycloNumber>;

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const CycloNumber& c);
bool is_zero(const AlgebraElement& a);
std::string to_string(const AlgebraElement& a);

struct GradedBasis {
    std::vector<std::string> names;
    std::vector<GroupElement> grades;  // parallel to names

    std::size_t index_of(const std::string& name) const;  // UnknownBasisName
};

// A G-graded color Lie algebra over Q(zeta_N): basis with grades, a symmetric
// commutation factor, and sparse structure constants.  Construction checks
// names, grades and grading compatibility of every bracket; the color axioms
// themselves are verified by the check_* passes so that deliberately broken
// algebras can still be built and diagnosed.
class ColorLieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, AlgebraElement>;

    ColorLieAlgebra(GradedBasis basis, Bicharacter chi, unsigned long level,
                    BracketTable brackets);

    const GradedBasis& basis() const { return basis_; }
    const Bicharacter& chi() const { return chi_; }
    unsigned long level() const { return level_; }
    const BracketTable& brackets() const { return brackets_; }

    std::size_t dimension() const { return basis_.names.size(); }

    AlgebraElement bracket_basis(std::size_t i, std::size_t j) const;
    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

    // Copy with one structure constant replaced; for mutation tests and demos.
    ColorLieAlgebra with_bracket(std::size_t i, std::size_t j, AlgebraElement value) const;

private:
    GradedBasis basis_;
    Bicharacter chi_;
    unsigned long level_;
    BracketTable brackets_;
};

// [x,y] = -chi(g,h) [y,x] for x in L_g, y in L_h, on every ordered basis pair.
CheckReport check_antisymmetry(const ColorLieAlgebra& A);

// chi(k,g) [x,[y,z]] + chi(g,h) [y,[z,x]] + chi(h,k) [z,[x,y]] = 0 on every
// ordered basis triple with grades (g,h,k).
CheckReport check_color_jacobi(const ColorLieAlgebra& A);

struct SuperReport {
    bool commutation_factor_is_super = false;  // chi == chi0(chi)
    CheckReport antisymmetry;
    CheckReport jacobi;

    bool pass() const {
        return commutation_factor_is_super && antisymmetry.pass() && jacobi.pass();
    }
};

// The twisted algebra is super iff its commutation factor is the super sign
// and the color axioms (which then are the super-Lie axioms) hold.
SuperReport check_super(const ColorLieAlgebra& A);

// Structure constants scaled by sigma on the grade pairs, commutation factor
// replaced by chi_sigma; the level grows to fit sigma's roots of unity.
ColorLieAlgebra twist_algebra(const ColorLieAlgebra& A, const Cocycle& sigma);

// gl of a graded vector space: basis E(i,j) with grade(v_i) * grade(v_j)^-1,
// bracket [a, b] = ab - chi(grade a, grade b) ba.
ColorLieAlgebra gl_chi(const std::vector<GroupElement>& vector_grades, const Bicharacter& chi,
                       unsigned long level);

}  // namespace colorlie
