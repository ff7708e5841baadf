#include "colorlie/algebra.hpp"

#include <set>

#include "colorlie/errors.hpp"

namespace colorlie {

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [name, coeff] : b) {
        auto it = out.find(name);
        if (it == out.end()) {
            if (!coeff.is_zero()) out.emplace(name, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const CycloNumber& c) {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [name, coeff] : a) {
        CycloNumber scaled = coeff * c;
        if (!scaled.is_zero()) out.emplace(name, scaled);
    }
    return out;
}

bool is_zero(const AlgebraElement& a) {
    for (const auto& [name, coeff] : a)
        if (!coeff.is_zero()) return false;
    return true;
}

std::string to_string(const AlgebraElement& a) {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [name, coeff] : a) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(coeff) + ")*" + name;
    }
    return out;
}

std::size_t GradedBasis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw UnknownBasisName("no basis vector named " + name);
}

ColorLieAlgebra::ColorLieAlgebra(GradedBasis basis, Bicharacter chi, unsigned long level,
                                 BracketTable brackets)
    : basis_(std::move(basis)), chi_(std::move(chi)), level_(level), brackets_(std::move(brackets)) {
    if (!chi_.is_symmetric())
        throw ValidationError("a commutation factor must be symmetric");
    std::set<std::string> seen;
    for (const auto& name : basis_.names)
        if (!seen.insert(name).second) throw ValidationError("duplicate basis name " + name);
    if (basis_.grades.size() != basis_.names.size())
        throw ValidationError("every basis vector needs a grade");
    for (const auto& grade : basis_.grades)
        if (grade.presentation() != chi_.group())
            throw PresentationMismatch("basis grade from a different group");

    const std::size_t dim = basis_.names.size();
    for (const auto& [key, value] : brackets_) {
        if (key.first >= dim || key.second >= dim)
            throw ValidationError("bracket references a basis index out of range");
        GroupElement expected = basis_.grades[key.first] * basis_.grades[key.second];
        for (const auto& [name, coeff] : value) {
            if (coeff.is_zero()) continue;
            std::size_t target = basis_.index_of(name);
            if (!(basis_.grades[target] == expected))
                throw ValidationError("bracket [" + basis_.names[key.first] + "," +
                                      basis_.names[key.second] + "] is not supported on grade " +
                                      to_string(expected));
        }
    }
}

AlgebraElement ColorLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return {};
    return it->second;
}

AlgebraElement ColorLieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [xn, xc] : x) {
        std::size_t i = basis_.index_of(xn);
        for (const auto& [yn, yc] : y) {
            std::size_t j = basis_.index_of(yn);
            out = add(out, scale(bracket_basis(i, j), xc * yc));
        }
    }
    return out;
}

ColorLieAlgebra ColorLieAlgebra::with_bracket(std::size_t i, std::size_t j,
                                              AlgebraElement value) const {
    BracketTable table = brackets_;
    if (is_zero(value))
        table.erase({i, j});
    else
        table[{i, j}] = std::move(value);
    return ColorLieAlgebra(basis_, chi_, level_, std::move(table));
}

CheckReport check_antisymmetry(const ColorLieAlgebra& A) {
    CheckReport report;
    report.name = "color_antisymmetry";
    const std::size_t dim = A.dimension();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            CycloNumber factor =
                embed_scalar(A.chi().eval(A.basis().grades[i], A.basis().grades[j]), A.level());
            AlgebraElement sum =
                add(A.bracket_basis(i, j), scale(A.bracket_basis(j, i), factor));
            bool ok = is_zero(sum);
            report.count(ok, {"[" + A.basis().names[i] + "," + A.basis().names[j] + "]",
                              to_string(A.bracket_basis(i, j)),
                              to_string(scale(A.bracket_basis(j, i), -factor)), ok});
        }
    return report;
}

CheckReport check_color_jacobi(const ColorLieAlgebra& A) {
    CheckReport report;
    report.name = "color_jacobi";
    const std::size_t dim = A.dimension();
    const auto& grades = A.basis().grades;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c) {
                CycloNumber chi_kg = embed_scalar(A.chi().eval(grades[c], grades[a]), A.level());
                CycloNumber chi_gh = embed_scalar(A.chi().eval(grades[a], grades[b]), A.level());
                CycloNumber chi_hk = embed_scalar(A.chi().eval(grades[b], grades[c]), A.level());
                AlgebraElement sum = scale(A.bracket({{A.basis().names[a], CycloNumber::from_rational(Rational(1), A.level())}},
                                                     A.bracket_basis(b, c)),
                                           chi_kg);
                sum = add(sum, scale(A.bracket({{A.basis().names[b],
                                                 CycloNumber::from_rational(Rational(1), A.level())}},
                                               A.bracket_basis(c, a)),
                                     chi_gh));
                sum = add(sum, scale(A.bracket({{A.basis().names[c],
                                                 CycloNumber::from_rational(Rational(1), A.level())}},
                                               A.bracket_basis(a, b)),
                                     chi_hk));
                bool ok = is_zero(sum);
                report.count(ok, {A.basis().names[a] + "," + A.basis().names[b] + "," +
                                      A.basis().names[c],
                                  to_string(sum), "0", ok});
            }
    return report;
}

SuperReport check_super(const ColorLieAlgebra& A) {
    SuperReport report;
    report.commutation_factor_is_super = A.chi() == chi0(A.chi());
    report.antisymmetry = check_antisymmetry(A);
    report.jacobi = check_color_jacobi(A);
    return report;
}

ColorLieAlgebra twist_algebra(const ColorLieAlgebra& A, const Cocycle& sigma) {
    if (sigma.group() != A.chi().group())
        throw PresentationMismatch("twisting an algebra by a cocycle on a different group");

    // Scaling factors on the occurring grade pairs must be roots of unity;
    // the output level grows to fit them.
    std::map<std::pair<std::size_t, std::size_t>, RootScalar> factors;
    Integer level(A.level());
    for (const auto& [key, value] : A.brackets()) {
        RootScalar factor =
            sigma.eval(A.basis().grades[key.first], A.basis().grades[key.second]);
        if (!factor.free_part().empty())
            throw NotARootOfUnity("cocycle value " + to_string(factor) + " on the grades of [" +
                                  A.basis().names[key.first] + "," + A.basis().names[key.second] +
                                  "] cannot scale structure constants");
        level = lcm(level, factor.torsion_part().get_den());
        factors.emplace(key, std::move(factor));
    }
    unsigned long new_level = level.get_ui();

    ColorLieAlgebra::BracketTable table;
    for (const auto& [key, value] : A.brackets()) {
        AlgebraElement lifted;
        for (const auto& [name, coeff] : value)
            lifted.emplace(name, coeff.lifted_to(new_level));
        table[key] = scale(lifted, embed_scalar(factors.at(key), new_level));
    }
    return ColorLieAlgebra(A.basis(), twist_character(A.chi(), sigma), new_level,
                           std::move(table));
}

ColorLieAlgebra gl_chi(const std::vector<GroupElement>& vector_grades, const Bicharacter& chi,
                       unsigned long level) {
    if (!chi.is_symmetric()) throw ValidationError("gl_chi needs a symmetric commutation factor");
    const std::size_t n = vector_grades.size();
    if (n == 0) throw ValidationError("gl_chi needs at least one graded vector");

    GradedBasis basis;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis.names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
            basis.grades.push_back(vector_grades[i] * inverse(vector_grades[j]));
            slots.emplace_back(i, j);
        }

    // [E_ij, E_kl] = d_jk E_il - chi(grade_ij, grade_kl) d_li E_kj.
    ColorLieAlgebra::BracketTable table;
    for (std::size_t a = 0; a < slots.size(); ++a) {
        const auto [i, j] = slots[a];
        for (std::size_t b = 0; b < slots.size(); ++b) {
            const auto [k, l] = slots[b];
            AlgebraElement value;
            if (j == k) {
                std::size_t target = i * n + l;
                value = add(value, {{basis.names[target],
                                     CycloNumber::from_rational(Rational(1), level)}});
            }
            if (l == i) {
                CycloNumber factor = embed_scalar(chi.eval(basis.grades[a], basis.grades[b]), level);
                std::size_t target = k * n + j;
                value = add(value, scale({{basis.names[target],
                                           CycloNumber::from_rational(Rational(1), level)}},
                                          -factor));
            }
            if (!is_zero(value)) table[{a, b}] = std::move(value);
        }
    }
    return ColorLieAlgebra(std::move(basis), chi, level, std::move(table));
}

}  // namespace colorlie
