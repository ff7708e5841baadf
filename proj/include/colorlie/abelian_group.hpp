#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/numeric.hpp"

namespace colorlie {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);

// U*M*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., entries >= 0,
// zeros last.  Vinv is maintained alongside V; the factorization is re-checked
// by exact multiplication before returning.
struct SmithResult {
    IntMatrix U, D, V, Vinv;
};
SmithResult smith_normal_form(const IntMatrix& M);

// Row-style Hermite normal form: T*M = H with T unimodular, H in row echelon
// form with positive pivots, entries above each pivot reduced into [0, pivot),
// zero rows last.  rank = number of nonzero rows.
struct HermiteResult {
    IntMatrix H, T;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row
};
HermiteResult hermite_normal_form(const IntMatrix& M);

class GroupPresentation;
using GroupPtr = std::shared_ptr<const GroupPresentation>;

// An element is a word in the presentation's generators; equality and torsion
// reduction happen in the cached Smith-normal-form coordinates.
class GroupElement {
public:
    const GroupPtr& presentation() const { return pres_; }
    const std::vector<Integer>& word() const { return word_; }
    const std::vector<Integer>& canonical() const { return canon_; }
    bool is_identity() const;
    bool operator==(const GroupElement& other) const;  // PresentationMismatch across groups

private:
    friend class GroupPresentation;
    GroupElement(GroupPtr pres, std::vector<Integer> word, std::vector<Integer> canon)
        : pres_(std::move(pres)), word_(std::move(word)), canon_(std::move(canon)) {}

    GroupPtr pres_;
    std::vector<Integer> word_;
    std::vector<Integer> canon_;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement pow(const GroupElement& a, const Integer& e);
std::optional<Integer> order_of(const GroupElement& a);  // nullopt when infinite

// Finitely generated abelian group given by integer relation vectors; each
// relation r means prod_i g_i^(r_i) = e.  Immutable; the Smith decomposition
// is computed once at construction.
class GroupPresentation : public std::enable_shared_from_this<GroupPresentation> {
public:
    static GroupPtr create(std::size_t num_generators, std::vector<std::vector<Integer>> relations,
                           std::vector<std::string> names = {});
    // Diagonal presentation Z/d1 x Z/d2 x ...; a zero entry is a free factor.
    static GroupPtr cyclic_product(const std::vector<Integer>& orders);

    std::size_t num_generators() const { return num_generators_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    const std::vector<std::vector<Integer>>& relations() const { return relations_; }

    std::size_t rank() const { return rank_; }
    const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }
    // One modulus per canonical coordinate: 0 = free, 1 = trivial, d = torsion.
    const std::vector<Integer>& column_moduli() const { return moduli_; }
    const IntMatrix& basis_change() const { return V_; }
    const IntMatrix& basis_change_inverse() const { return Vinv_; }

    std::optional<Integer> order() const;  // nullopt when rank > 0
    Integer exponent() const;              // lcm of invariant factors; InfiniteGroup if rank > 0

    GroupElement element(std::vector<Integer> word) const;
    GroupElement identity() const;
    GroupElement generator(std::size_t i) const;
    GroupElement from_canonical(const std::vector<Integer>& coords) const;

    std::vector<Integer> canonicalize(const std::vector<Integer>& word) const;

    // Every element exactly once; InfiniteGroup when rank > 0.
    std::vector<GroupElement> enumerate() const;

private:
    GroupPresentation() = default;

    std::size_t num_generators_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<Integer>> relations_;

    std::size_t rank_ = 0;
    std::vector<Integer> invariant_factors_;
    std::vector<Integer> moduli_;
    IntMatrix V_, Vinv_;
};

// Minimal n >= 1 with t^n in <K>, together with one expression of t^n as a
// word over K (exponent per K entry).  nullopt when no positive power of t
// lies in <K>.  Solved by Hermite-normal-form back-substitution in canonical
// coordinates.
struct CyclicIntersection {
    Integer n;
    std::vector<Integer> expression;
};
std::optional<CyclicIntersection> cyclic_intersection(const GroupElement& t,
                                                      const std::vector<GroupElement>& K);

std::string to_string(const GroupElement& a);

}  // namespace colorlie
