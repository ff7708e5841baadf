#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "colorlie/bicharacter.hpp"
#include "colorlie/report.hpp"

namespace colorlie {

// Brute-force ground truth on small finite groups: every law the library
// claims on generator pairs is replayed here on all element pairs/triples.

// sigma(a, bc) sigma(b, c) == sigma(a, b) sigma(ab, c) on all |G|^3 triples.
CheckReport check_cocycle_identity(const Cocycle& sigma);

// m(gh, k) == m(g, k) m(h, k) and m(g, hk) == m(g, h) m(g, k) on all triples.
CheckReport exhaustive_bimultiplicativity(const Pairing& m);

// Same sweeps over a raw element-indexed value table (enumeration order),
// for maps that are not bilinear extensions of generator values.
CheckReport check_cocycle_identity_table(const GroupPtr& group,
                                         const std::vector<std::vector<RootScalar>>& table);
CheckReport exhaustive_bimultiplicativity_table(
    const GroupPtr& group, const std::vector<std::vector<RootScalar>>& table);

struct CoboundaryResult {
    bool coboundary = false;
    // When coboundary: b per element in enumeration order, with
    // b(g) b(h) b(gh)^-1 == beta(g, h) verified on all pairs.
    std::vector<RootScalar> witness;
    // When not: a generator pair with beta(i,j) != beta(j,i).
    std::optional<std::pair<std::size_t, std::size_t>> asymmetric_pair;
};

// Decides whether beta is a coboundary.  Over a divisible value group a
// bicharacter splits exactly when it is symmetric as a function, and in that
// case a witness is constructed and checked exhaustively.
CoboundaryResult is_coboundary(const Bicharacter& beta);

// Independent bounded search: tries every assignment of torsion values with
// denominator dividing `denominator_bound` to the generators, extends along
// b(gh) = b(g) b(h) beta(g,h)^-1, and keeps the first b that verifies on all
// pairs.  nullopt when no witness exists within the bound.
std::optional<std::vector<RootScalar>> coboundary_search(const Bicharacter& beta,
                                                         const Integer& denominator_bound);

struct CensusClass {
    Integer size;
    std::vector<std::vector<RootScalar>> representative;  // first found, enumeration order
};

struct CensusTable {
    Integer num_bicharacters;
    std::vector<CensusClass> classes;
};

// Enumerates every relation-compatible bicharacter with values in the N-th
// roots of unity and partitions them into cohomology classes (beta ~ beta'
// iff beta * beta'^-1 is a coboundary, i.e. iff they share an alternating
// part).  Values and representatives are with respect to the invariant-factor
// generators of the group.
CensusTable bicharacter_census(const GroupPtr& group, const Integer& value_level);

}  // namespace colorlie
