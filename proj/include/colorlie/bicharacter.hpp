#pragma once

#include <vector>

#include "colorlie/abelian_group.hpp"
#include "colorlie/root_scalar.hpp"

namespace colorlie {

// A bimultiplicative map G x G -> k*, stored as the matrix of values on
// generator pairs and evaluated by bilinear extension of word exponents.
// Construction checks relation compatibility: for every relation r and every
// generator g_j, prod_i value(i,j)^(r_i) and prod_i value(j,i)^(r_i) must be
// the identity, so the map factors through G.
class Pairing {
public:
    Pairing(GroupPtr group, std::vector<std::vector<RootScalar>> values);

    // Skips relation validation; for diagnostics and adversarial tests only.
    static Pairing unchecked(GroupPtr group, std::vector<std::vector<RootScalar>> values);

    const GroupPtr& group() const { return group_; }
    std::size_t size() const { return values_.size(); }
    const RootScalar& value(std::size_t i, std::size_t j) const { return values_[i][j]; }
    const std::vector<std::vector<RootScalar>>& values() const { return values_; }

    RootScalar eval(const GroupElement& a, const GroupElement& b) const;

    bool is_symmetric() const;  // value(i,j)*value(j,i) == 1 for all pairs

    bool operator==(const Pairing& other) const {
        return group_ == other.group_ && values_ == other.values_;
    }

private:
    struct unchecked_t {};
    Pairing(GroupPtr group, std::vector<std::vector<RootScalar>> values, unchecked_t);
    void validate() const;

    GroupPtr group_;
    std::vector<std::vector<RootScalar>> values_;
};

struct Bicharacter : Pairing {
    using Pairing::Pairing;
    explicit Bicharacter(Pairing p) : Pairing(std::move(p)) {}
};

struct Cocycle : Pairing {
    using Pairing::Pairing;
    explicit Cocycle(Pairing p) : Pairing(std::move(p)) {}
};

// chi(g,g) as a sign; NotASign when the diagonal value is not +-1, which
// means chi is not a valid symmetric commutation factor.
int parity(const Bicharacter& chi, const GroupElement& g);

// The super sign: -1 exactly on odd x odd generator pairs.
Bicharacter chi0(const Bicharacter& chi);

// (g,h) -> sigma(g,h) * sigma(h,g)^-1; always an alternating bicharacter.
Bicharacter antisymmetrize(const Cocycle& sigma);

// chi_sigma = chi * sigma / sigma^T, the commutation factor of the twisted algebra.
Bicharacter twist_character(const Bicharacter& chi, const Cocycle& sigma);

// Symmetric with trivial diagonal on generators: chi(g,g) = 1 for every g in G.
bool is_alternating(const Bicharacter& chi);

Bicharacter pointwise_product(const Bicharacter& a, const Bicharacter& b);
Bicharacter pointwise_inverse(const Bicharacter& a);

}  // namespace colorlie
