#pragma once

#include <map>
#include <optional>
#include <string>

#include "colorlie/numeric.hpp"

namespace colorlie {

// Exact model of the multiplicative group of an algebraically closed field of
// characteristic zero, as the divisible abelian group (Q mod 1) + Q^(symbols),
// written multiplicatively.  A torsion part t stands for e^{2*pi*i*t}; a free
// entry {"q": 3/2} stands for the formal power q^{3/2}.  Every root-of-unity
// and formal-parameter value of a bicharacter or cocycle lives here, and the
// group is closed under n-th roots, which is all the construction ever needs.
class RootScalar {
public:
    RootScalar() = default;  // identity

    static RootScalar torsion(const Rational& t);  // reduces t mod 1
    static RootScalar symbol(const std::string& name, const Rational& exponent = Rational(1));
    static RootScalar minus_one();

    const Rational& torsion_part() const { return torsion_; }
    const std::map<std::string, Rational>& free_part() const { return free_; }

    bool is_identity() const { return torsion_ == 0 && free_.empty(); }

    bool operator==(const RootScalar& other) const {
        return torsion_ == other.torsion_ && free_ == other.free_;
    }

private:
    Rational torsion_;                     // in [0, 1)
    std::map<std::string, Rational> free_; // no zero exponents

    friend RootScalar operator*(const RootScalar&, const RootScalar&);
    friend RootScalar inverse(const RootScalar&);
    friend RootScalar pow(const RootScalar&, const Integer&);
    friend RootScalar canonical_root(const RootScalar&, const Integer&);
};

RootScalar operator*(const RootScalar& a, const RootScalar& b);
RootScalar inverse(const RootScalar& a);
RootScalar pow(const RootScalar& a, const Integer& e);

// The fixed radical: torsion divided by n (landing in [0, 1/n)), free
// exponents divided by n.  pow(canonical_root(a, n), n) == a exactly.
RootScalar canonical_root(const RootScalar& a, const Integer& n);

// x with pow(x, r) == A and pow(x, n) == B.  Throws IncompatibleConstraints
// when pow(A, n) != pow(B, r), NoSolution when the torsion congruence
// n*j = r*B.torsion - n*A.torsion (mod r) has no integer solution.
RootScalar solve_root_constraints(const Integer& r, const RootScalar& A,
                                  const Integer& n, const RootScalar& B);

// +1 for the identity, -1 for torsion 1/2 with no free part, nullopt otherwise.
std::optional<int> is_sign(const RootScalar& a);

std::string to_string(const RootScalar& a);

}  // namespace colorlie
