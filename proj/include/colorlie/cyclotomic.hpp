#pragma once

#include <vector>

#include "colorlie/numeric.hpp"
#include "colorlie/root_scalar.hpp"

namespace colorlie {

unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors_of(unsigned long n);

// Coefficients of the N-th cyclotomic polynomial, low degree first.
// Computed by exact division of x^N - 1 by the product of the proper Phi_d.
std::vector<Integer> cyclotomic_polynomial(unsigned long N);

// An element of Q(zeta_N): a polynomial in zeta_N reduced modulo Phi_N.
// Binary operations on mismatched levels lift both operands to the lcm.
class CycloNumber {
public:
    explicit CycloNumber(unsigned long level = 1);  // zero
    static CycloNumber from_rational(const Rational& value, unsigned long level = 1);
    static CycloNumber zeta(unsigned long level);
    static CycloNumber zeta_power(unsigned long level, const Integer& k);

    unsigned long level() const { return level_; }
    // Length euler_phi(level), low degree first.
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    CycloNumber lifted_to(unsigned long new_level) const;  // level must divide new_level
    CycloNumber inverse() const;                           // DivisionByZero on zero
    CycloNumber pow(const Integer& e) const;

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a);
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

private:
    unsigned long level_;
    std::vector<Rational> coeffs_;

    static CycloNumber from_poly(unsigned long level, std::vector<Rational> poly);
};

// zeta_N^(p*N/q) for a pure torsion scalar p/q with q | N.
// Throws NotARootOfUnity on free parts, LevelMismatch when q does not divide N.
CycloNumber embed_scalar(const RootScalar& s, unsigned long level);

std::string to_string(const CycloNumber& a);

}  // namespace colorlie
