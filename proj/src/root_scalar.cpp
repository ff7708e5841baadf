#include "colorlie/root_scalar.hpp"

#include "colorlie/errors.hpp"

namespace colorlie {

RootScalar RootScalar::torsion(const Rational& t) {
    Rational reduced = t;
    reduced.canonicalize();  // mpq_class(p, q) does not reduce on its own
    RootScalar s;
    s.torsion_ = fractional_part(reduced);
    return s;
}

RootScalar RootScalar::symbol(const std::string& name, const Rational& exponent) {
    if (name.empty()) throw ValidationError("free symbol name must be nonempty");
    Rational reduced = exponent;
    reduced.canonicalize();
    RootScalar s;
    if (reduced != 0) s.free_[name] = reduced;
    return s;
}

RootScalar RootScalar::minus_one() {
    return torsion(Rational(1, 2));
}

RootScalar operator*(const RootScalar& a, const RootScalar& b) {
    RootScalar out;
    out.torsion_ = fractional_part(a.torsion_ + b.torsion_);
    out.free_ = a.free_;
    for (const auto& [name, exp] : b.free_) {
        auto it = out.free_.find(name);
        if (it == out.free_.end()) {
            out.free_.emplace(name, exp);
        } else {
            it->second += exp;
            if (it->second == 0) out.free_.erase(it);
        }
    }
    return out;
}

RootScalar inverse(const RootScalar& a) {
    RootScalar out;
    out.torsion_ = fractional_part(-a.torsion_);
    for (const auto& [name, exp] : a.free_) out.free_.emplace(name, -exp);
    return out;
}

RootScalar pow(const RootScalar& a, const Integer& e) {
    if (e == 0) return RootScalar{};
    RootScalar out;
    out.torsion_ = fractional_part(a.torsion_ * Rational(e));
    for (const auto& [name, exp] : a.free_) out.free_.emplace(name, exp * Rational(e));
    return out;
}

RootScalar canonical_root(const RootScalar& a, const Integer& n) {
    if (n < 1) throw ValidationError("root index must be positive");
    RootScalar out;
    out.torsion_ = a.torsion_ / Rational(n);
    for (const auto& [name, exp] : a.free_) out.free_.emplace(name, exp / Rational(n));
    return out;
}

RootScalar solve_root_constraints(const Integer& r, const RootScalar& A,
                                  const Integer& n, const RootScalar& B) {
    if (r < 1 || n < 1) throw ValidationError("root indices must be positive");
    if (!(pow(A, n) == pow(B, r)))
        throw IncompatibleConstraints("pow(A,n) != pow(B,r): no joint root exists");

    // Free part: dividing A's exponents by r already satisfies the n-th power
    // constraint, since compatibility gives A.free * n == B.free * r.
    RootScalar x = canonical_root(A, r);

    // Torsion: candidates are (A.torsion + j)/r for j = 0..r-1; the n-th power
    // condition becomes the congruence n*j = r*B.t - n*A.t (mod r).
    Rational c_rat = Rational(r) * B.torsion_part() - Rational(n) * A.torsion_part();
    Integer c_floor = floor_of(c_rat);
    if (c_rat != Rational(c_floor))
        throw NoSolution("torsion congruence right side is not an integer");
    Integer c = ((c_floor % r) + r) % r;

    Integer u, v;
    Integer g = ext_gcd(n % r, r, u, v);  // gcd(n mod r, r) = gcd(n, r), and n*u = g (mod r)
    if (c % g != 0)
        throw NoSolution("torsion congruence n*j = c (mod r) is unsolvable");

    Integer rg = r / g;
    Integer j = (((c / g) * u) % rg + rg) % rg;  // smallest non-negative solution

    // A.torsion in [0,1) and j <= r-1 keep the new torsion inside [0,1).
    RootScalar out = RootScalar::torsion((A.torsion_part() + Rational(j)) / Rational(r));
    for (const auto& [name, exp] : x.free_part()) {
        out = out * RootScalar::symbol(name, exp);
    }
    return out;
}

std::optional<int> is_sign(const RootScalar& a) {
    if (!a.free_part().empty()) return std::nullopt;
    if (a.torsion_part() == 0) return 1;
    if (a.torsion_part() == Rational(1, 2)) return -1;
    return std::nullopt;
}

std::string to_string(const RootScalar& a) {
    std::string out = "e(" + format_fraction(a.torsion_part()) + ")";
    for (const auto& [name, exp] : a.free_part()) {
        out += "*" + name + "^(" + format_fraction(exp) + ")";
    }
    return out;
}

}  // namespace colorlie
