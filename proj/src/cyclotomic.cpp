#include "colorlie/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "colorlie/errors.hpp"

namespace colorlie {

namespace {

using Poly = std::vector<Rational>;  // dense, low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& x : out) x *= c;
    return out;
}

// Division with remainder over Q: a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);  // the leading term cancels, so a strictly shrinks
    }
    trim(q);
    return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& m) { return divmod(a, m).second; }

const Poly& phi_as_rational(unsigned long N) {
    static std::map<unsigned long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it == cache.end()) {
        auto ints = cyclotomic_polynomial(N);
        Poly p(ints.size());
        for (std::size_t i = 0; i < ints.size(); ++i) p[i] = Rational(ints[i]);
        it = cache.emplace(N, std::move(p)).first;
    }
    return it->second;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<Integer> cyclotomic_polynomial(unsigned long N) {
    static std::map<unsigned long, std::vector<Integer>> cache;
    static std::mutex mtx;
    if (N < 1) throw ValidationError("cyclotomic level must be positive");
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }

    // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
    Poly numer(N + 1, Rational(0));
    numer[0] = Rational(-1);
    numer[N] = Rational(1);
    Poly denom{Rational(1)};
    for (unsigned long d : divisors_of(N)) {
        if (d == N) continue;
        auto phi_d = cyclotomic_polynomial(d);
        Poly p(phi_d.size());
        for (std::size_t i = 0; i < phi_d.size(); ++i) p[i] = Rational(phi_d[i]);
        denom = mul(denom, p);
    }
    auto [q, r] = divmod(numer, denom);
    if (!r.empty()) throw ValidationError("cyclotomic division left a remainder");

    std::vector<Integer> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw ValidationError("cyclotomic polynomial not integral");
        out[i] = q[i].get_num();
    }
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache.emplace(N, out);
    }
    return out;
}

CycloNumber::CycloNumber(unsigned long level) : level_(level), coeffs_(euler_phi(level), Rational(0)) {
    if (level < 1) throw ValidationError("cyclotomic level must be positive");
}

CycloNumber CycloNumber::from_poly(unsigned long level, std::vector<Rational> poly) {
    CycloNumber out(level);
    Poly reduced = poly_mod(std::move(poly), phi_as_rational(level));
    for (std::size_t i = 0; i < reduced.size(); ++i) out.coeffs_[i] = reduced[i];
    return out;
}

CycloNumber CycloNumber::from_rational(const Rational& value, unsigned long level) {
    return from_poly(level, {value});
}

CycloNumber CycloNumber::zeta(unsigned long level) {
    return from_poly(level, {Rational(0), Rational(1)});
}

CycloNumber CycloNumber::zeta_power(unsigned long level, const Integer& k) {
    Integer e = ((k % level) + level) % level;
    std::vector<Rational> poly(e.get_ui() + 1, Rational(0));
    poly[e.get_ui()] = Rational(1);
    return from_poly(level, std::move(poly));
}

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycloNumber CycloNumber::lifted_to(unsigned long new_level) const {
    if (new_level % level_ != 0) throw LevelMismatch("level does not divide the target level");
    if (new_level == level_) return *this;
    unsigned long stride = new_level / level_;
    // zeta_N = zeta_M^(M/N), so coefficient k moves to degree k*(M/N).
    std::vector<Rational> poly((coeffs_.size() - 1) * stride + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * stride] = coeffs_[k];
    return from_poly(new_level, std::move(poly));
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    unsigned long n = lcm(Integer(a.level_), Integer(b.level_)).get_ui();
    CycloNumber x = a.lifted_to(n), y = b.lifted_to(n);
    return CycloNumber::from_poly(n, add(x.coeffs_, y.coeffs_));
}

CycloNumber operator-(const CycloNumber& a) {
    CycloNumber out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    unsigned long n = lcm(Integer(a.level_), Integer(b.level_)).get_ui();
    CycloNumber x = a.lifted_to(n), y = b.lifted_to(n);
    return CycloNumber::from_poly(n, mul(x.coeffs_, y.coeffs_));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    unsigned long n = lcm(Integer(a.level_), Integer(b.level_)).get_ui();
    return a.lifted_to(n).coeffs_ == b.lifted_to(n).coeffs_;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    // Extended Euclid in Q[x] against Phi_N, which is irreducible over Q:
    // the last nonzero remainder is a nonzero constant.
    Poly r0 = phi_as_rational(level_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};  // coefficients of *this in the Bezout identity
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = add(s0, scale(mul(q, s1), Rational(-1)));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw ValidationError("gcd with cyclotomic polynomial is not constant");
    return from_poly(level_, scale(s0, Rational(1) / r0[0]));
}

CycloNumber CycloNumber::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber base = *this;
    CycloNumber out = CycloNumber::from_rational(Rational(1), level_);
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) out = out * base;
        base = base * base;
        k /= 2;
    }
    return out;
}

CycloNumber embed_scalar(const RootScalar& s, unsigned long level) {
    if (!s.free_part().empty())
        throw NotARootOfUnity("scalar with free symbols has no cyclotomic image: " + to_string(s));
    const Rational& t = s.torsion_part();
    Integer q = t.get_den();
    if (Integer(level) % q != 0)
        throw LevelMismatch("torsion denominator " + q.get_str() + " does not divide level " +
                            std::to_string(level));
    Integer k = t.get_num() * (Integer(level) / q);
    return CycloNumber::zeta_power(level, k);
}

std::string to_string(const CycloNumber& a) {
    std::string out = "[" + std::to_string(a.level()) + "]";
    bool any = false;
    const auto& cs = a.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        out += (any ? " + " : " ") + format_fraction(cs[i]) + "*z^" + std::to_string(i);
        any = true;
    }
    if (!any) out += " 0";
    return out;
}

}  // namespace colorlie
