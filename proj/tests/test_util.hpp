#pragma once

// Shared generators and small independent oracles for the test suites.

#include <random>
#include <vector>

#include "colorlie/bicharacter.hpp"

namespace colorlie::testing {

using Rng = std::mt19937_64;

inline Integer random_int(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Integer(dist(rng));
}

inline Rational random_rational(Rng& rng, long max_abs_num = 12, long max_den = 12) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(Integer(num(rng)), Integer(den(rng)));
}

inline RootScalar random_root_scalar(Rng& rng, bool allow_free = true) {
    RootScalar out = RootScalar::torsion(random_rational(rng));
    if (allow_free) {
        std::uniform_int_distribution<int> coin(0, 3);
        if (coin(rng) == 0) out = out * RootScalar::symbol("q", random_rational(rng));
        if (coin(rng) == 0) out = out * RootScalar::symbol("p", random_rational(rng));
    }
    return out;
}

// Product of <= 4 cyclic factors with small orders plus free rank <= 2.
inline GroupPtr random_group(Rng& rng, int max_torsion = 4, int max_free = 2) {
    static const long kOrders[] = {2, 3, 4, 5, 6, 8, 12};
    std::uniform_int_distribution<int> torsion_count(0, max_torsion);
    std::uniform_int_distribution<int> free_count(0, max_free);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kOrders) - 1);
    std::vector<Integer> orders;
    int nt = torsion_count(rng), nf = free_count(rng);
    if (nt + nf == 0) nt = 1;
    for (int i = 0; i < nt; ++i) orders.emplace_back(kOrders[pick(rng)]);
    for (int i = 0; i < nf; ++i) orders.emplace_back(0);
    return GroupPresentation::cyclic_product(orders);
}

// Random symmetric commutation factor on a diagonal presentation: root-of-unity
// values constrained by the factor orders, free-symbol values on free pairs,
// +-1 diagonal respecting order parity.
inline Bicharacter random_symmetric_bicharacter(Rng& rng, const GroupPtr& group,
                                                bool allow_free_symbols = true) {
    const std::size_t s = group->num_generators();
    std::vector<Integer> orders(s, Integer(0));
    for (const auto& rel : group->relations())
        for (std::size_t i = 0; i < s; ++i)
            if (rel[i] != 0) orders[i] = abs(rel[i]);

    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < s; ++i) {
        bool can_be_odd = orders[i] == 0 || orders[i] % 2 == 0;
        values[i][i] = (can_be_odd && coin(rng)) ? RootScalar::minus_one() : RootScalar{};
        for (std::size_t j = i + 1; j < s; ++j) {
            RootScalar v;
            if (orders[i] == 0 && orders[j] == 0) {
                if (allow_free_symbols && coin(rng)) {
                    v = RootScalar::symbol("q", random_rational(rng));
                } else {
                    v = RootScalar::torsion(random_rational(rng));
                }
            } else {
                Integer d = orders[i] == 0 ? orders[j]
                            : orders[j] == 0 ? orders[i]
                                             : gcd(orders[i], orders[j]);
                v = RootScalar::torsion(
                    make_rational(random_int(rng, 0, d.get_si() - 1), d));
            }
            values[i][j] = v;
            values[j][i] = inverse(v);
        }
    }
    return Bicharacter(group, std::move(values));
}

// Brute-force membership: closure of K under multiplication (finite groups).
inline std::vector<GroupElement> subgroup_closure(const GroupPtr& group,
                                                  const std::vector<GroupElement>& K) {
    std::vector<GroupElement> members{group->identity()};
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (const auto& k : K) {
            GroupElement next = members[i] * k;
            bool seen = false;
            for (const auto& x : members)
                if (x == next) seen = true;
            if (!seen) members.push_back(next);
        }
    }
    return members;
}

inline bool contains(const std::vector<GroupElement>& set, const GroupElement& x) {
    for (const auto& m : set)
        if (m == x) return true;
    return false;
}

}  // namespace colorlie::testing
