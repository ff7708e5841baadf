#include "colorlie/oracle.hpp"

#include <map>

#include "colorlie/errors.hpp"

namespace colorlie {

namespace {

// Dense multiplication table of a finite group, elements in enumeration order.
struct FiniteTable {
    std::vector<GroupElement> elems;
    std::vector<std::size_t> torsion_coords;
    std::vector<std::vector<std::size_t>> product;

    std::size_t size() const { return elems.size(); }

    std::size_t rank_of(const GroupElement& g) const {
        const auto& moduli = g.presentation()->column_moduli();
        std::size_t idx = 0, weight = 1;
        for (std::size_t j : torsion_coords) {
            idx += g.canonical()[j].get_ui() * weight;
            weight *= moduli[j].get_ui();
        }
        return idx;
    }
};

FiniteTable build_table(const GroupPtr& group) {
    if (group->rank() > 0) throw InfiniteGroup("exhaustive checks need a finite group");
    FiniteTable t;
    const auto& moduli = group->column_moduli();
    for (std::size_t j = 0; j < moduli.size(); ++j)
        if (moduli[j] > 1) t.torsion_coords.push_back(j);
    t.elems = group->enumerate();
    const std::size_t n = t.elems.size();
    t.product.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.product[i][j] = t.rank_of(t.elems[i] * t.elems[j]);
    return t;
}

std::vector<std::vector<RootScalar>> value_table(const Pairing& m, const FiniteTable& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<RootScalar>> vals(n, std::vector<RootScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vals[i][j] = m.eval(t.elems[i], t.elems[j]);
    return vals;
}

std::string triple_name(const FiniteTable& t, std::size_t a, std::size_t b, std::size_t c) {
    return to_string(t.elems[a]) + "," + to_string(t.elems[b]) + "," + to_string(t.elems[c]);
}

// Canonical generators of the torsion decomposition, one per invariant factor.
struct TorsionBasis {
    std::vector<GroupElement> gens;
    std::vector<Integer> orders;
};

TorsionBasis torsion_basis(const GroupPtr& group) {
    if (group->rank() > 0) throw InfiniteGroup("torsion basis of an infinite group");
    TorsionBasis b;
    const auto& moduli = group->column_moduli();
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (moduli[j] <= 1) continue;
        std::vector<Integer> coords(group->num_generators(), Integer(0));
        coords[j] = 1;
        b.gens.push_back(group->from_canonical(coords));
        b.orders.push_back(moduli[j]);
    }
    return b;
}

// b on one element from generator values, along the canonical coordinate path:
// b(g h_x) = b(g) b(h_x) beta(g, h_x)^-1.
RootScalar chain_value(const Bicharacter& beta, const TorsionBasis& basis,
                       const std::vector<RootScalar>& gen_values, const GroupElement& g) {
    const auto& moduli = g.presentation()->column_moduli();
    RootScalar b;
    GroupElement cur = g.presentation()->identity();
    std::size_t pos = 0;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (moduli[j] <= 1) continue;
        const Integer reps = g.canonical()[j];
        for (Integer step(0); step < reps; ++step) {
            b = b * gen_values[pos] * inverse(beta.eval(cur, basis.gens[pos]));
            cur = cur * basis.gens[pos];
        }
        ++pos;
    }
    return b;
}

bool verify_witness(const FiniteTable& t,
                    const std::vector<std::vector<RootScalar>>& beta_vals,
                    const std::vector<RootScalar>& witness) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RootScalar delta = witness[i] * witness[j] * inverse(witness[t.product[i][j]]);
            if (!(delta == beta_vals[i][j])) return false;
        }
    return true;
}

}  // namespace

namespace {

CheckReport cocycle_sweep(const FiniteTable& t, const std::vector<std::vector<RootScalar>>& vals) {
    CheckReport report;
    report.name = "cocycle_identity";
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                RootScalar lhs = vals[a][t.product[b][c]] * vals[b][c];
                RootScalar rhs = vals[a][b] * vals[t.product[a][b]][c];
                bool ok = lhs == rhs;
                report.count(ok, {triple_name(t, a, b, c), to_string(lhs), to_string(rhs), ok});
            }
    return report;
}

CheckReport bimultiplicativity_sweep(const FiniteTable& t,
                                     const std::vector<std::vector<RootScalar>>& vals) {
    CheckReport report;
    report.name = "bimultiplicativity";
    const std::size_t n = t.size();
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k) {
                bool left = vals[t.product[g][h]][k] == vals[g][k] * vals[h][k];
                report.count(left, {"left " + triple_name(t, g, h, k),
                                    to_string(vals[t.product[g][h]][k]),
                                    to_string(vals[g][k] * vals[h][k]), left});
                bool right = vals[g][t.product[h][k]] == vals[g][h] * vals[g][k];
                report.count(right, {"right " + triple_name(t, g, h, k),
                                     to_string(vals[g][t.product[h][k]]),
                                     to_string(vals[g][h] * vals[g][k]), right});
            }
    return report;
}

std::vector<std::vector<RootScalar>> checked_table(const FiniteTable& t,
                                                   const std::vector<std::vector<RootScalar>>& table) {
    if (table.size() != t.size()) throw ValidationError("value table size must equal |G|");
    for (const auto& row : table)
        if (row.size() != t.size()) throw ValidationError("value table must be square");
    return table;
}

}  // namespace

CheckReport check_cocycle_identity(const Cocycle& sigma) {
    FiniteTable t = build_table(sigma.group());
    return cocycle_sweep(t, value_table(sigma, t));
}

CheckReport exhaustive_bimultiplicativity(const Pairing& m) {
    FiniteTable t = build_table(m.group());
    return bimultiplicativity_sweep(t, value_table(m, t));
}

CheckReport check_cocycle_identity_table(const GroupPtr& group,
                                         const std::vector<std::vector<RootScalar>>& table) {
    FiniteTable t = build_table(group);
    return cocycle_sweep(t, checked_table(t, table));
}

CheckReport exhaustive_bimultiplicativity_table(
    const GroupPtr& group, const std::vector<std::vector<RootScalar>>& table) {
    FiniteTable t = build_table(group);
    return bimultiplicativity_sweep(t, checked_table(t, table));
}

CoboundaryResult is_coboundary(const Bicharacter& beta) {
    CoboundaryResult result;
    const std::size_t s = beta.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (!(beta.value(i, j) == beta.value(j, i))) {
                result.coboundary = false;
                result.asymmetric_pair = {i, j};
                return result;
            }

    // Symmetric over a divisible group: split explicitly.  On each cyclic
    // factor of order d with diagonal value sb, take b(h^a) = sb^(-a(a-1)/2) rho^a
    // with rho^d = sb^(d(d-1)/2); cross terms use beta(h_x, h_y)^(-ax*ay).
    FiniteTable t = build_table(beta.group());
    TorsionBasis basis = torsion_basis(beta.group());

    std::vector<RootScalar> diag, rho;
    std::vector<std::vector<RootScalar>> cross(basis.gens.size(),
                                               std::vector<RootScalar>(basis.gens.size()));
    for (std::size_t x = 0; x < basis.gens.size(); ++x) {
        diag.push_back(beta.eval(basis.gens[x], basis.gens[x]));
        Integer half = basis.orders[x] * (basis.orders[x] - 1) / 2;
        rho.push_back(canonical_root(pow(diag[x], half), basis.orders[x]));
        for (std::size_t y = 0; y < basis.gens.size(); ++y)
            cross[x][y] = beta.eval(basis.gens[x], basis.gens[y]);
    }

    const auto& moduli = beta.group()->column_moduli();
    std::vector<std::size_t> coord_of;
    for (std::size_t j = 0; j < moduli.size(); ++j)
        if (moduli[j] > 1) coord_of.push_back(j);

    result.witness.reserve(t.size());
    for (const auto& g : t.elems) {
        RootScalar b;
        for (std::size_t x = 0; x < basis.gens.size(); ++x) {
            const Integer& a = g.canonical()[coord_of[x]];
            b = b * pow(diag[x], -(a * (a - 1) / 2)) * pow(rho[x], a);
            for (std::size_t y = x + 1; y < basis.gens.size(); ++y)
                b = b * pow(cross[x][y], -(a * g.canonical()[coord_of[y]]));
        }
        result.witness.push_back(b);
    }

    auto beta_vals = value_table(beta, t);
    if (!verify_witness(t, beta_vals, result.witness))
        throw std::logic_error("coboundary witness failed its exhaustive check");
    result.coboundary = true;
    return result;
}

std::optional<std::vector<RootScalar>> coboundary_search(const Bicharacter& beta,
                                                         const Integer& denominator_bound) {
    FiniteTable t = build_table(beta.group());
    TorsionBasis basis = torsion_basis(beta.group());
    auto beta_vals = value_table(beta, t);

    unsigned long bound = denominator_bound.get_ui();
    if (bound < 1) throw ValidationError("denominator bound must be positive");

    const std::size_t k = basis.gens.size();
    std::vector<unsigned long> choice(k, 0);
    for (;;) {
        std::vector<RootScalar> gen_values(k);
        for (std::size_t x = 0; x < k; ++x)
            gen_values[x] = RootScalar::torsion(make_rational(Integer(choice[x]), Integer(bound)));

        std::vector<RootScalar> witness;
        witness.reserve(t.size());
        for (const auto& g : t.elems) witness.push_back(chain_value(beta, basis, gen_values, g));
        if (verify_witness(t, beta_vals, witness)) return witness;

        std::size_t x = 0;
        for (; x < k; ++x) {
            if (++choice[x] < bound) break;
            choice[x] = 0;
        }
        if (x == k) break;
    }
    return std::nullopt;
}

CensusTable bicharacter_census(const GroupPtr& group, const Integer& value_level) {
    if (group->rank() > 0) throw InfiniteGroup("census needs a finite group");
    if (value_level < 1) throw ValidationError("value level must be positive");
    TorsionBasis basis = torsion_basis(group);
    const std::size_t k = basis.gens.size();

    // value(x, y) must satisfy v^dx = v^dy = v^N = 1, so it ranges over the
    // roots of unity of order gcd(N, dx, dy); slots are independent.
    std::vector<std::vector<unsigned long>> radix(k, std::vector<unsigned long>(k, 1));
    unsigned long long total = 1;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            radix[x][y] = gcd(gcd(value_level, basis.orders[x]), basis.orders[y]).get_ui();
            total *= radix[x][y];
            if (total > (1ull << 22)) throw ValidationError("census enumeration too large");
        }

    CensusTable table;
    table.num_bicharacters = 0;
    std::map<std::string, std::size_t> class_index;

    std::vector<std::vector<unsigned long>> choice(k, std::vector<unsigned long>(k, 0));
    for (;;) {
        std::vector<std::vector<RootScalar>> vals(k, std::vector<RootScalar>(k));
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
                vals[x][y] = RootScalar::torsion(
                    make_rational(Integer(choice[x][y]), Integer(radix[x][y])));

        std::string key;
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = x + 1; y < k; ++y)
                key += to_string(vals[x][y] * inverse(vals[y][x])) + ";";

        auto [it, fresh] = class_index.try_emplace(key, table.classes.size());
        if (fresh) table.classes.push_back(CensusClass{Integer(0), vals});
        table.classes[it->second].size += 1;
        table.num_bicharacters += 1;

        std::size_t x = 0, y = 0;
        bool carried = true;
        for (x = 0; x < k && carried; ++x)
            for (y = 0; y < k && carried; ++y) {
                if (++choice[x][y] < radix[x][y]) {
                    carried = false;
                } else {
                    choice[x][y] = 0;
                }
            }
        if (carried) break;
    }
    return table;
}

}  // namespace colorlie
