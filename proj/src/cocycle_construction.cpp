#include "colorlie/cocycle_construction.hpp"

#include <stdexcept>

#include "colorlie/errors.hpp"
#include "colorlie/oracle.hpp"

namespace colorlie {

ExtensionState ExtensionState::start(Bicharacter beta) {
    ExtensionState state{std::move(beta), {}, {}};
    const std::size_t s = state.beta.group()->num_generators();
    state.sigma.assign(s, std::vector<RootScalar>(s));
    return state;
}

RootScalar ExtensionState::sigma_eval(const std::vector<Integer>& left,
                                      const std::vector<Integer>& right) const {
    RootScalar out;
    for (std::size_t p = 0; p < left.size(); ++p) {
        if (left[p] == 0) continue;
        for (std::size_t q = 0; q < right.size(); ++q) {
            if (right[q] == 0) continue;
            out = out * pow(sigma[adjoined[p]][adjoined[q]], left[p] * right[q]);
        }
    }
    return out;
}

RootScalar ExtensionState::sigma_row_eval(std::size_t u, const std::vector<Integer>& word) const {
    RootScalar out;
    for (std::size_t q = 0; q < word.size(); ++q) {
        if (word[q] == 0) continue;
        out = out * pow(sigma[u][adjoined[q]], word[q]);
    }
    return out;
}

Bicharacter reduce_to_alternating(const Bicharacter& chi) {
    if (!chi.is_symmetric())
        throw ValidationError("commutation factor must be symmetric");
    Bicharacter beta = pointwise_product(chi0(chi), pointwise_inverse(chi));
    if (!is_alternating(beta))
        throw std::logic_error("chi0 * chi^-1 failed to be alternating");
    return beta;
}

RightMultiplier build_right_multiplier(const ExtensionState& state, const Integer& n,
                                       const std::vector<Integer>& expression) {
    const GroupPtr& group = state.beta.group();
    if (expression.size() != state.adjoined.size())
        throw ValidationError("expression length does not match the adjoined list");

    if (!state.sigma_eval(expression, expression).is_identity())
        throw DiagonalObstruction(
            "sigma(v,v) != 1 on the word v for t^n; the incremental chain cannot set f(v) = 1");

    // Inner chain: start from f(v) = 1 on <v> and adjoin the generators of K
    // one at a time, choosing each f(u) compatible with both f(u)^r = f(u^r)
    // and f(u)^n = sigma(u, v).
    GroupElement v = group->identity();
    for (std::size_t p = 0; p < expression.size(); ++p)
        v = v * pow(group->generator(state.adjoined[p]), expression[p]);

    std::vector<GroupElement> chain{v};
    std::vector<RootScalar> chain_values{RootScalar{}};

    RightMultiplier f;
    for (std::size_t u : state.adjoined) {
        GroupElement gu = group->generator(u);
        RootScalar target = state.sigma_row_eval(u, expression);  // sigma(u, v)
        RootScalar fu;
        if (auto ci = cyclic_intersection(gu, chain)) {
            RootScalar a;
            for (std::size_t j = 0; j < chain_values.size(); ++j)
                a = a * pow(chain_values[j], ci->expression[j]);
            fu = solve_root_constraints(ci->n, a, n, target);
        } else {
            fu = canonical_root(target, n);
        }
        chain.push_back(gu);
        chain_values.push_back(fu);
        f.values[u] = fu;
    }
    return f;
}

ExtensionState adjoin_generator(ExtensionState state, std::size_t t) {
    const GroupPtr& group = state.beta.group();
    GroupElement gt = group->generator(t);

    std::vector<GroupElement> adjoined_elems;
    for (std::size_t u : state.adjoined) adjoined_elems.push_back(group->generator(u));

    auto ci = cyclic_intersection(gt, adjoined_elems);
    if (ci && ci->n == 1) return state;  // already inside the adjoined span

    bool trivial = true;
    if (ci) {
        GroupElement v = group->identity();
        for (std::size_t p = 0; p < ci->expression.size(); ++p)
            v = v * pow(adjoined_elems[p], ci->expression[p]);
        trivial = v.is_identity();  // <t> meets <K> only in e
        if (!trivial) {
            RightMultiplier f = build_right_multiplier(state, ci->n, ci->expression);
            for (std::size_t u : state.adjoined) {
                state.sigma[u][t] = f.values[u];
                state.sigma[t][u] = state.beta.value(t, u) * f.values[u];
            }
        }
    }
    if (trivial) {
        // Direct-product case: sigma(u, t) = beta(u, t), sigma(t, u) = 1.
        for (std::size_t u : state.adjoined) {
            state.sigma[u][t] = state.beta.value(u, t);
            state.sigma[t][u] = RootScalar{};
        }
    }
    state.sigma[t][t] = RootScalar{};
    state.adjoined.push_back(t);
    return state;
}

namespace {

Cocycle construct_canonical(const Bicharacter& beta) {
    const GroupPtr& group = beta.group();
    const std::size_t s = group->num_generators();
    const auto& moduli = group->column_moduli();

    // Canonical coordinates whose generator is nontrivial.
    std::vector<std::size_t> coords;
    for (std::size_t j = 0; j < s; ++j)
        if (moduli[j] != 1) coords.push_back(j);

    std::vector<GroupElement> gens;
    for (std::size_t j : coords) {
        std::vector<Integer> unit(s, Integer(0));
        unit[j] = 1;
        gens.push_back(group->from_canonical(unit));
    }

    const std::size_t c = coords.size();
    std::vector<std::vector<RootScalar>> beta_canon(c, std::vector<RootScalar>(c));
    for (std::size_t x = 0; x < c; ++x)
        for (std::size_t y = 0; y < c; ++y) beta_canon[x][y] = beta.eval(gens[x], gens[y]);

    // In these coordinates every relation is h^d = e, so adjoining in order
    // always lands in the direct-product case: sigma is beta above the
    // diagonal and 1 elsewhere.  Pull back along canonical coordinates.
    std::vector<GroupElement> user_gens;
    for (std::size_t a = 0; a < s; ++a) user_gens.push_back(group->generator(a));

    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t a = 0; a < s; ++a) {
        const auto& ya = user_gens[a].canonical();
        for (std::size_t b = 0; b < s; ++b) {
            const auto& yb = user_gens[b].canonical();
            RootScalar val;
            for (std::size_t x = 0; x < c; ++x) {
                if (ya[coords[x]] == 0) continue;
                for (std::size_t y = x + 1; y < c; ++y) {
                    if (yb[coords[y]] == 0) continue;
                    val = val * pow(beta_canon[x][y], ya[coords[x]] * yb[coords[y]]);
                }
            }
            values[a][b] = val;
        }
    }
    return Cocycle(group, std::move(values));
}

Cocycle construct_incremental(const Bicharacter& beta) {
    const GroupPtr& group = beta.group();
    const std::size_t s = group->num_generators();

    ExtensionState state = ExtensionState::start(beta);
    // Expression of each generator over the adjoined list (a prefix of the
    // final list, padded with zeros at assembly time).
    std::vector<std::vector<Integer>> expressions(s);
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<GroupElement> adjoined_elems;
        for (std::size_t u : state.adjoined) adjoined_elems.push_back(group->generator(u));
        auto ci = cyclic_intersection(group->generator(i), adjoined_elems);
        if (ci && ci->n == 1) {
            expressions[i] = ci->expression;
        } else {
            state = adjoin_generator(std::move(state), i);
            std::vector<Integer> unit(state.adjoined.size(), Integer(0));
            unit.back() = 1;
            expressions[i] = std::move(unit);
        }
    }

    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Integer> wi = expressions[i];
        wi.resize(state.adjoined.size(), Integer(0));
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<Integer> wj = expressions[j];
            wj.resize(state.adjoined.size(), Integer(0));
            values[i][j] = state.sigma_eval(wi, wj);
        }
    }
    return Cocycle(group, std::move(values));
}

}  // namespace

Cocycle construct_sigma(const Bicharacter& beta, Strategy strategy) {
    if (!is_alternating(beta))
        throw ValidationError("construct_sigma needs an alternating bicharacter");
    Cocycle sigma = strategy == Strategy::Canonical ? construct_canonical(beta)
                                                    : construct_incremental(beta);
    if (!(antisymmetrize(sigma) == beta))
        throw std::logic_error("constructed cocycle has the wrong antisymmetrization");
    return sigma;
}

TwistCertificate certify_cocycle(const Bicharacter& chi, Cocycle sigma, bool exhaustive) {
    Bicharacter beta = reduce_to_alternating(chi);
    Bicharacter chi_zero = chi0(chi);
    Bicharacter chi_sigma = twist_character(chi, sigma);

    TwistCertificate cert{std::move(sigma), std::move(chi_zero), std::move(chi_sigma), {}};
    const GroupPtr& group = chi.group();
    const std::size_t s = group->num_generators();
    const auto& names = group->generator_names();

    CheckReport twist_check;
    twist_check.name = "chi_sigma_equals_chi0_on_generators";
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            bool ok = cert.chi_sigma.value(i, j) == cert.chi_zero.value(i, j);
            twist_check.record({names[i] + "," + names[j], to_string(cert.chi_sigma.value(i, j)),
                                to_string(cert.chi_zero.value(i, j)), ok});
        }
    cert.checks.push_back(std::move(twist_check));

    CheckReport target_check;
    target_check.name = "antisymmetrization_equals_target";
    Bicharacter antisym = antisymmetrize(cert.sigma);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            bool ok = antisym.value(i, j) == beta.value(i, j);
            target_check.record({names[i] + "," + names[j], to_string(antisym.value(i, j)),
                                 to_string(beta.value(i, j)), ok});
        }
    cert.checks.push_back(std::move(target_check));

    CheckReport relation_check;
    relation_check.name = "sigma_respects_relations";
    const auto& relations = group->relations();
    for (std::size_t r = 0; r < relations.size(); ++r) {
        for (std::size_t j = 0; j < s; ++j) {
            RootScalar left, right;
            for (std::size_t i = 0; i < s; ++i) {
                if (relations[r][i] == 0) continue;
                left = left * pow(cert.sigma.value(i, j), relations[r][i]);
                right = right * pow(cert.sigma.value(j, i), relations[r][i]);
            }
            relation_check.record({"relation " + std::to_string(r) + " x " + names[j],
                                   to_string(left), to_string(right),
                                   left.is_identity() && right.is_identity()});
        }
    }
    cert.checks.push_back(std::move(relation_check));

    if (exhaustive) {
        CheckReport pairs;
        pairs.name = "exhaustive_twist_identity";
        auto elems = group->enumerate();
        for (const auto& g : elems)
            for (const auto& h : elems) {
                RootScalar lhs = chi.eval(g, h) * cert.sigma.eval(g, h) *
                                 inverse(cert.sigma.eval(h, g));
                RootScalar rhs = cert.chi_zero.eval(g, h);
                pairs.count(lhs == rhs,
                            {to_string(g) + "," + to_string(h), to_string(lhs), to_string(rhs)});
            }
        cert.checks.push_back(std::move(pairs));

        cert.checks.push_back(exhaustive_bimultiplicativity(cert.sigma));
        cert.checks.push_back(check_cocycle_identity(cert.sigma));
    }
    return cert;
}

TwistCertificate super_certificate(const Bicharacter& chi, Strategy strategy,
                                   std::size_t exhaustive_limit) {
    Cocycle sigma = construct_sigma(reduce_to_alternating(chi), strategy);
    auto order = chi.group()->order();
    bool exhaustive = order.has_value() && *order <= exhaustive_limit;
    return certify_cocycle(chi, std::move(sigma), exhaustive);
}

}  // namespace colorlie
