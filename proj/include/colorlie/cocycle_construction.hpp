#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "colorlie/bicharacter.hpp"
#include "colorlie/report.hpp"

namespace colorlie {

// Given a symmetric commutation factor chi, these routines produce a
// bimultiplicative 2-cocycle sigma with twist_character(chi, sigma) = chi0,
// so the twisted algebra is a super-Lie algebra.  The transfinite chain of
// the existence proof collapses to a finite generator-by-generator extension
// on a finitely generated group, and that loop is implemented literally by
// the incremental strategy; the canonical strategy reaches the same target
// through Smith-normal-form coordinates, where every extension step is the
// direct-product case and no root extraction can fail.

enum class Strategy { Canonical, Incremental };

// Partial cocycle during the incremental chain.  `sigma` is a full s x s
// matrix whose entries are meaningful on adjoined x adjoined pairs; the
// antisymmetrization of that restriction always equals `beta` there, and the
// restriction respects every relation supported on the adjoined generators.
struct ExtensionState {
    Bicharacter beta;  // alternating target
    std::vector<std::size_t> adjoined;
    std::vector<std::vector<RootScalar>> sigma;

    static ExtensionState start(Bicharacter beta);

    // Bilinear evaluation of the partial sigma on words over `adjoined`
    // (exponent vectors indexed by position in the adjoined list).
    RootScalar sigma_eval(const std::vector<Integer>& left,
                          const std::vector<Integer>& right) const;

    // sigma(u, w) for an adjoined generator u against a word w over `adjoined`.
    RootScalar sigma_row_eval(std::size_t u, const std::vector<Integer>& word) const;
};

// The multiplicative right factor f(u) = sigma(u, t) on the adjoined span,
// keyed by generator index, satisfying f(u)^n = sigma(u, t^n) and f(t^n) = 1.
struct RightMultiplier {
    std::map<std::size_t, RootScalar> values;
};

// beta = chi0 * chi^-1: alternating, and any sigma with antisymmetrization
// beta twists chi exactly onto chi0.
Bicharacter reduce_to_alternating(const Bicharacter& chi);

// Inner chain of the extension step: t^n equals `expression` over the
// adjoined generators.  Throws DiagonalObstruction when sigma(v,v) != 1 for
// that word v, and propagates NoSolution from the joint root constraints.
RightMultiplier build_right_multiplier(const ExtensionState& state, const Integer& n,
                                       const std::vector<Integer>& expression);

// One step of the outer chain; a no-op when t already lies in the adjoined span.
ExtensionState adjoin_generator(ExtensionState state, std::size_t t);

// A cocycle with antisymmetrize(sigma) == beta.  `beta` must be alternating.
// Canonical never fails; incremental may raise DiagonalObstruction/NoSolution.
Cocycle construct_sigma(const Bicharacter& beta, Strategy strategy = Strategy::Canonical);

struct TwistCertificate {
    Cocycle sigma;
    Bicharacter chi_zero;
    Bicharacter chi_sigma;
    std::vector<CheckReport> checks;

    bool pass() const {
        for (const auto& report : checks)
            if (!report.pass()) return false;
        return true;
    }
};

// Verifies the construction's claims around a given cocycle: chi_sigma == chi0 on
// every generator pair, the coboundary relation against beta, relation
// compatibility of sigma, and optionally the same identities on all element
// pairs plus the 2-cocycle identity and bimultiplicativity on all triples.
TwistCertificate certify_cocycle(const Bicharacter& chi, Cocycle sigma, bool exhaustive);

// construct_sigma + certify_cocycle; exhaustive checks run when the group is
// finite with at most `exhaustive_limit` elements.
TwistCertificate super_certificate(const Bicharacter& chi,
                                   Strategy strategy = Strategy::Canonical,
                                   std::size_t exhaustive_limit = 64);

}  // namespace colorlie
