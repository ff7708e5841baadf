#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorlie/errors.hpp"
#include "colorlie/root_scalar.hpp"
#include "test_util.hpp"

using namespace colorlie;
using colorlie::testing::Rng;

namespace {
RootScalar t(long num, long den) { return RootScalar::torsion(Rational(num, den)); }
RootScalar sym(const char* name, long num = 1, long den = 1) {
    return RootScalar::symbol(name, Rational(num, den));
}
}  // namespace

TEST_CASE("multiplication") {
    CHECK(t(1, 2) * t(1, 2) == RootScalar{});  // (-1)*(-1) = 1
    RootScalar x = t(1, 3) * sym("q", 2);
    CHECK(RootScalar{} * x == x);
    CHECK((t(1, 3) * sym("q")) * (t(1, 3) * sym("q", -1)) == t(2, 3));
}

TEST_CASE("inverse") {
    CHECK(inverse(RootScalar{}) == RootScalar{});
    CHECK(inverse(t(1, 3)) == t(2, 3));
    CHECK(inverse(sym("q", 2)) == sym("q", -2));
}

TEST_CASE("powers") {
    CHECK(pow(t(1, 4), 2) == t(1, 2));  // i^2 = -1
    CHECK(pow(t(3, 7) * sym("q", 5), 0) == RootScalar{});
    CHECK(pow(sym("q", 1, 2), 2) == sym("q"));
}

TEST_CASE("canonical root") {
    CHECK(canonical_root(t(1, 2), 2) == t(1, 4));
    CHECK(canonical_root(RootScalar{}, 5) == RootScalar{});
    CHECK(canonical_root(sym("q"), 3) == sym("q", 1, 3));
    // The root lands in the committed branch [0, 1/n).
    CHECK(canonical_root(t(2, 3), 4).torsion_part() == Rational(1, 6));
}

TEST_CASE("solve_root_constraints picks the stated joint root") {
    // Enumerate the candidate branch x = A/r + j/r and keep solutions of both
    // constraints; the solver must return the smallest one.
    RootScalar A = t(1, 2), B = t(1, 2);
    std::vector<RootScalar> solutions;
    for (long j = 0; j < 2; ++j) {
        RootScalar x = RootScalar::torsion(Rational(1, 4) + Rational(j, 2));
        if (pow(x, 2) == A && pow(x, 2) == B) solutions.push_back(x);
    }
    REQUIRE(!solutions.empty());
    CHECK(solutions.front() == t(1, 4));
    CHECK(solve_root_constraints(2, A, 2, B) == solutions.front());
}

TEST_CASE("solve_root_constraints degenerate and error cases") {
    RootScalar x = t(2, 5) * sym("q", 3);
    CHECK(solve_root_constraints(1, x, 1, x) == x);

    CHECK_THROWS_AS(solve_root_constraints(2, t(1, 2), 3, t(1, 3)), IncompatibleConstraints);
    // Compatible but jointly unsolvable: x^2 = 1 and x^2 = -1.
    CHECK_THROWS_AS(solve_root_constraints(2, RootScalar{}, 2, t(1, 2)), NoSolution);
}

TEST_CASE("sign detection") {
    CHECK(is_sign(RootScalar{}) == 1);
    CHECK(is_sign(t(1, 2)) == -1);
    CHECK(!is_sign(t(1, 3)).has_value());
    CHECK(!is_sign(sym("q")).has_value());
    CHECK(!is_sign(t(1, 2) * sym("q")).has_value());
}

TEST_CASE("group laws on random values") {
    Rng rng(20240817);
    for (int it = 0; it < 500; ++it) {
        RootScalar a = testing::random_root_scalar(rng);
        RootScalar b = testing::random_root_scalar(rng);
        RootScalar c = testing::random_root_scalar(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(inverse(inverse(a)) == a);
        CHECK(a * inverse(a) == RootScalar{});
    }
}

TEST_CASE("roots invert powers exactly") {
    Rng rng(913);
    for (int it = 0; it < 1000; ++it) {
        RootScalar a = testing::random_root_scalar(rng);
        Integer n = testing::random_int(rng, 1, 12);
        CHECK(pow(canonical_root(a, n), n) == a);
        CHECK(canonical_root(RootScalar{}, n) == RootScalar{});
    }
}

TEST_CASE("joint roots satisfy both constraints on random compatible input") {
    Rng rng(4711);
    for (int it = 0; it < 500; ++it) {
        RootScalar x = testing::random_root_scalar(rng);
        Integer r = testing::random_int(rng, 1, 9);
        Integer n = testing::random_int(rng, 1, 9);
        RootScalar y = solve_root_constraints(r, pow(x, r), n, pow(x, n));
        CHECK(pow(y, r) == pow(x, r));
        CHECK(pow(y, n) == pow(x, n));
    }
}
