#include "colorlie/demos.hpp"

#include "colorlie/errors.hpp"

namespace colorlie {

namespace {

SpecDocument gl_super_demo() {
    auto group = GroupPresentation::create(1, {{Integer(2)}}, {"g"});
    std::vector<std::vector<RootScalar>> values{{RootScalar::minus_one()}};
    SpecDocument doc;
    doc.group = group;
    doc.bicharacter = Bicharacter(group, values);
    doc.algebra = gl_chi({group->identity(), group->generator(0)}, *doc.bicharacter, 2);
    return doc;
}

SpecDocument quantum_torus_demo() {
    auto group = GroupPresentation::create(2, {}, {"a", "b"});
    RootScalar q = RootScalar::symbol("q");
    std::vector<std::vector<RootScalar>> values{{RootScalar{}, q},
                                                {inverse(q), RootScalar{}}};
    SpecDocument doc;
    doc.group = group;
    doc.bicharacter = Bicharacter(group, values);
    return doc;
}

SpecDocument z3z3_demo() {
    auto group =
        GroupPresentation::create(2, {{Integer(3), Integer(0)}, {Integer(0), Integer(3)}},
                                  {"g1", "g2"});
    RootScalar zeta3 = RootScalar::torsion(Rational(1, 3));
    std::vector<std::vector<RootScalar>> values{{RootScalar{}, zeta3},
                                                {inverse(zeta3), RootScalar{}}};
    SpecDocument doc;
    doc.group = group;
    doc.bicharacter = Bicharacter(group, values);
    doc.algebra =
        gl_chi({group->identity(), group->generator(0), group->generator(1)}, *doc.bicharacter, 3);
    return doc;
}

}  // namespace

SpecDocument demo_spec(const std::string& name) {
    if (name == "gl-super") return gl_super_demo();
    if (name == "quantum-torus") return quantum_torus_demo();
    if (name == "z3z3") return z3z3_demo();
    throw UnknownDemo("no demo named '" + name + "'; available: gl-super, quantum-torus, z3z3");
}

std::vector<std::string> demo_names() { return {"gl-super", "quantum-torus", "z3z3"}; }

}  // namespace colorlie
