#include "colorlie/json_io.hpp"

#include "colorlie/errors.hpp"

namespace colorlie {

namespace {

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Integer{j.get<std::string>()};
    throw ParseError("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

}  // namespace

Json to_json(const RootScalar& s) {
    Json free = Json::object();
    for (const auto& [name, exp] : s.free_part()) free[name] = format_fraction(exp);
    return Json{{"torsion", format_fraction(s.torsion_part())}, {"free", free}};
}

RootScalar root_scalar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("torsion")) throw ParseError("bad scalar literal: " + j.dump());
    RootScalar out = RootScalar::torsion(parse_fraction(j.at("torsion").get<std::string>()));
    if (j.contains("free")) {
        for (const auto& [name, exp] : j.at("free").items())
            out = out * RootScalar::symbol(name, parse_fraction(exp.get<std::string>()));
    }
    return out;
}

Json to_json(const CycloNumber& c) {
    Json terms = Json::array();
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        terms.push_back(Json::array({k, format_fraction(coeffs[k])}));
    }
    return Json{{"level", c.level()}, {"terms", terms}};
}

CycloNumber cyclo_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("level")) throw ParseError("bad cyclotomic literal: " + j.dump());
    unsigned long level = j.at("level").get<unsigned long>();
    CycloNumber out(level);
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 2) throw ParseError("bad cyclotomic term: " + term.dump());
        Integer k = integer_from_json(term.at(0));
        Rational coeff = parse_fraction(term.at(1).get<std::string>());
        out = out + (CycloNumber::zeta_power(level, k) *
                     CycloNumber::from_rational(coeff, level));
    }
    return out;
}

Json group_to_json(const GroupPresentation& g) {
    Json relations = Json::array();
    for (const auto& rel : g.relations()) {
        Json row = Json::array();
        for (const auto& x : rel) row.push_back(integer_to_json(x));
        relations.push_back(row);
    }
    return Json{{"generators", g.generator_names()}, {"relations", relations}};
}

GroupPtr group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators")) throw ParseError("bad group block: " + j.dump());
    std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
    std::vector<std::vector<Integer>> relations;
    if (j.contains("relations")) {
        for (const auto& row : j.at("relations")) {
            std::vector<Integer> rel;
            for (const auto& x : row) rel.push_back(integer_from_json(x));
            relations.push_back(std::move(rel));
        }
    }
    const std::size_t num_generators = names.size();
    return GroupPresentation::create(num_generators, std::move(relations), std::move(names));
}

Json pairing_to_json(const Pairing& p) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.size(); ++j) row.push_back(to_json(p.value(i, j)));
        rows.push_back(row);
    }
    return Json{{"values", rows}};
}

std::vector<std::vector<RootScalar>> pairing_values_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("values")) throw ParseError("bad value block: " + j.dump());
    std::vector<std::vector<RootScalar>> values;
    for (const auto& row : j.at("values")) {
        std::vector<RootScalar> out_row;
        for (const auto& cell : row) out_row.push_back(root_scalar_from_json(cell));
        values.push_back(std::move(out_row));
    }
    return values;
}

Json algebra_to_json(const ColorLieAlgebra& a) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        Json grade = Json::array();
        for (const auto& x : a.basis().grades[i].word()) grade.push_back(integer_to_json(x));
        basis.push_back(Json{{"name", a.basis().names[i]}, {"grade", grade}});
    }
    Json brackets = Json::array();
    for (const auto& [key, value] : a.brackets()) {
        Json result = Json::array();
        for (const auto& [name, coeff] : value)
            result.push_back(Json{{"basis", name}, {"coeff", to_json(coeff)}});
        brackets.push_back(Json{{"left", a.basis().names[key.first]},
                                {"right", a.basis().names[key.second]},
                                {"result", result}});
    }
    return Json{{"level", a.level()}, {"basis", basis}, {"brackets", brackets}};
}

ColorLieAlgebra algebra_from_json(const Json& j, const GroupPtr& group, const Bicharacter& chi) {
    if (!j.is_object() || !j.contains("basis")) throw ParseError("bad algebra block: " + j.dump());
    unsigned long level = j.at("level").get<unsigned long>();
    GradedBasis basis;
    for (const auto& entry : j.at("basis")) {
        basis.names.push_back(entry.at("name").get<std::string>());
        std::vector<Integer> word;
        for (const auto& x : entry.at("grade")) word.push_back(integer_from_json(x));
        basis.grades.push_back(group->element(std::move(word)));
    }
    ColorLieAlgebra::BracketTable table;
    if (j.contains("brackets")) {
        for (const auto& entry : j.at("brackets")) {
            std::size_t left = basis.index_of(entry.at("left").get<std::string>());
            std::size_t right = basis.index_of(entry.at("right").get<std::string>());
            AlgebraElement value;
            for (const auto& part : entry.at("result")) {
                CycloNumber coeff = cyclo_from_json(part.at("coeff")).lifted_to(level);
                if (!coeff.is_zero()) value.emplace(part.at("basis").get<std::string>(), coeff);
            }
            table[{left, right}] = std::move(value);
        }
    }
    return ColorLieAlgebra(std::move(basis), chi, level, std::move(table));
}

SpecDocument spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group")) throw ParseError("spec file needs a group block");
    SpecDocument doc;
    doc.group = group_from_json(j.at("group"));
    if (j.contains("bicharacter"))
        doc.bicharacter =
            Bicharacter(doc.group, pairing_values_from_json(j.at("bicharacter")));
    if (j.contains("algebra")) {
        if (!doc.bicharacter)
            throw ParseError("an algebra block needs a bicharacter block");
        doc.algebra = algebra_from_json(j.at("algebra"), doc.group, *doc.bicharacter);
    }
    return doc;
}

Json spec_to_json(const SpecDocument& doc) {
    Json out{{"group", group_to_json(*doc.group)}};
    if (doc.bicharacter) out["bicharacter"] = pairing_to_json(*doc.bicharacter);
    if (doc.algebra) out["algebra"] = algebra_to_json(*doc.algebra);
    return out;
}

Json report_to_json(const CheckReport& r) {
    Json items = Json::array();
    for (const auto& item : r.items)
        items.push_back(Json{{"where", item.where}, {"lhs", item.lhs}, {"rhs", item.rhs},
                             {"ok", item.ok}});
    return Json{{"name", r.name}, {"checked", r.checked}, {"failed", r.failed},
                {"pass", r.pass()}, {"items", items}};
}

Json super_report_to_json(const SuperReport& r) {
    return Json{{"commutation_factor_is_super", r.commutation_factor_is_super},
                {"antisymmetry", report_to_json(r.antisymmetry)},
                {"jacobi", report_to_json(r.jacobi)},
                {"pass", r.pass()}};
}

Json census_to_json(const CensusTable& t) {
    Json classes = Json::array();
    for (const auto& cls : t.classes) {
        Json rows = Json::array();
        for (const auto& row : cls.representative) {
            Json out_row = Json::array();
            for (const auto& v : row) out_row.push_back(to_json(v));
            rows.push_back(out_row);
        }
        classes.push_back(Json{{"size", integer_to_json(cls.size)}, {"representative", rows}});
    }
    return Json{{"num_bicharacters", integer_to_json(t.num_bicharacters)}, {"classes", classes}};
}

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", hash);
    return std::string(buf);
}

Json certificate_to_json(const Json& input_spec, const std::string& strategy,
                         const TwistCertificate& cert) {
    Json checks = Json::array();
    for (const auto& report : cert.checks) checks.push_back(report_to_json(report));
    return Json{{"input", input_spec},
                {"input_hash", fnv1a_hex(input_spec.dump())},
                {"strategy", strategy},
                {"sigma", pairing_to_json(cert.sigma)},
                {"chi0", pairing_to_json(cert.chi_zero)},
                {"chi_sigma", pairing_to_json(cert.chi_sigma)},
                {"checks", checks},
                {"pass", cert.pass()}};
}

VerifyResult verify_certificate(const Json& certificate) {
    try {
        SpecDocument input = spec_from_json(certificate.at("input"));
        if (!input.bicharacter) return {false, "certificate input lacks a bicharacter"};
        const Bicharacter& chi = *input.bicharacter;
        Cocycle sigma(input.group, pairing_values_from_json(certificate.at("sigma")));

        bool exhaustive = false;
        for (const auto& stated : certificate.at("checks"))
            if (stated.at("name").get<std::string>() == "exhaustive_twist_identity")
                exhaustive = true;

        // Everything the certificate states is a function of (chi, sigma).
        TwistCertificate fresh = certify_cocycle(chi, sigma, exhaustive);
        if (pairing_to_json(fresh.chi_zero) != certificate.at("chi0"))
            return {false, "stated chi0 differs from its recomputation"};
        if (pairing_to_json(fresh.chi_sigma) != certificate.at("chi_sigma"))
            return {false, "stated chi_sigma differs from its recomputation"};

        const Json& stated_checks = certificate.at("checks");
        if (stated_checks.size() != fresh.checks.size())
            return {false, "certificate states a different number of checks"};
        for (std::size_t i = 0; i < fresh.checks.size(); ++i) {
            if (stated_checks.at(i) != report_to_json(fresh.checks[i]))
                return {false, "check '" + fresh.checks[i].name +
                                   "' disagrees with its recomputation"};
        }
        bool fresh_pass = fresh.pass();

        if (certificate.contains("algebra")) {
            if (!input.algebra) return {false, "certificate has no input algebra to twist"};
            ColorLieAlgebra twisted = twist_algebra(*input.algebra, sigma);
            if (algebra_to_json(twisted) != certificate.at("algebra").at("twisted"))
                return {false, "stated twisted algebra differs from its recomputation"};
            SuperReport super = check_super(twisted);
            if (super_report_to_json(super) != certificate.at("algebra").at("super_check"))
                return {false, "stated super check disagrees with its recomputation"};
            fresh_pass = fresh_pass && super.pass();
        }
        if (certificate.at("pass").get<bool>() != fresh_pass)
            return {false, "overall pass flag disagrees with recomputation"};
    } catch (const Json::exception& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    }
    return {true, ""};
}

}  // namespace colorlie
