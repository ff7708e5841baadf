#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "colorlie/algebra.hpp"
#include "colorlie/cocycle_construction.hpp"
#include "colorlie/oracle.hpp"

namespace colorlie {

using Json = nlohmann::json;

// Scalar literal: {"torsion": "p/q", "free": {"sym": "p/q", ...}}.
Json to_json(const RootScalar& s);
RootScalar root_scalar_from_json(const Json& j);

// Cyclotomic literal: {"level": N, "terms": [[k, "p/q"], ...]}, reduced on parse.
Json to_json(const CycloNumber& c);
CycloNumber cyclo_from_json(const Json& j);

// Group block: {"generators": ["g1", ...], "relations": [[...], ...]}.
Json group_to_json(const GroupPresentation& g);
GroupPtr group_from_json(const Json& j);

// Value block shared by bicharacters and cocycles: {"values": [[scalar, ...], ...]}.
Json pairing_to_json(const Pairing& p);
std::vector<std::vector<RootScalar>> pairing_values_from_json(const Json& j);

// Algebra block: {"level": N, "basis": [{"name": ..., "grade": [...]}, ...],
//                 "brackets": [{"left", "right", "result": [{"basis", "coeff"}]}]}.
Json algebra_to_json(const ColorLieAlgebra& a);
ColorLieAlgebra algebra_from_json(const Json& j, const GroupPtr& group, const Bicharacter& chi);

// One input file: required group, optional bicharacter and algebra blocks.
struct SpecDocument {
    GroupPtr group;
    std::optional<Bicharacter> bicharacter;
    std::optional<ColorLieAlgebra> algebra;
};
SpecDocument spec_from_json(const Json& j);
Json spec_to_json(const SpecDocument& doc);

Json report_to_json(const CheckReport& r);
Json super_report_to_json(const SuperReport& r);
Json census_to_json(const CensusTable& t);

std::string fnv1a_hex(const std::string& bytes);

// Certificate body: input spec, strategy, sigma/chi0/chi_sigma value blocks
// and every check with its evaluated sides.  The optional algebra section is
// appended by the caller.
Json certificate_to_json(const Json& input_spec, const std::string& strategy,
                         const TwistCertificate& cert);

// Recomputes every identity a certificate states and compares with the
// recorded outcomes; `detail` names the first disagreement.
struct VerifyResult {
    bool consistent = true;
    std::string detail;
};
VerifyResult verify_certificate(const Json& certificate);

}  // namespace colorlie
