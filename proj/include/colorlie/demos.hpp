#pragma once

#include <string>
#include <vector>

#include "colorlie/json_io.hpp"

namespace colorlie {

// Ready-to-run example specs: "gl-super" (Z/2-graded gl(1|1)),
// "quantum-torus" (Z^2 with a formal parameter q), "z3z3" (Z/3 x Z/3 with a
// cube root of unity and its gl algebra).  Throws UnknownDemo otherwise.
SpecDocument demo_spec(const std::string& name);

std::vector<std::string> demo_names();

}  // namespace colorlie
