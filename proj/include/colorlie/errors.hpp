#pragma once

#include <stdexcept>
#include <string>

namespace colorlie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// solve_root_constraints: pow(A,n) != pow(B,r), the joint root cannot exist.
struct IncompatibleConstraints : Error { using Error::Error; };

// solve_root_constraints: constraints are compatible but the torsion
// congruence has no integer solution; the input pairing data is inconsistent.
struct NoSolution : Error { using Error::Error; };

struct PresentationMismatch : Error { using Error::Error; };
struct InfiniteGroup : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// A scalar with a free (formal-symbol) part has no image among roots of unity.
struct NotARootOfUnity : Error { using Error::Error; };

// Torsion denominator does not divide the requested cyclotomic level.
struct LevelMismatch : Error { using Error::Error; };

// A diagonal bicharacter value is neither +1 nor -1.
struct NotASign : Error { using Error::Error; };

// Incremental cocycle extension hit sigma(v,v) != 1 on the word v for t^n.
struct DiagonalObstruction : Error { using Error::Error; };

struct UnknownBasisName : Error { using Error::Error; };
struct UnknownDemo : Error { using Error::Error; };

// Structural validation failures (relation compatibility, bad invariants).
struct ValidationError : Error { using Error::Error; };

// Malformed input documents.
struct ParseError : Error { using Error::Error; };

}  // namespace colorlie
