#pragma once

#include <stdexcept>
#include <string>

namespace awshift {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic across two different scalar towers.
struct TowerError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// A sampled parameter point zeroed a denominator (resample and retry).
struct DegenerateParameterError : Error {
    using Error::Error;
};

// Exact Laurent division left a nonzero remainder.  Carries context because
// several checks use this error as the actual test signal.
struct NonExactDivisionError : Error {
    using Error::Error;
};

struct NotAShiftOperatorError : Error {
    using Error::Error;
};

struct NotInSpanError : Error {
    using Error::Error;
};

// star/circ on a polynomial with no parametric construction attached.
struct ProvenanceError : Error {
    using Error::Error;
};

struct EigenvalueCollisionError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// First-order jet arithmetic produced a k-degree > 1 term.
struct JetDegreeError : Error {
    using Error::Error;
};

} // namespace awshift
