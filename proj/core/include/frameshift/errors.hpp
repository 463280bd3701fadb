#pragma once

#include <stdexcept>
#include <string>

namespace frameshift {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid shape/spacing mismatch between operands.
struct DimensionError : Error {
    using Error::Error;
};

// Pooling/dilation factor does not divide the grid size.
struct DivisibilityError : Error {
    using Error::Error;
};

// Littlewood-Paley sum vanishes at some grid frequency.
struct DegenerateFrameError : Error {
    using Error::Error;
};

// Wavelet scales leave part of the frequency grid uncovered.
struct CoverageError : Error {
    using Error::Error;
};

// Unknown atom label, or propagation through the output atom.
struct LabelError : Error {
    using Error::Error;
};

// Module-sequence fails the admissibility condition.
struct AdmissibilityError : Error {
    using Error::Error;
};

// A theorem precondition is violated (e.g. Jacobian too large,
// non-band-limited input to the deformation operator).
struct PreconditionError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace frameshift
