#pragma once

#include <stdexcept>
#include <string>

namespace skl {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct NonInvertibleDenominator : Error {
    using Error::Error;
};

struct CellEscapesCoset : Error {
    using Error::Error;
};

struct CrosscheckFailed : Error {
    using Error::Error;
};

struct NotACosetRep : Error {
    using Error::Error;
};

struct NotInCell : Error {
    using Error::Error;
};

struct IdentificationFailed : Error {
    using Error::Error;
};

struct SingularGram : Error {
    using Error::Error;
};

struct SchemaMismatch : Error {
    using Error::Error;
};

struct IOFailure : Error {
    using Error::Error;
};

}  // namespace skl
