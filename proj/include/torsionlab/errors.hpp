#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- su2_algebra ---
struct CentralElement : Error {
    using Error::Error;
};

// --- presentation ---
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& what, int line_, int column_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) +
                ": " + what),
          line(line_), column(column_) {}
};
struct UnknownGenerator : Error {
    using Error::Error;
};
struct DeficiencyMismatch : Error {
    using Error::Error;
};
struct MissingPeripheralData : Error {
    using Error::Error;
};
struct NotKnotLike : Error {
    using Error::Error;
};
struct InvalidRepresentation : Error {
    using Error::Error;
};

// --- torsion_core ---
struct DegenerateComplex : Error {
    using Error::Error;
};
struct InvalidBasis : Error {
    using Error::Error;
};

// --- knot_torsion ---
struct InvalidParameter : Error {
    using Error::Error;
};
struct CentralMeridian : Error {
    using Error::Error;
};
struct NotRegular : Error {
    using Error::Error;
};
struct NotMuRegular : Error {
    using Error::Error;
};
struct NonRegularTheta : Error {
    using Error::Error;
};
struct DegeneratePairing : Error {
    using Error::Error;
};

}  // namespace torsionlab
