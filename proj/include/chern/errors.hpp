#ifndef CHERN_ERRORS_HPP
#define CHERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chern {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A cyclic word became (or would become) empty.
struct EmptyWordError : Error {
    using Error::Error;
};

/// A required letter has zero occurrences.
struct MissingLetterError : Error {
    using Error::Error;
};

/// A word contains a letter outside its declared alphabet.
struct ForeignLetterError : Error {
    using Error::Error;
};

/// Three indices or marked points that were required to be distinct coincide.
struct DegenerateTripleError : Error {
    using Error::Error;
};

/// A shelling failed validation where a valid one was required.
struct InvalidShellingError : Error {
    using Error::Error;
};

/// A simplex is not part of the complex it was looked up in.
struct UnknownSimplexError : Error {
    using Error::Error;
};

/// The complex is not a closed surface, or its orientations are inconsistent.
struct NotClosedOrientedSurfaceError : Error {
    using Error::Error;
};

/// Product fiber length below the minimum of two.
struct FiberTooShortError : Error {
    using Error::Error;
};

/// Fibration data is inconsistent or does not describe a circle bundle.
struct MalformedFibrationError : Error {
    using Error::Error;
};

/// 64-bit signed arithmetic would overflow; results are never wrapped.
struct OverflowError : Error {
    using Error::Error;
};

/// An input file does not match the expected schema.
struct FormatError : Error {
    using Error::Error;
};

} // namespace chern

#endif // CHERN_ERRORS_HPP
