#pragma once

#include <stdexcept>

namespace lcg {

// Base for every domain error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poset construction
struct CycleError : Error { using Error::Error; };
struct NoBoundError : Error { using Error::Error; };
struct UnknownColorError : Error { using Error::Error; };

// structure construction and slicing
struct LoopError : Error { using Error::Error; };
struct AsymmetryError : Error { using Error::Error; };
struct BadColorError : Error { using Error::Error; };
struct EmptySetError : Error { using Error::Error; };
struct EmptySliceError : Error { using Error::Error; };
struct FlagError : Error { using Error::Error; };
struct PosetMismatchError : Error { using Error::Error; };

// classifiers
struct ShapeError : Error { using Error::Error; };
struct NotVertexUniformError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };

// catalog and census
struct BadSpecError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };

// file formats
struct ParseError : Error { using Error::Error; };

}  // namespace lcg
