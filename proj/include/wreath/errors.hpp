#pragma once
// Error types thrown by the library.  Every failure mode that callers are
// expected to handle gets its own type; everything else is a plain Error.

#include <stdexcept>
#include <string>

namespace wreath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar / rational-function arithmetic.
struct DivisionByZero : Error { using Error::Error; };
struct MixedModulus : Error { using Error::Error; };
struct SingularSubstitution : Error { using Error::Error; };

// Group algebra construction.
struct IndexOutOfRange : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };
struct SingularSpectralParameters : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };

// Combinatorics of multipartitions and tableaux.
struct NodeNotInShape : Error { using Error::Error; };
struct InvalidTableau : Error { using Error::Error; };

}  // namespace wreath
