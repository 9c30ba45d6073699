#pragma once

#include <stdexcept>
#include <string>

namespace toric {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry_core
struct DimensionUnsupported : Error { using Error::Error; };
struct DegenerateSpan : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };

// blending / variety
struct OutsideDomain : Error { using Error::Error; };
struct NonPositiveInput : Error { using Error::Error; };

// ipf
struct NotInterior : Error { using Error::Error; };

// injectivity
struct SizeMismatch : Error { using Error::Error; };

// triangulation
struct NonGenericLifting : Error { using Error::Error; };
struct DegenerateLift : Error { using Error::Error; };
struct InvalidTriangulation : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

}  // namespace toric
