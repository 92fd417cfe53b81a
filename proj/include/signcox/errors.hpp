#pragma once

#include <stdexcept>
#include <string>

namespace signcox {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input documents (JSON graphs, presentation files, word strings).
struct ParseError : Error {
  using Error::Error;
};

// A caller violated a documented precondition (bad index range, unsupported
// parameter value, wrong graph shape for the requested operation).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace signcox
