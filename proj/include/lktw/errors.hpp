#pragma once

#include <stdexcept>
#include <string>

namespace lktw {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad file contents, invalid options.
class input_error : public error {
 public:
  using error::error;
};

/// Vector of the wrong length for the ambient model.
class dimension_error : public input_error {
 public:
  using input_error::input_error;
};

/// A geometric precondition failed: a point off the model surface, an
/// antipodal transport, coincident curves, a non-embedded ribbon, ...
class geometry_error : public error {
 public:
  using error::error;
};

/// Argument outside the domain of a kernel or bound function.
class domain_error : public error {
 public:
  using error::error;
};

/// The requested transport format is not defined for this space or input.
class unsupported_format : public error {
 public:
  using error::error;
};

}  // namespace lktw
