#pragma once

#include <stdexcept>
#include <string>

namespace semiprim {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad degrees, non-bijective image lists, subgroups that
/// are not subgroups, parameters outside a family's range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap would be exceeded. Never silently truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// File or JSON content that cannot be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace semiprim
