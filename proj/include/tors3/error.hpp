#pragma once

#include <stdexcept>
#include <string>

namespace tors3 {

/// Base class for every failure raised by the library. The message is the
/// stable, user-facing diagnostic ("insufficient precision", "numerically
/// singular", ...); callers match on the type, not the text.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what = "insufficient precision")
      : Error(what) {}
};

class SingularError : public Error {
 public:
  SingularError() : Error("numerically singular") {}
};

class NoCandidateError : public Error {
 public:
  NoCandidateError() : Error("no candidate") {}
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace tors3
