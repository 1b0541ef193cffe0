#pragma once

#include <stdexcept>
#include <string>

namespace asmlab {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class HalfPowerAtRoot : public Error {
 public:
  using Error::Error;
};

class RootMismatch : public Error {
 public:
  using Error::Error;
};

class NotAlternating : public Error {
 public:
  NotAlternating(const std::string& line, int index)
      : Error("not an alternating sign matrix: " + line + " " + std::to_string(index)),
        line_(line),
        index_(index) {}
  /// "row" or "column".
  const std::string& line() const { return line_; }
  /// 1-based index of the offending row/column.
  int index() const { return index_; }

 private:
  std::string line_;
  int index_;
};

class InconsistentArrows : public Error {
 public:
  using Error::Error;
};

class DegenerateParams : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class OddExponent : public Error {
 public:
  using Error::Error;
};

class IdentityFailed : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace asmlab
