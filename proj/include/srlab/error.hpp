#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace srlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands drawn from different carriers, or an element outside its carrier.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

// The requested operation has no decision procedure on this carrier.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured cap (order, node budget, conductor size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold failed; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace srlab
