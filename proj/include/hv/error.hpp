#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hv {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed element text. Carries the byte offset of the failure and the
/// tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Malformed input file (table, assignment, samples).
class InputError : public Error {
 public:
  using Error::Error;
};

class MissingKey : public Error {
 public:
  explicit MissingKey(const std::string& key) : Error("assignment has no entry for " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Every pair of a windowed Leibniz sweep left the table's domain.
class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

/// The (L_0, L_1) witness system has no solution with support inside the window.
class NoWitnessAtWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace hv
