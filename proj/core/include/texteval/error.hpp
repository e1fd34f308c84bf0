#pragma once

#include <stdexcept>
#include <string>

namespace texteval {

// Error taxonomy mirrors the CLI exit codes: usage (1), data/validation (2),
// remote backend (3), numerical abort (4).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class RemoteError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace texteval
