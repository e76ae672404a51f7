#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sl12 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A step of the construction produced a result that contradicts a
/// verified precondition. `check()` names the failing step.
class ConsistencyError : public Error {
 public:
  ConsistencyError(std::string check, const std::string& detail)
      : Error(check + ": " + detail), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// Factoring ran out of its Pollard-rho iteration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed certificate input. `path()` is a JSON-pointer-like field path.
class FormatError : public Error {
 public:
  FormatError(std::string path, const std::string& detail)
      : Error(path + ": " + detail), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sl12
