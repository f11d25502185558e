#pragma once

#include <stdexcept>
#include <string>

namespace mlcn {

// Precondition on a call argument was violated.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized construction exhausted its rejection budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A metric has no defined value on the given graph (e.g. ASPL with no reachable pair).
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace mlcn
