#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace robsel {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Instance failed validation; carries the full report.
class InvalidInstanceError : public Error {
 public:
  InvalidInstanceError(const std::string& what, std::vector<std::string> report)
      : Error(what), report_(std::move(report)) {}
  const std::vector<std::string>& report() const { return report_; }

 private:
  std::vector<std::string> report_;
};

// A solver was asked to run on an instance kind it does not handle.
class MethodMismatchError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration would exceed the configured limits.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Randomized rounding stayed infeasible in every attempt. Carries the
// scenarios that were left short in the last attempt.
class RoundingFailedError : public Error {
 public:
  RoundingFailedError(const std::string& what, std::vector<int> scenarios)
      : Error(what), failed_scenarios_(std::move(scenarios)) {}
  const std::vector<int>& failed_scenarios() const { return failed_scenarios_; }

 private:
  std::vector<int> failed_scenarios_;
};

}  // namespace robsel
