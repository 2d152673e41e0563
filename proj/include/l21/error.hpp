#pragma once

#include <stdexcept>
#include <string>

namespace l21 {

// Process exit codes used by the command line front end.
enum class ExitCode : int {
  ok = 0,
  malformed_input = 1,
  capacity = 2,
  verification_failed = 3,
  not_found = 4,
  refutation = 5,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept { return ExitCode::malformed_input; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Node list or edge list violates a grid invariant (duplicates, loops, bad index).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a documented size limit of an exhaustive routine.
class CapacityError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::capacity; }
};

// Node-expansion budget ran out; carries the bracket proven so far.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(int lower, int upper, long long expanded)
      : Error("search budget exhausted: lambda in [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "] after " + std::to_string(expanded) + " expansions"),
        lower_(lower),
        upper_(upper),
        expanded_(expanded) {}

  ExitCode exit_code() const noexcept override { return ExitCode::capacity; }
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }
  long long expanded() const noexcept { return expanded_; }

 private:
  int lower_;
  int upper_;
  long long expanded_;
};

}  // namespace l21
