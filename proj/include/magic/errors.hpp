#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace magic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters, malformed input, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A time or size budget ran out before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The input is not a member of the relevant set (no such object exists).
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Resource limits shared by the long-running operations. A default Budget is unlimited.
struct Budget {
  std::optional<double> seconds;
  std::optional<std::size_t> max_elements;
  std::optional<std::size_t> max_nodes;

  static Budget unlimited() { return {}; }
  static Budget time_limit(double s) {
    Budget b;
    b.seconds = s;
    return b;
  }
};

// Cheap periodic checker for a Budget.
class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b, std::string what = "computation");
  void check_elements(std::size_t count) const;
  void tick(std::size_t amount = 1);
  void check_time() const;

 private:
  Budget budget_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
  std::size_t nodes_ = 0;
  std::size_t since_check_ = 0;
};

}  // namespace magic
