#include "magic/errors.hpp"

namespace magic {

BudgetClock::BudgetClock(const Budget& b, std::string what)
    : budget_(b), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

void BudgetClock::check_elements(std::size_t count) const {
  if (budget_.max_elements && count > *budget_.max_elements) {
    throw BudgetExceeded(what_ + ": element budget of " + std::to_string(*budget_.max_elements) +
                         " exceeded");
  }
}

void BudgetClock::tick(std::size_t amount) {
  nodes_ += amount;
  since_check_ += amount;
  if (budget_.max_nodes && nodes_ > *budget_.max_nodes) {
    throw BudgetExceeded(what_ + ": node budget of " + std::to_string(*budget_.max_nodes) +
                         " exceeded");
  }
  if (since_check_ >= 4096) {
    since_check_ = 0;
    check_time();
  }
}

void BudgetClock::check_time() const {
  if (!budget_.seconds) return;
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  if (elapsed > *budget_.seconds) {
    throw BudgetExceeded(what_ + ": time budget of " + std::to_string(*budget_.seconds) +
                         " s exceeded");
  }
}

}  // namespace magic
