#pragma once

#include <stdexcept>
#include <string>

namespace chilab {

/// Precondition violated by the caller (bad parameter range, empty input).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A configured search or sampling budget ran out before a result was found.
class BudgetExhausted : public std::runtime_error {
  public:
    BudgetExhausted(const std::string& what, std::string last_tried)
        : std::runtime_error(what + " (last tried: " + last_tried + ")"),
          last_tried_(std::move(last_tried)) {}

    const std::string& last_tried() const noexcept { return last_tried_; }

  private:
    std::string last_tried_;
};

}  // namespace chilab
