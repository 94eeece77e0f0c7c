#pragma once

#include <stdexcept>
#include <string>

namespace layercake {

/// Domain error with a stable name ("AssociativityViolation", "BudgetExceeded", ...).
/// The name is part of the public contract: the CLI reports it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace layercake
