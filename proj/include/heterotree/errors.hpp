#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heterotree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, tree, edge set, or a colouring that fails an operation's
// precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidEdgeSet : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An exhaustive routine would exceed its configured work limit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t search_space)
      : Error(what), search_space_(search_space) {}

  std::uint64_t search_space() const { return search_space_; }

 private:
  std::uint64_t search_space_;
};

// A proven guarantee did not hold. Always an implementation bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heterotree
