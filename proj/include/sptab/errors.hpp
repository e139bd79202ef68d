#pragma once

#include <stdexcept>
#include <string>

namespace sptab {

/// Raised when a value violates one of its structural invariants.
/// The message names the violated invariant.
class invalid_object : public std::invalid_argument {
public:
  explicit invalid_object(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operation's precondition does not hold for otherwise valid input.
class precondition_error : public std::domain_error {
public:
  explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace sptab
