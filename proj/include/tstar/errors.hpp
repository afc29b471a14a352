#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tstar {

// Parameter outside the documented range of an operation.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested search space is provably empty (minimum degree too large for
// any graph lacking the property to exist).
class empty_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A property queried below the smallest order at which it is meaningful.
class property_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class invalid_degree_list : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family enumeration would exceed the caller's cap.
class size_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A search ran out of its evaluation budget before finishing.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tstar
