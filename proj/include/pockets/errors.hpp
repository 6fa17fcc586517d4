#ifndef POCKETS_ERRORS_HPP
#define POCKETS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pockets {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad sizes, unknown names, out-of-range indices.
class invalid_parameter : public error {
 public:
  using error::error;
};

// A stated mathematical precondition does not hold (irregular graph where
// regularity is required, wrong specified-vertex degree, non-cospectral
// seeds, ...).
class precondition_violation : public error {
 public:
  using error::error;
};

// Malformed serialized input; offset is the byte position within the record.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class size_limit_exceeded : public error {
 public:
  using error::error;
};

// Exhausted internal budgets or failed internal consistency checks.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace pockets

#endif
