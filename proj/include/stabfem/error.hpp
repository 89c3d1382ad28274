#pragma once

#include <stdexcept>
#include <string>

namespace stabfem {

enum class Status {
  ok = 0,
  invalid_argument,
  degenerate_element,
  singular_system,
  convergence_failure,
  config_error,
  parse_error,
  io_error,
  internal_error,
};

const char* status_name(Status s);

// Every library failure is thrown as Error; the C boundary maps it to a code.
class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] void fail(Status status, const std::string& message);

}  // namespace stabfem
