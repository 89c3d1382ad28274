#include "stabfem/error.hpp"

namespace stabfem {

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::invalid_argument: return "invalid_argument";
    case Status::degenerate_element: return "degenerate_element";
    case Status::singular_system: return "singular_system";
    case Status::convergence_failure: return "convergence_failure";
    case Status::config_error: return "config_error";
    case Status::parse_error: return "parse_error";
    case Status::io_error: return "io_error";
    case Status::internal_error: return "internal_error";
  }
  return "unknown";
}

void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace stabfem
