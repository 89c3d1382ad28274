#include "stabfem.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "stabfem/error.hpp"
#include "stabfem/run_config.hpp"
#include "stabfem/runner.hpp"

struct stabfem_config {
  stabfem::RunConfig cfg;
};

struct stabfem_report {
  stabfem::RunReport report;
};

namespace {

thread_local std::string g_last_error;

stabfem_status map_status(stabfem::Status s) {
  switch (s) {
    case stabfem::Status::ok: return STABFEM_OK;
    case stabfem::Status::invalid_argument: return STABFEM_ERR_INVALID_ARGUMENT;
    case stabfem::Status::degenerate_element: return STABFEM_ERR_DEGENERATE_ELEMENT;
    case stabfem::Status::singular_system: return STABFEM_ERR_SINGULAR_SYSTEM;
    case stabfem::Status::convergence_failure: return STABFEM_ERR_CONVERGENCE_FAILURE;
    case stabfem::Status::config_error: return STABFEM_ERR_CONFIG;
    case stabfem::Status::parse_error: return STABFEM_ERR_PARSE;
    case stabfem::Status::io_error: return STABFEM_ERR_IO;
    case stabfem::Status::internal_error: return STABFEM_ERR_INTERNAL;
  }
  return STABFEM_ERR_INTERNAL;
}

stabfem_status fail_with(stabfem_status code, const char* message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
stabfem_status guarded(Fn&& fn) {
  try {
    fn();
    return STABFEM_OK;
  } catch (const stabfem::Error& e) {
    return fail_with(map_status(e.status()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(STABFEM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(STABFEM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(STABFEM_ERR_INTERNAL, "unknown failure");
  }
}

stabfem_status copy_string(const std::string& text, char** out) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (buf == nullptr) return fail_with(STABFEM_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *out = buf;
  return STABFEM_OK;
}

}  // namespace

extern "C" {

const char* stabfem_version(void) { return "0.1.0"; }

const char* stabfem_last_error(void) { return g_last_error.c_str(); }

stabfem_status stabfem_config_parse(const char* text, stabfem_config** out) {
  if (text == nullptr || out == nullptr) {
    return fail_with(STABFEM_ERR_INVALID_ARGUMENT,
                     "stabfem_config_parse: null argument");
  }
  return guarded([&] {
    auto config = new stabfem_config{stabfem::parse_config(text)};
    *out = config;
  });
}

void stabfem_config_free(stabfem_config* config) { delete config; }

stabfem_status stabfem_run(const stabfem_config* config, stabfem_report** out) {
  if (config == nullptr || out == nullptr) {
    return fail_with(STABFEM_ERR_INVALID_ARGUMENT, "stabfem_run: null argument");
  }
  return guarded([&] {
    auto report = new stabfem_report{stabfem::run_all(config->cfg)};
    *out = report;
  });
}

void stabfem_report_free(stabfem_report* report) { delete report; }

stabfem_status stabfem_report_table(const stabfem_report* report, char** out) {
  if (report == nullptr || out == nullptr) {
    return fail_with(STABFEM_ERR_INVALID_ARGUMENT,
                     "stabfem_report_table: null argument");
  }
  stabfem_status rc = STABFEM_OK;
  const stabfem_status guard_rc = guarded([&] {
    rc = copy_string(stabfem::render_table(report->report), out);
  });
  return guard_rc != STABFEM_OK ? guard_rc : rc;
}

stabfem_status stabfem_report_json(const stabfem_report* report, char** out) {
  if (report == nullptr || out == nullptr) {
    return fail_with(STABFEM_ERR_INVALID_ARGUMENT,
                     "stabfem_report_json: null argument");
  }
  stabfem_status rc = STABFEM_OK;
  const stabfem_status guard_rc = guarded([&] {
    rc = copy_string(stabfem::render_json(report->report), out);
  });
  return guard_rc != STABFEM_OK ? guard_rc : rc;
}

void stabfem_string_free(char* text) { std::free(text); }

}  // extern "C"
