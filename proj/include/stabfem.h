#ifndef STABFEM_H
#define STABFEM_H

/* C interface to the stabilized finite element benchmark library.
 *
 * All entry points return a stabfem_status; on any failure the returned
 * handle/string is untouched and stabfem_last_error() carries a message for
 * the calling thread. Handles are opaque and must be released with the
 * matching *_free function. NULL is always safe to pass to a free function.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stabfem_status {
  STABFEM_OK = 0,
  STABFEM_ERR_INVALID_ARGUMENT = 1,
  STABFEM_ERR_DEGENERATE_ELEMENT = 2,
  STABFEM_ERR_SINGULAR_SYSTEM = 3,
  STABFEM_ERR_CONVERGENCE_FAILURE = 4,
  STABFEM_ERR_CONFIG = 5,
  STABFEM_ERR_PARSE = 6,
  STABFEM_ERR_IO = 7,
  STABFEM_ERR_INTERNAL = 8
} stabfem_status;

typedef struct stabfem_config stabfem_config;
typedef struct stabfem_report stabfem_report;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
const char* stabfem_version(void);

/* Message of the most recent failure on this thread, or "" if none. The
 * pointer stays valid until the next failing call on the same thread. */
const char* stabfem_last_error(void);

/* Parses and validates a JSON configuration document. */
stabfem_status stabfem_config_parse(const char* text, stabfem_config** out);
void stabfem_config_free(stabfem_config* config);

/* Runs every scheme/angle combination in the config and writes the
 * requested artifacts under its output directory. */
stabfem_status stabfem_run(const stabfem_config* config, stabfem_report** out);
void stabfem_report_free(stabfem_report* report);

/* Renders the report; *out receives a NUL-terminated string owned by the
 * caller, released with stabfem_string_free. */
stabfem_status stabfem_report_table(const stabfem_report* report, char** out);
stabfem_status stabfem_report_json(const stabfem_report* report, char** out);
void stabfem_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* STABFEM_H */
