/* C interface to the doublelift library.
 *
 * Structures are opaque handles loaded from the textual format. Every call
 * returns a status; on anything other than DL_OK, dl_last_error() describes
 * the failure for the calling thread. Strings handed out by the library are
 * released with dl_string_free. */
#ifndef DOUBLELIFT_H
#define DOUBLELIFT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define DL_API __attribute__((visibility("default")))
#else
#define DL_API
#endif

typedef struct dl_structure dl_structure;

typedef enum dl_status {
  DL_OK = 0,
  /* The command ran and at least one check failed; dl_last_error() names
     the first failing law. */
  DL_CHECK_FAILED = 1,
  DL_ERR_PARSE = 2,
  DL_ERR_VALIDATION = 3,
  DL_ERR_ARGUMENT = 4,
  DL_ERR_SHAPE = 5,
  DL_ERR_IO = 6,
  DL_ERR_INTERNAL = 7
} dl_status;

typedef enum dl_format { DL_FORMAT_TEXT = 0, DL_FORMAT_JSON = 1 } dl_format;

DL_API dl_status dl_load_file(const char* path, dl_structure** out);
DL_API dl_status dl_load_string(const char* text, dl_structure** out);
DL_API void dl_free(dl_structure* s);

/* "monoid", "category", ..., "double-category"; NULL for a NULL handle. */
DL_API const char* dl_kind(const dl_structure* s);

DL_API dl_status dl_write_canonical(const dl_structure* s, char** out);
DL_API dl_status dl_save_file(const dl_structure* s, const char* path);

/* Each report is written to *report, also when the status is
   DL_CHECK_FAILED. */
DL_API dl_status dl_check(const dl_structure* s, dl_format format, char** report);
/* lifted may be NULL; otherwise it receives the lift when the inputs pass. */
DL_API dl_status dl_lift(const dl_structure* dec, const dl_structure* phi, dl_format format, char** report,
                         dl_structure** lifted);
DL_API dl_status dl_analyze(const dl_structure* c, dl_format format, char** report);
DL_API dl_status dl_folding(const dl_structure* c, unsigned long long node_limit, dl_format format,
                            char** report);
DL_API dl_status dl_adjunction(const dl_structure* group, const dl_structure* coefficients,
                               const dl_structure* const* phis, size_t count, dl_format format, char** report);
/* node_limit 0 skips the folding search. */
DL_API dl_status dl_run_example(const char* name, unsigned long long node_limit, dl_format format,
                                char** report);

/* part is "decorated-bicategory", "precosheaf" or "double-category". */
DL_API dl_status dl_example_structure(const char* name, const char* part, dl_structure** out);

DL_API const char* dl_last_error(void);
DL_API const char* dl_status_name(dl_status status);
DL_API void dl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
