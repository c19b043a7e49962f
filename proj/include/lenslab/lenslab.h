/*
 * Copyright 2026 The lenslab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to liblenslab. Handles are opaque; every call that can fail
 * returns a status and leaves a message for lenslab_last_error() on the
 * calling thread. Strings returned through out-parameters are owned by the
 * caller and released with lenslab_string_free().
 */

#ifndef LENSLAB_LENSLAB_H_
#define LENSLAB_LENSLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(LENSLAB_BUILDING)
#define LENSLAB_API __attribute__((visibility("default")))
#else
#define LENSLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lenslab_status {
  LENSLAB_OK = 0,
  LENSLAB_ERR_INVALID_PRESENTATION,
  LENSLAB_ERR_BOUND_EXCEEDED,
  LENSLAB_ERR_CATEGORY_MISMATCH,
  LENSLAB_ERR_NOT_DISCRETE_OPFIBRATION,
  LENSLAB_ERR_NOT_COSIEVE,
  LENSLAB_ERR_NOT_A_COCONE,
  LENSLAB_ERR_NOT_MONIC,
  LENSLAB_ERR_NOT_EPIC,
  LENSLAB_ERR_SQUARE_DOES_NOT_COMMUTE,
  LENSLAB_ERR_NOT_WELL_DEFINED,
  LENSLAB_ERR_PRECONDITION_FAILED,
  LENSLAB_ERR_NOT_SURJECTIVE_ON_COMPOSABLE_PAIRS,
  LENSLAB_ERR_NOT_A_COFORK,
  LENSLAB_ERR_PARSE,
  LENSLAB_ERR_RESOLUTION,
  LENSLAB_ERR_VALIDATION,
  LENSLAB_ERR_INVALID_ARGUMENT,
  LENSLAB_ERR_INTERNAL
} lenslab_status;

typedef enum lenslab_format { LENSLAB_FORMAT_TEXT = 0, LENSLAB_FORMAT_JSON = 1 } lenslab_format;

typedef struct lenslab_options lenslab_options;
typedef struct lenslab_workspace lenslab_workspace;
typedef struct lenslab_report lenslab_report;

LENSLAB_API const char* lenslab_version(void);
LENSLAB_API const char* lenslab_status_name(lenslab_status status);
/* Message of the last failing call on this thread, or "". */
LENSLAB_API const char* lenslab_last_error(void);
LENSLAB_API void lenslab_string_free(char* s);

LENSLAB_API lenslab_options* lenslab_options_create(void);
LENSLAB_API void lenslab_options_destroy(lenslab_options* o);
/* Keys: bound, seed, universe, corpus, validate ("0"/"1"), and the
   repeatable functor and witness. */
LENSLAB_API lenslab_status lenslab_options_set(lenslab_options* o, const char* key,
                                               const char* value);

LENSLAB_API lenslab_status lenslab_workspace_parse(const char* text, size_t length, int validate,
                                                   lenslab_workspace** out);
LENSLAB_API lenslab_status lenslab_workspace_load_file(const char* path, int validate,
                                                       lenslab_workspace** out);
LENSLAB_API lenslab_status lenslab_workspace_print(const lenslab_workspace* ws, char** out);
LENSLAB_API void lenslab_workspace_destroy(lenslab_workspace* ws);

/* Runs a subcommand on a loaded workspace; names exclude the file. */
LENSLAB_API lenslab_status lenslab_run(const lenslab_workspace* ws, const char* command,
                                       const char* const* names, size_t count,
                                       const lenslab_options* o, lenslab_report** out);
/* Runs argv = {subcommand, FILE, names...} (or {"paper-suite"}). Load
   failures are reported inside the report, not as a status. */
LENSLAB_API lenslab_status lenslab_run_argv(const char* const* argv, size_t argc,
                                            const lenslab_options* o, lenslab_report** out);

LENSLAB_API int lenslab_report_exit_code(const lenslab_report* r);
LENSLAB_API lenslab_status lenslab_report_render(const lenslab_report* r, lenslab_format format,
                                                 int timing, char** out);
LENSLAB_API void lenslab_report_destroy(lenslab_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LENSLAB_LENSLAB_H_ */
