// Copyright 2026 The panelcollapse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PANELCOLLAPSE_PANEL_COLLAPSE_H_
#define PANELCOLLAPSE_PANEL_COLLAPSE_H_

/*
 * C interface to the panelcollapse library.
 *
 * Handles are opaque and immutable after creation. Every function returning
 * pc_status leaves a message in pc_last_error() (thread local) on failure.
 * Strings returned through char** are owned by the caller and released with
 * pc_string_free. Output pointers are untouched on failure.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PC_API __declspec(dllexport)
#else
#define PC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pc_complex pc_complex;
typedef struct pc_action pc_action;
typedef struct pc_wallspace pc_wallspace;

typedef enum pc_status {
  PC_OK = 0,
  PC_ERR_PARSE = 1,
  PC_ERR_STRUCTURE = 2,
  PC_ERR_VALIDATION = 3,
  PC_ERR_PRECONDITION = 4,
  PC_ERR_ARGUMENT = 5,  /* null pointer or mismatched handles */
  PC_ERR_INVARIANT = 6, /* internal guarantee failed: a bug */
  PC_ERR_INTERNAL = 7   /* unexpected exception */
} pc_status;

PC_API const char* pc_version(void);
PC_API const char* pc_status_name(pc_status status);
PC_API const char* pc_last_error(void);
PC_API void pc_string_free(char* s);

/* Complexes in the "complex v1" text format. */
PC_API pc_status pc_complex_parse(const char* text, pc_complex** out);
PC_API void pc_complex_free(pc_complex* cx);
PC_API pc_status pc_complex_serialize(const pc_complex* cx, char** out);
PC_API pc_status pc_complex_counts(const pc_complex* cx, size_t* vertices, size_t* edges,
                                   int* dimension);

/* Validation never fails on an invalid complex; *valid reports the verdict. */
PC_API pc_status pc_validate_text(const char* text, int json, int* valid, char** report);

PC_API pc_status pc_hyperplanes_report(const pc_complex* cx, int json, char** out);
PC_API pc_status pc_panels_report(const pc_complex* cx, int json, char** out);
/* action may be NULL for the trivial group. */
PC_API pc_status pc_stats_report(const pc_complex* cx, const pc_action* action, int json,
                                 char** out);

/* Actions in the "action v1" text format; bound to the complex they were
 * parsed against. */
PC_API pc_status pc_action_parse(const pc_complex* cx, const char* text, pc_action** out);
PC_API pc_status pc_action_trivial(const pc_complex* cx, pc_action** out);
PC_API void pc_action_free(pc_action* action);
PC_API size_t pc_action_order(const pc_action* action);

/* panels: "H,E,side" keys separated by ';', or NULL to pick one extremal
 * panel. Any of out, provenance and report may be NULL. */
PC_API pc_status pc_collapse(const pc_complex* cx, const char* panels, int json_report,
                             pc_complex** out, char** provenance, char** report);

/* Equivariant collapse down to a tree. Any output may be NULL. */
PC_API pc_status pc_run(const pc_complex* cx, const pc_action* action, char** trace_text,
                        char** trace_json, pc_complex** tree);

/* Wallspaces in the "wallspace v1" text format. */
PC_API pc_status pc_wallspace_parse(const char* text, pc_wallspace** out);
PC_API void pc_wallspace_free(pc_wallspace* space);
PC_API pc_status pc_dualize(const pc_wallspace* space, char** complex_text);
PC_API pc_status pc_stallings(const pc_wallspace* space, int json, char** report);

/* provenance (may be NULL) is the sidecar written by pc_collapse for cx. */
PC_API pc_status pc_export_dot(const pc_complex* cx, const char* provenance, char** out);

/* Runs the collapse driver on count random instances. */
PC_API pc_status pc_fuzz(uint64_t seed, int count, int json, char** report, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* PANELCOLLAPSE_PANEL_COLLAPSE_H_ */
