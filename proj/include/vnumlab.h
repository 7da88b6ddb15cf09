/* C interface to the vnumlab library.
 *
 * Handles are opaque. Every call that can fail returns a vnl_status and
 * leaves a message in vnl_last_error() (thread local). Strings returned
 * through out-parameters are owned by the caller and released with
 * vnl_string_free.
 */
#ifndef VNUMLAB_H
#define VNUMLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VNL_API __declspec(dllexport)
#else
#define VNL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vnl_status {
  VNL_OK = 0,
  VNL_ERR_INPUT = 2,          /* malformed family text */
  VNL_ERR_RESOURCE = 3,       /* generator or memory cap reached */
  VNL_ERR_ARGUMENT = 4,       /* bad argument: null pointer, unknown format */
  VNL_ERR_INTERNAL = 5,
  VNL_ERR_NOT_ASSOCIATED = 6, /* local invariant requested at a non-associated prime */
  VNL_ERR_ORACLE_CAP = 7
} vnl_status;

typedef enum vnl_format {
  VNL_FORMAT_TABLE = 0,
  VNL_FORMAT_CSV = 1,
  VNL_FORMAT_JSON = 2,
  VNL_FORMAT_PLOT = 3
} vnl_format;

typedef struct vnl_family vnl_family;
typedef struct vnl_report vnl_report;

typedef struct vnl_lab_options {
  unsigned n_max;
  unsigned window;
  size_t generator_limit;
  unsigned threads; /* 0 picks the hardware concurrency */
} vnl_lab_options;

typedef struct vnl_random_params {
  unsigned vars;
  unsigned max_deg;
  unsigned gens;
  unsigned components;
  unsigned max_weight;
} vnl_random_params;

VNL_API const char* vnl_version(void);
VNL_API const char* vnl_last_error(void);

VNL_API vnl_lab_options vnl_lab_options_default(void);
VNL_API vnl_random_params vnl_random_params_default(void);

VNL_API vnl_status vnl_family_parse(const char* text, vnl_family** out);
VNL_API vnl_status vnl_family_random(uint64_t seed, const vnl_random_params* params,
                                     vnl_family** out);
VNL_API void vnl_family_free(vnl_family* family);
/* Canonical text form of the family. */
VNL_API vnl_status vnl_family_echo(const vnl_family* family, char** out);

VNL_API vnl_status vnl_run_ass(const vnl_family* family, unsigned n,
                               const vnl_lab_options* options, vnl_report** out);
VNL_API vnl_status vnl_run_vnumber(const vnl_family* family, unsigned n,
                                   const vnl_lab_options* options, vnl_report** out);
VNL_API vnl_status vnl_run_analyze(const vnl_family* family, const vnl_lab_options* options,
                                   vnl_report** out);
VNL_API vnl_status vnl_run_verify(const vnl_family* family, const vnl_lab_options* options,
                                  vnl_report** out);
VNL_API vnl_status vnl_run_explore(uint64_t seed, unsigned trials,
                                   const vnl_random_params* params,
                                   const vnl_lab_options* options, vnl_report** out);

/* Failed verdicts for verify reports, flagged trials for explore reports. */
VNL_API size_t vnl_report_flagged(const vnl_report* report);
/* Nonzero when evaluation stopped early at a resource cap (or a trial was skipped). */
VNL_API int vnl_report_truncated(const vnl_report* report);
VNL_API vnl_status vnl_report_render(const vnl_report* report, vnl_format format, int color,
                                     char** out);
VNL_API void vnl_report_free(vnl_report* report);

VNL_API void vnl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* VNUMLAB_H */
