#ifndef ISODESCENT_H
#define ISODESCENT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ISD_API __declspec(dllexport)
#else
#define ISD_API __attribute__((visibility("default")))
#endif

typedef enum isd_status {
  ISD_OK = 0,
  ISD_ERR_INTERNAL = 1,
  ISD_ERR_INVALID = 2,
  ISD_DIAGNOSTIC = 3,
  ISD_FORGE_FAILED = 4,
  ISD_BUDGET_EXCEEDED = 5
} isd_status;

typedef struct isd_job isd_job;
typedef struct isd_report isd_report;

/* Library version, e.g. "0.1.0". */
ISD_API const char* isd_version(void);

/* Message for the last failing call on this thread, "" if none. */
ISD_API const char* isd_last_error(void);

ISD_API isd_job* isd_job_new(void);
ISD_API void isd_job_free(isd_job* job);
/* key is "section.name", e.g. "form.text". */
ISD_API isd_status isd_job_set(isd_job* job, const char* key, const char* value);
/* Returns NULL when unset. Valid until the job changes. */
ISD_API const char* isd_job_get(const isd_job* job, const char* key);
ISD_API isd_status isd_job_load_file(isd_job* job, const char* path);
ISD_API isd_status isd_job_load_string(isd_job* job, const char* text);
/* Canonical job text. Caller frees with isd_string_free. */
ISD_API char* isd_job_serialize(const isd_job* job);
ISD_API void isd_string_free(char* s);

/* Runs a command (descend, degrees, forge, oracle, verify, factor). A report is
   produced even on failure; the return value equals its status. */
ISD_API isd_status isd_run(const isd_job* job, const char* command, isd_report** out);
ISD_API const char* isd_report_json(const isd_report* report);
ISD_API const char* isd_report_summary(const isd_report* report);
ISD_API isd_status isd_report_status(const isd_report* report);
/* Job text written by forge, "" otherwise. */
ISD_API const char* isd_report_emitted_job(const isd_report* report);
ISD_API void isd_report_free(isd_report* report);

/* Degree set for (d, n) written to out (up to cap entries); *count gets the
   full size. Fails with ISD_ERR_INVALID if bad partitions exist. */
ISD_API isd_status isd_degree_set(unsigned d, unsigned n, unsigned* out, size_t cap, size_t* count);
/* *empty = 1 when (d, n) has no bad partitions of its bound. */
ISD_API isd_status isd_bad_partitions_empty(unsigned d, unsigned n, int* empty);

#ifdef __cplusplus
}
#endif

#endif
