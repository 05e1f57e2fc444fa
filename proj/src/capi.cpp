#include "isodescent/isodescent.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "isodescent/error.hpp"
#include "isodescent/job.hpp"
#include "isodescent/partitions.hpp"

struct isd_job {
  isod::Job job;
  mutable std::string scratch;
};

struct isd_report {
  isod::CommandResult result;
};

namespace {

thread_local std::string last_error;

isd_status fail(isd_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

isd_status status_of(const isod::Error& e) {
  return e.code() == isod::Errc::BudgetExceeded ? ISD_BUDGET_EXCEEDED : ISD_ERR_INVALID;
}

template <class Fn>
isd_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const isod::Error& e) {
    return fail(status_of(e), std::string(isod::errc_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(ISD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ISD_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* isd_version(void) { return ISOD_VERSION; }

const char* isd_last_error(void) { return last_error.c_str(); }

isd_job* isd_job_new(void) {
  try {
    return new isd_job;
  } catch (...) {
    last_error = "out of memory";
    return nullptr;
  }
}

void isd_job_free(isd_job* job) { delete job; }

isd_status isd_job_set(isd_job* job, const char* key, const char* value) {
  if (!job || !key || !value) return fail(ISD_ERR_INVALID, "null argument");
  return guarded([&] {
    job->job.set(key, value);
    return ISD_OK;
  });
}

const char* isd_job_get(const isd_job* job, const char* key) {
  if (!job || !key) return nullptr;
  auto v = job->job.get(key);
  if (!v) return nullptr;
  job->scratch = *v;
  return job->scratch.c_str();
}

isd_status isd_job_load_file(isd_job* job, const char* path) {
  if (!job || !path) return fail(ISD_ERR_INVALID, "null argument");
  return guarded([&] {
    job->job.load_file(path);
    return ISD_OK;
  });
}

isd_status isd_job_load_string(isd_job* job, const char* text) {
  if (!job || !text) return fail(ISD_ERR_INVALID, "null argument");
  return guarded([&] {
    job->job.load(text);
    return ISD_OK;
  });
}

char* isd_job_serialize(const isd_job* job) {
  if (!job) return nullptr;
  std::string text = job->job.to_string();
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void isd_string_free(char* s) { std::free(s); }

isd_status isd_run(const isd_job* job, const char* command, isd_report** out) {
  if (!job || !command || !out) return fail(ISD_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* r = new isd_report{isod::run_command(job->job, command)};
    *out = r;
    if (r->result.status != 0) last_error = r->result.summary;
    return static_cast<isd_status>(r->result.status);
  });
}

const char* isd_report_json(const isd_report* r) { return r ? r->result.json.c_str() : ""; }
const char* isd_report_summary(const isd_report* r) { return r ? r->result.summary.c_str() : ""; }
isd_status isd_report_status(const isd_report* r) {
  return r ? static_cast<isd_status>(r->result.status) : ISD_ERR_INVALID;
}
const char* isd_report_emitted_job(const isd_report* r) { return r ? r->result.emitted_job.c_str() : ""; }
void isd_report_free(isd_report* r) { delete r; }

isd_status isd_degree_set(unsigned d, unsigned n, unsigned* out, size_t cap, size_t* count) {
  if (!count || (cap && !out)) return fail(ISD_ERR_INVALID, "null argument");
  return guarded([&] {
    auto ds = isod::degree_set(isod::DegreePair(d, n));
    *count = ds.size();
    for (size_t i = 0; i < ds.size() && i < cap; ++i) out[i] = ds[i];
    return ISD_OK;
  });
}

isd_status isd_bad_partitions_empty(unsigned d, unsigned n, int* empty) {
  if (!empty) return fail(ISD_ERR_INVALID, "null argument");
  return guarded([&] {
    isod::DegreePair pair(d, n);
    *empty = isod::bad_partitions_empty(pair.bound(), pair) ? 1 : 0;
    return ISD_OK;
  });
}

}  // extern "C"
