#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "isodescent/isodescent.h"

namespace {

// flag name -> job key
const std::map<std::string, std::string> kFlagKeys{
    {"field", "field.spec"},       {"form", "form.text"},     {"deg", "form.deg"},
    {"vars", "form.vars"},         {"norm", "form.norm"},     {"f", "extension.f"},
    {"point", "extension.point"},  {"n", "extension.n"},      {"m", "extension.m"},
    {"m-max", "extension.m-max"},  {"max-rounds", "descend.max-rounds"},
    {"seed", "job.seed"},          {"budget", "job.budget"},  {"poly", "poly.text"},
};

struct Options {
  std::map<std::string, std::string> values;
  bool iterate = false;
  std::string job_file;
  std::string emit_job;
};

void add_options(CLI::App* sub, Options& opts) {
  static const std::map<std::string, std::string> help{
      {"field", "QQ or GF(p)"},
      {"form", "homogeneous form in x0..xN"},
      {"deg", "form degree d"},
      {"vars", "number of variables N+1"},
      {"norm", "use the norm form of a degree-m extension of GF(p)"},
      {"f", "monic irreducible polynomial in t"},
      {"point", "comma-separated polynomials in t"},
      {"n", "extension degree"},
      {"m", "extension degree to scan"},
      {"m-max", "scan m = 1..m-max"},
      {"max-rounds", "round limit for --iterate"},
      {"seed", "random seed"},
      {"budget", "oracle evaluation budget"},
      {"poly", "polynomial in t"},
  };
  for (const auto& [flag, key] : kFlagKeys) sub->add_option("--" + flag, opts.values[flag], help.at(flag));
  sub->add_flag("--iterate", opts.iterate, "iterate the descent");
  sub->add_option("--job", opts.job_file, "job file; flags override its values");
  sub->add_option("--emit-job", opts.emit_job, "write the job (for forge: the generated descend job) to a file");
}

int run(const std::string& command, CLI::App* sub, const Options& opts) {
  isd_job* job = isd_job_new();
  if (!job) return ISD_ERR_INTERNAL;
  auto bail = [&](const char* what) {
    std::cerr << "isodescent " << command << ": " << what << ": " << isd_last_error() << "\n";
    isd_job_free(job);
    return static_cast<int>(ISD_ERR_INVALID);
  };
  if (!opts.job_file.empty() && isd_job_load_file(job, opts.job_file.c_str()) != ISD_OK) return bail("job file");
  for (const auto& [flag, key] : kFlagKeys) {
    if (sub->count("--" + flag) == 0) continue;
    if (isd_job_set(job, key.c_str(), opts.values.at(flag).c_str()) != ISD_OK) return bail("flag");
  }
  if (opts.iterate) isd_job_set(job, "descend.iterate", "true");

  isd_report* report = nullptr;
  isd_status status = isd_run(job, command.c_str(), &report);
  if (!report) {
    std::cerr << "isodescent " << command << ": " << isd_last_error() << "\n";
    isd_job_free(job);
    return status;
  }
  std::cout << isd_report_json(report) << "\n";
  std::cerr << isd_report_summary(report) << "\n";

  if (!opts.emit_job.empty()) {
    std::string text;
    if (command == "forge") {
      text = isd_report_emitted_job(report);
    } else {
      char* s = isd_job_serialize(job);
      text = s ? s : "";
      isd_string_free(s);
    }
    if (!text.empty()) {
      std::ofstream out(opts.emit_job, std::ios::binary);
      out << text;
      if (!out) std::cerr << "isodescent: cannot write " << opts.emit_job << "\n";
    }
  }
  isd_report_free(report);
  isd_job_free(job);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent of isotropic points of forms to smaller extensions"};
  app.set_version_flag("--version", std::string(isd_version()));
  app.require_subcommand(1);

  const std::pair<const char*, const char*> commands[] = {
      {"descend", "descend an isotropic point over k[t]/(f)"},
      {"degrees", "partition calculus for (--deg, --n)"},
      {"forge", "generate a descend job with a known point"},
      {"oracle", "scan for zeros over GF(p^m)"},
      {"verify", "check a witness over k[t]/(f)"},
      {"factor", "factor a polynomial in t"},
  };
  std::map<std::string, Options> opts;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, desc] : commands) {
    subs[name] = app.add_subcommand(name, desc);
    add_options(subs[name], opts[name]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ISD_ERR_INVALID;
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) return run(name, sub, opts[name]);
  return ISD_ERR_INVALID;
}
