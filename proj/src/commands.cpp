#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "isodescent/descent.hpp"
#include "isodescent/expr.hpp"
#include "isodescent/job.hpp"
#include "isodescent/oracle.hpp"
#include "isodescent/partitions.hpp"
#include "isodescent/quotient_ring.hpp"

namespace isod {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0, kInternal = 1, kInvalid = 2, kDiagnostic = 3, kForgeFailed = 4, kBudget = 5;

int status_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::MaxRoundsExceeded: return kBudget;
    case Errc::NoDiagonalFullSolution:
    case Errc::UnderdeterminedDegenerate: return kForgeFailed;
    case Errc::VerificationFailed:
    case Errc::CapExceeded: return kInternal;
    default: return kInvalid;
  }
}

/// Rethrows with the job key in front of the message.
template <class Fn>
auto keyed(std::string_view key, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(key) + ": " + e.what());
  }
}

class Context {
 public:
  Context(const Job& job, std::string_view command) : job_(job), command_(command) {}

  std::string require(std::string_view key) const {
    auto v = job_.get(key);
    if (!v || v->empty())
      throw Error(Errc::InvalidArgument, std::string(key) + ": required for " + std::string(command_));
    return *v;
  }

  std::optional<std::uint64_t> number(std::string_view key, std::uint64_t min = 0,
                                      std::uint64_t max = ~std::uint64_t{0}) const {
    auto v = job_.get(key);
    if (!v || v->empty()) return std::nullopt;
    std::uint64_t out = 0;
    bool ok = v->size() <= 19 && std::all_of(v->begin(), v->end(), [](char c) { return c >= '0' && c <= '9'; });
    if (ok) out = std::stoull(*v);
    if (!ok || out < min || out > max)
      throw Error(Errc::InvalidArgument, std::string(key) + ": expected an integer in [" + std::to_string(min) + ", " +
                                             std::to_string(max) + "], got '" + *v + "'");
    return out;
  }

  unsigned required_number(std::string_view key, std::uint64_t min, std::uint64_t max) const {
    if (!job_.has(key)) require(key);
    return static_cast<unsigned>(*number(key, min, max));
  }

  bool has(std::string_view key) const {
    auto v = job_.get(key);
    return v && !v->empty();
  }

  bool flag(std::string_view key) const {
    auto v = job_.get(key);
    if (!v || v->empty()) return false;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw Error(Errc::InvalidArgument, std::string(key) + ": expected true or false, got '" + *v + "'");
  }

  std::uint64_t seed() const { return number("job.seed").value_or(0); }
  std::uint64_t budget() const { return number("job.budget", 1).value_or(kDefaultBudget); }

  Field field() const {
    auto v = job_.get("field.spec");
    if (!v || v->empty()) return Field::rationals();
    return keyed("field.spec", [&] { return Field::parse(*v); });
  }

  std::size_t vars() const {
    if (auto v = number("form.vars", 1, 64)) return *v;
    // largest x<i> in the text
    const std::string text = require("form.text");
    std::optional<std::size_t> top;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
      if (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))) continue;
      std::size_t j = i + 1, idx = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && idx < 1000)
        idx = idx * 10 + static_cast<std::size_t>(text[j++] - '0');
      top = std::max(top.value_or(0), idx);
    }
    if (!top) throw Error(Errc::InvalidArgument, "form.vars: required when the form text names no variable");
    if (*top >= 64) throw Error(Errc::InvalidArgument, "form.vars: at most 64 variables");
    return *top + 1;
  }

  unsigned degree(const Field& k, std::size_t vars) const {
    if (auto v = number("form.deg", 1, 1000)) return static_cast<unsigned>(*v);
    const std::string text = require("form.text");
    auto resolve = [vars](std::string_view name) -> std::optional<std::size_t> {
      if (name.size() < 2 || name[0] != 'x') return std::nullopt;
      std::size_t i = 0;
      for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        i = i * 10 + static_cast<std::size_t>(c - '0');
        if (i >= vars) return std::nullopt;
      }
      return i;
    };
    auto sparse = keyed("form.text", [&] { return expr::parse(text, k, vars, resolve); });
    if (sparse.empty()) throw Error(Errc::ZeroForm, "form.text: the form cancels to zero");
    const auto& e = sparse.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  Form form(const Field& k) const {
    const std::size_t n_vars = vars();
    const unsigned d = degree(k, n_vars);
    const std::string text = require("form.text");
    return keyed("form.text", [&] { return parse_form(text, d, n_vars, k); });
  }

  UPoly poly(std::string_view key, const Field& k) const {
    const std::string text = require(key);
    return keyed(key, [&] { return UPoly::parse(k, text); });
  }

  PolyVector point(std::string_view key, const Field& k, std::size_t vars) const {
    const std::string text = require(key);
    PolyVector out;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      out.push_back(keyed(key, [&] { return UPoly::parse(k, piece); }));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (out.size() != vars)
      throw Error(Errc::ArityMismatch, std::string(key) + ": " + std::to_string(out.size()) +
                                           " components for a form in " + std::to_string(vars) + " variables");
    return out;
  }

 private:
  const Job& job_;
  std::string_view command_;
};

json strings(const PolyVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

json strings(std::span<const Element> v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

json strings(const std::vector<QElem>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::string join(const std::vector<unsigned>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out;
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors)
    factors.push_back({{"poly", p.to_string()}, {"degree", *p.degree()}, {"exponent", e}});
  return {{"unit", f.unit.to_string()}, {"factors", factors}};
}

json outcome_json(const DescentOutcome& out) {
  if (auto* kp = std::get_if<KPoint>(&out))
    return {{"kind", "k-point"}, {"source", source_name(kp->source)}, {"point", strings(kp->x)}, {"verified", true}};
  if (auto* dg = std::get_if<Diagnostic>(&out)) {
    json j{{"kind", "diagnostic"}, {"reason", reason_name(dg->reason)}, {"message", dg->message}};
    j["g"] = dg->g ? json(dg->g->to_string()) : json(nullptr);
    j["factorization"] = dg->factorization ? factorization_json(*dg->factorization) : json(nullptr);
    return j;
  }
  const auto& c = std::get<Candidates>(out);
  json cands = json::array();
  for (const auto& w : c.witnesses)
    cands.push_back({{"p", w.p.to_string()},
                     {"degree", w.degree},
                     {"exponent", w.exponent},
                     {"witness", strings(w.w)},
                     {"verified", w.verified}});
  return {{"kind", "candidates"},
          {"s", strings(c.s)},
          {"g", c.g.to_string()},
          {"factorization", factorization_json(c.factorization)},
          {"candidates", cands}};
}

std::string outcome_summary(const DescentOutcome& out) {
  if (auto* kp = std::get_if<KPoint>(&out))
    return std::string("k-point ") + to_string(kp->x) + " (" + source_name(kp->source) + ")";
  if (auto* dg = std::get_if<Diagnostic>(&out)) return std::string("diagnostic ") + reason_name(dg->reason) + ": " + dg->message;
  const auto& c = std::get<Candidates>(out);
  std::vector<unsigned> degs;
  for (const auto& w : c.witnesses) degs.push_back(w.degree);
  return std::to_string(c.witnesses.size()) + " candidate(s) of degree " + join(degs) + ", g = " + c.g.to_string();
}

struct Outcome {
  json body;
  std::string summary;
  int status = kOk;
  std::string emitted_job;
};

Outcome cmd_descend(const Context& ctx) {
  const Field k = ctx.field();
  const Form phi = ctx.form(k);
  const UPoly f = ctx.poly("extension.f", k);
  const PolyVector v = ctx.point("extension.point", k, phi.num_vars());
  const bool iterate = ctx.flag("descend.iterate");
  const unsigned max_rounds = static_cast<unsigned>(ctx.number("descend.max-rounds", 1, 1000).value_or(8));
  DescentInput input(phi, f, v);

  Outcome out;
  const DegreePair pair(input.d(), input.n());
  json j{{"form", format_form(phi)}, {"d", input.d()}, {"n", input.n()}, {"bound", pair.bound()}};
  j["degree_set"] = bad_partitions_empty(pair.bound(), pair) ? json(degree_set(pair)) : json(nullptr);
  if (!iterate) {
    DescentOutcome res = descend(input);
    j["result"] = outcome_json(res);
    out.summary = "descend: " + outcome_summary(res);
    if (std::holds_alternative<Diagnostic>(res)) out.status = kDiagnostic;
  } else {
    DescentChain chain = iterate_descent(input, DescentPolicy{max_rounds});
    json rounds = json::array();
    for (const auto& r : chain.rounds)
      rounds.push_back({{"f", r.f.to_string()}, {"point", strings(r.v)}, {"outcome", outcome_json(r.outcome)}});
    j["rounds"] = rounds;
    j["final_degree"] = chain.final_degree ? json(*chain.final_degree) : json(nullptr);
    j["k_point"] = chain.k_point ? strings(*chain.k_point) : json(nullptr);
    out.summary = "descend: " + std::to_string(chain.rounds.size()) + " round(s), " +
                  (chain.final_degree ? "final degree " + std::to_string(*chain.final_degree)
                                      : outcome_summary(chain.rounds.back().outcome));
    if (chain.k_point) out.summary += ", k-point " + to_string(*chain.k_point);
    if (std::holds_alternative<Diagnostic>(chain.rounds.back().outcome)) out.status = kDiagnostic;
  }
  out.body = std::move(j);
  return out;
}

Outcome cmd_degrees(const Context& ctx) {
  const unsigned d = ctx.required_number("form.deg", 0, 1000);
  const unsigned n = ctx.required_number("extension.n", 0, 1000);
  const DegreePair pair(d, n);
  const bool empty = bad_partitions_empty(pair.bound(), pair);
  json j{{"d", d}, {"n", n}, {"n_star", pair.n_star()}, {"S", s_set(pair)}, {"bound", pair.bound()},
         {"bad_partitions_empty", empty}};
  std::optional<Partition> evidence;
  if (!empty && pair.bound() <= 2000) evidence = smallest_bad_partition(pair.bound(), pair);
  j["bad_partition_example"] = evidence ? json(evidence->parts) : json(nullptr);
  std::vector<unsigned> ds;
  if (empty) ds = degree_set(pair);
  j["degree_set"] = empty ? json(ds) : json(nullptr);
  Outcome out;
  out.body = std::move(j);
  out.summary = "degrees: d=" + std::to_string(d) + " n=" + std::to_string(n) + ", S = {" + join(s_set(pair)) +
                "}, bound " + std::to_string(pair.bound()) + ", " +
                (empty ? "no bad partitions, degree set {" + join(ds) + "}"
                       : "bad partitions exist" + (evidence ? " e.g. " + evidence->to_string() : std::string()));
  return out;
}

Outcome cmd_forge(const Context& ctx) {
  const Field k = ctx.field();
  const unsigned d = ctx.required_number("form.deg", 1, 1000);
  const std::size_t vars = ctx.required_number("form.vars", 1, 64);
  const unsigned n = ctx.required_number("extension.n", 2, 1000);
  const std::uint64_t seed = ctx.seed();
  if (std::gcd(n, d) != 1)
    throw Error(Errc::PremiseViolated, "premise 'coprime' violated: gcd(n, d) = gcd(" + std::to_string(n) + ", " +
                                           std::to_string(d) + ") != 1");
  const UPoly f = random_irreducible(k, n, seed);
  ForgedInstance inst = forge_instance(d, vars, f, seed);

  Job emitted;
  emitted.set("job.command", "descend");
  emitted.set("job.seed", std::to_string(seed));
  emitted.set("field.spec", k.to_string());
  emitted.set("form.text", format_form(inst.form));
  emitted.set("form.deg", std::to_string(d));
  emitted.set("form.vars", std::to_string(vars));
  emitted.set("extension.f", f.to_string());
  std::string point;
  for (std::size_t i = 0; i < inst.s.size(); ++i) point += (i ? ", " : "") + inst.s[i].to_string();
  emitted.set("extension.point", point);

  Outcome out;
  out.emitted_job = emitted.to_string();
  out.body = {{"f", f.to_string()}, {"form", format_form(inst.form)}, {"point", strings(inst.s)}, {"job", out.emitted_job}};
  out.summary = "forge: d=" + std::to_string(d) + " n=" + std::to_string(n) + " f = " + f.to_string() +
                ", form " + format_form(inst.form);
  return out;
}

Outcome cmd_oracle(const Context& ctx) {
  const Field k = ctx.field();
  if (!k.is_prime_field()) throw Error(Errc::InvalidArgument, "field.spec: the oracle needs GF(p)");
  const std::uint64_t seed = ctx.seed(), budget = ctx.budget();
  const auto norm = ctx.number("form.norm", 2, 64);
  const Form phi = norm ? norm_form(k.characteristic(), static_cast<unsigned>(*norm), seed) : ctx.form(k);
  const auto m = ctx.number("extension.m", 1, 64);
  const auto m_max = ctx.number("extension.m-max", 1, 64);
  Outcome out;
  json j{{"form", format_form(phi)}, {"p", k.characteristic()}};
  if (m) {
    const ExtensionSpec ext = ctx.has("extension.f") ? ExtensionSpec(ctx.poly("extension.f", k))
                                                : ExtensionSpec(k.characteristic(), static_cast<unsigned>(*m), seed);
    if (ext.m() != *m) throw Error(Errc::InvalidArgument, "extension.f: degree differs from extension.m");
    IsotropyScan scan = enumerate_isotropic(phi, ext, budget);
    j["m"] = ext.m();
    j["modulus"] = ext.modulus().to_string();
    j["isotropic"] = scan.witness.has_value();
    j["witness"] = scan.witness ? strings(*scan.witness) : json(nullptr);
    j["evaluations"] = scan.evaluations;
    j["points"] = scan.points;
    out.summary = "oracle: over F_" + std::to_string(k.characteristic()) + "^" + std::to_string(ext.m()) + " " +
                  (scan.witness ? "isotropic at " + to_string(*scan.witness) : std::string("anisotropic")) + " (" +
                  std::to_string(scan.evaluations) + " evaluations)";
  } else if (m_max) {
    IsotropyProfile prof = min_isotropy_degree(phi, static_cast<unsigned>(*m_max), seed, budget);
    json scans = json::array();
    for (std::size_t i = 0; i < prof.scans.size(); ++i)
      scans.push_back({{"m", i + 1},
                       {"modulus", random_irreducible(k.characteristic(), static_cast<unsigned>(i + 1), seed).to_string()},
                       {"isotropic", prof.scans[i].witness.has_value()},
                       {"witness", prof.scans[i].witness ? strings(*prof.scans[i].witness) : json(nullptr)},
                       {"evaluations", prof.scans[i].evaluations}});
    j["m_max"] = *m_max;
    j["min_degree"] = prof.degree ? json(*prof.degree) : json(nullptr);
    j["scans"] = scans;
    j["evaluations"] = prof.evaluations;
    out.summary = "oracle: minimal isotropy degree " +
                  (prof.degree ? std::to_string(*prof.degree) : "> " + std::to_string(*m_max)) + " (" +
                  std::to_string(prof.evaluations) + " evaluations)";
  } else {
    throw Error(Errc::InvalidArgument, "extension.m: oracle needs extension.m or extension.m-max");
  }
  out.body = std::move(j);
  return out;
}

Outcome cmd_verify(const Context& ctx) {
  const Field k = ctx.field();
  const Form phi = ctx.form(k);
  const UPoly p = ctx.poly("extension.f", k);
  const PolyVector w = ctx.point("extension.point", k, phi.num_vars());
  if (p.is_constant() || !p.is_monic())
    throw Error(Errc::ReducibleModulus, "extension.f: " + p.to_string() + " is not monic of positive degree");
  QuotientRing ring(p);
  std::vector<QElem> reduced;
  for (const auto& c : w) reduced.push_back(ring.element(c));
  const bool ok = keyed("extension.f", [&] { return verify_witness(phi, p, reduced); });
  Outcome out;
  out.body = {{"form", format_form(phi)}, {"modulus", p.to_string()}, {"point", strings(reduced)}, {"result", ok}};
  out.summary = std::string("verify: ") + (ok ? "true" : "false");
  return out;
}

Outcome cmd_factor(const Context& ctx) {
  const Field k = ctx.field();
  const UPoly a = ctx.poly("poly.text", k);
  Factorization f = factor(a);
  Outcome out;
  json j{{"poly", a.to_string()}};
  json fj = factorization_json(f);
  j["unit"] = fj["unit"];
  j["factors"] = fj["factors"];
  out.body = std::move(j);
  std::string text = f.unit.to_string();
  for (const auto& [p, e] : f.factors) text += " * (" + p.to_string() + ")" + (e > 1 ? "^" + std::to_string(e) : "");
  out.summary = "factor: " + text;
  return out;
}

}  // namespace

CommandResult run_command(const Job& job, std::string_view command) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(job, command);
  json report{{"tool", "isodescent"}, {"version", ISOD_VERSION}, {"command", std::string(command)}};
  CommandResult result;
  try {
    report["seed"] = ctx.seed();
  } catch (const Error&) {
    report["seed"] = nullptr;
  }
  json input = json::object();
  for (std::string_view key : job_keys())
    if (auto v = job.get(key)) input[std::string(key)] = *v;
  report["input"] = input;

  try {
    Outcome out;
    if (command == "descend")
      out = cmd_descend(ctx);
    else if (command == "degrees")
      out = cmd_degrees(ctx);
    else if (command == "forge")
      out = cmd_forge(ctx);
    else if (command == "oracle")
      out = cmd_oracle(ctx);
    else if (command == "verify")
      out = cmd_verify(ctx);
    else if (command == "factor")
      out = cmd_factor(ctx);
    else
      throw Error(Errc::InvalidArgument, "unknown command '" + std::string(command) + "'");
    report["outcome"] = std::move(out.body);
    result.status = out.status;
    result.summary = std::move(out.summary);
    result.emitted_job = std::move(out.emitted_job);
  } catch (const Error& e) {
    result.status = status_for(e.code());
    report["error"] = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
    result.summary = std::string(command) + ": error " + std::string(errc_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    result.status = kInternal;
    report["error"] = {{"code", "Internal"}, {"message", e.what()}};
    result.summary = std::string(command) + ": internal error: " + e.what();
  }
  report["status"] = result.status;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timing"] = {{"elapsed_ms", std::round(ms * 1000) / 1000}};
  result.json = report.dump(2);
  return result;
}

}  // namespace isod
