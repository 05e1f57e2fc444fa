#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "isodescent/error.hpp"
#include "isodescent/job.hpp"
#include "support.hpp"

using namespace isod;
using json = nlohmann::json;

namespace {

Job make(std::initializer_list<std::pair<const char*, const char*>> kv) {
  Job j;
  for (auto& [k, v] : kv) j.set(k, v);
  return j;
}

json body(const CommandResult& r) {
  json j = json::parse(r.json);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("job text") {
  Job j;
  j.load("# comment\n[field]\nspec = GF(7)  # trailing\n\n[form]\ntext = x0^2 + x1^2\ndeg=2\n");
  CHECK(j.get("field.spec") == "GF(7)");
  CHECK(j.get("form.deg") == "2");
  CHECK_FALSE(j.has("form.vars"));
  Job k;
  k.load(j.to_string());
  CHECK(k.entries() == j.entries());
  CHECK(j.to_string() == "[field]\nspec = GF(7)\n\n[form]\ntext = x0^2 + x1^2\ndeg = 2\n");

  CHECK(testing::error_of([] { Job().set("form.colour", "red"); }) == Errc::InvalidArgument);
  CHECK(testing::error_of([] { Job().load("spec = QQ\n"); }) == Errc::SyntaxError);
  CHECK(testing::error_of([] { Job().load("[field\n"); }) == Errc::SyntaxError);
  CHECK(testing::error_of([] { Job().load("[form]\nwhat\n"); }) == Errc::SyntaxError);
  try {
    Job().load("[form]\ntext = x0\n[bogus]\nkey = 1\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK(testing::error_of([] { Job().load_file("/nonexistent/job.ini"); }) == Errc::InvalidArgument);
}

TEST_CASE("degrees") {
  auto r = run_command(make({{"form.deg", "3"}, {"extension.n", "4"}}), "degrees");
  CHECK(r.status == 0);
  auto j = body(r);
  CHECK(j["outcome"]["S"] == json({2, 5}));
  CHECK(j["outcome"]["bound"] == 5);
  CHECK(j["outcome"]["bad_partitions_empty"] == true);
  CHECK(j["outcome"]["degree_set"] == json({1, 2, 5}));

  auto bad = body(run_command(make({{"form.deg", "6"}, {"extension.n", "5"}}), "degrees"));
  CHECK(bad["outcome"]["bad_partitions_empty"] == false);
  CHECK(bad["outcome"]["bad_partition_example"] == json({3, 2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(bad["outcome"]["degree_set"].is_null());

  auto j32 = body(run_command(make({{"form.deg", "3"}, {"extension.n", "2"}}), "degrees"));
  CHECK(j32["outcome"]["degree_set"] == json({1}));

  auto nc = run_command(make({{"form.deg", "4"}, {"extension.n", "2"}}), "degrees");
  CHECK(nc.status == 2);
  CHECK(body(nc)["error"]["code"] == "NotCoprime");
}

TEST_CASE("validation names the key") {
  auto r = run_command(make({{"form.deg", "three"}, {"extension.n", "4"}}), "degrees");
  CHECK(r.status == 2);
  CHECK(body(r)["error"]["message"].get<std::string>().rfind("form.deg:", 0) == 0);
  auto missing = run_command(make({{"form.deg", "3"}}), "degrees");
  CHECK(body(missing)["error"]["message"].get<std::string>().rfind("extension.n:", 0) == 0);
  auto field = run_command(make({{"field.spec", "GF(9)"}, {"poly.text", "t"}}), "factor");
  CHECK(body(field)["error"]["message"].get<std::string>().rfind("field.spec:", 0) == 0);
  auto form = run_command(make({{"form.text", "x0^2 + x1"}, {"extension.f", "t^3-2"}, {"extension.point", "1,1"}}),
                          "descend");
  CHECK(form.status == 2);
  CHECK(body(form)["error"]["message"].get<std::string>().rfind("form.text:", 0) == 0);
  auto point = run_command(
      make({{"form.text", "x0^3 - 2*x1^3"}, {"extension.f", "t^3-2"}, {"extension.point", "t, 1, 0"}}), "descend");
  CHECK(body(point)["error"]["message"].get<std::string>().rfind("extension.point:", 0) == 0);
  CHECK(run_command(Job(), "nonsense").status == 2);
}

TEST_CASE("descend") {
  auto ok = run_command(
      make({{"form.text", "x0^3 - 2*x1^3 + x2^3"}, {"extension.f", "t^3 - 2"}, {"extension.point", "t, 1, 0"}}),
      "descend");
  // n = d = 3
  CHECK(ok.status == 2);
  CHECK(body(ok)["error"]["message"].get<std::string>().find("'coprime'") != std::string::npos);

  auto zero = run_command(
      make({{"form.text", "x0^2 - 2*x1^2 + x2^2"}, {"extension.f", "t^3 - 2"}, {"extension.point", "t^3 - 2, 0, 0"}}),
      "descend");
  CHECK(zero.status == 2);
  CHECK(body(zero)["error"]["message"].get<std::string>().find("'v-nonzero'") != std::string::npos);
}

TEST_CASE("forge round trip") {
  Job spec = make({{"field.spec", "GF(7)"}, {"form.deg", "3"}, {"form.vars", "3"}, {"extension.n", "4"}, {"job.seed", "12"}});
  auto a = run_command(spec, "forge");
  auto b = run_command(spec, "forge");
  REQUIRE(a.status == 0);
  CHECK(a.emitted_job == b.emitted_job);
  CHECK(body(a) == body(b));

  Job desc;
  desc.load(a.emitted_job);
  auto d1 = run_command(desc, "descend");
  auto d2 = run_command(desc, "descend");
  CHECK(d1.status == 0);
  CHECK(body(d1) == body(d2));
  for (const auto& c : body(d1)["outcome"]["result"]["candidates"]) {
    const unsigned deg = c["degree"];
    CHECK((deg == 1 || deg == 2 || deg == 5));
    CHECK(c["verified"] == true);
  }

  desc.set("descend.iterate", "true");
  auto chain = body(run_command(desc, "descend"));
  CHECK(chain["status"] == 0);
  const unsigned fin = chain["outcome"]["final_degree"];
  CHECK((fin == 1 || fin == 5));

  auto gate = run_command(make({{"form.deg", "6"}, {"form.vars", "2"}, {"extension.n", "5"}, {"job.seed", "3"}}), "forge");
  REQUIRE(gate.status == 0);
  Job g;
  g.load(gate.emitted_job);
  auto diag = run_command(g, "descend");
  CHECK(diag.status == 3);
  CHECK(body(diag)["outcome"]["result"]["reason"] == "bad-partitions-nonempty");
}

TEST_CASE("oracle, verify, factor") {
  auto f = body(run_command(make({{"poly.text", "t^4 - 1"}}), "factor"));
  CHECK(f["outcome"]["factors"].size() == 3);

  auto o = run_command(make({{"field.spec", "GF(2)"}, {"form.norm", "3"}, {"extension.m-max", "6"}}), "oracle");
  CHECK(o.status == 0);
  CHECK(body(o)["outcome"]["min_degree"] == 3);

  auto m = body(run_command(
      make({{"field.spec", "GF(2)"}, {"form.text", "x0^3 + x1^3 + x2^3"}, {"extension.m", "1"}}), "oracle"));
  CHECK(m["outcome"]["witness"] == json({"1", "1", "0"}));

  auto budget = run_command(
      make({{"field.spec", "GF(5)"}, {"form.norm", "3"}, {"extension.m", "2"}, {"job.budget", "50"}}), "oracle");
  CHECK(budget.status == 5);
  CHECK(run_command(make({{"form.text", "x0^2 + x1^2"}, {"extension.m", "1"}}), "oracle").status == 2);

  auto v0 = run_command(make({{"field.spec", "GF(5)"}, {"form.text", "x0^2 + x1^2 + x2^2"}, {"extension.f", "t^2 + 2"},
                              {"extension.point", "0, 0, 0"}}),
                        "verify");
  CHECK(v0.status == 0);
  CHECK(body(v0)["outcome"]["result"] == false);
  auto v1 = run_command(make({{"form.text", "x0^3 - 2*x1^3"}, {"extension.f", "t^3 - 2"}, {"extension.point", "t, 1"}}),
                        "verify");
  CHECK(body(v1)["outcome"]["result"] == true);
  auto red = run_command(make({{"form.text", "x0^2 - x1^2"}, {"extension.f", "t^2 - 1"}, {"extension.point", "1, 1"}}),
                         "verify");
  CHECK(red.status == 2);
}

TEST_CASE("form degree and arity are inferred") {
  auto r = body(run_command(make({{"form.text", "x0^3 - 2*x1^3"}, {"extension.f", "t^3 - 2"}, {"extension.point", "t, 1"}}),
                            "verify"));
  CHECK(r["outcome"]["form"] == "x0^3 - 2*x1^3");
}
