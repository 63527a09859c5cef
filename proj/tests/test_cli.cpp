#include <doctest.h>

#include <json.hpp>

#include "cli.hpp"

using bigrade::cli::JobSpec;
using bigrade::cli::run;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(BIGRADE_DATA_DIR) + "/" + name; }

JobSpec job_for(const std::string& command, const std::string& input = "") {
  JobSpec job;
  job.command = command;
  job.input = input.empty() ? "" : data(input);
  return job;
}

}  // namespace

TEST_CASE("analyze") {
  const auto r = run(job_for("analyze", "not_seqcm.ideal"));
  CHECK(r.exit_code == 0);
  const auto j = Json::parse(r.output);
  CHECK(j["schema"] == 1);
  CHECK(j["axis"] == "Q");
  CHECK(j["ring"]["char"] == 0);
  CHECK(j["grade"] == 1);
  CHECK(j["mgrade"] == 1);
  CHECK(j["cd"] == 2);
  CHECK(j["maximal_depth"] == true);
}

TEST_CASE("local cohomology reports") {
  auto job = job_for("lc", "gen_cm.ideal");
  job.index = 1;
  const auto j = Json::parse(run(job).output);
  CHECK(j["finitely_generated"] == true);
  CHECK(j["total_dim"] == 1);

  auto inf = job_for("lc", "not_seqcm.ideal");
  inf.index = 1;
  CHECK(Json::parse(run(inf).output)["total_dim"] == "infinite");
}

TEST_CASE("hypersurface") {
  JobSpec job;
  job.command = "hypersurface";
  job.factors = "(1,1)";
  job.ring = {2, 2};
  const auto j = Json::parse(run(job).output);
  CHECK(j["maximal_depth"] == false);
  CHECK(j["grade"] == 1);
  CHECK(j["mgrade"] == 2);

  const auto file = Json::parse(run(job_for("hypersurface", "mixed.profile")).output);
  CHECK(file["case_label"] == "a");
}

TEST_CASE("other commands succeed") {
  for (const char* command : {"decompose", "filtration", "seqcm", "gencm", "growth"}) {
    const auto r = run(job_for(command, "not_seqcm.ideal"));
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.output)["command"] == command);
  }
  JobSpec cross;
  cross.command = "crosscheck";
  cross.ring = {2, 2};
  cross.monomial = "x1*y1";
  CHECK(Json::parse(run(cross).output)["agrees"] == true);

  JobSpec suite;
  suite.command = "suite";
  suite.suite = "oracle";
  suite.count = 5;
  const auto s = run(suite);
  CHECK(s.exit_code == 0);
  CHECK(Json::parse(s.output)["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run(job_for("analyze", "missing.ideal")).exit_code == 2);
  auto bad_axis = job_for("analyze", "not_seqcm.ideal");
  bad_axis.axis = "R";
  CHECK(run(bad_axis).exit_code == 2);
  CHECK(run(job_for("frobnicate", "not_seqcm.ideal")).exit_code == 2);

  auto corollary = job_for("lc", "not_seqcm.ideal");
  corollary.index = 9;
  CHECK(run(corollary).exit_code == 3);

  JobSpec unit;
  unit.command = "crosscheck";
  unit.ring = {1, 1};
  unit.monomial = "1";
  const auto r = run(unit);
  CHECK(r.exit_code == 3);
  CHECK(Json::parse(r.output)["error"]["kind"] == "BadProfile");
}

TEST_CASE("output is deterministic") {
  for (const char* command : {"analyze", "decompose", "lc", "growth"}) {
    const auto job = job_for(command, "not_seqcm.ideal");
    CHECK(run(job).output == run(job).output);
  }
}
