#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "pbl/cli.hpp"
#include "pbl/report.hpp"

using namespace pbl;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = run_command(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bad input exits with 2") {
  CHECK(run({"pencil", "normalize", "/nonexistent/missing.json"}).rc == 2);
  CHECK(run({"bundle", "show", "--tag", "type9"}).rc == 2);
  CHECK(run({"frobnicate"}).rc == 2);
  CHECK(run({"pencil", "canonical", "--t", "1", "--s", "3"}).rc == 2);
  CHECK(run({"geom", "smooth-scan", "--n", "1", "--d", "2"}).rc == 2);
}

TEST_CASE("bundle cone as json") {
  const Run r = run({"--format", "json", "bundle", "cone", "--tag", "type1", "--n", "2", "--r", "3"});
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("c") == "2");
}

TEST_CASE("format is accepted after the subcommand") {
  const Run r = run({"bundle", "cone", "--tag", "type1", "--n", "2", "--r", "3", "--format", "json"});
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out).at("c") == "2");
}

TEST_CASE("drum check") {
  const Run r = run({"drum", "check", "--id", "ptangent-2"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("ptangent-2") != std::string::npos);
  CHECK(run({"drum", "check", "--id", "nope"}).rc == 2);
}

TEST_CASE("fibre of type 5") {
  const Run r = run({"bundle", "fiber", "--tag", "type5", "--t", "2", "--n", "2", "--x", "1,0,0,0"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("LinearPk") != std::string::npos);
}

TEST_CASE("canonical pencil output is deterministic") {
  const Run a = run({"--format", "json", "pencil", "canonical", "--t", "3", "--s", "4"});
  const Run b = run({"--format", "json", "pencil", "canonical", "--t", "3", "--s", "4"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("report rendering") {
  VerificationReport empty;
  CHECK(emit_report(empty, OutputFormat::Table).find("FAIL") == std::string::npos);
  const auto je = nlohmann::json::parse(emit_report(empty, OutputFormat::Json));
  CHECK(je.at("checks").empty());

  VerificationReport r;
  r.seed = 7;
  r.add({"b", "two", CheckStatus::Fail, "1", "2", "x", "off by one"});
  r.add({"a", "one", CheckStatus::Pass, "1", "1", "x", ""});
  r.add({"a", "zero", CheckStatus::Flagged, "?", "?", "x", "ambiguous"});
  CHECK_FALSE(r.ok());
  CHECK(r.count(CheckStatus::Flagged) == 1);
  const std::string table = emit_report(r, OutputFormat::Table);
  CHECK(table.find("off by one") != std::string::npos);
  CHECK(table.find("ambiguous") != std::string::npos);
  CHECK(table.find("one") < table.find("zero"));
  CHECK(table.find("zero") < table.find("two"));
  const auto j = nlohmann::json::parse(emit_report(r, OutputFormat::Json));
  CHECK(j.at("checks")[0].at("name") == "one");
  CHECK(j.at("checks")[2].at("status") == "FAIL");
  CHECK_THROWS(parse_format("xml"));
}
