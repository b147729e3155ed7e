#include <catch_amalgamated.hpp>

#include <sstream>

#include "semiprim/cli.hpp"
#include "semiprim/error.hpp"
#include "semiprim/suite.hpp"

using namespace semiprim;

namespace {

std::pair<int, std::string> cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("verdict reports round-trip through JSON", "[suite]") {
  auto [code, text] = cli({"--json", "verify-all", "--filter", "local.", "--timings"});
  CHECK(code == 0);
  Json j = Json::parse(text);
  VerdictReport r = verdict_report_from_json(j);
  CHECK(to_json(r) == j);
  CHECK(j["summary"]["total"] == r.results.size());
  std::size_t tally = 0;
  for (auto s : {Status::pass, Status::fail, Status::skip, Status::vacuous}) {
    CHECK(j["summary"][std::string(to_string(s))] == r.count(s));
    tally += r.count(s);
  }
  CHECK(tally == r.results.size());
  for (auto const& c : r.results) CHECK(c.millis.has_value());
  CHECK_THROWS_AS(verdict_report_from_json(Json::parse("{\"results\": 3}")), ParseError);
}

TEST_CASE("task runner maps exceptions to statuses", "[suite]") {
  std::vector<SuiteTask> tasks{
      {"t.cap", "a", []() -> std::vector<CheckResult> { throw CapExceeded("too big"); }},
      {"t.bad", "b", []() -> std::vector<CheckResult> { throw InvalidArgument("nope"); }},
      {"t.ok", "c", [] {
         CheckResult r;
         r.check = "t.ok";
         return std::vector<CheckResult>{r, r};
       }}};
  for (unsigned jobs : {1u, 3u}) {
    VerdictReport r = run_tasks(tasks, jobs, false);
    REQUIRE(r.results.size() == 4);
    CHECK(r.results[0].status == Status::skip);
    CHECK(r.results[0].detail.starts_with("cap-exceeded"));
    CHECK(r.results[1].status == Status::fail);
    CHECK(r.results[2].target == "c");
    CHECK(r.results[3].status == Status::pass);
    CHECK_FALSE(r.results[3].millis.has_value());
    CHECK(exit_code(r) == 1);
  }
}

TEST_CASE("suite filtering and ordering", "[suite]") {
  SuiteOptions o;
  auto all = suite_tasks(o);
  o.filter = "semiprim.";
  auto some = suite_tasks(o);
  CHECK(some.size() < all.size());
  for (auto const& t : some) CHECK(t.id.starts_with("semiprim."));
  o.filter = "heawood";
  for (auto const& t : suite_tasks(o)) CHECK(t.target.find("heawood") != std::string::npos);

  // order does not depend on jobs
  o.filter = "structure.oracle";
  o.jobs = 1;
  Json a = to_json(run_suite(o));
  o.jobs = 4;
  Json b = to_json(run_suite(o));
  CHECK(a.dump() == b.dump());

  o.filter = "engine.oracle";
  o.max_order = 100;
  o.jobs = 2;
  for (auto const& r : run_suite(o).results) {
    if (r.status == Status::skip) CHECK(r.detail.starts_with("max-order"));
  }
}

TEST_CASE("command line exit codes", "[suite]") {
  CHECK(cli({"check-sp", "--construct", "vector", "--q", "2", "--n", "2"}).first == 0);
  CHECK(cli({"check-sp", "--construct", "c4_inversion"}).first == 1);
  CHECK(cli({"check-sp"}).first == 2);
  CHECK(cli({"check-sp", "--construct", "nosuch"}).first == 2);
  CHECK(cli({"local", "--fixture", "k7_7x"}).first == 2);
  CHECK(cli({"local", "--fixture", "heawood", "--edge", "0,x"}).first == 2);
  CHECK(cli({"verify-all", "--jobs", "0"}).first == 2);
  CHECK(cli({"--help"}).first == 0);
  auto [code, text] = cli({"--max-order", "10", "check-sp", "--construct", "vector",
                           "--q", "2", "--n", "2"});
  CHECK(code == 0);
  CHECK(text.find("max-order") != std::string::npos);
}
