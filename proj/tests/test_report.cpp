#include "doctest.h"
#include "liesplit/report.hpp"

using namespace liesplit;

namespace {

RunConfig make(const std::string& cmd) {
  RunConfig c;
  c.command = cmd;
  return c;
}

}  // namespace

TEST_CASE("witt report") {
  auto c = make("witt");
  c.n = 12;
  c.m = 2;
  auto out = run(c);
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["dim"] == 335);
  CHECK(out.report["schema_version"] == kSchemaVersion);
  CHECK(out.report["config"]["seed"] == 0);
  CHECK(out.report.contains("timing"));
  CHECK(out.report["library_version"] == kLibraryVersion);
}

TEST_CASE("lie basis in two letters") {
  auto c = make("lie-basis");
  c.n = 2;
  c.m = 2;
  c.p = 2;
  auto r = run(c).report["result"];
  REQUIRE(r["basis"].size() == 1);
  CHECK(r["basis"][0] == "x1x2+x2x1");
  c.p = 3;
  CHECK(run(c).report["result"]["basis"][0] == "x1x2-x2x1");
}

TEST_CASE("split base case") {
  auto c = make("split");
  c.p = 2;
  c.gens = {3};
  c.cap = 3;
  c.m = 3;
  auto out = run(c);
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["verdict"] == true);
}

TEST_CASE("worker count does not change reports") {
  auto c = make("split");
  c.gens = {3, 5};
  c.cap = 5;
  auto one = run(c);
  c.jobs = 4;
  auto four = run(c);
  CHECK(one.report["result"] == four.report["result"]);
}

TEST_CASE("config errors exit with 2") {
  auto c = make("witt");
  c.n = 0;
  CHECK(run(c).exit_code == 2);
  auto b = make("block");
  b.cap = 7;
  CHECK(run(b).exit_code == 2);
  auto s = make("split");
  s.p = 4;
  s.cap = 3;
  CHECK(run(s).exit_code == 2);
  auto f = make("witt");
  f.n = 3;
  f.format = "xml";
  CHECK(run(f).exit_code == 2);
  CHECK(run(make("nope")).exit_code == 2);
  auto e = make("block");
  e.cap = 4;
  e.e = 3;
  CHECK(run(e).exit_code == 2);
  CHECK(run(e).report["error"]["kind"] == "ConfigError");
}

TEST_CASE("module errors exit with 1") {
  auto c = make("gamma");
  c.functor = "L(";
  c.n = 2;
  auto out = run(c);
  CHECK(out.exit_code == 1);
  CHECK(out.report["error"]["kind"] == "ParseError");
  auto r = make("report-1-1");
  r.M = {6};
  r.f = {-1};
  r.cap = 6;
  CHECK(run(r).exit_code == 1);
}

TEST_CASE("dry run validates without computing") {
  auto c = make("hilton");
  c.gens = {3, 6, 12};
  c.target = 12;
  c.dry_run = true;
  auto out = run(c);
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["valid"] == true);
  c.mode = "fast";
  CHECK(run(c).exit_code == 2);
}

TEST_CASE("csv tables") {
  auto c = make("witt");
  c.n = 4;
  c.format = "csv";
  CHECK(render(run(c).report, "csv") == "n,dim\n1,2\n2,1\n3,2\n4,3\n");
  auto l = make("lie-basis");
  l.n = 2;
  l.format = "csv";
  CHECK(run(l).exit_code == 2);
}

TEST_CASE("gamma and projectivity of Lie powers") {
  auto c = make("projective");
  c.p = 3;
  c.functor = "L(3)";
  c.n = 3;
  auto r = run(c).report["result"];
  CHECK(r["dim"] == 2);
  CHECK(r["projective"] == false);
  CHECK(r["max_projective_summand_dim"] == 0);
  c.p = 2;
  r = run(c).report["result"];
  CHECK(r["projective"] == true);
  auto g = make("gamma");
  g.functor = "T(2)";
  g.n = 2;
  CHECK(run(g).report["result"]["dim"] == 2);
}

TEST_CASE("timing is the only run-dependent field") {
  auto c = make("block");
  c.cap = 4;
  auto a = run(c).report, b = run(c).report;
  CHECK(render(without_timing(a), "json") == render(without_timing(b), "json"));
  CHECK_FALSE(without_timing(a).contains("timing"));
}
