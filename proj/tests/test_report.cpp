#include <doctest.h>

#include "hankelfold/report.hpp"

using namespace hankelfold;

TEST_CASE("report JSON round trip") {
  Report r = Report::fail("C6", 0, 100, Counterexample{17, "3", "-4"}, "n");
  r.seed = 99;
  r.duration_ms = 1.5;
  const auto j = to_json(r);
  CHECK(j["check_id"] == "C6");
  CHECK(j["range"] == nlohmann::json::array({0, 100}));
  CHECK(j["passed"] == false);
  CHECK(j["counterexample"]["n"] == 17);
  CHECK(j["counterexample"]["expected"] == "3");
  CHECK(j["seed"] == 99);
  const Report back = report_from_json(j);
  CHECK(back.check_id == r.check_id);
  CHECK(back.counterexample == r.counterexample);
  CHECK(back.seed == r.seed);
  CHECK(back.lo == 0);
  CHECK(back.hi == 100);
}

TEST_CASE("passing report has null counterexample and seed") {
  const auto j = to_json(Report::pass("C2", 0, 5));
  CHECK(j["passed"] == true);
  CHECK(j["counterexample"].is_null());
  CHECK(j["seed"].is_null());
}
