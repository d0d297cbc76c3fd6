#include <doctest.h>

#include <set>

#include "hankelfold/verify.hpp"

using namespace hankelfold;
using namespace hankelfold::verify;

TEST_CASE("check registry") {
  std::set<std::string_view> ids;
  for (const auto& c : checks()) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.quick_n_max <= c.full_n_max);
  }
  for (const char* id : {"C1", "C2", "C3", "C6", "C8", "C11", "C16", "FGLemma", "OracleEquiv", "Witness", "OEIS"}) {
    CHECK(ids.count(id) == 1);
  }
  CHECK_THROWS_AS(check_info("nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(run_check("nosuch", 1), std::invalid_argument);
  CHECK(parse_profile("full") == Profile::Full);
  CHECK_THROWS_AS(parse_profile("slow"), std::invalid_argument);
}

TEST_CASE("every check passes on a small range") {
  for (const auto& c : checks()) {
    const Index n_max = std::min<Index>(c.quick_n_max, c.id == "C1" ? 256 : 64);
    const Report r = run_check(c.id, n_max);
    INFO(c.id, " ", r.note);
    CHECK(r.passed());
    CHECK(r.check_id == c.id);
    CHECK(r.seed.has_value() == c.randomized);
  }
}

TEST_CASE("randomized checks are reproducible") {
  const Report a = run_check("FGLemma", 10, 123);
  const Report b = run_check("FGLemma", 10, 123);
  CHECK(a.seed == std::optional<std::uint64_t>(123));
  CHECK(a.note == b.note);
  CHECK(run_check("OracleEquiv", 8, 5).hi == 64);
}
