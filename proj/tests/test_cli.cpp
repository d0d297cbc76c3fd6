#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hankelfold/cli.hpp"
#include "hankelfold/verify.hpp"

using namespace hankelfold;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hankelfold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("duration_ms");
  return j;
}

}  // namespace

TEST_CASE("seq") {
  auto r = run({"seq", "s", "0", "16"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n2\n3\n2\n3\n4\n3\n2\n3\n4\n5\n4\n3\n4\n3\n2\n3\n");
  CHECK(run({"seq", "a", "0", "0"}).out == "0\n");
  CHECK(run({"seq", "d", "0", "7", "--format", "csv"}).out == "1,1,2,1,3,1,1,3\n");
  CHECK(run({"seq", "j", "0", "3", "--format", "json"}).out == "[\"0\",\"1\",\"1\",\"-1\"]\n");
  CHECK(run({"seq", "s", "5", "1"}).code == 2);
  CHECK(run({"seq", "zz", "0", "1"}).code == 2);
  CHECK(run({"seq", "s", "-1", "1"}).code == 2);
}

TEST_CASE("hankel") {
  auto r = run({"hankel", "Bminus", "16", "--engine", "oracle", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,h_n\n0,1\n1,1\n2,-2\n", 0) == 0);
  CHECK(run({"hankel", "Bplus", "19", "--engine", "both"}).code == 0);
  CHECK(run({"hankel", "B0", "16", "--format", "csv"}).out.find("16,1\n") != std::string::npos);
  CHECK(run({"hankel", "B0", "4", "--engine", "fast"}).code == 2);
  CHECK(run({"hankel", "Q", "4"}).code == 2);
  CHECK(run({"hankel", "Tminus", "5", "--engine", "fast"}).out == "1\n-1\n1\n1\n-1\n1\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "C6", "--n-max", "1000"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["range"] == nlohmann::json::array({0, 1000}));
  auto bad = run({"verify", "nosuch"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--list"}).out.find("OracleEquiv") != std::string::npos);
}

TEST_CASE("verify output equals library output for seeded runs") {
  const auto r = run({"verify", "FGLemma", "--n-max", "20", "--seed", "9"});
  REQUIRE(r.code == 0);
  const auto lib = to_json(verify::run_check("FGLemma", 20, 9));
  CHECK(without_timing(nlohmann::json::parse(r.out)).dump() == without_timing(lib).dump());
}

TEST_CASE("morphic") {
  CHECK(run({"morphic", "8", "--mode", "decorate"}).out == "12131133\n");
  CHECK(run({"morphic", "1", "--mode", "decorate"}).out == "1\n");
  const auto d = run({"morphic", "20000", "--mode", "diff"});
  CHECK(d.code == 0);
  CHECK(d.out == "identical\n");
  CHECK(run({"morphic", "0"}).code == 2);
  CHECK(run({"morphic", "4", "--mode", "zzz"}).code == 2);
}

TEST_CASE("words and kernel") {
  const auto w = run({"words", "3"});
  CHECK(w.out.find("U 0102002\n") != std::string::npos);
  CHECK(w.out.find("V 203010\n") != std::string::npos);
  const auto k = run({"kernel", "j", "--levels", "4", "--format", "json"});
  CHECK(k.code == 0);
  CHECK(nlohmann::json::parse(k.out).contains("levels"));
}

TEST_CASE("oeis") {
  CHECK(run({"oeis", "A088748", "s", "10000", "--offline"}).code == 0);
  CHECK(run({"oeis", "A005811", "runs", "10000", "--offline"}).code == 0);
  CHECK(run({"oeis", "A034947", "j", "10000", "--offline"}).code == 0);
  CHECK(run({"oeis", "A088748", "runs", "100", "--offline"}).code == 1);
  CHECK(run({"oeis", "A999999", "s", "10", "--offline"}).code == 3);
  CHECK(run({"oeis", "A12", "s", "10"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
