#include "hankelfold/report.hpp"

namespace hankelfold {

Report Report::pass(std::string id, Index lo, Index hi, std::string note) {
  Report r;
  r.check_id = std::move(id);
  r.lo = lo;
  r.hi = hi;
  r.note = std::move(note);
  return r;
}

Report Report::fail(std::string id, Index lo, Index hi, Counterexample cex, std::string note) {
  Report r = pass(std::move(id), lo, hi, std::move(note));
  r.counterexample = std::move(cex);
  return r;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["range"] = {r.lo, r.hi};
  j["passed"] = r.passed();
  if (r.counterexample) {
    j["counterexample"] = {{"n", r.counterexample->n},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["duration_ms"] = r.duration_ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.check_id = j.at("check_id").get<std::string>();
  r.lo = j.at("range").at(0).get<Index>();
  r.hi = j.at("range").at(1).get<Index>();
  if (!j.at("counterexample").is_null()) {
    const auto& c = j.at("counterexample");
    r.counterexample = Counterexample{c.at("n").get<Index>(), c.at("expected").get<std::string>(),
                                      c.at("actual").get<std::string>()};
  }
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.duration_ms = j.at("duration_ms").get<double>();
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

}  // namespace hankelfold
