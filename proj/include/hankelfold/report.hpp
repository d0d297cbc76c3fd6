#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "hankelfold/common.hpp"

namespace hankelfold {

struct Counterexample {
  Index n = 0;
  std::string expected;
  std::string actual;

  bool operator==(const Counterexample&) const = default;
};

/// Outcome of one verification run over the index range [lo, hi].
/// A report passes exactly when it carries no counterexample.
struct Report {
  std::string check_id;
  Index lo = 0;
  Index hi = 0;
  std::optional<Counterexample> counterexample;
  std::optional<std::uint64_t> seed;
  double duration_ms = 0.0;
  std::string note;

  bool passed() const { return !counterexample.has_value(); }

  static Report pass(std::string id, Index lo, Index hi, std::string note = {});
  static Report fail(std::string id, Index lo, Index hi, Counterexample cex,
                     std::string note = {});
};

/// {check_id, range:[lo,hi], passed, counterexample:{n,expected,actual}|null,
///  seed, duration_ms, note}
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

}  // namespace hankelfold
