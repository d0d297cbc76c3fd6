#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hankelfold/common.hpp"
#include "hankelfold/report.hpp"

namespace hankelfold::verify {

inline constexpr std::uint64_t kDefaultSeed = 0xF01D;

enum class Profile { Quick, Full };
Profile parse_profile(std::string_view s);

struct CheckInfo {
  std::string_view id;
  std::string_view description;
  Index quick_n_max;
  Index full_n_max;
  bool randomized;
};

/// Every known check, in the fixed order used by run_all.
const std::vector<CheckInfo>& checks();
/// Throws std::invalid_argument for an unknown id.
const CheckInfo& check_info(std::string_view id);

/// Runs one check on its range. n_max is interpreted per check (see
/// CheckInfo::description). Throws std::invalid_argument for an unknown id.
Report run_check(std::string_view id, Index n_max, std::uint64_t seed = kDefaultSeed);

/// Every check at the profile's default range, in check order.
std::vector<Report> run_all(Profile profile, std::uint64_t seed = kDefaultSeed);

}  // namespace hankelfold::verify
