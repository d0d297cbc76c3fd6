#pragma once

#include <ostream>
#include <string_view>

namespace hankelfold::cli {

enum class OutputFormat { Plain, Csv, Json };
OutputFormat parse_format(std::string_view s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `hankelfold` tool. Never throws; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hankelfold::cli
