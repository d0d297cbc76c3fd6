#pragma once

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hankelfold/common.hpp"
#include "hankelfold/report.hpp"

namespace hankelfold::oeis {

enum class Source { Network, Cache, Fixture };
std::string_view name_of(Source s);

struct BFile {
  std::string id;  // e.g. "A088748"
  std::vector<std::pair<std::int64_t, BigInt>> entries;
  Source source = Source::Fixture;

  std::int64_t first_index() const;
  std::int64_t last_index() const;
  /// Value at `index`; throws std::out_of_range if absent.
  const BigInt& at(std::int64_t index) const;
};

/// Malformed b-file content. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Network or cache failure (no data obtainable).
class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// B-file content contradicting known values, or b-file too short for a request.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True for "A" followed by exactly six digits.
bool is_valid_id(std::string_view id);

/// Parses "index value" lines. Blank lines and lines starting with '#' are
/// skipped; indices must be strictly increasing.
BFile parse_bfile(std::string_view id, std::string_view text, Source source);
/// "index value\n" per entry.
std::string serialize(const BFile& b);

/// https://oeis.org/A088748/b088748.txt
std::string bfile_url(std::string_view id);

using Fetcher = std::function<std::string(const std::string& url)>;

/// HTTPS GET via cpp-httplib. Throws FetchError on any failure.
Fetcher https_fetcher();

struct FetchOptions {
  bool offline = false;
  bool use_cache = true;
  std::filesystem::path cache_dir;    // empty: default_cache_dir()
  std::filesystem::path fixture_dir;  // empty: no fixtures
  Fetcher fetcher;                    // empty: https_fetcher()
};

/// $HANKELFOLD_CACHE, else $XDG_CACHE_HOME/hankelfold, else ~/.cache/hankelfold.
std::filesystem::path default_cache_dir();
/// Directory of the b-files shipped with the source tree.
std::filesystem::path bundled_fixture_dir();

/// Cache first, then fixtures, then the network unless offline. Downloads
/// are stored verbatim in the cache via write-to-temp and rename.
BFile fetch(std::string_view id, const FetchOptions& options);

/// Writes `content` to `path` atomically.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Checks that a b-file for A034947 agrees with the paperfolding values
/// j(1..16) at its own indices and returns its first index. Throws
/// ConfigError on mismatch.
std::int64_t validate_a034947(const BFile& b);

using LocalSequence = std::function<BigInt(Index)>;

/// Compares local(i) with the b-file value at i for i in [offset, offset + n_max).
/// Throws ConfigError if the b-file does not cover that range.
Report cross_check(const BFile& b, const LocalSequence& local, Index offset, Index n_max);

}  // namespace hankelfold::oeis
