#include "hankelfold/oeis.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <unistd.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "hankelfold/seqcore.hpp"

namespace hankelfold::oeis {

namespace fs = std::filesystem;

std::string_view name_of(Source s) {
  switch (s) {
    case Source::Network: return "network";
    case Source::Cache: return "cache";
    case Source::Fixture: return "fixture";
  }
  return "?";
}

std::int64_t BFile::first_index() const {
  if (entries.empty()) throw std::out_of_range("empty b-file " + id);
  return entries.front().first;
}

std::int64_t BFile::last_index() const {
  if (entries.empty()) throw std::out_of_range("empty b-file " + id);
  return entries.back().first;
}

const BigInt& BFile::at(std::int64_t index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const auto& e, std::int64_t i) { return e.first < i; });
  if (it == entries.end() || it->first != index) {
    throw std::out_of_range(id + " has no entry at index " + std::to_string(index));
  }
  return it->second;
}

bool is_valid_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BFile parse_bfile(std::string_view id, std::string_view text, Source source) {
  BFile b;
  b.id = std::string(id);
  b.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string idx_tok, val_tok, extra;
    fields >> idx_tok >> val_tok;
    if (idx_tok.empty() || val_tok.empty() || (fields >> extra)) {
      throw ParseError(lineno, "expected 'index value', got '" + line + "'");
    }
    std::int64_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(idx_tok, &used);
      if (used != idx_tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad index '" + idx_tok + "'");
    }
    BigInt value;
    if (val_tok[0] == '+' || value.set_str(val_tok, 10) != 0) {
      throw ParseError(lineno, "bad value '" + val_tok + "'");
    }
    if (!b.entries.empty() && index <= b.entries.back().first) {
      throw ParseError(lineno, "index " + std::to_string(index) + " is not increasing");
    }
    b.entries.emplace_back(index, std::move(value));
  }
  return b;
}

std::string serialize(const BFile& b) {
  std::string out;
  for (const auto& [index, value] : b.entries) {
    out += std::to_string(index);
    out += ' ';
    out += value.get_str();
    out += '\n';
  }
  return out;
}

std::string bfile_url(std::string_view id) {
  return "https://oeis.org/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt";
}

Fetcher https_fetcher() {
  return [](const std::string& url) -> std::string {
    const std::string prefix = "https://oeis.org";
    if (url.rfind(prefix, 0) != 0) throw FetchError("unsupported URL " + url);
    httplib::SSLClient client("oeis.org", 443);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get(url.substr(prefix.size()));
    if (!res) throw FetchError("GET " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw FetchError("GET " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
  };
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("HANKELFOLD_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hankelfold";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hankelfold";
  return fs::temp_directory_path() / "hankelfold";
}

fs::path bundled_fixture_dir() { return HANKELFOLD_FIXTURE_DIR; }

namespace {

std::string file_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void write_atomic(const fs::path& path, std::string_view content) {
  static std::atomic<unsigned long> counter{0};
  fs::create_directories(path.parent_path());
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << ::getpid() << '.'
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const fs::path tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw FetchError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw FetchError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

BFile fetch(std::string_view id, const FetchOptions& options) {
  if (!is_valid_id(id)) throw std::invalid_argument("invalid OEIS id '" + std::string(id) + "'");
  const fs::path cache = (options.cache_dir.empty() ? default_cache_dir() : options.cache_dir) / file_name(id);

  if (options.use_cache) {
    if (auto text = read_file(cache)) return parse_bfile(id, *text, Source::Cache);
  }
  if (!options.fixture_dir.empty()) {
    if (auto text = read_file(options.fixture_dir / file_name(id))) {
      return parse_bfile(id, *text, Source::Fixture);
    }
  }
  if (options.offline) {
    throw FetchError(std::string(id) + " is neither cached nor bundled, and offline mode is set");
  }
  const Fetcher fetcher = options.fetcher ? options.fetcher : https_fetcher();
  const std::string body = fetcher(bfile_url(id));
  BFile b = parse_bfile(id, body, Source::Network);
  if (!options.use_cache) return b;
  try {
    write_atomic(cache, body);
  } catch (const std::exception&) {
    // An unwritable cache does not invalidate the download.
  }
  return b;
}

std::int64_t validate_a034947(const BFile& b) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    BigInt value;
    try {
      value = b.at(n);
    } catch (const std::out_of_range&) {
      throw ConfigError(b.id + ": no entry at index " + std::to_string(n));
    }
    if (value != seqcore::j(static_cast<Index>(n))) {
      throw ConfigError(b.id + ": value " + value.get_str() + " at index " + std::to_string(n) +
                        " contradicts the paperfolding table");
    }
  }
  return b.first_index();
}

Report cross_check(const BFile& b, const LocalSequence& local, Index offset, Index n_max) {
  const std::string id = "OEIS:" + b.id;
  if (n_max == 0) return Report::pass(id, offset, offset, "empty range");
  const Index last = checked_add(offset, n_max - 1);
  if (b.entries.empty() || b.first_index() > static_cast<std::int64_t>(offset) ||
      b.last_index() < static_cast<std::int64_t>(last)) {
    throw ConfigError(b.id + " does not cover indices [" + std::to_string(offset) + ", " +
                      std::to_string(last) + "]");
  }
  for (Index i = offset; i <= last; ++i) {
    const BigInt& expected = b.at(static_cast<std::int64_t>(i));
    const BigInt actual = local(i);
    if (actual != expected) {
      return Report::fail(id, offset, last, Counterexample{i, expected.get_str(), actual.get_str()},
                          std::string("source=") + std::string(name_of(b.source)));
    }
  }
  return Report::pass(id, offset, last, std::string("source=") + std::string(name_of(b.source)));
}

}  // namespace hankelfold::oeis
