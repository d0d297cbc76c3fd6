#include "hankelfold/seqcore.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace hankelfold::seqcore {

namespace {

Index odd_part(Index m) { return m >> std::countr_zero(m); }

constexpr std::string_view kNames[] = {"j",    "s",  "a",      "b",    "d",
                                       "runs", "tm", "odious", "evil", "psi"};

}  // namespace

int j(Index n) {
  if (n == 0) return 0;
  return (odd_part(n) & 3) == 1 ? 1 : -1;
}

unsigned runs(Index n) {
  // Each set bit of n ^ (n >> 1) marks the top of one run.
  return static_cast<unsigned>(std::popcount(n ^ (n >> 1)));
}

Index s(Index n) { return 1 + runs(n); }

bool in_a(Index m) { return m == 0 || (odd_part(m) & 3) == 1; }

bool in_b(Index m) { return m != 0 && (odd_part(m) & 3) == 3; }

Index count_a(Index m) { return (m + 1 + s(m)) / 2; }

Index count_b(Index m) { return (m + 1 - s(m)) / 2; }

Index a_at(Index n) {
  // a_n = 2n + 1 - s(a_n) <= 2n.
  Index lo = 0;
  Index hi = checked_mul(n, 2);
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (count_a(mid) >= n + 1) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Index b_at(Index n) {
  // b_n = 2n + 1 + s(b_n) and s never exceeds 65 on 64-bit indices.
  Index lo = 0;
  Index hi = checked_add(checked_mul(n, 2), 66);
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (count_b(mid) >= n + 1) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::vector<Index> enumerate_a(std::size_t count) {
  std::vector<Index> out;
  out.reserve(count);
  for (Index m = 0; out.size() < count; ++m) {
    if (in_a(m)) out.push_back(m);
  }
  return out;
}

std::vector<Index> enumerate_b(std::size_t count) {
  std::vector<Index> out;
  out.reserve(count);
  for (Index m = 0; out.size() < count; ++m) {
    if (in_b(m)) out.push_back(m);
  }
  return out;
}

int d(Index n) {
  return static_cast<int>(a_at(checked_add(n, 1)) - a_at(n));
}

Index psi(Index r) {
  const Index m = checked_add(checked_mul(r, 16), 2);
  // s of an even number is odd, so the halving is exact.
  return checked_add(checked_mul(r, 8), (1 + s(m)) / 2);
}

int thue_morse(Index n) { return std::popcount(n) & 1; }

Index odious_at(Index n) {
  return checked_add(checked_mul(n, 2), 1) - static_cast<Index>(thue_morse(n));
}

Index evil_at(Index n) {
  return checked_add(checked_mul(n, 2), static_cast<Index>(thue_morse(n)));
}

std::int64_t charsum_identity(std::span<const std::int64_t> c, std::size_t n) {
  if (n >= c.size()) {
    throw std::out_of_range("charsum_identity: prefix of length " +
                            std::to_string(c.size()) + " does not contain index " +
                            std::to_string(n));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i] < 0) throw std::invalid_argument("charsum_identity: negative term");
    if (i > 0 && c[i] <= c[i - 1]) {
      throw std::invalid_argument("charsum_identity: sequence not strictly increasing");
    }
  }
  const std::int64_t top = c[n];
  std::vector<bool> member(static_cast<std::size_t>(top) + 1, false);
  for (std::size_t i = 0; i <= n; ++i) member[static_cast<std::size_t>(c[i])] = true;

  std::int64_t sum = 0;
  for (std::int64_t k = 0; k <= top; ++k) {
    sum += member[static_cast<std::size_t>(k)] ? -1 : 1;
  }
  return top - sum;
}

bool is_sequence_name(std::string_view name) {
  for (auto known : kNames) {
    if (known == name) return true;
  }
  return false;
}

SeqWindow window(std::string_view name, Index from, Index to) {
  if (!is_sequence_name(name)) {
    throw std::invalid_argument("unknown sequence: " + std::string(name));
  }
  if (from > to) throw std::invalid_argument("window: from > to");
  if (to > kIndexMax) throw std::overflow_error("window: index out of range");

  SeqWindow w;
  w.start = from;
  w.values.reserve(static_cast<std::size_t>(to - from + 1));
  for (Index n = from;; ++n) {
    std::int64_t v = 0;
    if (name == "j") v = j(n);
    else if (name == "s") v = static_cast<std::int64_t>(s(n));
    else if (name == "a") v = static_cast<std::int64_t>(a_at(n));
    else if (name == "b") v = static_cast<std::int64_t>(b_at(n));
    else if (name == "d") v = d(n);
    else if (name == "runs") v = runs(n);
    else if (name == "tm") v = thue_morse(n);
    else if (name == "odious") v = static_cast<std::int64_t>(odious_at(n));
    else if (name == "evil") v = static_cast<std::int64_t>(evil_at(n));
    else v = static_cast<std::int64_t>(psi(n));
    w.values.emplace_back(static_cast<long>(v));
    if (n == to) break;
  }
  return w;
}

}  // namespace hankelfold::seqcore
