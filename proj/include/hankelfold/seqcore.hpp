#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hankelfold/common.hpp"

namespace hankelfold::seqcore {

/// A value in {-1, +1}.
class Sign {
 public:
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  /// sign(y) with sign(0) = +1.
  static constexpr Sign of(std::int64_t y) { return y < 0 ? minus() : plus(); }
  /// (-1)^e.
  static constexpr Sign power(Index e) { return (e & 1) ? minus() : plus(); }

  constexpr int value() const { return value_; }
  constexpr Sign operator-() const { return Sign(-value_); }
  constexpr Sign operator*(Sign o) const { return Sign(value_ * o.value_); }
  constexpr bool operator==(const Sign&) const = default;

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_;
};

/// Contiguous run of sequence values starting at index `start`.
struct SeqWindow {
  Index start = 0;
  std::vector<BigInt> values;
};

/// Paperfolding symbol (-1/n) with j(0) = 0.
int j(Index n);

/// Number of maximal blocks of equal bits in the binary expansion of n; runs(0) = 0.
unsigned runs(Index n);

/// s(n) = 1 + sum_{k<=n} j(k), evaluated as 1 + runs(n).
Index s(Index n);

/// Membership in {0} U {m : odd part of m is 1 mod 4}.
bool in_a(Index m);
/// Membership in {m >= 1 : odd part of m is 3 mod 4}.
bool in_b(Index m);

/// Number of elements of the a-set that are <= m, i.e. (m + 1 + s(m)) / 2.
Index count_a(Index m);
/// Number of elements of the b-set that are <= m, i.e. (m + 1 - s(m)) / 2.
Index count_b(Index m);

// n-th element (0-indexed) of the a- and b-sequences by binary search on
// count_a / count_b. O(log n).
Index a_at(Index n);
Index b_at(Index n);

/// First `count` elements by direct scan. Used as the oracle for a_at/b_at.
std::vector<Index> enumerate_a(std::size_t count);
std::vector<Index> enumerate_b(std::size_t count);

/// a_at(n + 1) - a_at(n), always in [1, 4].
int d(Index n);

/// psi(r) = 8r + (1 + s(16r + 2)) / 2. a_at(psi(r)) = 16r + 2.
Index psi(Index r);

/// Thue-Morse bit: parity of the binary digit sum.
int thue_morse(Index n);
/// n-th odious number, 2n + 1 - t(n).
Index odious_at(Index n);
/// n-th evil number, 2n + t(n).
Index evil_at(Index n);

/// c_n - sum_{k <= c_n} (-1)^{lambda_k}, where lambda is the characteristic
/// function of the set of values of c. c must be nonnegative and strictly
/// increasing; throws std::out_of_range if n is past the prefix.
std::int64_t charsum_identity(std::span<const std::int64_t> c, std::size_t n);

/// Values of a named sequence (j, s, a, b, d, runs, tm, odious, evil, psi)
/// on [from, to]. Throws std::invalid_argument for an unknown name.
SeqWindow window(std::string_view name, Index from, Index to);

bool is_sequence_name(std::string_view name);

}  // namespace hankelfold::seqcore
