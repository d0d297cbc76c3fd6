#pragma once

#include <cstdint>
#include <string_view>

#include "hankelfold/common.hpp"
#include "hankelfold/report.hpp"
#include "hankelfold/seqcore.hpp"
#include "hankelfold/series.hpp"

namespace hankelfold::recur {

using seqcore::Sign;

/// Selects B(x) = 1 - x r(x) (Minus) or B(x) = 1 + x r(x) (Plus). The
/// symbols g (Hankel determinants of the twice-shifted series T) and h
/// (Hankel determinants of B) are scoped to the variant.
enum class Variant { Minus, Plus };

std::string_view name_of(Variant v);
/// Throws std::invalid_argument on anything but "Minus"/"Plus" (any case).
Variant parse_variant(std::string_view s);
series::Named b_series(Variant v);
series::Named t_series(Variant v);

/// An integer split into sign and magnitude, with sign(0) = +1.
class SignedMagnitude {
 public:
  /// A zero magnitude forces the sign to +1.
  SignedMagnitude(Sign sign, std::uint64_t magnitude);
  static SignedMagnitude from_value(std::int64_t v);

  Sign sign() const { return sign_; }
  std::uint64_t magnitude() const { return magnitude_; }
  std::int64_t value() const;

  bool operator==(const SignedMagnitude&) const = default;

 private:
  Sign sign_;
  std::uint64_t magnitude_;
};

/// g_n by descent on the binary digits of n. O(log n).
int g_fast(Variant v, Index n);

/// Reflection identity for g at n >= 1:
///   Minus: g_n = (-1)^{n+1} g_{2^{k+1}-n-1},  Plus: g_n = (-1)^n g_{2^{k+1}-n-1},
/// with 2^k < n+1 <= 2^{k+1}. The identity is stated for n >= 2; at n = 1 the
/// check compares g_1 against its base value instead. Throws for n = 0.
bool g_reflect_check(Variant v, Index n);

/// h_n with sign from g_{n-1} and magnitude from |h_n| = |h_{2^{k+1}-n+1}| + 1,
/// 2^k < n <= 2^{k+1}. For Plus, |h_n| = 0 at n = 2^{k+1} >= 2. O(log n).
SignedMagnitude h_fast(Variant v, Index n);

/// h_n from the signed reflection recursion
///   Minus: h_n = (-1)^n (h_m + g_{m-1}),  n >= 3,
///   Plus:  h_n = (-1)^{n-1} (h_m - g_{m-1}),  n >= 2,
/// with m = 2^{k+1} - n + 1 and 2^k < n <= 2^{k+1}.
std::int64_t h_recursive(Variant v, Index n);

/// y+ = y + 1 for y > 0, y - 1 for y <= 0.
std::int64_t plus_step(std::int64_t y);

/// h_n by the eight residue classes of n mod 8, descending to 4n + c.
SignedMagnitude h_eightcase(Variant v, Index n);

/// The six 2-kernel relations of g, for all n in [0, n_max].
Report check_automaticity_relations(Variant v, Index n_max);

/// The eight 2-regularity relations of h plus the two auxiliary identities
/// for h_{8n+6} and h_{2n+1}, for all n in [0, n_max].
Report check_regularity_relations(Variant v, Index n_max);

/// |sign(h_{n+1}) - sign(h_n)| / 2 for the Minus variant. Throws
/// std::domain_error for n = 0.
int paperfold_from_signs(Index n);

}  // namespace hankelfold::recur
