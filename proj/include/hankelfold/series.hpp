#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hankelfold/common.hpp"

namespace hankelfold::series {

/// Truncated formal power series with exact integer coefficients.
///
/// A series of order N knows its coefficients at x^0 .. x^{N-1}. Binary
/// arithmetic truncates to the smaller order of the two operands.
class IntSeries {
 public:
  /// Throws std::invalid_argument if `coeffs` is empty.
  explicit IntSeries(std::vector<BigInt> coeffs);

  static IntSeries from_ints(std::initializer_list<long> coeffs);
  static IntSeries zero(std::size_t order);
  static IntSeries one(std::size_t order);
  /// The monomial x^m, truncated to `order`.
  static IntSeries monomial(std::size_t m, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  IntSeries truncated(std::size_t order) const;
  /// Multiply by x^m. The order grows by m.
  IntSeries shifted_up(std::size_t m) const;
  /// Divide by x^m. The m low coefficients must be zero; otherwise throws
  /// std::logic_error. The order shrinks by m and must stay >= 1.
  IntSeries shifted_down(std::size_t m) const;

  IntSeries operator-() const;
  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const BigInt& c, const IntSeries& a);

  bool operator==(const IntSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// r(x) = sum_n x^{2^n - 1}.
IntSeries rueppel(std::size_t order);

/// Multiplicative inverse. The constant term must be +1 or -1; throws
/// std::domain_error otherwise.
IntSeries invert(const IntSeries& a);

enum class Named { BMinus, BPlus, TMinus, TPlus, B0, G };

/// Accepts "B_minus"/"Bminus", "B_plus"/"Bplus", "T_minus"/"Tminus",
/// "T_plus"/"Tplus", "B0", "G". Throws std::invalid_argument otherwise.
Named parse_named(std::string_view name);
std::string_view name_of(Named n);

/// Exact prefix of one of the generating functions built on r(x):
///   BMinus = 1 - x r,   TMinus = (BMinus - (1 - x)) / x^2,
///   BPlus  = 1 + x r,   TPlus  = (BPlus - (1 + x)) / x^2,
///   B0     = r / (r - x),
///   G      = (1 - r) / x.
IntSeries build_named(Named name, std::size_t order);

/// F = x^k / (1 + u(x) x - x^{k+2} G(x)) to `order` coefficients.
/// Requires deg u <= k (u.size() <= k + 1) and order > k.
IntSeries fg_construct(const IntSeries& g, std::span<const BigInt> u, std::size_t k,
                       std::size_t order);

/// Comma-separated coefficient list, e.g. "1,-1,0,2".
std::string to_csv(const IntSeries& a);
/// Inverse of to_csv; whitespace around entries is ignored.
IntSeries parse_csv(std::string_view text);

}  // namespace hankelfold::series
