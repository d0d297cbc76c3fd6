#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hankelfold/common.hpp"
#include "hankelfold/series.hpp"

namespace hankelfold::hankel {

/// n x n matrix with entry (i, j) = a_{i+j}.
class HankelMatrix {
 public:
  /// Throws std::invalid_argument if f.order() < 2n - 1.
  static HankelMatrix from_series(const series::IntSeries& f, std::size_t n);

  std::size_t size() const { return n_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return diag_.at(i + j); }
  /// Row-major copy of all n^2 entries.
  std::vector<BigInt> entries() const;

  BigInt determinant() const;

 private:
  HankelMatrix(std::size_t n, std::vector<BigInt> diag) : n_(n), diag_(std::move(diag)) {}
  std::size_t n_;
  std::vector<BigInt> diag_;  // a_0 .. a_{2n-2}
};

/// Exact determinant of a row-major n x n integer matrix by fraction-free
/// (Bareiss) elimination with row swaps on zero pivots. Runs in machine
/// integers while the minors fit and restarts in GMP otherwise.
BigInt det_bareiss(const std::vector<BigInt>& entries, std::size_t n);

/// Machine-integer Bareiss; std::nullopt if any intermediate minor overflows.
std::optional<std::int64_t> det_bareiss_i64(std::vector<std::int64_t> entries, std::size_t n);

/// H_n(f). H_0 = 1. Throws std::invalid_argument if f.order() < 2n - 1.
BigInt hankel_det(const series::IntSeries& f, std::size_t n);

enum class Source { Oracle, Recurrence };

struct HankelProfile {
  std::string series;
  Source source = Source::Oracle;
  std::vector<BigInt> values;  // values[n] = H_n

  /// Rows "n,h_n" preceded by a header line.
  std::string to_csv() const;
};

/// H_0 .. H_{n_max}, each computed from scratch.
HankelProfile hankel_profile(const series::IntSeries& f, std::size_t n_max,
                             std::string series_name = {});

}  // namespace hankelfold::hankel
