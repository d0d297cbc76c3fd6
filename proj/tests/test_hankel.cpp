#include <doctest.h>

#include <random>
#include <vector>

#include "hankelfold/hankel.hpp"

using namespace hankelfold;
using namespace hankelfold::hankel;
using series::IntSeries;
using series::Named;

namespace {

// Laplace expansion along the first row; independent of elimination.
BigInt cofactor_det(const std::vector<BigInt>& m, std::size_t n) {
  if (n == 0) return 1;
  if (n == 1) return m[0];
  BigInt total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<BigInt> minor;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) minor.push_back(m[r * n + c]);
    const BigInt term = m[col] * cofactor_det(minor, n - 1);
    total += (col % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

std::vector<BigInt> profile_of(Named name, std::size_t n_max) {
  return hankel_profile(series::build_named(name, 2 * n_max + 1), n_max).values;
}

std::vector<BigInt> big(std::initializer_list<long> xs) { return std::vector<BigInt>(xs.begin(), xs.end()); }

}  // namespace

TEST_CASE("printed profiles") {
  CHECK(profile_of(Named::BMinus, 16) == big({1, 1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5, -4, -3, 4, 3, 2}));
  CHECK(profile_of(Named::BPlus, 19) ==
        big({1, 1, 0, -1, 0, 1, 2, -1, 0, 1, 2, 3, -2, 1, 2, -1, 0, 1, 2, 3}));
  CHECK(profile_of(Named::B0, 16) == big({1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1}));
}

TEST_CASE("frozen profiles from a rational-elimination oracle") {
  CHECK(profile_of(Named::BMinus, 40) ==
        big({1, 1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5, -4, -3, 4, 3, 2, -3, 4, -5, -4,
             5, -6, -5, -4, -3, 4, -5, -4, -3, 4, 3, 2, -3, 4, -5, -4, 5, -6, -5, -4}));
  CHECK(profile_of(Named::BPlus, 40) ==
        big({1, 1, 0, -1, 0, 1, 2, -1, 0, 1, 2, 3, -2, 1, 2, -1, 0, 1, 2, 3, -2,
             -3, -4, 3, -2, 1, 2, 3, -2, 1, 2, -1, 0, 1, 2, 3, -2, -3, -4, 3, -2}));
  CHECK(profile_of(Named::TMinus, 40) ==
        big({1, -1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, 1,
             -1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1, -1, -1, 1}));
  CHECK(profile_of(Named::TPlus, 40) ==
        big({1, 1, 1, -1, -1, -1, 1, -1, -1, -1, -1, 1, -1, -1, 1, -1, -1, -1, -1, 1, 1,
             1, -1, 1, -1, -1, -1, 1, -1, -1, 1, -1, -1, -1, -1, 1, 1, 1, -1, 1, 1}));
  CHECK(profile_of(Named::B0, 40) ==
        big({1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1,
             1, -1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1, -1, -1}));
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<BigInt> m(n * n);
      for (auto& x : m) x = static_cast<long>(rng() % 7) - 3;  // plenty of zero pivots
      CHECK(det_bareiss(m, n) == cofactor_det(m, n));
    }
  }
}

TEST_CASE("Bareiss falls back to GMP on overflow") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<BigInt> m(n * n);
    std::vector<std::int64_t> small(n * n);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto v = static_cast<std::int64_t>(rng() % 2000000000000LL) - 1000000000000LL;
      m[i] = static_cast<long>(v);
      small[i] = v;
    }
    CHECK_FALSE(det_bareiss_i64(small, n).has_value());
    CHECK(det_bareiss(m, n) == cofactor_det(m, n));
  }
}

TEST_CASE("Hankel matrix layout and domain") {
  const auto f = IntSeries::from_ints({1, 2, 3, 4, 5});
  const auto h = HankelMatrix::from_series(f, 3);
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(1, 2) == 4);
  CHECK(h.at(2, 2) == 5);
  CHECK(h.entries() == big({1, 2, 3, 2, 3, 4, 3, 4, 5}));
  CHECK(hankel_det(f, 0) == 1);
  CHECK(hankel_det(f, 3) == 0);
  CHECK_THROWS_AS(hankel_det(f, 4), std::invalid_argument);
}

TEST_CASE("profile CSV") {
  const auto p = hankel_profile(series::build_named(Named::BMinus, 9), 4, "Bminus");
  CHECK(p.to_csv() == "n,h_n\n0,1\n1,1\n2,-2\n3,3\n4,2\n");
}
