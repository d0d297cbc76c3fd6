#include <doctest.h>

#include <random>

#include "hankelfold/series.hpp"

using namespace hankelfold;
using namespace hankelfold::series;

TEST_CASE("Rueppel coefficients") {
  const auto r = rueppel(20);
  for (std::size_t i = 0; i < 20; ++i) {
    const bool power = i == 0 || i == 1 || i == 3 || i == 7 || i == 15;
    CHECK(r[i] == (power ? 1 : 0));
  }
}

TEST_CASE("B0 prefix") {
  CHECK(build_named(Named::B0, 12) == IntSeries::from_ints({1, 1, 0, 0, -1, 0, 0, 1, -1, 0, -1, 2}));
  CHECK(build_named(Named::B0, 24) ==
        IntSeries::from_ints({1, 1, 0, 0, -1, 0, 0, 1, -1, 0, -1, 2, 0, 1, -3, 1, -2, 4, -3, 3, -5, 6, -5, 8}));
}

TEST_CASE("named series relations") {
  const std::size_t order = 64;
  const auto r = rueppel(order + 2);
  const auto bm = build_named(Named::BMinus, order);
  const auto bp = build_named(Named::BPlus, order);
  const auto tm = build_named(Named::TMinus, order);
  const auto tp = build_named(Named::TPlus, order);
  const auto g = build_named(Named::G, order);
  CHECK(bm[0] == 1);
  CHECK(bp[0] == 1);
  for (std::size_t i = 0; i + 1 < order; ++i) {
    CHECK(bm[i + 1] == -r[i]);
    CHECK(bp[i + 1] == r[i]);
  }
  for (std::size_t i = 0; i < order; ++i) {
    CHECK(tm[i] == -r[i + 1]);
    CHECK(tp[i] == r[i + 1]);
  }
  CHECK(g == tm);
}

TEST_CASE("inversion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> c(25);
    c[0] = (rng() & 1) ? 1 : -1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = static_cast<long>(rng() % 11) - 5;
    const IntSeries a(c);
    CHECK(a * invert(a) == IntSeries::one(25));
  }
  CHECK_THROWS_AS(invert(IntSeries::from_ints({2, 1})), std::domain_error);
  CHECK_THROWS_AS(invert(IntSeries::from_ints({0, 1})), std::domain_error);
}

TEST_CASE("arithmetic truncates to the smaller order") {
  const auto a = IntSeries::from_ints({1, 2, 3});
  const auto b = IntSeries::from_ints({1, 1});
  CHECK((a + b).order() == 2);
  CHECK(a * b == IntSeries::from_ints({1, 3}));
  CHECK(a - a == IntSeries::zero(3));
  CHECK(BigInt(2) * a == IntSeries::from_ints({2, 4, 6}));
  CHECK(-a == IntSeries::from_ints({-1, -2, -3}));
}

TEST_CASE("shifts") {
  const auto a = IntSeries::from_ints({1, 2});
  CHECK(a.shifted_up(2) == IntSeries::from_ints({0, 0, 1, 2}));
  CHECK(a.shifted_up(2).shifted_down(2) == a);
  CHECK_THROWS_AS(a.shifted_down(1), std::logic_error);
  CHECK(IntSeries::monomial(2, 4) == IntSeries::from_ints({0, 0, 1, 0}));
}

TEST_CASE("fg construction satisfies its defining equation") {
  const auto g = IntSeries::from_ints({1, -2, 0, 3, 1, 1, -1, 2, 0, 0, 1, 1});
  const std::vector<BigInt> u = {2, -1};
  const std::size_t k = 2, order = 10;
  const auto f = fg_construct(g, u, k, order);
  // F (1 + u x - x^{k+2} G) = x^k
  std::vector<BigInt> ux(order, 0);
  for (std::size_t i = 0; i < u.size(); ++i) ux[i + 1] = u[i];
  const auto denom = IntSeries::one(order) + IntSeries(ux) -
                     g.shifted_up(k + 2).truncated(order);
  CHECK(f * denom == IntSeries::monomial(k, order));
  CHECK_THROWS(fg_construct(g, std::vector<BigInt>{1, 1, 1, 1}, 2, 10));
  CHECK_THROWS(fg_construct(g, u, 2, 2));
}

TEST_CASE("CSV round trip and names") {
  const auto a = IntSeries::from_ints({1, -1, 0, 123456789});
  CHECK(to_csv(a) == "1,-1,0,123456789");
  CHECK(parse_csv(" 1, -1,0 ,123456789") == a);
  CHECK_THROWS(parse_csv("1,x"));
  CHECK(parse_named("B_minus") == Named::BMinus);
  CHECK(parse_named("Tplus") == Named::TPlus);
  CHECK_THROWS_AS(parse_named("Q"), std::invalid_argument);
}
