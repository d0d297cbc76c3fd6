#include <doctest.h>

#include <random>
#include <vector>

#include "hankelfold/seqcore.hpp"

using namespace hankelfold;
using namespace hankelfold::seqcore;

namespace {

const std::vector<int> kTableJ = {0, 1, 1, -1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, -1, 1};
const std::vector<Index> kTableS = {1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 5, 4, 3, 4, 3, 2, 3};
const std::vector<Index> kTableA = {0, 1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20, 21, 25, 26, 29};
const std::vector<Index> kTableB = {3, 6, 7, 11, 12, 14, 15, 19, 22, 23, 24, 27, 28, 30, 31, 35, 38};

Index oddpart(Index m) {
  while (m % 2 == 0) m /= 2;
  return m;
}

}  // namespace

TEST_CASE("table rows for n = 0..16") {
  for (Index n = 0; n <= 16; ++n) {
    CHECK(j(n) == kTableJ[n]);
    CHECK(s(n) == kTableS[n]);
    CHECK(a_at(n) == kTableA[n]);
    CHECK(b_at(n) == kTableB[n]);
  }
  CHECK(enumerate_a(17) == kTableA);
  CHECK(enumerate_b(17) == kTableB);
}

TEST_CASE("paperfolding recursion") {
  for (Index k = 1; k < 5000; ++k) {
    CHECK(j(2 * k) == j(k));
    CHECK(j(2 * k + 1) == ((k & 1) ? -1 : 1));
  }
  CHECK(j(1) == 1);
}

TEST_CASE("s recursions and runs") {
  CHECK(runs(0) == 0);
  CHECK(runs(0b1011) == 3);
  CHECK(runs(~Index{0} >> 1) == 1);
  for (Index n = 0; n < 4096; ++n) {
    CHECK(s(n) == 1 + runs(n));
    CHECK(s(2 * n) == s(n) + (n & 1));
    CHECK(s(2 * n + 1) == s(n) + 1 - (n & 1));
    CHECK(s(4 * n) == s(2 * n));
    CHECK(s(4 * n + 1) == s(2 * n) + 1);
    CHECK(s(4 * n + 2) == s(2 * n + 1) + 1);
    CHECK(s(4 * n + 3) == s(2 * n + 1));
  }
}

TEST_CASE("a and b partition the naturals by odd part") {
  for (Index m = 1; m < 20000; ++m) {
    CHECK(in_a(m) == (oddpart(m) % 4 == 1));
    CHECK(in_b(m) == (oddpart(m) % 4 == 3));
    CHECK(in_a(m) != in_b(m));
  }
  CHECK(in_a(0));
  CHECK_FALSE(in_b(0));
}

TEST_CASE("counting functions") {
  Index ca = 0, cb = 0;
  for (Index m = 0; m < 5000; ++m) {
    ca += in_a(m);
    cb += in_b(m);
    CHECK(count_a(m) == ca);
    CHECK(count_b(m) == cb);
  }
}

TEST_CASE("frozen a, b, psi values") {
  CHECK(a_at(1000) == 1994);
  CHECK(a_at(100000) == 199989);
  CHECK(a_at(1000000) == 1999989);
  CHECK(b_at(1000) == 2007);
  CHECK(b_at(100000) == 200012);
  CHECK(b_at(1000000) == 2000012);
  CHECK(psi(0) == 2);
  CHECK(psi(1) == 11);
  CHECK(psi(2) == 19);
  CHECK(psi(3) == 27);
  CHECK(psi(100) == 804);
  CHECK(psi(10000) == 80005);
}

TEST_CASE("a_n and b_n identities at large n") {
  for (Index n : {Index{1} << 40, (Index{1} << 50) + 12345, Index{999999999999}}) {
    const Index a = a_at(n);
    const Index b = b_at(n);
    CHECK(a + s(a) == 2 * n + 1);
    CHECK(b - s(b) == 2 * n + 1);
    CHECK(in_a(a));
    CHECK(in_b(b));
    CHECK(count_a(a) == n + 1);
    CHECK(count_b(b) == n + 1);
  }
}

TEST_CASE("d differences") {
  const std::vector<int> expected = {1, 1, 2, 1, 3, 1, 1, 3};
  for (Index n = 0; n < expected.size(); ++n) CHECK(d(n) == expected[n]);
}

TEST_CASE("Thue-Morse, odious, evil") {
  CHECK(thue_morse(0) == 0);
  CHECK(thue_morse(7) == 1);
  CHECK(odious_at(0) == 1);
  CHECK(odious_at(1) == 2);
  CHECK(odious_at(2) == 4);
  CHECK(evil_at(0) == 0);
  CHECK(evil_at(1) == 3);
  CHECK(evil_at(2) == 5);
}

TEST_CASE("charsum identity on random increasing prefixes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> c;
    std::int64_t v = static_cast<std::int64_t>(rng() % 5);
    const std::size_t len = 1 + rng() % 40;
    for (std::size_t i = 0; i < len; ++i) {
      c.push_back(v);
      v += 1 + static_cast<std::int64_t>(rng() % 9);
    }
    for (std::size_t n = 0; n < len; ++n) CHECK(charsum_identity(c, n) == static_cast<std::int64_t>(2 * n + 1));
  }
}

TEST_CASE("charsum identity rejects bad input") {
  const std::vector<std::int64_t> c = {0, 2, 2};
  CHECK_THROWS_AS(charsum_identity(c, 2), std::invalid_argument);
  CHECK_THROWS_AS(charsum_identity(c, 3), std::out_of_range);
}

TEST_CASE("Sign") {
  CHECK(Sign::of(0) == Sign::plus());
  CHECK(Sign::of(-4) == Sign::minus());
  CHECK(Sign::power(3) == Sign::minus());
  CHECK((-Sign::plus()) == Sign::minus());
  CHECK((Sign::minus() * Sign::minus()) == Sign::plus());
}

TEST_CASE("windows") {
  const auto w = window("s", 0, 16);
  REQUIRE(w.values.size() == 17);
  for (Index n = 0; n <= 16; ++n) CHECK(w.values[n] == kTableS[n]);
  CHECK(window("a", 0, 0).values == std::vector<BigInt>{0});
  CHECK(window("psi", 0, 1).values == std::vector<BigInt>{2, 11});
  CHECK(is_sequence_name("odious"));
  CHECK_FALSE(is_sequence_name("nope"));
  CHECK_THROWS_AS(window("nope", 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(window("s", 3, 1), std::invalid_argument);
}
