#include <doctest.h>

#include <bit>

#include "hankelfold/hankel.hpp"
#include "hankelfold/recur.hpp"
#include "hankelfold/seqcore.hpp"

using namespace hankelfold;
using namespace hankelfold::recur;

namespace {

int raw_reflection_rhs(Variant v, Index n) {
  const unsigned k = static_cast<unsigned>(std::bit_width(n)) - 1;  // 2^k < n+1 <= 2^{k+1}
  const Index m = (Index{1} << (k + 1)) - n - 1;
  const int sign = v == Variant::Minus ? ((n + 1) % 2 ? -1 : 1) : (n % 2 ? -1 : 1);
  return sign * g_fast(v, m);
}

}  // namespace

TEST_CASE("g matches the oracle for small n") {
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    const auto t = series::build_named(t_series(v), 130);
    for (Index n = 0; n <= 64; ++n) CHECK(hankel::hankel_det(t, n) == g_fast(v, n));
  }
}

TEST_CASE("h matches the oracle for small n") {
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    const auto b = series::build_named(b_series(v), 130);
    for (Index n = 0; n <= 64; ++n) CHECK(hankel::hankel_det(b, n) == static_cast<long>(h_fast(v, n).value()));
  }
}

TEST_CASE("raw reflection formula fails at n = 1 and holds from n = 2") {
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    CHECK(g_fast(v, 1) != raw_reflection_rhs(v, 1));
    CHECK(g_reflect_check(v, 1));
    for (Index n = 2; n < 3000; ++n) {
      CHECK(g_fast(v, n) == raw_reflection_rhs(v, n));
      CHECK(g_reflect_check(v, n));
    }
    CHECK_THROWS(g_reflect_check(v, 0));
  }
}

TEST_CASE("Plus variant vanishes exactly at powers of two >= 2") {
  for (Index n = 0; n < 5000; ++n) {
    const bool zero = n >= 2 && std::has_single_bit(n);
    CHECK((h_fast(Variant::Plus, n).magnitude() == 0) == zero);
  }
  // The reading "n - 1 a power of two" would put zeros at 3, 5, 9.
  CHECK(h_fast(Variant::Plus, 3).value() == -1);
  CHECK(h_fast(Variant::Plus, 5).value() == 1);
  CHECK(h_fast(Variant::Plus, 9).value() == 1);
}

TEST_CASE("Minus variant never vanishes") {
  for (Index n = 0; n < 5000; ++n) CHECK(h_fast(Variant::Minus, n).magnitude() > 0);
}

TEST_CASE("signed recursion and eight-case descent agree with h_fast") {
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    for (Index n = 0; n < 5000; ++n) {
      CHECK(h_recursive(v, n) == h_fast(v, n).value());
      CHECK(h_eightcase(v, n) == h_fast(v, n));
    }
  }
}

TEST_CASE("magnitude laws") {
  for (Index n = 0; n < 5000; ++n) CHECK(h_fast(Variant::Minus, n + 1).magnitude() == seqcore::s(n));
  for (Index n = 1; n < 5000; ++n) CHECK(h_fast(Variant::Plus, n + 1).magnitude() == seqcore::s(n) - 2);
}

TEST_CASE("large indices stay O(log n)") {
  const Index n = (Index{1} << 62) + 123456789;
  CHECK(h_fast(Variant::Minus, n + 1).magnitude() == seqcore::s(n));
  CHECK(h_eightcase(Variant::Minus, n + 1) == h_fast(Variant::Minus, n + 1));
  CHECK(h_recursive(Variant::Plus, n) == h_fast(Variant::Plus, n).value());
}

TEST_CASE("plus_step") {
  CHECK(plus_step(3) == 4);
  CHECK(plus_step(0) == -1);
  CHECK(plus_step(-2) == -3);
}

TEST_CASE("SignedMagnitude normalises zero") {
  CHECK(SignedMagnitude(Sign::minus(), 0) == SignedMagnitude(Sign::plus(), 0));
  CHECK(SignedMagnitude(Sign::minus(), 0).sign() == Sign::plus());
  CHECK(SignedMagnitude::from_value(-5).value() == -5);
  CHECK(SignedMagnitude::from_value(0).sign() == Sign::plus());
}

TEST_CASE("relation suites") {
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    CHECK(check_automaticity_relations(v, 4000).passed());
    CHECK(check_regularity_relations(v, 4000).passed());
  }
}

TEST_CASE("paperfolding from signs") {
  for (Index n = 1; n < 5000; ++n) CHECK(paperfold_from_signs(n) == (1 + seqcore::j(n)) / 2);
  CHECK_THROWS_AS(paperfold_from_signs(0), std::domain_error);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("minus") == Variant::Minus);
  CHECK(parse_variant("Plus") == Variant::Plus);
  CHECK_THROWS_AS(parse_variant("x"), std::invalid_argument);
}
