#include <doctest.h>

#include "hankelfold/morphic.hpp"
#include "hankelfold/seqcore.hpp"

using namespace hankelfold;
using namespace hankelfold::morphic;

TEST_CASE("f iterates") {
  CHECK(morphism_f().power(0, 2).to_string() == "0121");
  CHECK(fixed_point_prefix(morphism_f(), 0, 8).to_string() == "01210321");
  CHECK(morphism_f().is_prolongable(0));
  CHECK_FALSE(morphism_f().is_prolongable(1));
  CHECK(morphism_g().is_non_erasing());
}

TEST_CASE("decorated fixed point is the difference sequence") {
  CHECK(decorated_d_prefix(8).to_string() == "12131133");
  CHECK(decorated_d_prefix(1).to_string() == "1");
  const auto w = decorated_d_prefix(5000);
  for (Index n = 0; n < 5000; ++n) CHECK(w[n] == seqcore::d(n + 1));
}

TEST_CASE("fixed point guards") {
  const Morphism erasing({Word::parse("01"), Word()});
  CHECK_THROWS_AS(fixed_point_prefix(erasing, 0, 10), std::domain_error);
  CHECK_THROWS_AS(fixed_point_prefix(morphism_f(), 1, 10), std::domain_error);
}

TEST_CASE("word operations") {
  const auto w = Word::parse("0110");
  CHECK(w.reversed().to_string() == "0110");
  CHECK(w.complemented().to_string() == "1001");
  CHECK(Word::parse("012").reversed().to_string() == "210");
  CHECK_THROWS_AS(Word::parse("012").complemented(), std::domain_error);
  CHECK(Word::parse("01").is_prefix_of(w));
  CHECK_FALSE(Word::parse("1").is_prefix_of(w));
  CHECK((Word::parse("12") + Word::parse("3")).to_string() == "123");
  CHECK_THROWS_AS(Word::parse("0a"), std::invalid_argument);
  CHECK_THROWS_AS(morphism_f().apply(Word::parse("5")), std::out_of_range);
}

TEST_CASE("perturbed-symmetry words") {
  const auto w3 = perturbed_words(3);
  CHECK(w3.x.size() == 15);
  CHECK(w3.u.to_string() == "0102002");
  CHECK(w3.v.to_string() == "203010");
  CHECK(perturbed_words(1).a.to_string() == "1213113");
  for (unsigned k = 0; k <= 10; ++k) {
    const auto w = perturbed_words(k);
    for (std::size_t i = 0; i < w.x.size(); ++i) CHECK(w.x[i] == (1 + seqcore::j(i + 1)) / 2);
    CHECK(w.u == gap_word(w.x, 1));
    CHECK(w.v == gap_word(w.x, 0));
    CHECK(w.a == decorated_d_prefix(w.a.size()));
  }
  CHECK_THROWS(perturbed_words(kMaxPerturbedLevel + 1));
}

TEST_CASE("decoration identities") {
  CHECK(decoration_identity_check(9).passed());
}

TEST_CASE("kernel exploration") {
  const auto j = kernel_explore([](Index n) { return static_cast<std::int64_t>(seqcore::j(n)); }, 2, 5, 512);
  REQUIRE(j.stabilized_at.has_value());
  CHECK(j.classes.size() == 4);
  const auto d = kernel_explore([](Index n) { return static_cast<std::int64_t>(seqcore::d(n)); }, 2, 5, 512);
  CHECK_FALSE(d.stabilized_at.has_value());
  for (std::size_t i = 1; i < d.levels.size(); ++i) CHECK(d.levels[i].cumulative > d.levels[i - 1].cumulative);
  const auto json = j.to_json();
  CHECK(json.contains("levels"));
}

TEST_CASE("non-automaticity witness") {
  const auto w = non_automaticity_witness(3, 4);
  CHECK(w.t == 2730);
  CHECK(seqcore::s(w.t) == 13);
  CHECK(w.psi_r == w.index_alpha);
  CHECK(w.psi_r_prime == w.index_beta + 1);
  CHECK(w.u_alpha == 2);
  CHECK(w.u_beta != 2);
  CHECK(w.passed());
  CHECK(non_automaticity_witness(4, 5).passed());
  CHECK_THROWS(non_automaticity_witness(4, 4));
  CHECK_THROWS(non_automaticity_witness(2, 4));
  CHECK_THROWS_AS(non_automaticity_witness(5, 6), std::overflow_error);
}
