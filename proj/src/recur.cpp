#include "hankelfold/recur.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankelfold::recur {

namespace {

// Parity of x(x+1)/2.
bool triangular_odd(Index x) {
  const Index r = x & 3;
  return r == 1 || r == 2;
}

// k + 1 such that 2^k < n <= 2^{k+1}, for n >= 2.
unsigned upper_exponent(Index n) { return static_cast<unsigned>(std::bit_width(n - 1)); }

// m = 2^{k+1} - n + 1.
Index reflect(Index n) { return (Index{1} << upper_exponent(n)) - n + 1; }

std::uint64_t magnitude_minus(Index n) {
  std::uint64_t steps = 0;
  while (n >= 2) {
    n = reflect(n);
    ++steps;
  }
  return 1 + steps;
}

std::uint64_t magnitude_plus(Index n) {
  std::uint64_t steps = 0;
  for (;;) {
    if (n <= 1) return 1 + steps;
    if (std::has_single_bit(n)) return steps;  // includes n = 2
    n = reflect(n);
    ++steps;
  }
}

// A linear relation  x(a n + b) = sum coef_i x(mult_i n + add_i).
struct Term {
  std::int64_t coef;
  Index mult;
  Index add;
};

struct Relation {
  const char* name;
  Index mult;
  Index add;
  std::vector<Term> rhs;
};

Report check_relations(std::string id, const std::vector<Relation>& rels, Index n_max,
                       const std::function<std::int64_t(Index)>& x) {
  for (Index n = 0; n <= n_max; ++n) {
    for (const auto& rel : rels) {
      const Index lhs_index = checked_add(checked_mul(rel.mult, n), rel.add);
      const std::int64_t lhs = x(lhs_index);
      std::int64_t rhs = 0;
      for (const auto& t : rel.rhs) rhs += t.coef * x(checked_add(checked_mul(t.mult, n), t.add));
      if (lhs != rhs) {
        return Report::fail(id, 0, n_max,
                            Counterexample{n, std::to_string(rhs), std::to_string(lhs)},
                            std::string("relation ") + rel.name + " fails");
      }
    }
  }
  return Report::pass(std::move(id), 0, n_max,
                      std::to_string(rels.size()) + " relations hold");
}

}  // namespace

std::string_view name_of(Variant v) { return v == Variant::Minus ? "Minus" : "Plus"; }

Variant parse_variant(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "minus") return Variant::Minus;
  if (lower == "plus") return Variant::Plus;
  throw std::invalid_argument("unknown variant: " + std::string(s));
}

series::Named b_series(Variant v) {
  return v == Variant::Minus ? series::Named::BMinus : series::Named::BPlus;
}

series::Named t_series(Variant v) {
  return v == Variant::Minus ? series::Named::TMinus : series::Named::TPlus;
}

SignedMagnitude::SignedMagnitude(Sign sign, std::uint64_t magnitude)
    : sign_(magnitude == 0 ? Sign::plus() : sign), magnitude_(magnitude) {}

SignedMagnitude SignedMagnitude::from_value(std::int64_t v) {
  const auto mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  return SignedMagnitude(Sign::of(v), mag);
}

std::int64_t SignedMagnitude::value() const {
  return sign_.value() * static_cast<std::int64_t>(magnitude_);
}

int g_fast(Variant v, Index n) {
  // Minus: g_{2q} = (-1)^{q(q+1)/2} g_q,  g_{2q+1} = (-1)^{(q+1)(q+2)/2} g_q.
  // Plus:  g_{2q} = (-1)^{q(q-1)/2} g_q,  g_{2q+1} = (-1)^{q(q+1)/2} g_q.
  // Both with g_0 = 1.
  bool negative = false;
  while (n > 0) {
    const Index q = n >> 1;
    const bool odd = n & 1;
    bool flip = false;
    if (v == Variant::Minus) {
      flip = odd ? triangular_odd(q + 1) : triangular_odd(q);
    } else {
      flip = odd ? triangular_odd(q) : triangular_odd(q - 1);
    }
    negative ^= flip;
    n = q;
  }
  return negative ? -1 : 1;
}

bool g_reflect_check(Variant v, Index n) {
  if (n == 0) throw std::domain_error("g_reflect_check: n must be >= 1");
  if (n == 1) return g_fast(v, 1) == (v == Variant::Minus ? -1 : 1);
  const unsigned k = static_cast<unsigned>(std::bit_width(n)) - 1;
  const Index partner = (Index{1} << (k + 1)) - n - 1;
  const Sign factor = v == Variant::Minus ? Sign::power(n + 1) : Sign::power(n);
  return g_fast(v, n) == factor.value() * g_fast(v, partner);
}

SignedMagnitude h_fast(Variant v, Index n) {
  if (v == Variant::Minus) {
    if (n == 0) return SignedMagnitude(Sign::plus(), 1);
    return SignedMagnitude(Sign::of(g_fast(v, n - 1)), magnitude_minus(n));
  }
  if (n <= 2) return SignedMagnitude(Sign::plus(), n == 2 ? 0 : 1);
  return SignedMagnitude(-Sign::of(g_fast(v, n - 1)), magnitude_plus(n));
}

std::int64_t h_recursive(Variant v, Index n) {
  if (v == Variant::Minus) {
    if (n <= 1) return 1;
    if (n == 2) return -2;
    const Index m = reflect(n);
    return Sign::power(n).value() * (h_recursive(v, m) + g_fast(v, m - 1));
  }
  if (n <= 1) return 1;
  const Index m = reflect(n);
  return Sign::power(n - 1).value() * (h_recursive(v, m) - g_fast(v, m - 1));
}

std::int64_t plus_step(std::int64_t y) { return y > 0 ? y + 1 : y - 1; }

namespace {

std::int64_t eightcase_value(Variant v, Index n) {
  if (n <= 1) return 1;
  if (n == 2) return v == Variant::Minus ? -2 : 0;
  const Index q = n >> 3;
  const Index base = 4 * q;
  const bool minus = v == Variant::Minus;
  switch (n & 7) {
    case 0: return eightcase_value(v, base);
    case 1: return eightcase_value(v, base + 1);
    case 2: return eightcase_value(v, base + 2);
    case 3: {
      const std::int64_t y = plus_step(eightcase_value(v, base + 2));
      return minus ? -y : y;
    }
    case 4: return -eightcase_value(v, base + 2);
    case 5: return -eightcase_value(v, base + 3);
    case 6: {
      const std::int64_t y = plus_step(eightcase_value(v, base + 3));
      return minus ? y : -y;
    }
    default: return eightcase_value(v, base + 3);
  }
}

}  // namespace

SignedMagnitude h_eightcase(Variant v, Index n) {
  return SignedMagnitude::from_value(eightcase_value(v, n));
}

Report check_automaticity_relations(Variant v, Index n_max) {
  std::vector<Relation> rels;
  if (v == Variant::Minus) {
    rels = {
        {"g(4n+1)=g(2n+1)", 4, 1, {{1, 2, 1}}},
        {"g(4n+2)=g(2n)", 4, 2, {{1, 2, 0}}},
        {"g(4n+3)=g(2n)", 4, 3, {{1, 2, 0}}},
        {"g(8n)=g(4n)", 8, 0, {{1, 4, 0}}},
        {"g(16n+4)=g(2n+1)", 16, 4, {{1, 2, 1}}},
        {"g(16n+12)=g(8n+4)", 16, 12, {{1, 8, 4}}},
    };
  } else {
    rels = {
        {"g(4n)=g(2n+1)", 4, 0, {{1, 2, 1}}},
        {"g(4n+1)=g(2n+1)", 4, 1, {{1, 2, 1}}},
        {"g(4n+2)=g(2n)", 4, 2, {{1, 2, 0}}},
        {"g(8n+7)=g(4n+3)", 8, 7, {{1, 4, 3}}},
        {"g(16n+3)=g(8n+3)", 16, 3, {{1, 8, 3}}},
        {"g(16n+11)=g(2n)", 16, 11, {{1, 2, 0}}},
    };
  }
  return check_relations(std::string("AutoG") + std::string(name_of(v)), rels, n_max,
                         [v](Index i) { return static_cast<std::int64_t>(g_fast(v, i)); });
}

Report check_regularity_relations(Variant v, Index n_max) {
  std::vector<Relation> rels = {
      {"h(8n)=h(4n)", 8, 0, {{1, 4, 0}}},
      {"h(8n+1)=h(4n+1)", 8, 1, {{1, 4, 1}}},
      {"h(8n+2)=h(4n+2)", 8, 2, {{1, 4, 2}}},
      {"h(8n+4)=-h(4n+2)", 8, 4, {{-1, 4, 2}}},
      {"h(8n+5)=-h(4n+3)", 8, 5, {{-1, 4, 3}}},
      {"h(8n+7)=h(4n+3)", 8, 7, {{1, 4, 3}}},
  };
  if (v == Variant::Minus) {
    rels.push_back({"h(8n+3)=-h(4n+1)-2h(4n+2)", 8, 3, {{-1, 4, 1}, {-2, 4, 2}}});
    rels.push_back({"h(8n+6)=-h(2n+1)+h(4n+1)+h(4n+2)+2h(4n+3)", 8, 6,
                    {{-1, 2, 1}, {1, 4, 1}, {1, 4, 2}, {2, 4, 3}}});
    rels.push_back({"h(8n+6)=2h(4n+3)-h(4n+4)", 8, 6, {{2, 4, 3}, {-1, 4, 4}}});
    rels.push_back({"h(2n+1)=h(4n+1)+h(4n+2)+h(4n+4)", 2, 1, {{1, 4, 1}, {1, 4, 2}, {1, 4, 4}}});
  } else {
    rels.push_back({"h(8n+3)=-h(4n+1)+2h(4n+2)", 8, 3, {{-1, 4, 1}, {2, 4, 2}}});
    rels.push_back({"h(8n+6)=h(2n+1)-h(4n+1)+h(4n+2)-2h(4n+3)", 8, 6,
                    {{1, 2, 1}, {-1, 4, 1}, {1, 4, 2}, {-2, 4, 3}}});
    rels.push_back({"h(8n+6)=-2h(4n+3)-h(4n+4)", 8, 6, {{-2, 4, 3}, {-1, 4, 4}}});
    rels.push_back({"h(2n+1)=h(4n+1)-h(4n+2)-h(4n+4)", 2, 1, {{1, 4, 1}, {-1, 4, 2}, {-1, 4, 4}}});
  }
  return check_relations(std::string("RegH") + std::string(name_of(v)), rels, n_max,
                         [v](Index i) { return h_fast(v, i).value(); });
}

int paperfold_from_signs(Index n) {
  if (n == 0) throw std::domain_error("paperfold_from_signs: n must be >= 1");
  const int hi = h_fast(Variant::Minus, checked_add(n, 1)).sign().value();
  const int lo = h_fast(Variant::Minus, n).sign().value();
  return std::abs(hi - lo) / 2;
}

}  // namespace hankelfold::recur
