#include "hankelfold/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hankelfold::series {

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("IntSeries: order must be >= 1");
}

IntSeries IntSeries::from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntSeries(std::move(c));
}

IntSeries IntSeries::zero(std::size_t order) {
  return IntSeries(std::vector<BigInt>(order, BigInt(0)));
}

IntSeries IntSeries::one(std::size_t order) { return monomial(0, order); }

IntSeries IntSeries::monomial(std::size_t m, std::size_t order) {
  std::vector<BigInt> c(order, BigInt(0));
  if (m < order) c[m] = 1;
  return IntSeries(std::move(c));
}

IntSeries IntSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw std::invalid_argument("truncated: order " + std::to_string(order) +
                                " exceeds known order " + std::to_string(coeffs_.size()));
  }
  return IntSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order));
}

IntSeries IntSeries::shifted_up(std::size_t m) const {
  std::vector<BigInt> c(m, BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntSeries(std::move(c));
}

IntSeries IntSeries::shifted_down(std::size_t m) const {
  if (m >= coeffs_.size()) {
    throw std::logic_error("shifted_down: nothing left after dividing by x^" +
                           std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] != 0) {
      throw std::logic_error("shifted_down: coefficient of x^" + std::to_string(i) +
                             " is nonzero");
    }
  }
  return IntSeries(std::vector<BigInt>(coeffs_.begin() + m, coeffs_.end()));
}

IntSeries IntSeries::operator-() const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return IntSeries(std::move(c));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return IntSeries(std::move(c));
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return IntSeries(std::move(c));
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; i + k < n; ++k) {
      if (b.coeffs_[k] == 0) continue;
      mpz_addmul(c[i + k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[k].get_mpz_t());
    }
  }
  return IntSeries(std::move(c));
}

IntSeries operator*(const BigInt& k, const IntSeries& a) {
  std::vector<BigInt> c(a.order());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs_[i];
  return IntSeries(std::move(c));
}

IntSeries rueppel(std::size_t order) {
  if (order == 0) throw std::invalid_argument("rueppel: order must be >= 1");
  std::vector<BigInt> c(order, BigInt(0));
  for (std::size_t p = 1; p - 1 < order; p <<= 1) c[p - 1] = 1;
  return IntSeries(std::move(c));
}

IntSeries invert(const IntSeries& a) {
  const BigInt& a0 = a[0];
  if (a0 != 1 && a0 != -1) {
    throw std::domain_error("invert: constant term " + a0.get_str() + " is not a unit");
  }
  // b_0 = 1/a_0 = a_0, and b_n = -a_0 * sum_{i=1..n} a_i b_{n-i}.
  const std::size_t n = a.order();
  std::vector<BigInt> b(n, BigInt(0));
  b[0] = a0;
  BigInt acc;
  for (std::size_t m = 1; m < n; ++m) {
    acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (a[i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[m - i].get_mpz_t());
    }
    b[m] = -a0 * acc;
  }
  return IntSeries(std::move(b));
}

Named parse_named(std::string_view name) {
  if (name == "B_minus" || name == "Bminus") return Named::BMinus;
  if (name == "B_plus" || name == "Bplus") return Named::BPlus;
  if (name == "T_minus" || name == "Tminus") return Named::TMinus;
  if (name == "T_plus" || name == "Tplus") return Named::TPlus;
  if (name == "B0") return Named::B0;
  if (name == "G") return Named::G;
  throw std::invalid_argument("unknown series name: " + std::string(name));
}

std::string_view name_of(Named n) {
  switch (n) {
    case Named::BMinus: return "Bminus";
    case Named::BPlus: return "Bplus";
    case Named::TMinus: return "Tminus";
    case Named::TPlus: return "Tplus";
    case Named::B0: return "B0";
    case Named::G: return "G";
  }
  return "?";
}

IntSeries build_named(Named name, std::size_t order) {
  if (order == 0) throw std::invalid_argument("build_named: order must be >= 1");
  const auto x = [](std::size_t ord) { return IntSeries::monomial(1, ord); };
  const auto one = [](std::size_t ord) { return IntSeries::one(ord); };

  switch (name) {
    case Named::BMinus:
      return one(order) - rueppel(order).shifted_up(1).truncated(order);
    case Named::BPlus:
      return one(order) + rueppel(order).shifted_up(1).truncated(order);
    case Named::TMinus: {
      const std::size_t ord = order + 2;
      return (build_named(Named::BMinus, ord) - (one(ord) - x(ord))).shifted_down(2);
    }
    case Named::TPlus: {
      const std::size_t ord = order + 2;
      return (build_named(Named::BPlus, ord) - (one(ord) + x(ord))).shifted_down(2);
    }
    case Named::B0: {
      const IntSeries r = rueppel(order);
      return r * invert(r - x(order));
    }
    case Named::G: {
      const std::size_t ord = order + 1;
      return (one(ord) - rueppel(ord)).shifted_down(1);
    }
  }
  throw std::invalid_argument("build_named: bad name");
}

IntSeries fg_construct(const IntSeries& g, std::span<const BigInt> u, std::size_t k,
                       std::size_t order) {
  if (u.size() > k + 1) {
    throw std::invalid_argument("fg_construct: deg u = " + std::to_string(u.size() - 1) +
                                " exceeds k = " + std::to_string(k));
  }
  if (order <= k) throw std::invalid_argument("fg_construct: order must exceed k");

  // F = x^k * D^{-1} with D = 1 + x u - x^{k+2} G, needed to order - k terms.
  const std::size_t dord = order - k;
  std::vector<BigInt> dc(dord, BigInt(0));
  dc[0] = 1;
  for (std::size_t i = 0; i < u.size() && i + 1 < dord; ++i) dc[i + 1] += u[i];
  for (std::size_t i = 0; i + k + 2 < dord; ++i) {
    if (i >= g.order()) {
      throw std::invalid_argument("fg_construct: G has order " + std::to_string(g.order()) +
                                  ", need " + std::to_string(dord - k - 2));
    }
    dc[i + k + 2] -= g[i];
  }
  return invert(IntSeries(std::move(dc))).shifted_up(k);
}

std::string to_csv(const IntSeries& a) {
  std::string out;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (i) out += ',';
    out += a[i].get_str();
  }
  return out;
}

IntSeries parse_csv(std::string_view text) {
  std::vector<BigInt> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
      field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
      field.remove_suffix(1);
    BigInt v;
    std::string s(field);
    if (s.empty() || (s[0] == '+') || v.set_str(s, 10) != 0) {
      throw std::invalid_argument("parse_csv: bad coefficient '" + s + "'");
    }
    c.push_back(std::move(v));
    pos = comma + 1;
  }
  return IntSeries(std::move(c));
}

}  // namespace hankelfold::series
