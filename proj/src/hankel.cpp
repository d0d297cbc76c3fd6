#include "hankelfold/hankel.hpp"

#include <stdexcept>
#include <utility>

namespace hankelfold::hankel {

namespace {

void require_order(const series::IntSeries& f, std::size_t n) {
  if (n > 0 && f.order() < 2 * n - 1) {
    throw std::invalid_argument("hankel: series order " + std::to_string(f.order()) +
                                " is below 2n-1 = " + std::to_string(2 * n - 1));
  }
}

// Finds a nonzero entry in column k at or below row k and swaps it up.
// Returns false if the column is zero there.
template <class T, class IsZero>
bool pivot_row(std::vector<T>& a, std::size_t n, std::size_t k, int& sign, IsZero is_zero) {
  if (!is_zero(a[k * n + k])) return true;
  for (std::size_t p = k + 1; p < n; ++p) {
    if (!is_zero(a[p * n + k])) {
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace {

// Exact quotient num / d for d != 0 known to divide num, via the inverse of
// the odd part of d modulo 2^64. Throws if d does not divide num.
class ExactDivisor {
 public:
  explicit ExactDivisor(std::int64_t d) : d_(d) {
    const std::uint64_t mag = d < 0 ? 0 - static_cast<std::uint64_t>(d) : static_cast<std::uint64_t>(d);
    shift_ = static_cast<unsigned>(__builtin_ctzll(mag));
    const std::uint64_t odd = mag >> shift_;
    std::uint64_t inv = odd;
    for (int i = 0; i < 5; ++i) inv *= 2 - odd * inv;
    inv_ = d < 0 ? 0 - inv : inv;
  }

  std::int64_t operator()(std::int64_t num) const {
    const auto q = static_cast<std::int64_t>(static_cast<std::uint64_t>(num >> shift_) * inv_);
    std::int64_t back;
    if (__builtin_mul_overflow(q, d_, &back) || back != num) {
      throw std::logic_error("bareiss: inexact division");
    }
    return q;
  }

 private:
  std::int64_t d_;
  unsigned shift_ = 0;
  std::uint64_t inv_ = 1;
};

enum class Outcome { Done, Overflow, ZeroPivot };

// Bareiss on a symmetric matrix without row exchanges. Every intermediate
// matrix stays symmetric, so only entries with column >= row are updated.
Outcome bareiss_symmetric_i64(std::vector<std::int64_t>& a, std::size_t n, std::int64_t& det) {
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::int64_t pivot = a[k * n + k];
    if (pivot == 0) return Outcome::ZeroPivot;
    const ExactDivisor div(prev);
    const std::int64_t* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::int64_t* ri = &a[i * n];
      const std::int64_t aik = rk[i];
      if (aik == 0 && pivot == prev) continue;
      for (std::size_t c = i; c < n; ++c) {
        std::int64_t lhs, rhs, num;
        if (__builtin_mul_overflow(ri[c], pivot, &lhs) ||
            __builtin_mul_overflow(aik, rk[c], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &num)) {
          return Outcome::Overflow;
        }
        ri[c] = prev == 1 ? num : div(num);
      }
    }
    prev = pivot;
  }
  det = a[n * n - 1];
  return Outcome::Done;
}

Outcome bareiss_general_i64(std::vector<std::int64_t>& a, std::size_t n, std::int64_t& det) {
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_row(a, n, k, sign, [](std::int64_t v) { return v == 0; })) {
      det = 0;
      return Outcome::Done;
    }
    const std::int64_t pivot = a[k * n + k];
    const ExactDivisor div(prev);
    const std::int64_t* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::int64_t* ri = &a[i * n];
      const std::int64_t aik = ri[k];
      if (aik == 0 && pivot == prev) continue;
      for (std::size_t c = k + 1; c < n; ++c) {
        std::int64_t lhs, rhs, num;
        if (__builtin_mul_overflow(ri[c], pivot, &lhs) ||
            __builtin_mul_overflow(aik, rk[c], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &num)) {
          return Outcome::Overflow;
        }
        ri[c] = prev == 1 ? num : div(num);
      }
      ri[k] = 0;
    }
    prev = pivot;
  }
  det = sign < 0 ? -a[n * n - 1] : a[n * n - 1];
  return Outcome::Done;
}

bool is_symmetric(const std::vector<std::int64_t>& a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = i + 1; c < n; ++c) {
      if (a[i * n + c] != a[c * n + i]) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::int64_t> det_bareiss_i64(std::vector<std::int64_t> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("det_bareiss_i64: size mismatch");
  if (n == 0) return 1;
  std::int64_t det = 0;
  if (is_symmetric(a, n)) {
    std::vector<std::int64_t> work = a;
    switch (bareiss_symmetric_i64(work, n, det)) {
      case Outcome::Done: return det;
      case Outcome::Overflow: return std::nullopt;
      case Outcome::ZeroPivot: break;
    }
  }
  if (bareiss_general_i64(a, n, det) == Outcome::Done) return det;
  return std::nullopt;
}

BigInt det_bareiss(const std::vector<BigInt>& entries, std::size_t n) {
  if (entries.size() != n * n) throw std::invalid_argument("det_bareiss: size mismatch");
  if (n == 0) return 1;

  bool fits = true;
  std::vector<std::int64_t> small;
  small.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.fits_slong_p()) {
      fits = false;
      break;
    }
    small.push_back(e.get_si());
  }
  if (fits) {
    if (auto det = det_bareiss_i64(std::move(small), n)) return BigInt(static_cast<long>(*det));
  }

  std::vector<BigInt> a = entries;
  int sign = 1;
  BigInt prev = 1;
  BigInt lhs;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_row(a, n, k, sign, [](const BigInt& v) { return v == 0; })) return 0;
    const BigInt pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt aik = a[i * n + k];
      if (aik == 0 && pivot == prev) continue;
      for (std::size_t c = k + 1; c < n; ++c) {
        BigInt& dst = a[i * n + c];
        mpz_mul(lhs.get_mpz_t(), dst.get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(lhs.get_mpz_t(), aik.get_mpz_t(), a[k * n + c].get_mpz_t());
        if (!mpz_divisible_p(lhs.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("bareiss: inexact division");
        }
        mpz_divexact(dst.get_mpz_t(), lhs.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  BigInt det = a[n * n - 1];
  if (sign < 0) det = -det;
  return det;
}

HankelMatrix HankelMatrix::from_series(const series::IntSeries& f, std::size_t n) {
  require_order(f, n);
  const std::size_t len = n == 0 ? 0 : 2 * n - 1;
  std::vector<BigInt> diag(f.coeffs().begin(), f.coeffs().begin() + len);
  return HankelMatrix(n, std::move(diag));
}

std::vector<BigInt> HankelMatrix::entries() const {
  std::vector<BigInt> out;
  out.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t c = 0; c < n_; ++c) out.push_back(diag_[i + c]);
  }
  return out;
}

BigInt HankelMatrix::determinant() const { return det_bareiss(entries(), n_); }

BigInt hankel_det(const series::IntSeries& f, std::size_t n) {
  return HankelMatrix::from_series(f, n).determinant();
}

std::string HankelProfile::to_csv() const {
  std::string out = "n,h_n\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += values[n].get_str();
    out += '\n';
  }
  return out;
}

HankelProfile hankel_profile(const series::IntSeries& f, std::size_t n_max,
                             std::string series_name) {
  require_order(f, n_max);
  HankelProfile p;
  p.series = std::move(series_name);
  p.source = Source::Oracle;
  p.values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) p.values.push_back(hankel_det(f, n));
  return p;
}

}  // namespace hankelfold::hankel
