#include "hankelfold/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "hankelfold/hankel.hpp"
#include "hankelfold/morphic.hpp"
#include "hankelfold/oeis.hpp"
#include "hankelfold/recur.hpp"
#include "hankelfold/seqcore.hpp"
#include "hankelfold/series.hpp"

namespace hankelfold::verify {

namespace {

using recur::Variant;
using CheckFn = Report (*)(std::string_view id, Index n_max, std::uint64_t seed);

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(std::string_view v) { return std::string(v); }
template <class T>
std::string str(T v) requires std::is_integral_v<T> {
  return std::to_string(v);
}

template <class E, class A>
Report fail(std::string_view id, Index lo, Index hi, Index n, const E& expected, const A& actual,
            std::string note = {}) {
  return Report::fail(std::string(id), lo, hi, Counterexample{n, str(expected), str(actual)},
                      std::move(note));
}

Report pass(std::string_view id, Index lo, Index hi, std::string note = {}) {
  return Report::pass(std::string(id), lo, hi, std::move(note));
}

// Uniform draw from [lo, hi] that is identical on every platform.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

unsigned runs_by_scan(Index n) {
  unsigned count = 0;
  int previous = -1;
  for (int bit = 63; bit >= 0; --bit) {
    const int b = static_cast<int>((n >> bit) & 1);
    if (previous < 0) {
      if (b == 1) {
        previous = 1;
        count = 1;
      }
      continue;
    }
    if (b != previous) ++count;
    previous = b;
  }
  return count;
}

Report check_c1(std::string_view id, Index n_max, std::uint64_t) {
  const unsigned bits = n_max >= 1 ? static_cast<unsigned>(std::bit_width(n_max)) - 1 : 0;
  if (bits > 32) throw std::invalid_argument("C1: n_max above 2^32 is not supported");
  const Index end = Index{1} << bits;
  std::int64_t s_def = 1;  // 1 + sum_{k<=n} j(k)
  std::set<std::int64_t> values;
  for (Index n = 0; n < end; ++n) {
    s_def += seqcore::j(n);
    const auto by_runs = static_cast<std::int64_t>(1 + runs_by_scan(n));
    if (s_def != by_runs) return fail(id, 0, end - 1, n, by_runs, s_def, "1 + runs(n) vs 1 + sum j");
    if (static_cast<std::int64_t>(seqcore::s(n)) != s_def) {
      return fail(id, 0, end - 1, n, s_def, seqcore::s(n), "s(n) fast path");
    }
    values.insert(s_def);
  }
  std::set<std::int64_t> expected;
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(bits) + 1; ++m) expected.insert(m);
  if (values != expected) {
    return fail(id, 0, end - 1, end - 1, expected.size(), values.size(), "set of occurring values");
  }
  return pass(id, 0, end - 1, "N=" + std::to_string(bits) + ", values {1.." + std::to_string(bits + 1) + "}");
}

Report check_ab(std::string_view id, Index n_max, bool is_a) {
  const auto enumerated = is_a ? seqcore::enumerate_a(n_max + 1) : seqcore::enumerate_b(n_max + 1);
  for (Index n = 0; n <= n_max; ++n) {
    const Index fast = is_a ? seqcore::a_at(n) : seqcore::b_at(n);
    if (fast != enumerated[n]) return fail(id, 0, n_max, n, enumerated[n], fast, "binary search vs enumeration");
    const Index e = enumerated[n];
    const Index lhs = is_a ? e + seqcore::s(e) : e - seqcore::s(e);
    if (lhs != 2 * n + 1) return fail(id, 0, n_max, n, 2 * n + 1, lhs, is_a ? "a_n + s(a_n)" : "b_n - s(b_n)");
  }
  return pass(id, 0, n_max);
}

Report check_c2(std::string_view id, Index n_max, std::uint64_t) { return check_ab(id, n_max, true); }
Report check_c3(std::string_view id, Index n_max, std::uint64_t) { return check_ab(id, n_max, false); }

Report check_prop_general(std::string_view id, Index n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    const auto len = static_cast<std::size_t>(draw(rng, 1, 64));
    std::vector<std::int64_t> c;
    std::int64_t v = draw(rng, 0, 3);
    for (std::size_t i = 0; i < len; ++i) {
      c.push_back(v);
      v += draw(rng, 1, 6);
    }
    for (std::size_t n = 0; n < len; ++n) {
      const auto got = seqcore::charsum_identity(c, n);
      if (got != static_cast<std::int64_t>(2 * n + 1)) {
        Report r = fail(id, 0, n_max, n, 2 * n + 1, got, "random trial " + std::to_string(trial));
        r.seed = seed;
        return r;
      }
    }
  }
  const auto to_signed = [](const std::vector<Index>& xs) {
    return std::vector<std::int64_t>(xs.begin(), xs.end());
  };
  std::vector<std::int64_t> odious, evil;
  for (Index m = 0; odious.size() < n_max || evil.size() < n_max; ++m) {
    (seqcore::thue_morse(m) ? odious : evil).push_back(static_cast<std::int64_t>(m));
  }
  const std::pair<const char*, std::vector<std::int64_t>> families[] = {
      {"a", to_signed(seqcore::enumerate_a(n_max))},
      {"b", to_signed(seqcore::enumerate_b(n_max))},
      {"odious", odious},
      {"evil", evil},
  };
  for (const auto& [name, c] : families) {
    for (std::size_t n = 0; n < n_max; ++n) {
      const auto got = seqcore::charsum_identity(c, n);
      if (got != static_cast<std::int64_t>(2 * n + 1)) {
        Report r = fail(id, 0, n_max, n, 2 * n + 1, got, std::string("family ") + name);
        r.seed = seed;
        return r;
      }
    }
  }
  Report r = pass(id, 0, n_max, "100 random prefixes; a, b, odious, evil prefixes");
  r.seed = seed;
  return r;
}

Report check_odious_evil(std::string_view id, Index n_max, std::uint64_t) {
  Index m = 0;
  Index odious_seen = 0, evil_seen = 0;
  while (odious_seen <= n_max || evil_seen <= n_max) {
    if (seqcore::thue_morse(m)) {
      if (odious_seen <= n_max) {
        const Index n = odious_seen++;
        if (seqcore::odious_at(n) != m) return fail(id, 0, n_max, n, m, seqcore::odious_at(n), "odious");
        if (m / 2 != n) return fail(id, 0, n_max, n, n, m / 2, "floor(u_n / 2)");
      }
    } else if (evil_seen <= n_max) {
      const Index n = evil_seen++;
      if (seqcore::evil_at(n) != m) return fail(id, 0, n_max, n, m, seqcore::evil_at(n), "evil");
      if (m / 2 != n) return fail(id, 0, n_max, n, n, m / 2, "floor(v_n / 2)");
    }
    ++m;
  }
  return pass(id, 0, n_max);
}

Report check_psi(std::string_view id, Index n_max, std::uint64_t) {
  for (Index r = 0; r <= n_max; ++r) {
    const Index p = seqcore::psi(r);
    const Index next = seqcore::psi(r + 1);
    if (next < p + 7) return fail(id, 0, n_max, r, ">= " + std::to_string(p + 7), next, "psi(r+1) - psi(r) >= 7");
    const Index a = seqcore::a_at(p);
    if (a != 16 * r + 2) return fail(id, 0, n_max, r, 16 * r + 2, a, "a(psi(r)) = 16r + 2");
    if (a / 16 != r) return fail(id, 0, n_max, r, r, a / 16, "r = floor(a(psi(r)) / 16)");
    if (seqcore::s(16 * r + 2) != seqcore::s(2 * r) + 2) {
      return fail(id, 0, n_max, r, seqcore::s(2 * r) + 2, seqcore::s(16 * r + 2), "s(16r+2) = s(2r) + 2");
    }
  }
  // |s(n+1) - s(n)| = 1 over the indices touched above.
  const Index top = 16 * n_max + 18;
  for (Index n = 0; n < top; ++n) {
    const auto diff = static_cast<std::int64_t>(seqcore::s(n + 1)) - static_cast<std::int64_t>(seqcore::s(n));
    if (diff != 1 && diff != -1) return fail(id, 0, n_max, n, "+-1", diff, "|s(n+1) - s(n)| = 1");
  }
  return pass(id, 0, n_max);
}

Report check_d2iff(std::string_view id, Index n_max, std::uint64_t) {
  const auto a = seqcore::enumerate_a(n_max + 2);
  std::unordered_set<Index> image;
  for (Index r = 0;; ++r) {
    const Index p = seqcore::psi(r);
    if (p > n_max) break;
    image.insert(p);
  }
  for (Index n = 0; n <= n_max; ++n) {
    const Index dn = a[n + 1] - a[n];
    if (seqcore::d(n) != static_cast<int>(dn)) return fail(id, 0, n_max, n, dn, seqcore::d(n), "d(n) vs enumeration");
    if (dn < 1 || dn > 4) return fail(id, 0, n_max, n, "1..4", dn, "d(n) range");
    const bool in_image = image.count(n) != 0;
    if ((dn == 2) != in_image) {
      return fail(id, 0, n_max, n, in_image ? "d=2" : "d!=2", dn, "d(n) = 2 iff n in psi image");
    }
    if (dn == 2) {
      const Index r = a[n] / 16;
      if (seqcore::psi(r) != n) return fail(id, 0, n_max, n, n, seqcore::psi(r), "psi(floor(a_n / 16))");
      if (a[n] != 16 * r + 2) return fail(id, 0, n_max, n, 16 * r + 2, a[n], "a_n = 16r + 2");
    }
  }
  return pass(id, 0, n_max, std::to_string(image.size()) + " psi values in range");
}

Report check_morphic(std::string_view id, Index n_max, std::uint64_t) {
  if (n_max == 0) return pass(id, 0, 0, "empty range");
  const auto word = morphic::decorated_d_prefix(n_max);
  const auto a = seqcore::enumerate_a(n_max + 2);
  for (Index n = 0; n < n_max; ++n) {
    const Index dn = a[n + 2] - a[n + 1];
    if (word[n] != dn) return fail(id, 0, n_max - 1, n, dn, static_cast<int>(word[n]), "g(f^inf(0)) vs d(n+1)");
  }
  return pass(id, 0, n_max - 1, "identical");
}

Report check_decoration(std::string_view id, Index n_max, std::uint64_t) {
  if (n_max > 24) throw std::invalid_argument("Decoration: k_max above 24 is not supported");
  Report r = morphic::decoration_identity_check(static_cast<unsigned>(n_max));
  r.check_id = std::string(id);
  return r;
}

Report check_perturbed(std::string_view id, Index n_max, std::uint64_t) {
  if (n_max > morphic::kMaxPerturbedLevel) throw std::invalid_argument("PerturbedSymmetry: level too large");
  const auto k_max = static_cast<unsigned>(n_max);
  std::optional<morphic::PerturbedWords> prev;
  const auto decorated = morphic::decorated_d_prefix(1);
  for (unsigned k = 0; k <= k_max; ++k) {
    auto w = morphic::perturbed_words(k);
    const Index expected_len = (Index{1} << (k + 1)) - 1;
    if (w.x.size() != expected_len) return fail(id, 0, n_max, k, expected_len, w.x.size(), "|X_k|");
    for (std::size_t i = 0; i < w.x.size(); ++i) {
      const int p = (1 + seqcore::j(i + 1)) / 2;
      if (w.x[i] != p) return fail(id, 0, n_max, k, p, static_cast<int>(w.x[i]), "X_k vs paperfolding at " + std::to_string(i));
    }
    if (!(w.u == morphic::gap_word(w.x, 1))) return fail(id, 0, n_max, k, morphic::gap_word(w.x, 1).to_string().substr(0, 40), w.u.to_string().substr(0, 40), "U_k vs gaps of 1s");
    if (!(w.v == morphic::gap_word(w.x, 0))) return fail(id, 0, n_max, k, morphic::gap_word(w.x, 0).to_string().substr(0, 40), w.v.to_string().substr(0, 40), "V_k vs gaps of 0s");
    if (prev) {
      if (!prev->x.is_prefix_of(w.x) || !prev->u.is_prefix_of(w.u) || !prev->v.is_prefix_of(w.v) ||
          !prev->a.is_prefix_of(w.a) || !prev->b.is_prefix_of(w.b)) {
        return fail(id, 0, n_max, k, "prefix", "not prefix", "level k-1 words are prefixes of level k");
      }
    }
    const auto d_prefix = morphic::decorated_d_prefix(w.a.size());
    if (!(w.a == d_prefix)) return fail(id, 0, n_max, k, d_prefix.to_string().substr(0, 40), w.a.to_string().substr(0, 40), "A_k vs prefix of d'");
    prev = std::move(w);
  }
  (void)decorated;
  return pass(id, 0, n_max);
}

Report check_witness(std::string_view id, Index, std::uint64_t) {
  const auto w = morphic::non_automaticity_witness(3, 4);
  const std::string note = w.to_json().dump();
  if (!w.s_t_ok) return fail(id, 3, 4, w.t, (Index{1} << 4) - 3, seqcore::s(w.t), "s(t) " + note);
  if (!w.psi_r_ok) return fail(id, 3, 4, w.r, w.index_alpha, w.psi_r, "psi(r) " + note);
  if (!w.psi_r_prime_ok) return fail(id, 3, 4, w.r_prime, w.index_beta + 1, w.psi_r_prime, "psi(r') " + note);
  if (w.u_alpha != 2) return fail(id, 3, 4, w.index_alpha, 2, w.u_alpha, "u_alpha(t) " + note);
  if (w.u_beta == 2) return fail(id, 3, 4, w.index_beta, "!= 2", w.u_beta, "u_beta(t) " + note);
  return pass(id, 3, 4, note);
}

Report check_kernel(std::string_view id, Index n_max, std::uint64_t) {
  if (n_max > 10) throw std::invalid_argument("KernelEvidence: level above 10 is not supported");
  const auto levels = static_cast<unsigned>(n_max);
  constexpr std::size_t kLength = 2048;
  const std::pair<const char*, morphic::SequenceAccessor> finite[] = {
      {"g(Minus)", [](Index n) { return static_cast<std::int64_t>(recur::g_fast(Variant::Minus, n)); }},
      {"g(Plus)", [](Index n) { return static_cast<std::int64_t>(recur::g_fast(Variant::Plus, n)); }},
      {"j", [](Index n) { return static_cast<std::int64_t>(seqcore::j(n)); }},
  };
  std::string note;
  for (const auto& [name, seq] : finite) {
    const auto k = morphic::kernel_explore(seq, 2, levels, kLength);
    if (!k.stabilized_at) {
      return fail(id, 0, n_max, levels, "stabilized", k.levels.back().cumulative, std::string(name) + " did not stabilize");
    }
    note += std::string(name) + ": " + std::to_string(k.classes.size()) + " classes, stabilized at level " +
            std::to_string(*k.stabilized_at) + "; ";
  }
  const auto kd = morphic::kernel_explore([](Index n) { return static_cast<std::int64_t>(seqcore::d(n)); }, 2,
                                          levels, kLength);
  for (std::size_t i = 1; i < kd.levels.size(); ++i) {
    if (kd.levels[i].cumulative <= kd.levels[i - 1].cumulative) {
      return fail(id, 0, n_max, i, "growth", kd.levels[i].cumulative, "d kernel stopped growing");
    }
  }
  note += "d: " + std::to_string(kd.classes.size()) + " classes, growing at every level";
  return pass(id, 0, n_max, note + " (L-prefix evidence, not proof)");
}

template <class Fn>
Report both_variants(std::string_view id, Index lo, Index n_max, Fn fn) {
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    if (auto r = fn(v); r) {
      r->note = std::string(recur::name_of(v)) + ": " + r->note;
      return *r;
    }
  }
  return pass(id, lo, n_max, "both variants");
}

Report check_reflection(std::string_view id, Index n_max, std::uint64_t) {
  return both_variants(id, 1, n_max, [&](Variant v) -> std::optional<Report> {
    for (Index n = 1; n <= n_max; ++n) {
      if (!recur::g_reflect_check(v, n)) return fail(id, 1, n_max, n, "reflection", "violated", "g reflection");
    }
    return std::nullopt;
  });
}

Report check_hrecursion(std::string_view id, Index n_max, std::uint64_t) {
  return both_variants(id, 0, n_max, [&](Variant v) -> std::optional<Report> {
    for (Index n = 0; n <= n_max; ++n) {
      const auto fast = recur::h_fast(v, n).value();
      const auto rec = recur::h_recursive(v, n);
      if (fast != rec) return fail(id, 0, n_max, n, fast, rec, "signed recursion vs sign/magnitude split");
    }
    return std::nullopt;
  });
}

Report check_sign_law(std::string_view id, Index n_max, std::uint64_t) {
  for (Index n = 1; n <= n_max; ++n) {
    const auto h = recur::h_eightcase(Variant::Minus, n);
    if (h.magnitude() == 0) return fail(id, 1, n_max, n, "nonzero", 0, "Minus: h_n != 0");
    const int g = recur::g_fast(Variant::Minus, n - 1);
    if (h.sign().value() != g) return fail(id, 1, n_max, n, g, h.sign().value(), "Minus: sign(h_n) = g_{n-1}");
  }
  for (Index n = 1; n <= n_max; ++n) {
    const auto h = recur::h_eightcase(Variant::Plus, n);
    const bool zero_expected = n >= 2 && std::has_single_bit(n);
    if ((h.magnitude() == 0) != zero_expected) {
      return fail(id, 1, n_max, n, zero_expected ? "0" : "nonzero", h.value(), "Plus: zeros at powers of two");
    }
    if (n >= 3) {
      const int expected = -recur::g_fast(Variant::Plus, n - 1);
      if (h.sign().value() != expected) {
        return fail(id, 1, n_max, n, expected, h.sign().value(), "Plus: sign(h_n) = -g_{n-1}, sign(0) = +1");
      }
    }
  }
  return pass(id, 1, n_max, "both variants");
}

Report check_step_law(std::string_view id, Index n_max, std::uint64_t) {
  return both_variants(id, 1, n_max, [&](Variant v) -> std::optional<Report> {
    const Index start = v == Variant::Minus ? 1 : 2;
    auto prev = static_cast<std::int64_t>(recur::h_fast(v, start).magnitude());
    for (Index n = start; n <= n_max; ++n) {
      const auto next = static_cast<std::int64_t>(recur::h_fast(v, n + 1).magnitude());
      if (next - prev != seqcore::j(n)) return fail(id, 1, n_max, n, seqcore::j(n), next - prev, "|h_{n+1}| - |h_n| = j_n");
      prev = next;
    }
    return std::nullopt;
  });
}

Report check_c6(std::string_view id, Index n_max, std::uint64_t) {
  for (Index n = 0; n <= n_max; ++n) {
    const auto mag = recur::h_fast(Variant::Minus, n + 1).magnitude();
    if (mag != seqcore::s(n)) return fail(id, 0, n_max, n, seqcore::s(n), mag, "|h_{n+1}(1 - x r)| = s_n");
  }
  return pass(id, 0, n_max);
}

Report check_c11(std::string_view id, Index n_max, std::uint64_t) {
  for (Index n = 1; n <= n_max; ++n) {
    const auto mag = recur::h_fast(Variant::Plus, n + 1).magnitude();
    if (mag != seqcore::s(n) - 2) return fail(id, 1, n_max, n, seqcore::s(n) - 2, mag, "|h_{n+1}(1 + x r)| = s_n - 2");
  }
  return pass(id, 1, n_max);
}

Report check_c8(std::string_view id, Index n_max, std::uint64_t) {
  std::vector<int> u(n_max + 1, 0);
  for (Index n = 1; n <= n_max; ++n) {
    u[n] = recur::paperfold_from_signs(n);
    const int expected = (1 + seqcore::j(n)) / 2;
    if (u[n] != expected) return fail(id, 1, n_max, n, expected, u[n], "u_n = (1 + j_n) / 2");
  }
  for (Index n = 0; n <= n_max; ++n) {
    if (n >= 1 && 2 * n <= n_max && u[2 * n] != u[n]) return fail(id, 1, n_max, n, u[n], u[2 * n], "u_{2n} = u_n");
    if (4 * n + 1 <= n_max && u[4 * n + 1] != 1) return fail(id, 1, n_max, n, 1, u[4 * n + 1], "u_{4n+1} = 1");
    if (4 * n + 3 <= n_max && u[4 * n + 3] != 0) return fail(id, 1, n_max, n, 0, u[4 * n + 3], "u_{4n+3} = 0");
  }
  return pass(id, 1, n_max);
}

Report check_eightcase(std::string_view id, Index n_max, Variant v) {
  for (Index n = 0; n <= n_max; ++n) {
    const auto a = recur::h_eightcase(v, n);
    const auto b = recur::h_fast(v, n);
    if (!(a == b)) return fail(id, 0, n_max, n, b.value(), a.value(), "eight-case descent vs h_fast");
  }
  return pass(id, 0, n_max);
}

Report check_eight_minus(std::string_view id, Index n_max, std::uint64_t) {
  return check_eightcase(id, n_max, Variant::Minus);
}
Report check_eight_plus(std::string_view id, Index n_max, std::uint64_t) {
  return check_eightcase(id, n_max, Variant::Plus);
}

Report rename(Report r, std::string_view id) {
  r.check_id = std::string(id);
  return r;
}

Report check_auto_minus(std::string_view id, Index n_max, std::uint64_t) {
  return rename(recur::check_automaticity_relations(Variant::Minus, n_max), id);
}
Report check_auto_plus(std::string_view id, Index n_max, std::uint64_t) {
  return rename(recur::check_automaticity_relations(Variant::Plus, n_max), id);
}
Report check_reg_minus(std::string_view id, Index n_max, std::uint64_t) {
  return rename(recur::check_regularity_relations(Variant::Minus, n_max), id);
}
Report check_reg_plus(std::string_view id, Index n_max, std::uint64_t) {
  return rename(recur::check_regularity_relations(Variant::Plus, n_max), id);
}

Report check_c16(std::string_view id, Index n_max, std::uint64_t) {
  const auto b0 = series::build_named(series::Named::B0, std::max<std::size_t>(1, 2 * n_max));
  for (Index n = 0; n <= n_max; ++n) {
    const BigInt oracle = hankel::hankel_det(b0, n);
    const int sign = recur::h_fast(Variant::Minus, n).sign().value();
    if (oracle != sign) return fail(id, 0, n_max, n, sign, oracle, "H_n(r/(r-x)) = sign(H_n(1 - x r))");
  }
  return pass(id, 0, n_max);
}

Report check_fg(std::string_view id, Index n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Index trials = n_max;
  for (Index trial = 0; trial < trials; ++trial) {
    const auto k = static_cast<std::size_t>(draw(rng, 0, 3));
    std::vector<BigInt> u(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(k) + 1)));
    for (auto& c : u) c = static_cast<long>(draw(rng, -3, 3));
    std::vector<BigInt> gc(20);
    for (auto& c : gc) c = static_cast<long>(draw(rng, -3, 3));
    const series::IntSeries g(std::move(gc));
    const auto f = series::fg_construct(g, u, k, 2 * k + 17);
    const int sign = ((k * (k + 1) / 2) & 1) ? -1 : 1;
    for (std::size_t n = k + 1; n <= k + 9; ++n) {
      const BigInt lhs = hankel::hankel_det(f, n);
      const BigInt rhs = sign * hankel::hankel_det(g, n - k - 1);
      if (lhs != rhs) {
        Report r = fail(id, 0, trials, n, rhs, lhs,
                        "trial " + std::to_string(trial) + ", k=" + std::to_string(k) + ", G=" + series::to_csv(g));
        r.seed = seed;
        return r;
      }
    }
  }
  Report r = pass(id, 0, trials, std::to_string(trials) + " trials, k <= 3, n in [k+1, k+9]");
  r.seed = seed;
  return r;
}

Report check_oracle_equiv(std::string_view id, Index n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Index random_hi = std::max<Index>(8 * n_max, n_max + 1);
  std::vector<Index> indices;
  for (Index n = 0; n <= n_max; ++n) indices.push_back(n);
  for (int i = 0; i < 64; ++i) {
    indices.push_back(static_cast<Index>(draw(rng, static_cast<std::int64_t>(n_max) + 1,
                                              static_cast<std::int64_t>(random_hi))));
  }
  const std::size_t order = 2 * random_hi;
  for (Variant v : {Variant::Minus, Variant::Plus}) {
    const auto b = series::build_named(recur::b_series(v), order);
    const auto t = series::build_named(recur::t_series(v), order);
    for (Index n : indices) {
      const BigInt hb = hankel::hankel_det(b, n);
      const auto fast_h = recur::h_fast(v, n).value();
      if (hb != static_cast<long>(fast_h)) {
        Report r = fail(id, 0, random_hi, n, hb, fast_h, std::string(recur::name_of(v)) + ": h_fast vs oracle");
        r.seed = seed;
        return r;
      }
      const BigInt ht = hankel::hankel_det(t, n);
      const int fast_g = recur::g_fast(v, n);
      if (ht != fast_g) {
        Report r = fail(id, 0, random_hi, n, ht, fast_g, std::string(recur::name_of(v)) + ": g_fast vs oracle");
        r.seed = seed;
        return r;
      }
    }
  }
  Report r = pass(id, 0, random_hi,
                  "sweep 0.." + std::to_string(n_max) + " plus 64 random n <= " + std::to_string(random_hi));
  r.seed = seed;
  return r;
}

Report check_oeis(std::string_view id, Index n_max, std::uint64_t) {
  oeis::FetchOptions opts;
  opts.offline = true;
  opts.use_cache = false;
  opts.fixture_dir = oeis::bundled_fixture_dir();
  opts.fetcher = [](const std::string& url) -> std::string {
    throw oeis::FetchError("network disabled for verification: " + url);
  };
  const auto s_file = oeis::fetch("A088748", opts);
  const auto runs_file = oeis::fetch("A005811", opts);
  const auto j_file = oeis::fetch("A034947", opts);
  const Index j_offset = static_cast<Index>(oeis::validate_a034947(j_file));

  const std::tuple<const oeis::BFile*, oeis::LocalSequence, Index> cases[] = {
      {&s_file, [](Index n) { return BigInt(static_cast<unsigned long>(seqcore::s(n))); }, 0},
      {&runs_file, [](Index n) { return BigInt(seqcore::runs(n)); }, 0},
      {&j_file, [](Index n) { return BigInt(seqcore::j(n)); }, j_offset},
  };
  for (const auto& [file, local, offset] : cases) {
    Report r = oeis::cross_check(*file, local, offset, n_max);
    if (!r.passed()) {
      r.note = r.check_id + " " + r.note;
      r.check_id = std::string(id);
      return r;
    }
  }
  return pass(id, 0, n_max, "A088748, A005811, A034947 (offset " + std::to_string(j_offset) + ")");
}

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"C1", "s on [0, 2^N) with N = floor(log2 n_max) equals 1 + runs; values are {1..N+1}", 1 << 12, 1 << 16, false}, check_c1},
      {{"C2", "a_n + s(a_n) = 2n + 1 and binary-search a_n = enumeration, n <= n_max", 10000, 100000, false}, check_c2},
      {{"C3", "b_n - s(b_n) = 2n + 1 and binary-search b_n = enumeration, n <= n_max", 10000, 100000, false}, check_c3},
      {{"PropGeneral", "c_n - sum (-1)^lambda = 2n + 1 on 100 random prefixes and n_max-term a, b, odious, evil prefixes", 300, 2000, true}, check_prop_general},
      {{"OdiousEvil", "u_n = 2n + 1 - t_n, v_n = 2n + t_n vs enumeration, n <= n_max", 10000, 100000, false}, check_odious_evil},
      {{"Psi", "psi gaps >= 7, a(psi(r)) = 16r + 2, s(16r + 2) = s(2r) + 2, r <= n_max", 1000, 10000, false}, check_psi},
      {{"D2iff", "d(n) = 2 iff n = psi(r), with r = floor(a_n / 16), n <= n_max", 10000, 100000, false}, check_d2iff},
      {{"Morphic", "g(f^inf(0)) equals (d_{n+1}) on n_max symbols", 10000, 100000, false}, check_morphic},
      {{"Decoration", "decoration identities for A_k, g(f^k(c)), 1 <= k <= n_max", 8, 12, false}, check_decoration},
      {{"PerturbedSymmetry", "X_k, U_k, V_k, A_k, B_k against paperfolding gaps and d', k <= n_max", 12, 16, false}, check_perturbed},
      {{"Witness", "non-2-automaticity witness at (alpha, beta) = (3, 4); n_max unused", 0, 0, false}, check_witness},
      {{"KernelEvidence", "2-kernel fingerprints (L = 2048) through level n_max: g and j stabilize, d keeps growing", 5, 6, false}, check_kernel},
      {{"Reflection", "g_n = (-1)^{n+1} g_{2^{k+1}-n-1} (Minus), (-1)^n (Plus), 1 <= n <= n_max", 10000, 100000, false}, check_reflection},
      {{"HRecursion", "signed recursion for h equals sign/magnitude engine, n <= n_max, both variants", 10000, 100000, false}, check_hrecursion},
      {{"SignLaw", "sign(h_n) = g_{n-1} (Minus), -g_{n-1} (Plus, n >= 3); zero pattern, n <= n_max", 10000, 100000, false}, check_sign_law},
      {{"StepLaw", "|h_{n+1}| - |h_n| = j_n, n <= n_max, both variants", 10000, 100000, false}, check_step_law},
      {{"C6", "|H_{n+1}(1 - x r)| = s_n, n <= n_max", 10000, 100000, false}, check_c6},
      {{"C8", "|sign h_{n+1} - sign h_n| / 2 is the 0/1 paperfolding sequence, n <= n_max", 10000, 100000, false}, check_c8},
      {{"EightCaseMinus", "eight-case descent equals h_fast for 1 - x r, n <= n_max", 10000, 100000, false}, check_eight_minus},
      {{"EightCasePlus", "eight-case descent equals h_fast for 1 + x r, n <= n_max", 10000, 100000, false}, check_eight_plus},
      {{"AutoGMinus", "six 2-kernel relations of g for 1 - x r, n <= n_max", 10000, 100000, false}, check_auto_minus},
      {{"AutoGPlus", "six 2-kernel relations of g for 1 + x r, n <= n_max", 10000, 100000, false}, check_auto_plus},
      {{"RegHMinus", "ten 2-regularity relations of h for 1 - x r, n <= n_max", 10000, 100000, false}, check_reg_minus},
      {{"RegHPlus", "ten 2-regularity relations of h for 1 + x r, n <= n_max", 10000, 100000, false}, check_reg_plus},
      {{"C11", "|H_{n+1}(1 + x r)| = s_n - 2, 1 <= n <= n_max", 10000, 100000, false}, check_c11},
      {{"C16", "oracle H_n(r / (r - x)) = sign(H_n(1 - x r)), n <= n_max", 48, 128, false}, check_c16},
      {{"FGLemma", "H_n(F) = (-1)^{k(k+1)/2} H_{n-k-1}(G) on n_max random (G, u, k) trials", 100, 100, true}, check_fg},
      {{"OracleEquiv", "h_fast, g_fast equal the Bareiss oracle for n <= n_max and 64 random n <= 8 n_max", 48, 128, true}, check_oracle_equiv},
      {{"OEIS", "s, runs, j vs bundled b-files A088748, A005811, A034947 on n_max terms", 1000, 10000, false}, check_oeis},
  };
  return entries;
}

const Entry& find(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw std::invalid_argument("unknown check id: " + std::string(id));
}

}  // namespace

Profile parse_profile(std::string_view s) {
  if (s == "quick") return Profile::Quick;
  if (s == "full") return Profile::Full;
  throw std::invalid_argument("unknown profile: " + std::string(s));
}

const std::vector<CheckInfo>& checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(std::string_view id) { return find(id).info; }

Report run_check(std::string_view id, Index n_max, std::uint64_t seed) {
  const Entry& e = find(id);
  const auto start = std::chrono::steady_clock::now();
  Report r = e.fn(e.info.id, n_max, seed);
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_all(Profile profile, std::uint64_t seed) {
  std::vector<Report> out;
  for (const auto& e : registry()) {
    const Index n_max = profile == Profile::Quick ? e.info.quick_n_max : e.info.full_n_max;
    out.push_back(run_check(e.info.id, n_max, seed));
  }
  return out;
}

}  // namespace hankelfold::verify
