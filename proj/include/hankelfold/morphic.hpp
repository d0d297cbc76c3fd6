#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hankelfold/common.hpp"
#include "hankelfold/report.hpp"

namespace hankelfold::morphic {

using Symbol = std::uint8_t;

/// Finite word over the alphabet {0, ..., alphabet - 1}, alphabet <= 10.
class Word {
 public:
  explicit Word(std::vector<Symbol> symbols = {}, unsigned alphabet = 10);
  /// Digit string such as "0121". Throws std::invalid_argument on non-digits.
  static Word parse(std::string_view digits, unsigned alphabet = 10);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  unsigned alphabet() const { return alphabet_; }

  Word reversed() const;
  /// Exchanges 0 and 1. Throws std::domain_error if another symbol occurs.
  Word complemented() const;
  Word prefix(std::size_t len) const;
  bool is_prefix_of(const Word& other) const;

  Word& operator+=(const Word& other);
  Word& operator+=(Symbol s);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  std::string to_string() const;

  /// Symbol equality; the declared alphabet is not compared.
  bool operator==(const Word& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_;
};

/// Map from the domain alphabet {0, ..., images.size() - 1} to words.
class Morphism {
 public:
  explicit Morphism(std::vector<Word> images);

  unsigned domain_size() const { return static_cast<unsigned>(images_.size()); }
  const Word& image(Symbol s) const;

  /// Concatenated images. Throws std::out_of_range for a symbol outside the domain.
  Word apply(const Word& w) const;
  /// k-fold application to a single symbol.
  Word power(Symbol s, unsigned k) const;
  /// The image of `seed` starts with `seed` and is longer than one symbol.
  bool is_prolongable(Symbol seed) const;
  bool is_non_erasing() const;

 private:
  std::vector<Word> images_;
};

/// f: 0 -> 01, 1 -> 21, 2 -> 03, 3 -> 23.
const Morphism& morphism_f();
/// g: 0 -> 121, 1 -> 31, 2 -> 13, 3 -> 4.
const Morphism& morphism_g();

/// First `len` symbols of the fixed point m^infinity(seed). Throws
/// std::domain_error if m is not prolongable at seed or is erasing.
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t len);

/// First `len` symbols of g(f^infinity(0)), which is (d_{n+1})_{n >= 0}.
Word decorated_d_prefix(std::size_t len);

/// Distances between consecutive occurrences of `symbol` in `x`, minus one.
Word gap_word(const Word& x, Symbol symbol);

struct PerturbedWords {
  Word x;  // paperfolding prefix of length 2^{k+1} - 1
  Word u;  // gaps between consecutive 1s of x
  Word v;  // gaps between consecutive 0s of x
  Word a;  // A_k
  Word b;  // B_k
};

inline constexpr unsigned kMaxPerturbedLevel = 26;

/// Words at level k built by
///   X_{k+1} = X_k 1 rev(X_k)^c,  U_{k+1} = U_k 2 0 rev(V_k),  V_{k+1} = V_k 3 rev(U_k),
///   A_{k+1} = A_k 3 1 rev(B_k),  B_{k+1} = B_k 4 rev(A_k),
/// from X_0 = 1, A_0 = 121, B_0 = 31. The U/V recursion starts at k = 2.
/// Throws std::length_error for k > kMaxPerturbedLevel.
PerturbedWords perturbed_words(unsigned k);

/// For 1 <= k <= k_max:
///   A_k = g(f^k(0)) rev(B_{k-1}),   g(f^k(1)) = rev(B_{k-1}) 3 1,
///   g(f^k(2)) = A_{k-1} 4,          g(f^k(3)) = rev(B_{k-1}) 4.
Report decoration_identity_check(unsigned k_max);

struct KernelClass {
  Index modulus = 1;
  Index residue = 0;
  std::vector<std::int64_t> fingerprint;
};

struct KernelLevel {
  unsigned level = 0;
  std::size_t classes_at_level = 0;  // distinct fingerprints among residues at this level
  std::size_t cumulative = 0;        // distinct fingerprints over levels 0..level
};

struct KernelExploration {
  unsigned base = 2;
  std::size_t fingerprint_length = 0;
  std::vector<KernelClass> classes;  // one representative per class, first seen
  std::vector<KernelLevel> levels;
  /// First level >= 1 contributing no new class, if any.
  std::optional<unsigned> stabilized_at;

  nlohmann::json to_json() const;
};

using SequenceAccessor = std::function<std::int64_t(Index)>;

/// Groups the subsequences (x_{base^i n + j})_{n < L}, 0 <= i <= max_level,
/// 0 <= j < base^i, by their length-L prefixes. Equal prefixes are evidence,
/// not proof, of equal kernel elements.
KernelExploration kernel_explore(const SequenceAccessor& seq, unsigned base,
                                 unsigned max_level, std::size_t fingerprint_length);

struct WitnessResult {
  unsigned alpha = 0;
  unsigned beta = 0;
  Index t = 0;
  Index r = 0;
  Index r_prime = 0;
  Index psi_r = 0;
  Index psi_r_prime = 0;
  Index index_alpha = 0;  // 2^{2^alpha} t + 2^alpha
  Index index_beta = 0;   // 2^{2^beta} t + 2^beta
  int u_alpha = 0;        // d(index_alpha)
  int u_beta = 0;         // d(index_beta)
  bool s_t_ok = false;            // s(t) = 2^{alpha+1} - 3
  bool psi_r_ok = false;          // psi(r) = index_alpha
  bool psi_r_prime_ok = false;    // psi(r') = index_beta + 1

  bool passed() const {
    return s_t_ok && psi_r_ok && psi_r_prime_ok && u_alpha == 2 && u_beta != 2;
  }
  nlohmann::json to_json() const;
};

/// Builds t = (2/3)(2^{2^{alpha+1}-4} - 1), r = 2^{2^alpha - 3} t and
/// r' = 2^{2^beta - 3} t + 2^{beta-3} - 2^{alpha-3}, then evaluates
/// u_alpha(t) = d(2^{2^alpha} t + 2^alpha) and u_beta(t) = d(2^{2^beta} t + 2^beta).
/// Requires 3 <= alpha < beta; throws std::overflow_error when an index
/// leaves the 63-bit range.
WitnessResult non_automaticity_witness(unsigned alpha, unsigned beta);

}  // namespace hankelfold::morphic
