#include "hankelfold/morphic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hankelfold/seqcore.hpp"

namespace hankelfold::morphic {

Word::Word(std::vector<Symbol> symbols, unsigned alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (alphabet_ == 0 || alphabet_ > 10) throw std::invalid_argument("Word: alphabet must be 1..10");
  for (Symbol s : symbols_) {
    if (s >= alphabet_) {
      throw std::invalid_argument("Word: symbol " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(alphabet_));
    }
  }
}

Word Word::parse(std::string_view digits, unsigned alphabet) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("Word::parse: non-digit '" + std::string(1, c) + "'");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(out), alphabet);
}

Word Word::reversed() const {
  return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()), alphabet_);
}

Word Word::complemented() const {
  std::vector<Symbol> out(symbols_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (symbols_[i] > 1) throw std::domain_error("complemented: word is not binary");
    out[i] = static_cast<Symbol>(1 - symbols_[i]);
  }
  return Word(std::move(out), alphabet_);
}

Word Word::prefix(std::size_t len) const {
  len = std::min(len, symbols_.size());
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len), alphabet_);
}

bool Word::is_prefix_of(const Word& other) const {
  return size() <= other.size() && std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
}

Word& Word::operator+=(const Word& other) {
  alphabet_ = std::max(alphabet_, other.alphabet_);
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Word& Word::operator+=(Symbol s) {
  if (s >= 10) throw std::invalid_argument("Word: symbol out of range");
  alphabet_ = std::max<unsigned>(alphabet_, s + 1u);
  symbols_.push_back(s);
  return *this;
}

std::string Word::to_string() const {
  std::string out(symbols_.size(), '0');
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<char>('0' + symbols_[i]);
  return out;
}

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > 10) {
    throw std::invalid_argument("Morphism: domain must have 1..10 symbols");
  }
}

const Word& Morphism::image(Symbol s) const {
  if (s >= images_.size()) {
    throw std::out_of_range("Morphism: symbol " + std::to_string(s) + " outside domain");
  }
  return images_[s];
}

Word Morphism::apply(const Word& w) const {
  std::vector<Symbol> out;
  unsigned alphabet = 1;
  for (const auto& img : images_) alphabet = std::max(alphabet, img.alphabet());
  for (Symbol s : w.symbols()) {
    const auto& img = image(s).symbols();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), alphabet);
}

Word Morphism::power(Symbol s, unsigned k) const {
  Word w({s}, std::max<unsigned>(domain_size(), s + 1u));
  for (unsigned i = 0; i < k; ++i) w = apply(w);
  return w;
}

bool Morphism::is_prolongable(Symbol seed) const {
  if (seed >= images_.size()) return false;
  const Word& img = images_[seed];
  return img.size() >= 2 && img[0] == seed;
}

bool Morphism::is_non_erasing() const {
  return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

const Morphism& morphism_f() {
  static const Morphism f({Word::parse("01", 4), Word::parse("21", 4), Word::parse("03", 4),
                           Word::parse("23", 4)});
  return f;
}

const Morphism& morphism_g() {
  static const Morphism g({Word::parse("121", 5), Word::parse("31", 5), Word::parse("13", 5),
                           Word::parse("4", 5)});
  return g;
}

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t len) {
  if (!m.is_prolongable(seed)) {
    throw std::domain_error("fixed_point_prefix: morphism is not prolongable at " + std::to_string(seed));
  }
  if (!m.is_non_erasing()) throw std::domain_error("fixed_point_prefix: morphism is erasing");
  Word w({seed}, m.domain_size());
  // w is always a prefix of m(w), and m(w) is strictly longer.
  while (w.size() < len) w = m.apply(w);
  return w.prefix(len);
}

Word decorated_d_prefix(std::size_t len) {
  // g is non-erasing, so g applied to len symbols of the fixed point yields at least len symbols.
  return morphism_g().apply(fixed_point_prefix(morphism_f(), 0, len)).prefix(len);
}

Word gap_word(const Word& x, Symbol symbol) {
  std::vector<Symbol> out;
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != symbol) continue;
    if (last) {
      const std::size_t gap = i - *last - 1;
      if (gap > 9) throw std::domain_error("gap_word: gap exceeds one digit");
      out.push_back(static_cast<Symbol>(gap));
    }
    last = i;
  }
  return Word(std::move(out));
}

PerturbedWords perturbed_words(unsigned k) {
  if (k > kMaxPerturbedLevel) {
    throw std::length_error("perturbed_words: level " + std::to_string(k) + " exceeds memory budget " +
                            std::to_string(kMaxPerturbedLevel));
  }
  Word x = Word::parse("1");
  Word a = Word::parse("121");
  Word b = Word::parse("31");
  Word u;
  Word v;
  for (unsigned i = 0; i < k; ++i) {
    Word next_x = x;
    next_x += Symbol{1};
    next_x += x.reversed().complemented();

    Word next_a = a + Word::parse("31") + b.reversed();
    Word next_b = b + Word::parse("4") + a.reversed();

    if (i >= 2) {
      // Valid once X_i starts with 11 and ends with 00.
      Word next_u = u + Word::parse("20") + v.reversed();
      Word next_v = v + Word::parse("3") + u.reversed();
      u = std::move(next_u);
      v = std::move(next_v);
    }
    x = std::move(next_x);
    a = std::move(next_a);
    b = std::move(next_b);
    if (i + 1 == 2) {
      u = gap_word(x, 1);
      v = gap_word(x, 0);
    }
  }
  if (k < 2) {
    u = gap_word(x, 1);
    v = gap_word(x, 0);
  }
  return PerturbedWords{std::move(x), std::move(u), std::move(v), std::move(a), std::move(b)};
}

namespace {

std::string abbreviate(const Word& w) {
  std::string s = w.to_string();
  if (s.size() > 48) s = s.substr(0, 48) + "...(" + std::to_string(w.size()) + " symbols)";
  return s;
}

}  // namespace

Report decoration_identity_check(unsigned k_max) {
  const std::string id = "Decoration";
  if (k_max < 1) return Report::pass(id, 1, 0, "empty range");
  const Morphism& f = morphism_f();
  const Morphism& g = morphism_g();

  Word a_prev = Word::parse("121");  // A_{k-1}
  Word b_prev = Word::parse("31");   // B_{k-1}
  // f^k(c) for c = 0..3, advanced one level per iteration.
  std::vector<Word> fk = {Word::parse("0", 4), Word::parse("1", 4), Word::parse("2", 4),
                          Word::parse("3", 4)};
  for (unsigned k = 1; k <= k_max; ++k) {
    for (auto& w : fk) w = f.apply(w);
    const Word a_k = a_prev + Word::parse("31") + b_prev.reversed();
    const Word b_k = b_prev + Word::parse("4") + a_prev.reversed();
    const Word b_rev = b_prev.reversed();

    const Word lhs[4] = {g.apply(fk[0]) + b_rev, g.apply(fk[1]), g.apply(fk[2]), g.apply(fk[3])};
    const Word rhs[4] = {a_k, b_rev + Word::parse("31"), a_prev + Word::parse("4"),
                         b_rev + Word::parse("4")};
    static const char* kNames[4] = {"A_k = g(f^k(0)) B_{k-1}^R", "g(f^k(1)) = B_{k-1}^R 3 1",
                                    "g(f^k(2)) = A_{k-1} 4", "g(f^k(3)) = B_{k-1}^R 4"};
    for (int c = 0; c < 4; ++c) {
      if (!(lhs[c] == rhs[c])) {
        return Report::fail(id, 1, k_max, Counterexample{k, abbreviate(rhs[c]), abbreviate(lhs[c])},
                            kNames[c]);
      }
    }
    a_prev = a_k;
    b_prev = b_k;
  }
  return Report::pass(id, 1, k_max, "four decoration identities hold");
}

nlohmann::json KernelExploration::to_json() const {
  nlohmann::json j;
  j["base"] = base;
  j["fingerprint_length"] = fingerprint_length;
  j["levels"] = nlohmann::json::array();
  for (const auto& lv : levels) {
    j["levels"].push_back(
        {{"level", lv.level}, {"class_count", lv.classes_at_level}, {"cumulative", lv.cumulative}});
  }
  j["stabilized_at"] = stabilized_at ? nlohmann::json(*stabilized_at) : nlohmann::json(nullptr);
  j["representatives"] = nlohmann::json::array();
  for (const auto& c : classes) {
    j["representatives"].push_back({{"modulus", c.modulus}, {"residue", c.residue}});
  }
  if (stabilized_at) {
    j["summary"] = "stabilized at level " + std::to_string(*stabilized_at) + " with L-prefix equality (L=" +
                   std::to_string(fingerprint_length) + ")";
  } else {
    j["summary"] = "no stabilization through level " + std::to_string(levels.empty() ? 0 : levels.back().level);
  }
  return j;
}

KernelExploration kernel_explore(const SequenceAccessor& seq, unsigned base, unsigned max_level,
                                 std::size_t fingerprint_length) {
  if (base < 2) throw std::invalid_argument("kernel_explore: base must be >= 2");
  if (fingerprint_length == 0) throw std::invalid_argument("kernel_explore: fingerprint length must be >= 1");

  KernelExploration out;
  out.base = base;
  out.fingerprint_length = fingerprint_length;
  std::map<std::vector<std::int64_t>, std::size_t> seen;

  Index modulus = 1;
  for (unsigned level = 0; level <= max_level; ++level) {
    if (level > 0) modulus = checked_mul(modulus, base);
    checked_mul(modulus, fingerprint_length);
    std::map<std::vector<std::int64_t>, bool> at_level;
    for (Index residue = 0; residue < modulus; ++residue) {
      std::vector<std::int64_t> fp(fingerprint_length);
      for (std::size_t n = 0; n < fingerprint_length; ++n) fp[n] = seq(modulus * n + residue);
      if (seen.find(fp) == seen.end()) {
        seen.emplace(fp, out.classes.size());
        out.classes.push_back(KernelClass{modulus, residue, fp});
      }
      at_level.emplace(std::move(fp), true);
    }
    const std::size_t before = out.levels.empty() ? 0 : out.levels.back().cumulative;
    out.levels.push_back(KernelLevel{level, at_level.size(), seen.size()});
    if (level >= 1 && !out.stabilized_at && seen.size() == before) out.stabilized_at = level;
  }
  return out;
}

nlohmann::json WitnessResult::to_json() const {
  return {{"alpha", alpha},
          {"beta", beta},
          {"t", std::to_string(t)},
          {"r", std::to_string(r)},
          {"r_prime", std::to_string(r_prime)},
          {"psi_r", std::to_string(psi_r)},
          {"psi_r_prime", std::to_string(psi_r_prime)},
          {"index_alpha", std::to_string(index_alpha)},
          {"index_beta", std::to_string(index_beta)},
          {"u_alpha", u_alpha},
          {"u_beta", u_beta},
          {"passed", passed()}};
}

WitnessResult non_automaticity_witness(unsigned alpha, unsigned beta) {
  if (alpha < 3 || beta <= alpha) {
    throw std::invalid_argument("non_automaticity_witness: need 3 <= alpha < beta");
  }
  WitnessResult w;
  w.alpha = alpha;
  w.beta = beta;

  const Index two_alpha = checked_pow2(alpha);
  const Index two_beta = checked_pow2(beta);
  if (two_beta >= 63) throw std::overflow_error("non_automaticity_witness: 2^(2^beta) exceeds 63 bits");

  // t = 1010...10 in base 2 with 2^alpha - 2 blocks.
  const unsigned t_bits = static_cast<unsigned>(checked_pow2(alpha + 1) - 4);
  w.t = (checked_pow2(t_bits) - 1) / 3 * 2;
  w.s_t_ok = seqcore::s(w.t) == checked_pow2(alpha + 1) - 3;

  w.r = checked_mul(checked_pow2(static_cast<unsigned>(two_alpha - 3)), w.t);
  w.index_alpha = checked_add(checked_mul(checked_pow2(static_cast<unsigned>(two_alpha)), w.t), two_alpha);
  w.psi_r = seqcore::psi(w.r);
  w.psi_r_ok = w.psi_r == w.index_alpha;

  w.r_prime = checked_add(checked_mul(checked_pow2(static_cast<unsigned>(two_beta - 3)), w.t),
                          checked_pow2(beta - 3) - checked_pow2(alpha - 3));
  w.index_beta = checked_add(checked_mul(checked_pow2(static_cast<unsigned>(two_beta)), w.t), two_beta);
  w.psi_r_prime = seqcore::psi(w.r_prime);
  w.psi_r_prime_ok = w.psi_r_prime == checked_add(w.index_beta, 1);

  w.u_alpha = seqcore::d(w.index_alpha);
  w.u_beta = seqcore::d(w.index_beta);
  return w;
}

}  // namespace hankelfold::morphic
