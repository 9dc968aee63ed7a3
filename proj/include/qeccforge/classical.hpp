#ifndef QECCFORGE_CLASSICAL_HPP
#define QECCFORGE_CLASSICAL_HPP

#include "qeccforge/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace qeccforge {

/// Symbol alphabet of a classical code.
///
/// `qary(q)` holds the digits 0..q-1. `spin(s)` holds the spin projections
/// -s..s including 0; its phase modulus is 2s+1 and symbol j is reduced to
/// j mod (2s+1) wherever a residue is needed (the cyclic convention).
class Alphabet {
 public:
  enum class Kind { QaryDigits, SpinSigma };

  static Alphabet qary(int q) {
    if (q < 1) throw InputError("q-ary alphabet needs q >= 1");
    return Alphabet(Kind::QaryDigits, q);
  }
  static Alphabet spin(int s) {
    if (s < 1) throw InputError("spin alphabet needs s >= 1");
    return Alphabet(Kind::SpinSigma, s);
  }

  Kind kind() const noexcept { return kind_; }
  int param() const noexcept { return param_; }
  bool is_spin() const noexcept { return kind_ == Kind::SpinSigma; }
  int size() const noexcept { return is_spin() ? 2 * param_ + 1 : param_; }
  /// Phase-arithmetic modulus (q for digits, 2s+1 for spins).
  int modulus() const noexcept { return size(); }

  int min_symbol() const noexcept { return is_spin() ? -param_ : 0; }
  int max_symbol() const noexcept { return is_spin() ? param_ : param_ - 1; }
  bool contains(int symbol) const noexcept {
    return symbol >= min_symbol() && symbol <= max_symbol();
  }

  std::vector<int> letters() const {
    std::vector<int> out;
    for (int j = min_symbol(); j <= max_symbol(); ++j) out.push_back(j);
    return out;
  }

  /// Spin alphabets drop the symbol 0; digit alphabets return every letter.
  std::vector<int> nonzero_letters() const {
    std::vector<int> out;
    for (int j : letters())
      if (!is_spin() || j != 0) out.push_back(j);
    return out;
  }

  std::string describe() const {
    return (is_spin() ? "spin " : "qary ") + std::to_string(param_);
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(Kind k, int p) : kind_(k), param_(p) {}
  Kind kind_;
  int param_;
};

using Codeword = std::vector<int>;

enum class WordOrder { Lexicographic, AsGiven };

/// Ordered, duplicate-free set of equal-length codewords over one alphabet.
/// The order fixes the column order of every matrix built from the code.
class ClassicalCode {
 public:
  ClassicalCode(Alphabet alphabet, std::size_t length, std::vector<Codeword> words,
                WordOrder order = WordOrder::Lexicographic)
      : alphabet_(alphabet), length_(length), words_(std::move(words)) {
    for (const auto& w : words_) {
      if (w.size() != length_)
        throw InputError("codeword length " + std::to_string(w.size()) +
                         " differs from code length " + std::to_string(length_));
      for (int s : w)
        if (!alphabet_.contains(s))
          throw InputError("symbol " + std::to_string(s) + " outside alphabet " +
                           alphabet_.describe());
    }
    std::vector<Codeword> sorted = words_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("duplicate codeword in classical code");
    if (order == WordOrder::Lexicographic) words_ = std::move(sorted);
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Codeword>& words() const noexcept { return words_; }
  const Codeword& operator[](std::size_t i) const { return words_[i]; }

  std::optional<std::size_t> index_of(const Codeword& c) const {
    auto it = std::find(words_.begin(), words_.end(), c);
    if (it == words_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin());
  }

  /// Sub-code on the given word indices, in the order given.
  ClassicalCode subset(std::span<const std::size_t> idx) const {
    std::vector<Codeword> w;
    w.reserve(idx.size());
    for (auto i : idx) w.push_back(words_.at(i));
    return ClassicalCode(alphabet_, length_, std::move(w), WordOrder::AsGiven);
  }

 private:
  Alphabet alphabet_;
  std::size_t length_;
  std::vector<Codeword> words_;
};

inline int hamming_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw InputError("hamming_distance: lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()) + " differ");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline int code_distance(const ClassicalCode& code) {
  if (code.size() < 2) throw InputError("code_distance needs at least two codewords");
  int best = static_cast<int>(code.length()) + 1;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = std::min(best, hamming_distance(code[i], code[j]));
  return best;
}

/// Number of q-ary strings of length n within Hamming distance r of a point.
inline BigInt hamming_ball_volume(int q, int n, int r) {
  if (q < 1) throw InputError("hamming_ball_volume: q must be positive");
  if (n < 0 || r < 0 || r > n)
    throw InputError("hamming_ball_volume: radius must lie in [0, n]");
  BigInt total = 0;
  BigInt qm1 = q - 1;
  for (int w = 0; w <= r; ++w) total += binomial(n, w) * ipow(qm1, static_cast<unsigned>(w));
  return total;
}

/// q-ary entropy with the 0 log 0 = 0 convention.
inline double q_ary_entropy(int q, double x) {
  if (q < 2) throw InputError("q_ary_entropy: q must be at least 2");
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("q_ary_entropy: x must lie in [0, 1]");
  const double lq = std::log(static_cast<double>(q));
  auto xlogx = [](double y) { return y <= 0.0 ? 0.0 : y * std::log(y); };
  return (-xlogx(x) - xlogx(1.0 - x) + x * std::log(static_cast<double>(q - 1))) / lq;
}

/// A spin string is an allowed product ground-state label when it has no 0
/// and never places +m immediately before -m.
inline bool is_allowed_spin_string(std::span<const int> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) return false;
    if (i + 1 < t.size() && t[i] > 0 && t[i + 1] == -t[i]) return false;
  }
  return true;
}

/// Binary code -> spin alphabet via 0 -> 2, 1 -> 1.
inline ClassicalCode map_beta(const ClassicalCode& code, int s = 2) {
  if (code.alphabet() != Alphabet::qary(2)) throw InputError("map_beta needs a binary code");
  if (s < 2) throw InputError("map_beta needs target spin s >= 2");
  std::vector<Codeword> out;
  out.reserve(code.size());
  for (const auto& w : code.words()) {
    Codeword c(w.size());
    std::transform(w.begin(), w.end(), c.begin(), [](int b) { return b == 0 ? 2 : 1; });
    out.push_back(std::move(c));
  }
  return ClassicalCode(Alphabet::spin(s), code.length(), std::move(out));
}

/// Labels of GF(4) = {0, 1, a, b}.
enum class Gf4 { Zero, One, A, B };

inline char to_char(Gf4 g) {
  switch (g) {
    case Gf4::Zero: return '0';
    case Gf4::One: return '1';
    case Gf4::A: return 'a';
    case Gf4::B: return 'b';
  }
  return '?';
}

/// Spin-2 nonzero string -> GF(4) labels: 1->0, -1->1, 2->a, -2->b.
inline std::vector<Gf4> map_phi(std::span<const int> t, int s = 2) {
  if (s != 2) throw InputError("map_phi is defined for s = 2 only");
  std::vector<Gf4> out;
  out.reserve(t.size());
  for (int x : t) {
    switch (x) {
      case 1: out.push_back(Gf4::Zero); break;
      case -1: out.push_back(Gf4::One); break;
      case 2: out.push_back(Gf4::A); break;
      case -2: out.push_back(Gf4::B); break;
      default: throw InputError("map_phi: symbol " + std::to_string(x) + " has no image");
    }
  }
  return out;
}

inline Codeword map_phi_inv(std::span<const Gf4> g) {
  Codeword out;
  out.reserve(g.size());
  for (Gf4 x : g) {
    switch (x) {
      case Gf4::Zero: out.push_back(1); break;
      case Gf4::One: out.push_back(-1); break;
      case Gf4::A: out.push_back(2); break;
      case Gf4::B: out.push_back(-2); break;
    }
  }
  return out;
}

/// True when the GF(4) image contains one of the forbidden substrings (0 1) or (a b).
inline bool has_forbidden_gf4(std::span<const Gf4> g) {
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (g[i] == Gf4::Zero && g[i + 1] == Gf4::One) return true;
    if (g[i] == Gf4::A && g[i + 1] == Gf4::B) return true;
  }
  return false;
}

/// Keeps the codewords that label product ground states (no 0, no adjacent (m, -m)).
inline ClassicalCode filter_forbidden(const ClassicalCode& code) {
  if (!code.alphabet().is_spin()) throw InputError("filter_forbidden needs a spin alphabet");
  std::vector<Codeword> kept;
  for (const auto& w : code.words())
    if (is_allowed_spin_string(w)) kept.push_back(w);
  return ClassicalCode(code.alphabet(), code.length(), std::move(kept), WordOrder::AsGiven);
}

/// `m` distinct uniformly random codewords, reproducible per seed.
inline ClassicalCode random_code(int q, int n, std::size_t m, std::uint64_t seed) {
  if (q < 1 || n < 0) throw InputError("random_code: need q >= 1 and n >= 0");
  if (BigInt(m) > ipow(BigInt(q), static_cast<unsigned>(n)))
    throw InputError("random_code: m exceeds q^n");
  std::mt19937_64 rng(seed);
  std::set<Codeword> seen;
  std::vector<Codeword> words;
  words.reserve(m);
  while (words.size() < m) {
    Codeword c(static_cast<std::size_t>(n));
    // uniform_int_distribution output is implementation-defined; plain modulo is not.
    for (auto& x : c) x = static_cast<int>(rng() % static_cast<std::uint64_t>(q));
    if (seen.insert(c).second) words.push_back(std::move(c));
  }
  return ClassicalCode(Alphabet::qary(q), static_cast<std::size_t>(n), std::move(words));
}

}  // namespace qeccforge

#endif  // QECCFORGE_CLASSICAL_HPP
