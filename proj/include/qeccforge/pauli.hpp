#ifndef QECCFORGE_PAULI_HPP
#define QECCFORGE_PAULI_HPP

#include "qeccforge/quantum_code.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace qeccforge {

// ---------------------------------------------------------------------------
// Phases
// ---------------------------------------------------------------------------

/// cos(2 pi k / q), exact whenever the angle is a multiple of pi/2.
inline double phase_cos(long long k, int q) {
  const int r = mod_floor(k, q);
  if ((4LL * r) % q == 0) {
    switch ((4 * r) / q) {
      case 0: return 1.0;
      case 1: return 0.0;
      case 2: return -1.0;
      case 3: return 0.0;
    }
  }
  return std::cos(2.0 * std::numbers::pi * r / q);
}

/// sin(2 pi k / q), exact whenever the angle is a multiple of pi/2.
inline double phase_sin(long long k, int q) {
  const int r = mod_floor(k, q);
  if ((4LL * r) % q == 0) {
    switch ((4 * r) / q) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2: return 0.0;
      case 3: return -1.0;
    }
  }
  return std::sin(2.0 * std::numbers::pi * r / q);
}

/// The root of unity omega^k with omega = exp(2 pi i / q); k is kept exactly.
struct Phase {
  int k = 0;
  int q = 1;

  double re() const { return phase_cos(k, q); }
  double im() const { return phase_sin(k, q); }
  std::complex<double> value() const { return {re(), im()}; }
};

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

/// X^a Z^b on n qudits; a and b are reduced mod q.
struct PauliLabel {
  int q = 2;
  std::vector<int> x;
  std::vector<int> z;

  static PauliLabel identity(int q, std::size_t n) {
    return {q, std::vector<int>(n, 0), std::vector<int>(n, 0)};
  }
  std::size_t size() const noexcept { return x.size(); }

  friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;
  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

inline int weight(std::span<const int> v) {
  int w = 0;
  for (int e : v) w += e != 0;
  return w;
}

inline int wt_x(const PauliLabel& p) { return weight(p.x); }
inline int wt_z(const PauliLabel& p) { return weight(p.z); }

/// Number of sites on which the label acts non-trivially.
inline int total_weight(const PauliLabel& p) {
  int w = 0;
  for (std::size_t i = 0; i < p.size(); ++i) w += (p.x[i] != 0 || p.z[i] != 0);
  return w;
}

/// Z^{z_1} (x) ... (x) Z^{z_n}.
struct DiagonalPauli {
  std::vector<int> z;

  int weight() const { return qeccforge::weight(z); }
  friend auto operator<=>(const DiagonalPauli&, const DiagonalPauli&) = default;
  friend bool operator==(const DiagonalPauli&, const DiagonalPauli&) = default;
};

/// Streams every vector in Z_q^n whose weight lies in [w_min, w_max].
///
/// Order is frozen: weight-major, then supports in lexicographic order of
/// their sorted position lists, then exponent tuples in lexicographic order
/// over 1..q-1 (last support position varies fastest).
class WeightedVectorStream {
 public:
  WeightedVectorStream(int q, int n, int w_min, int w_max)
      : q_(q), n_(n), w_(std::max(w_min, 0)), w_max_(std::min(w_max, n)) {
    start_weight();
  }

  std::optional<std::vector<int>> next() {
    if (done_) return std::nullopt;
    std::vector<int> v(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < w_; ++i) v[static_cast<std::size_t>(supp_[i])] = vals_[i];
    advance();
    return v;
  }

 private:
  void start_weight() {
    if (w_ > w_max_ || (q_ < 2 && w_ > 0)) {
      done_ = true;
      return;
    }
    supp_.resize(static_cast<std::size_t>(w_));
    vals_.assign(static_cast<std::size_t>(w_), 1);
    for (int i = 0; i < w_; ++i) supp_[i] = i;
  }

  void advance() {
    // exponents first
    for (int i = w_ - 1; i >= 0; --i) {
      if (vals_[i] < q_ - 1) {
        ++vals_[i];
        for (int j = i + 1; j < w_; ++j) vals_[j] = 1;
        return;
      }
    }
    std::fill(vals_.begin(), vals_.end(), 1);
    // next support (combination successor)
    for (int i = w_ - 1; i >= 0; --i) {
      if (supp_[i] < n_ - w_ + i) {
        ++supp_[i];
        for (int j = i + 1; j < w_; ++j) supp_[j] = supp_[j - 1] + 1;
        return;
      }
    }
    ++w_;
    start_weight();
  }

  int q_, n_, w_, w_max_;
  bool done_ = false;
  std::vector<int> supp_;
  std::vector<int> vals_;
};

/// Every diagonal Pauli with 1 <= weight <= w_max, in the frozen order.
class DiagonalPauliStream {
 public:
  DiagonalPauliStream(int q, int n, int w_max) : inner_(q, n, 1, w_max) {}
  std::optional<DiagonalPauli> next() {
    auto v = inner_.next();
    if (!v) return std::nullopt;
    return DiagonalPauli{std::move(*v)};
  }

 private:
  WeightedVectorStream inner_;
};

inline std::vector<DiagonalPauli> enumerate_diagonal(int q, int n, int w_max) {
  std::vector<DiagonalPauli> out;
  DiagonalPauliStream s(q, n, w_max);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

// ---------------------------------------------------------------------------
// Expectations
// ---------------------------------------------------------------------------

inline std::vector<int> residues(std::span<const int> c, int q) {
  std::vector<int> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = mod_floor(c[i], q);
  return r;
}

/// <c| Z^z |c> = omega^{z.c}; spin symbols use their residue mod q.
inline Phase expectation_diagonal(std::span<const int> c, const DiagonalPauli& z, int q) {
  if (c.size() != z.z.size()) throw InputError("expectation_diagonal: length mismatch");
  long long k = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    k += static_cast<long long>(mod_floor(z.z[i], q)) * mod_floor(c[i], q);
  return Phase{mod_floor(k, q), q};
}

namespace detail {

struct ResidueHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace detail

/// <bra| X^a Z^b |ket> with X^a Z^b |c> = omega^{b.c} |c - a>.
inline std::complex<double> expectation_general(const LogicalState& bra, const LogicalState& ket,
                                                const PauliLabel& p) {
  const int q = p.q;
  std::unordered_map<std::vector<int>, double, detail::ResidueHash> bra_amp;
  for (const auto& t : bra.support) bra_amp[residues(t.codeword, q)] += t.amp;
  std::complex<double> acc = 0.0;
  std::vector<int> shifted(p.size());
  for (const auto& t : ket.support) {
    if (t.codeword.size() != p.size()) throw InputError("expectation_general: length mismatch");
    long long k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int c = mod_floor(t.codeword[i], q);
      shifted[i] = mod_floor(c - p.x[i], q);
      k += static_cast<long long>(mod_floor(p.z[i], q)) * c;
    }
    auto it = bra_amp.find(shifted);
    if (it == bra_amp.end()) continue;
    acc += it->second * t.amp * Phase{mod_floor(k, q), q}.value();
  }
  return acc;
}

inline std::complex<double> expectation_general(const LogicalState& state, const PauliLabel& p) {
  return expectation_general(state, state, p);
}

}  // namespace qeccforge

#endif  // QECCFORGE_PAULI_HPP
