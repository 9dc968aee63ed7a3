#ifndef QECCFORGE_AQECC_HPP
#define QECCFORGE_AQECC_HPP

#include "qeccforge/construct.hpp"
#include "qeccforge/verify.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace qeccforge {

/// Diagonal expectations gamma_{j,P} shared by both states of one pair,
/// over every diagonal P with wt <= d_Z - 1 (identity first).
struct GammaVector {
  std::size_t pair_index = 0;
  std::vector<DiagonalPauli> labels;
  std::vector<std::complex<double>> values;
};

inline std::complex<double> diagonal_expectation(const LogicalState& st, const DiagonalPauli& z, int q) {
  std::complex<double> acc = 0.0;
  for (const auto& t : st.support) acc += t.amp * t.amp * expectation_diagonal(t.codeword, z, q).value();
  return acc;
}

/// Throws InputError when the two states do not form a KL-valid qubit at (d_X, d_Z).
inline GammaVector gamma_vector(const LogicalState& a, const LogicalState& b, int q, int n, int d_x,
                                int d_z, std::size_t pair_index = 0, double tol = 1e-8) {
  QuantumCode pair;
  pair.alphabet = Alphabet::qary(q);
  pair.n = n;
  pair.states = {a, b};
  KLOptions kopt;
  kopt.tol = tol;
  kopt.record_c_values = false;
  kopt.fail_fast = true;
  if (!kl_verify(pair, d_x, d_z, kopt).passed)
    throw InputError("pair " + std::to_string(pair_index) + " is not a valid qubit at (" +
                     std::to_string(d_x) + ", " + std::to_string(d_z) + ")");
  GammaVector g;
  g.pair_index = pair_index;
  WeightedVectorStream zs(q, n, 0, std::min(d_z - 1, n));
  while (auto z = zs.next()) {
    DiagonalPauli p{std::move(*z)};
    const auto va = diagonal_expectation(a, p, q);
    const auto vb = diagonal_expectation(b, p, q);
    if (std::abs(va - vb) > tol) throw InputError("pair states disagree on a diagonal expectation");
    g.values.push_back(va);
    g.labels.push_back(std::move(p));
  }
  return g;
}

/// Max over pairs of pairs of the sup-norm distance between gamma vectors.
inline double delta(const std::vector<GammaVector>& pairs) {
  if (pairs.size() < 2) throw InputError("delta needs at least two pairs");
  double d = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].values.size() != pairs[j].values.size())
        throw InputError("gamma vectors have different lengths");
      for (std::size_t k = 0; k < pairs[i].values.size(); ++k)
        d = std::max(d, std::abs(pairs[i].values[k] - pairs[j].values[k]));
    }
  return d;
}

/// Gamma vectors of consecutive state pairs (0,1), (2,3), ... of one code.
inline std::vector<GammaVector> gamma_vectors_of(const QuantumCode& code, double tol = 1e-8) {
  std::vector<GammaVector> out;
  for (std::size_t i = 0; i + 1 < code.states.size(); i += 2)
    out.push_back(gamma_vector(code.states[i], code.states[i + 1], code.q(), code.n, code.d_x, code.d_z,
                               i / 2, tol));
  return out;
}

/// 2 floor(|C| / 2V) (delta/2)^V with V = V_q(d_Z - 1).
inline double expected_M_bound(std::size_t code_size, int q, int n, int d_z, double delta_value) {
  if (!(delta_value > 0.0 && delta_value <= 2.0)) throw InputError("delta must lie in (0, 2]");
  const BigInt v = hamming_ball_volume(q, n, std::min(d_z - 1, n));
  const BigInt blocks = BigInt(code_size) / (2 * v);
  return 2.0 * blocks.convert_to<double>() * std::pow(delta_value / 2.0, v.convert_to<double>());
}

struct InfidelityBound {
  double value = 0.0;
  /// The O(.) constant is taken as 1; the figure is a scaling, not a rigorous bound.
  bool unit_constant = true;
  std::string caveat = "hidden constant of the O(delta V^4) bound set to 1";
};

inline InfidelityBound infidelity_bound(double delta_value, int q, int n, int d_z) {
  if (delta_value < 0.0) throw InputError("delta must be nonnegative");
  const double v = hamming_ball_volume(q, n, std::min(d_z - 1, n)).convert_to<double>();
  return {delta_value * v * v * v * v};
}

struct AqeccResult {
  /// One qubit per contiguous block of 2 V_q(d_Z - 1) codewords with a nontrivial kernel.
  std::vector<QuantumCode> pairs;
  std::vector<GammaVector> gammas;
  std::size_t blocks = 0;
  std::size_t failed_blocks = 0;
  /// Set when at least two pairs exist.
  std::optional<double> delta;
};

/// Splits C into contiguous blocks, builds a qubit on each and measures delta.
inline AqeccResult aqecc_from_code(const ClassicalCode& code, int d_x, int d_z,
                                   const ConstructOptions& copt = {}, double tol = 1e-8) {
  const int n = static_cast<int>(code.length());
  const BigInt rho_big = 2 * hamming_ball_volume(code.alphabet().modulus(), n, std::min(d_z - 1, n));
  if (rho_big > BigInt(code.size())) throw ConstructionError(Failure::InsufficientCode, "fewer words than one block");
  const std::size_t rho = rho_big.convert_to<std::size_t>();
  AqeccResult out;
  out.blocks = code.size() / rho;
  for (std::size_t b = 0; b < out.blocks; ++b) {
    std::vector<std::size_t> idx(rho);
    for (std::size_t i = 0; i < rho; ++i) idx[i] = b * rho + i;
    try {
      QuantumCode q = build_logical_qubit(code.subset(idx), d_x, d_z, copt);
      out.gammas.push_back(gamma_vector(q.states[0], q.states[1], q.q(), n, d_x, d_z, out.pairs.size(), tol));
      out.pairs.push_back(std::move(q));
    } catch (const ConstructionError&) {
      ++out.failed_blocks;
    } catch (const InputError&) {
      ++out.failed_blocks;
    }
  }
  if (out.gammas.size() >= 2) out.delta = delta(out.gammas);
  return out;
}

struct AqeccTrial {
  std::uint64_t seed = 0;
  std::size_t pairs = 0;
  std::size_t logical_states = 0;
  std::optional<double> delta;
  std::optional<double> expected_M;
};

/// Empirical (M, delta) over seeded random codes, compared with the expected-M bound.
inline std::vector<AqeccTrial> aqecc_monte_carlo(int q, int n, std::size_t m, int d_x, int d_z,
                                                 std::size_t trials, std::uint64_t seed) {
  std::vector<AqeccTrial> out;
  for (std::size_t t = 0; t < trials; ++t) {
    AqeccTrial row;
    row.seed = seed + t;
    const ClassicalCode c = random_code(q, n, m, row.seed);
    int dx = d_x;
    if (c.size() >= 2) dx = std::min(dx, code_distance(c));
    const AqeccResult r = aqecc_from_code(c, std::max(dx, 1), d_z);
    row.pairs = r.pairs.size();
    row.logical_states = 2 * r.pairs.size();
    row.delta = r.delta;
    if (r.delta && *r.delta > 0.0) row.expected_M = expected_M_bound(m, q, n, d_z, std::min(*r.delta, 2.0));
    out.push_back(row);
  }
  return out;
}

}  // namespace qeccforge

#endif  // QECCFORGE_AQECC_HPP
