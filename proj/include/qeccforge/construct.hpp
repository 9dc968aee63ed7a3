#ifndef QECCFORGE_CONSTRUCT_HPP
#define QECCFORGE_CONSTRUCT_HPP

#include "qeccforge/amatrix.hpp"
#include "qeccforge/dines.hpp"
#include "qeccforge/quantum_code.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace qeccforge {

template <class S>
struct BalancedSplit {
  std::vector<S> x;
  std::vector<S> plus;
  std::vector<S> minus;
  /// ||x+||_1 = ||x-||_1 = ||x||_1 / 2.
  S mass = 0;
};

/// Positive and negative parts of a balanced vector.
template <class S>
BalancedSplit<S> split_balanced(const std::vector<S>& x, double tol = 1e-10) {
  using detail::abs_value;
  BalancedSplit<S> out;
  out.x = x;
  out.plus.assign(x.size(), S(0));
  out.minus.assign(x.size(), S(0));
  S sum = 0, l1 = 0, mp = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    l1 += abs_value(x[i]);
    if (x[i] > 0) {
      out.plus[i] = x[i];
      mp += x[i];
    } else if (x[i] < 0) {
      out.minus[i] = -x[i];
    }
  }
  if (l1 == 0) throw InputError("split_balanced: zero vector");
  if constexpr (std::is_same_v<S, double>) {
    if (std::abs(sum) > tol * l1) throw InputError("split_balanced: entries do not sum to zero");
  } else {
    if (sum != 0) throw InputError("split_balanced: entries do not sum to zero");
  }
  out.mass = mp;
  return out;
}

struct ConstructOptions {
  KernelBackend backend = KernelBackend::Auto;
  std::size_t kernel_index = 0;
  double rel_tol = 1e-9;
  /// Number of logical states wanted by the recursive construction; empty = as many as possible.
  std::optional<std::size_t> states;
  DinesOptions dines;
  AMatrixOptions amatrix;
};

namespace detail {

inline double sqrt_of(double v) { return std::sqrt(v); }
inline double sqrt_of(const Rational& v) { return std::sqrt(to_double(v)); }

/// State over the given column positions with probabilities w / sum(w).
template <class S>
LogicalState make_state(int label, const AMatrix& a, const std::vector<std::size_t>& pos,
                        const std::vector<S>& w) {
  S total = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) total += w[i];
  LogicalState st;
  st.label = label;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (w[i] == 0) continue;
    SupportTerm t;
    t.codeword = a.col_words[pos[i]];
    const S p = w[i] / total;
    if constexpr (std::is_same_v<S, Rational>) {
      t.amp_sq = p;
      t.amp = sqrt_of(p);
    } else {
      t.amp = std::sqrt(p);
    }
    st.support.push_back(std::move(t));
  }
  return st;
}

template <class S>
void orient_first_positive(std::vector<S>& x) {
  for (const S& v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (S& w : x) w = -w;
    return;
  }
}

template <class S>
std::vector<double> as_doubles(const std::vector<S>& x) {
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = to_double(x[i]);
  return d;
}

inline void check_distance(const ClassicalCode& code, int d_x) {
  if (d_x < 1) throw InputError("d_X must be at least 1");
  if (code.size() < 2) throw ConstructionError(Failure::TrivialKernel, "code has fewer than two words");
  const int d = code_distance(code);
  if (d < d_x)
    throw ConstructionError(Failure::DistanceTooSmall, "code distance " + std::to_string(d) +
                                                           " is below d_X = " + std::to_string(d_x));
}

/// Two states from a balanced kernel vector over column positions `pos`.
template <class S>
void qubit_from_vector(const AMatrix& a, const std::vector<std::size_t>& pos, std::vector<S> x,
                       QuantumCode& out, std::vector<std::size_t>& used_plus,
                       std::vector<S>& w_plus, std::vector<std::size_t>& used_minus,
                       std::vector<S>& w_minus) {
  orient_first_positive(x);
  const auto split = split_balanced(x);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (split.plus[i] != 0) {
      used_plus.push_back(pos[i]);
      w_plus.push_back(split.plus[i] / split.mass);
    }
    if (split.minus[i] != 0) {
      used_minus.push_back(pos[i]);
      w_minus.push_back(split.minus[i] / split.mass);
    }
  }
  out.states.push_back(make_state(0, a, used_plus, w_plus));
  out.states.push_back(make_state(1, a, used_minus, w_minus));
  out.provenance.kernel_vector = as_doubles(x);
  std::vector<std::size_t> cp, cm;
  for (auto p : used_plus) cp.push_back(a.cols[p]);
  for (auto p : used_minus) cm.push_back(a.cols[p]);
  out.provenance.blocks = {cp, cm};
}

}  // namespace detail

/// Two logical states from one kernel vector of the A-matrix.
inline QuantumCode build_logical_qubit(const ClassicalCode& code, int d_x, int d_z,
                                       const ConstructOptions& opt = {}) {
  detail::check_distance(code, d_x);
  const AMatrix a = build_a_matrix(code, d_z, opt.amatrix);
  const KernelBasis k = kernel(a, {opt.backend, opt.rel_tol});
  if (k.dimension() == 0)
    throw ConstructionError(Failure::TrivialKernel,
                            "A-matrix has trivial kernel at d_Z = " + std::to_string(d_z));
  if (opt.kernel_index >= k.dimension())
    throw InputError("kernel index " + std::to_string(opt.kernel_index) + " out of range (dimension " +
                     std::to_string(k.dimension()) + ")");

  QuantumCode out;
  out.alphabet = code.alphabet();
  out.n = static_cast<int>(code.length());
  out.d_x = d_x;
  out.d_z = d_z;
  out.provenance.method = "algorithm-1";
  out.provenance.backend = to_string(k.backend);
  out.provenance.kernel_dimension = k.dimension();
  out.provenance.kernel_index = opt.kernel_index;

  std::vector<std::size_t> pos(a.num_cols());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  std::vector<std::size_t> up, um;
  if (k.backend == KernelBackend::Exact) {
    std::vector<Rational> wp, wm;
    detail::qubit_from_vector(a, pos, k.exact_vectors[opt.kernel_index], out, up, wp, um, wm);
  } else {
    std::vector<double> wp, wm;
    detail::qubit_from_vector(a, pos, k.vectors[opt.kernel_index], out, up, wp, um, wm);
  }
  return out;
}

struct QuditResult {
  QuantumCode code;
  /// Set on the first infeasible block.
  bool halted = false;
  /// Set when the codewords ran out before the target; not a halt.
  bool exhausted = false;
  std::string halt_reason;
  /// Label of the state that could not be built.
  std::optional<std::size_t> halted_at;
  std::optional<std::size_t> same_sign_row;
};

namespace detail {

template <class S>
DenseMatrix<S> matrix_as(const AMatrix& a) {
  if constexpr (std::is_same_v<S, Rational>) {
    return a.rational_entries();
  } else {
    return a.entries;
  }
}

template <class S>
QuditResult run_qudit(const ClassicalCode& code, int d_x, int d_z, const ConstructOptions& opt,
                      const AMatrix& a, const KernelBackend backend) {
  const std::size_t m = a.num_cols();
  const BigInt rho_big = 2 * hamming_ball_volume(a.q, static_cast<int>(code.length()),
                                                 std::min(d_z - 1, static_cast<int>(code.length())));
  const std::size_t rho = rho_big > BigInt(m) ? m + 1 : rho_big.convert_to<std::size_t>();
  const std::size_t target = opt.states.value_or(std::numeric_limits<std::size_t>::max());
  if (target < 2) throw InputError("at least two logical states are required");

  QuditResult res;
  QuantumCode& out = res.code;
  out.alphabet = code.alphabet();
  out.n = static_cast<int>(code.length());
  out.d_x = d_x;
  out.d_z = d_z;
  out.provenance.method = "algorithm-2";
  out.provenance.backend = to_string(backend);

  const DenseMatrix<S> full = matrix_as<S>(a);

  // Block 1 through the kernel.
  std::vector<std::size_t> block1;
  for (std::size_t i = 0; i < std::min(rho, m); ++i) block1.push_back(i);
  const AMatrix a1 = a.select_columns(block1);
  const KernelBasis k = kernel(a1, {backend, opt.rel_tol});
  if (k.dimension() == 0) {
    if (m < rho)
      throw ConstructionError(Failure::InsufficientCode,
                              "|C| = " + std::to_string(m) + " is below 2 V_q(d_Z - 1) = " +
                                  rho_big.str() + " and the A-matrix has trivial kernel");
    throw ConstructionError(Failure::TrivialKernel, "first block has trivial kernel");
  }
  if (opt.kernel_index >= k.dimension())
    throw InputError("kernel index " + std::to_string(opt.kernel_index) + " out of range (dimension " +
                     std::to_string(k.dimension()) + ")");
  out.provenance.kernel_dimension = k.dimension();
  out.provenance.kernel_index = opt.kernel_index;
  if (m < rho)
    out.provenance.notes.push_back("code smaller than one block; first block uses all " +
                                   std::to_string(m) + " columns");

  std::vector<S> x;
  if constexpr (std::is_same_v<S, Rational>) x = k.exact_vectors[opt.kernel_index];
  else x = k.vectors[opt.kernel_index];

  std::vector<std::size_t> up, um;
  std::vector<S> wp, wm;
  qubit_from_vector(a, block1, x, out, up, wp, um, wm);

  std::vector<bool> used(m, false);
  for (auto p : up) used[p] = true;
  for (auto p : um) used[p] = true;
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < m; ++i)
    if (!used[i]) pool.push_back(i);

  std::vector<std::size_t> prev_pos = um;
  std::vector<S> prev_w = wm;
  while (out.states.size() < target) {
    const std::size_t label = out.states.size();
    if (pool.empty()) {
      res.exhausted = true;
      res.halted_at = label;
      res.halt_reason = "columns exhausted";
      break;
    }
    std::vector<S> b(full.rows(), S(0));
    for (std::size_t i = 0; i < prev_pos.size(); ++i)
      for (std::size_t r = 0; r < full.rows(); ++r) b[r] += full(r, prev_pos[i]) * prev_w[i];

    std::size_t width = std::min(rho, pool.size());
    std::optional<std::vector<S>> y;
    std::optional<std::size_t> bad_row;
    for (;;) {
      DenseMatrix<S> h(full.rows(), width + 1);
      for (std::size_t r = 0; r < full.rows(); ++r) {
        for (std::size_t c = 0; c < width; ++c) h(r, c) = full(r, pool[c]);
        h(r, width) = -b[r];
      }
      const auto sol = dines_feasible(h, opt.dines);
      if (sol.solution && (*sol.solution)[width] > 0) {
        std::vector<S> v(width);
        for (std::size_t c = 0; c < width; ++c) v[c] = (*sol.solution)[c] / (*sol.solution)[width];
        y = std::move(v);
        break;
      }
      bad_row = sol.same_sign_row;
      if (width == pool.size()) break;
      width = pool.size();
    }
    if (!y) {
      res.halted = true;
      res.halted_at = label;
      res.same_sign_row = bad_row;
      res.halt_reason = "no nonnegative solution on the remaining " + std::to_string(pool.size()) +
                        " columns";
      break;
    }
    std::vector<std::size_t> pos;
    std::vector<S> w;
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if constexpr (std::is_same_v<S, double>) {
        if (c < width && (*y)[c] < 1e-12) (*y)[c] = 0.0;
      }
      if (c < width && (*y)[c] != 0) {
        pos.push_back(pool[c]);
        w.push_back((*y)[c]);
      } else {
        rest.push_back(pool[c]);
      }
    }
    S total = 0;
    for (const S& v : w) total += v;
    for (S& v : w) v /= total;
    out.states.push_back(make_state(static_cast<int>(label), a, pos, w));
    std::vector<std::size_t> cols;
    for (auto p : pos) cols.push_back(a.cols[p]);
    out.provenance.blocks.push_back(cols);
    pool = std::move(rest);
    prev_pos = std::move(pos);
    prev_w = std::move(w);
  }
  if (res.halted || res.exhausted)
    out.provenance.notes.push_back("stopped at state " + std::to_string(*res.halted_at) + ": " +
                                   res.halt_reason);
  return res;
}

}  // namespace detail

/// Recursive multi-state construction. Halting is reported in the result;
/// only setup failures throw.
inline QuditResult build_logical_qudit(const ClassicalCode& code, int d_x, int d_z,
                                       const ConstructOptions& opt = {}) {
  detail::check_distance(code, d_x);
  if (d_z < 1) throw InputError("d_Z must be at least 1");
  const AMatrix a = build_a_matrix(code, d_z, opt.amatrix);
  KernelBackend be = opt.backend;
  if (be == KernelBackend::Auto) be = a.exact() ? KernelBackend::Exact : KernelBackend::Float;
  if (be == KernelBackend::Exact && !a.exact())
    throw InputError("exact backend needs q in {1, 2, 4}");
  if (be == KernelBackend::Exact) return detail::run_qudit<Rational>(code, d_x, d_z, opt, a, be);
  return detail::run_qudit<double>(code, d_x, d_z, opt, a, be);
}

/// floor(q^{n (1 - 2 Ent_q(d_Z / n))}); 1 when the exponent is not positive.
inline BigInt upper_bound_M(int q, int n, int d_z) {
  using F = boost::multiprecision::cpp_bin_float_50;
  if (q < 2 || n <= 0) throw InputError("upper_bound_M: need q >= 2 and n >= 1");
  const F ratio = F(d_z) / n;
  const F top = F(q - 1) / q;
  if (ratio < 0 || ratio > top) throw InputError("upper_bound_M: d_Z/n must lie in [0, (q-1)/q]");
  auto xlogx = [](const F& y) { return y <= 0 ? F(0) : F(y * log(y)); };
  const F ent = (-xlogx(ratio) - xlogx(1 - ratio) + ratio * log(F(q - 1))) / log(F(q));
  const F expo = n * (1 - 2 * ent);
  if (expo <= 0) return 1;
  const F val = pow(F(q), expo);
  // Guard against 49.9999... when the exponent is an integer.
  F fl = floor(val);
  if (val - fl > F(1) - F("1e-30")) fl += 1;
  return fl.convert_to<BigInt>();
}

}  // namespace qeccforge

#endif  // QECCFORGE_CONSTRUCT_HPP
