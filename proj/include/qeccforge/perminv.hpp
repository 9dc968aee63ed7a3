#ifndef QECCFORGE_PERMINV_HPP
#define QECCFORGE_PERMINV_HPP

#include "qeccforge/construct.hpp"
#include "qeccforge/verify.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qeccforge {

/// Permutation class of a qubit Pauli X^a Z^b: how many sites carry X, XZ and Z.
struct PauliClass {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  int weight() const noexcept { return nx + ny + nz; }
  /// Representative with X sites first, then XZ, then Z.
  PauliLabel representative(int n) const {
    PauliLabel p = PauliLabel::identity(2, static_cast<std::size_t>(n));
    int s = 0;
    for (int i = 0; i < nx; ++i, ++s) p.x[s] = 1;
    for (int i = 0; i < ny; ++i, ++s) p.x[s] = p.z[s] = 1;
    for (int i = 0; i < nz; ++i, ++s) p.z[s] = 1;
    return p;
  }
  std::string describe() const {
    return "X" + std::to_string(nx) + "Y" + std::to_string(ny) + "Z" + std::to_string(nz);
  }
  friend auto operator<=>(const PauliClass&, const PauliClass&) = default;
};

inline PauliClass class_of(const PauliLabel& p) {
  if (p.q != 2) throw InputError("Pauli classes are defined for qubits");
  PauliClass c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool x = p.x[i] % 2 != 0, z = p.z[i] % 2 != 0;
    if (x && z) ++c.ny;
    else if (x) ++c.nx;
    else if (z) ++c.nz;
  }
  return c;
}

/// Every class with weight <= w_max (and <= n), weight-major.
inline std::vector<PauliClass> pauli_classes(int n, int w_max) {
  std::vector<PauliClass> out;
  for (int w = 0; w <= std::min(w_max, n); ++w)
    for (int nx = w; nx >= 0; --nx)
      for (int ny = w - nx; ny >= 0; --ny) out.push_back({nx, ny, w - nx - ny});
  return out;
}

struct PauliClassCount {
  /// Multisets over {X, XZ, Z}: sum_w C(w + 2, 2).
  BigInt exact = 0;
  /// The closed form sum_w C(n + w - 1, w).
  BigInt stated_formula = 0;
  /// sum_w 3^w.
  BigInt bound = 0;
};

inline PauliClassCount pauli_classes_up_to_permutation(int n, int w_max) {
  PauliClassCount c;
  for (int w = 0; w <= w_max; ++w) {
    if (w <= n) c.exact += binomial(w + 2, 2);
    c.stated_formula += binomial(static_cast<long long>(n) + w - 1, w);
    c.bound += ipow(BigInt(3), static_cast<unsigned>(w));
  }
  return c;
}

/// 1 + sum_{w=0}^{d-1} 3^w: row budget of the counting argument.
inline BigInt perminv_row_budget(int d) {
  BigInt s = 1;
  for (int w = 0; w <= d - 1; ++w) s += ipow(BigInt(3), static_cast<unsigned>(w));
  return s;
}

/// floor(n/d) >= 1 + sum_{w<d} 3^w, the form that gives n >= 42 at d = 3.
inline bool perminv_inequality(int n, int d) { return BigInt(n / d) >= perminv_row_budget(d); }

/// (floor(n/d) + 1) >= 1 + sum_{w<d} 3^w, the general display.
inline bool perminv_inequality_general(int n, int d) { return BigInt(n / d + 1) >= perminv_row_budget(d); }

inline int perminv_min_n(int d) {
  if (d < 1) throw InputError("d must be at least 1");
  return d * perminv_row_budget(d).convert_to<int>();
}

inline int perminv_min_n_general(int d) {
  if (d < 1) throw InputError("d must be at least 1");
  return d * (perminv_row_budget(d).convert_to<int>() - 1);
}

/// Sum over x of weight w of (-1)^{b.x} [wt(x xor a) = w'] for the class representative.
inline BigInt dicke_overlap_count(int n, int w_bra, int w_ket, const PauliClass& c) {
  const int ni = n - c.weight();
  if (ni < 0) throw InputError("Pauli class heavier than n");
  BigInt total = 0;
  for (int j = 0; j <= c.nx; ++j)
    for (int l = 0; l <= c.ny; ++l)
      for (int k = 0; k <= c.nz; ++k) {
        const int i = w_ket - j - l - k;
        if (i < 0 || i > ni) continue;
        if (i + (c.nx - j) + k + (c.ny - l) != w_bra) continue;
        BigInt term = binomial(ni, i) * binomial(c.nx, j) * binomial(c.nz, k) * binomial(c.ny, l);
        total += ((k + l) % 2 == 0) ? term : BigInt(-term);
      }
  return total;
}

/// <D_w|P|D_w> exactly, from the class of P.
inline Rational dicke_expectation_exact(int n, int w, const PauliClass& c) {
  if (w < 0 || w > n) throw InputError("Dicke weight out of range");
  return Rational(dicke_overlap_count(n, w, w, c), binomial(n, w));
}

/// <D_{w_bra}|P|D_{w_ket}> from the class of P.
inline double dicke_element(int n, int w_bra, int w_ket, const PauliClass& c) {
  const double norm = std::sqrt(binomial(n, w_bra).convert_to<double>() * binomial(n, w_ket).convert_to<double>());
  return dicke_overlap_count(n, w_bra, w_ket, c).convert_to<double>() / norm;
}

/// |D_w> as an explicit superposition; n <= 14.
inline LogicalState dicke_state(int n, int w, int label = 0) {
  if (n > 14) throw ConstructionError(Failure::BudgetExceeded, "explicit Dicke states need n <= 14");
  if (w < 0 || w > n) throw InputError("Dicke weight out of range");
  LogicalState st;
  st.label = label;
  const double amp = 1.0 / std::sqrt(binomial(n, w).convert_to<double>());
  const Rational sq(1, binomial(n, w));
  for (unsigned long long x = 0; x < (1ULL << n); ++x) {
    if (std::popcount(x) != w) continue;
    Codeword c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = static_cast<int>((x >> (n - 1 - i)) & 1ULL);
    st.support.push_back({std::move(c), amp, sq});
  }
  return st;
}

/// <D_w|P|D_w> by direct summation over the Dicke state's terms; n <= 14.
inline std::complex<double> dicke_expectation(int n, int w, const PauliLabel& p) {
  if (p.q != 2 || static_cast<int>(p.size()) != n) throw InputError("Pauli label must be a qubit label on n sites");
  const LogicalState st = dicke_state(n, w);
  return expectation_general(st, p);
}

struct DickeTerm {
  int weight = 0;
  Rational prob;
};

struct PermInvCode {
  int n = 0;
  int d = 1;
  std::vector<int> column_weights;
  std::vector<PauliClass> row_classes;
  std::size_t kernel_dimension = 0;
  std::vector<Rational> kernel_vector;
  /// Two logical states, each a distribution over Dicke weights.
  std::vector<std::vector<DickeTerm>> states;
  PauliClassCount class_count;
};

struct PermInvOptions {
  std::size_t kernel_index = 0;
  /// Skip the counting-inequality precondition (the kernel may still be nontrivial).
  bool ignore_inequality = false;
};

inline PermInvCode build_perminv_code(int n, int d, const PermInvOptions& opt = {}) {
  if (n < 1 || d < 1) throw InputError("need n >= 1 and d >= 1");
  if (!opt.ignore_inequality && !perminv_inequality(n, d))
    throw ConstructionError(Failure::CountingInequality,
                            "floor(n/d) >= 1 + sum 3^w fails for n = " + std::to_string(n) +
                                ", d = " + std::to_string(d) + " (needs n >= " +
                                std::to_string(perminv_min_n(d)) + ")");
  PermInvCode out;
  out.n = n;
  out.d = d;
  for (int w = 0; w <= n; w += d) out.column_weights.push_back(w);
  out.class_count = pauli_classes_up_to_permutation(n, d - 1);
  for (const auto& c : pauli_classes(n, d - 1))
    if (c.weight() > 0) out.row_classes.push_back(c);

  // Expectations are real for this Pauli convention, so imaginary rows vanish.
  const std::size_t cols = out.column_weights.size();
  DenseMatrix<Rational> a(1 + out.row_classes.size(), cols);
  for (std::size_t c = 0; c < cols; ++c) a(0, c) = 1;
  for (std::size_t r = 0; r < out.row_classes.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a(r + 1, c) = dicke_expectation_exact(n, out.column_weights[c], out.row_classes[r]);
  const auto basis = nullspace_from_rref(rref_exact(a));
  out.kernel_dimension = basis.size();
  if (basis.empty()) throw ConstructionError(Failure::TrivialKernel, "Dicke A-matrix has trivial kernel");
  if (opt.kernel_index >= basis.size()) throw InputError("kernel index out of range");
  std::vector<Rational> x = basis[opt.kernel_index];
  detail::orient_first_positive(x);
  const auto split = split_balanced(x);
  out.kernel_vector = x;
  out.states.resize(2);
  for (std::size_t c = 0; c < cols; ++c) {
    if (split.plus[c] != 0) out.states[0].push_back({out.column_weights[c], split.plus[c] / split.mass});
    if (split.minus[c] != 0) out.states[1].push_back({out.column_weights[c], split.minus[c] / split.mass});
  }
  return out;
}

struct PermInvCheck {
  bool passed = true;
  double worst_violation = 0.0;
  std::optional<PauliClass> worst_class;
  std::size_t classes_checked = 0;
};

/// KL check in the Dicke basis over every Pauli class of weight <= d - 1,
/// including the cross terms between different Dicke weights.
inline PermInvCheck perminv_kl_check(const PermInvCode& code, double tol = 1e-9) {
  PermInvCheck out;
  auto value = [&](std::size_t i, std::size_t j, const PauliClass& c) {
    double acc = 0.0;
    for (const auto& a : code.states[i])
      for (const auto& b : code.states[j])
        acc += std::sqrt(to_double(a.prob) * to_double(b.prob)) * dicke_element(code.n, a.weight, b.weight, c);
    return acc;
  };
  for (const auto& c : pauli_classes(code.n, code.d - 1)) {
    ++out.classes_checked;
    const double c0 = value(0, 0, c);
    for (std::size_t i = 0; i < code.states.size(); ++i)
      for (std::size_t j = i; j < code.states.size(); ++j) {
        const double v = value(i, j, c);
        const double viol = i == j ? std::abs(v - c0) : std::abs(v);
        if (viol > out.worst_violation) {
          out.worst_violation = viol;
          out.worst_class = c;
        }
      }
  }
  out.passed = out.worst_violation <= tol;
  return out;
}

/// Explicit computational-basis form of a permutation-invariant code; n <= 14.
inline QuantumCode expand_perminv(const PermInvCode& code) {
  QuantumCode out;
  out.alphabet = Alphabet::qary(2);
  out.n = code.n;
  out.d_x = code.d;
  out.d_z = code.d;
  out.provenance.method = "perminv";
  out.provenance.backend = "exact";
  out.provenance.kernel_dimension = code.kernel_dimension;
  for (std::size_t s = 0; s < code.states.size(); ++s) {
    LogicalState st;
    st.label = static_cast<int>(s);
    for (const auto& term : code.states[s]) {
      LogicalState dk = dicke_state(code.n, term.weight);
      const Rational base(1, binomial(code.n, term.weight));
      for (auto& t : dk.support) {
        t.amp_sq = term.prob * base;
        t.amp = std::sqrt(to_double(*t.amp_sq));
        st.support.push_back(std::move(t));
      }
    }
    out.states.push_back(std::move(st));
  }
  return out;
}

}  // namespace qeccforge

#endif  // QECCFORGE_PERMINV_HPP
