#ifndef QECCFORGE_GROUNDSPACE_HPP
#define QECCFORGE_GROUNDSPACE_HPP

#include "qeccforge/construct.hpp"
#include "qeccforge/union_find.hpp"
#include "qeccforge/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qeccforge {

using SpinString = std::vector<int>;

inline void check_spin(int s) {
  if (s < 1) throw InputError("spin s must be at least 1");
}

inline std::string format_spin_string(const SpinString& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t[i]);
  }
  return out;
}

/// Every string one local move away: 0m <-> m0 and 00 <-> m(-m), m = 1..s.
inline std::vector<SpinString> local_moves(const SpinString& t, int s) {
  check_spin(s);
  std::vector<SpinString> out;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const int a = t[k], b = t[k + 1];
    if ((a == 0) != (b == 0)) {
      SpinString u = t;
      std::swap(u[k], u[k + 1]);
      out.push_back(std::move(u));
    }
    if (a == 0 && b == 0) {
      for (int m = 1; m <= s; ++m) {
        SpinString u = t;
        u[k] = m;
        u[k + 1] = -m;
        out.push_back(std::move(u));
      }
    }
    if (a > 0 && b == -a) {
      SpinString u = t;
      u[k] = u[k + 1] = 0;
      out.push_back(std::move(u));
    }
  }
  return out;
}

struct CanonicalForm {
  SpinString irreducible;
  std::size_t zeros = 0;

  SpinString full() const {
    SpinString out = irreducible;
    out.resize(irreducible.size() + zeros, 0);
    return out;
  }
  std::size_t k() const noexcept { return irreducible.size(); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Moves every zero to the right and annihilates (m, -m) pairs, leftmost first.
inline CanonicalForm canonicalize(const SpinString& t) {
  CanonicalForm out;
  for (int x : t) {
    if (x == 0) continue;
    if (!out.irreducible.empty() && out.irreducible.back() > 0 && out.irreducible.back() == -x)
      out.irreducible.pop_back();
    else
      out.irreducible.push_back(x);
  }
  out.zeros = t.size() - out.irreducible.size();
  return out;
}

/// Calls visit(t) for each t in T_n in lexicographic order (symbols -s..-1, 1..s).
inline void for_each_Tn(int s, int n, const std::function<void(const SpinString&)>& visit) {
  check_spin(s);
  if (n < 0) throw InputError("n must be nonnegative");
  std::vector<int> letters;
  for (int m = -s; m <= s; ++m)
    if (m != 0) letters.push_back(m);
  SpinString t(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      visit(t);
      return;
    }
    for (int x : letters) {
      if (pos > 0 && t[pos - 1] > 0 && x == -t[pos - 1]) continue;
      t[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
}

inline std::vector<SpinString> enumerate_Tn(int s, int n) {
  std::vector<SpinString> out;
  for_each_Tn(s, n, [&](const SpinString& t) { out.push_back(t); });
  return out;
}

/// |T_n| by the recursion |T_{n+2}| = 2s|T_{n+1}| - s|T_n|, |T_0| = 1, |T_1| = 2s.
inline BigInt count_Tn(int s, int n) {
  check_spin(s);
  if (n < 0) throw InputError("n must be nonnegative");
  BigInt a = 1, b = 2 * s;
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    BigInt c = 2 * s * b - s * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

inline double count_Tn_closed(int s, int n) {
  check_spin(s);
  if (s == 1) return n + 1.0;
  const double u = std::sqrt(1.0 - 1.0 / s);
  const double rp = s * (1.0 + u), rm = s * (1.0 - u);
  return (1.0 + u) / (2.0 * u) * std::pow(rp, n) + (u - 1.0) / (2.0 * u) * std::pow(rm, n);
}

/// sum_{k=0}^n |T_k|: the number of move classes on (2s+1)^n strings.
inline BigInt kernel_dimension(int s, int n) {
  check_spin(s);
  if (n < 0) throw InputError("n must be nonnegative");
  BigInt total = 0, a = 1, b = 2 * s;
  total += a;
  for (int k = 1; k <= n; ++k) {
    total += b;
    BigInt c = 2 * s * b - s * a;
    a = std::move(b);
    b = std::move(c);
  }
  return total;
}

inline double kernel_dimension_closed(int s, int n) {
  check_spin(s);
  if (s == 1) return (n + 1.0) * (n + 2.0) / 2.0;
  const double u = std::sqrt(1.0 - 1.0 / s);
  const double rp = s * (1.0 + u), rm = s * (1.0 - u);
  return (-2.0 + std::pow(rp, n + 1) + std::pow(rm, n + 1)) / (2.0 * (s - 1));
}

inline double product_ground_fraction(int s, int n) {
  return Rational(count_Tn(s, n), kernel_dimension(s, n)).convert_to<double>();
}

struct ComponentInfo {
  SpinString canonical;
  std::size_t size = 0;
};

struct OracleResult {
  std::size_t component_count = 0;
  /// Sorted by canonical string.
  std::vector<ComponentInfo> components;
  /// Every component holds exactly one fixed point of canonicalize.
  bool unique_fixed_points = true;
  /// canonicalize is constant on every component.
  bool canonical_consistent = true;
};

/// Union-find over all (2s+1)^n strings joined by local moves.
inline OracleResult equivalence_oracle(int s, int n, std::size_t budget = 10'000'000) {
  check_spin(s);
  const int base = 2 * s + 1;
  const BigInt total_big = ipow(BigInt(base), static_cast<unsigned>(n));
  if (total_big > BigInt(budget))
    throw ConstructionError(Failure::StateSpaceTooLarge,
                            total_big.str() + " strings exceed the budget of " + std::to_string(budget));
  const std::size_t total = total_big.convert_to<std::size_t>();
  std::vector<std::size_t> pw(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) pw[i] = pw[i + 1] * base;  // symbol 0 is most significant
  auto digit = [&](std::size_t code, int i) { return static_cast<int>((code / pw[i]) % base) - s; };
  auto decode = [&](std::size_t code) {
    SpinString t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[i] = digit(code, i);
    return t;
  };

  UnionFind uf(total);
  for (std::size_t code = 0; code < total; ++code) {
    for (int k = 0; k + 1 < n; ++k) {
      const int a = digit(code, k), b = digit(code, k + 1);
      const std::size_t strip = code - static_cast<std::size_t>(a + s) * pw[k] -
                                static_cast<std::size_t>(b + s) * pw[k + 1];
      auto at = [&](int x, int y) {
        return strip + static_cast<std::size_t>(x + s) * pw[k] + static_cast<std::size_t>(y + s) * pw[k + 1];
      };
      if (a == 0 && b != 0) uf.unite(code, at(b, 0));
      if (a == 0 && b == 0)
        for (int m = 1; m <= s; ++m) uf.unite(code, at(m, -m));
    }
  }

  OracleResult out;
  out.component_count = uf.components();
  std::map<std::size_t, std::size_t> fixed_count;
  std::map<std::size_t, SpinString> canon_of_root;
  for (std::size_t code = 0; code < total; ++code) {
    const std::size_t root = uf.find(code);
    const SpinString t = decode(code);
    const SpinString c = canonicalize(t).full();
    auto [it, inserted] = canon_of_root.emplace(root, c);
    if (!inserted && it->second != c) out.canonical_consistent = false;
    if (c == t) ++fixed_count[root];
  }
  for (const auto& [root, canon] : canon_of_root) {
    if (fixed_count[root] != 1) out.unique_fixed_points = false;
    out.components.push_back({canon, uf.component_size(root)});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const ComponentInfo& a, const ComponentInfo& b) { return a.canonical < b.canonical; });
  return out;
}

/// Kernel dimension of the explicit projector sum on (2s+1)^n states
/// (with the J term when include_j is set). Small systems only.
inline std::size_t dense_kernel_dimension(int s, int n, bool include_j = false, double tol = 1e-9) {
  check_spin(s);
  const int base = 2 * s + 1;
  const BigInt total_big = ipow(BigInt(base), static_cast<unsigned>(n));
  if (total_big > BigInt(3000))
    throw ConstructionError(Failure::StateSpaceTooLarge, "dense check limited to 3000 states");
  const auto total = total_big.convert_to<Eigen::Index>();
  std::vector<Eigen::Index> pw(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) pw[i] = pw[i + 1] * base;
  auto digit = [&](Eigen::Index code, int i) { return static_cast<int>((code / pw[i]) % base) - s; };

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(total, total);
  // (|u> - |v>)(<u| - <v|) / 2 for every projector vector (|u> - |v>)/sqrt 2.
  auto add_edge = [&](Eigen::Index u, Eigen::Index v) {
    h(u, u) += 0.5;
    h(v, v) += 0.5;
    h(u, v) -= 0.5;
    h(v, u) -= 0.5;
  };
  for (Eigen::Index code = 0; code < total; ++code) {
    for (int k = 0; k + 1 < n; ++k) {
      const int a = digit(code, k), b = digit(code, k + 1);
      const Eigen::Index strip = code - (a + s) * pw[k] - (b + s) * pw[k + 1];
      auto at = [&](int x, int y) { return strip + (x + s) * pw[k] + (y + s) * pw[k + 1]; };
      if (a == 0 && b != 0) add_edge(code, at(b, 0));
      if (a == 0 && b == 0)
        for (int m = 1; m <= s; ++m) add_edge(code, at(m, -m));
    }
    if (include_j)
      for (int k = 0; k < n; ++k)
        if (digit(code, k) == 0) h(code, code) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < tol) ++count;
  return count;
}

/// Ent_2(2 tau) + Ent_{2s+1}(2 tau) log2(2s+1).
inline double gv_lhs(int s, double tau) {
  const int q = 2 * s + 1;
  return q_ary_entropy(2, 2 * tau) + q_ary_entropy(q, 2 * tau) * std::log2(static_cast<double>(q));
}

/// 1/2 - tau/0.11 - log2(2s+1) Ent_{2s+1}(2 tau); feasible when >= 0.
inline double justesen_slack(int s, double tau) {
  const int q = 2 * s + 1;
  return 0.5 - tau / 0.11 - std::log2(static_cast<double>(q)) * q_ary_entropy(q, 2 * tau);
}

namespace detail {

/// Last point of [lo, hi] where ok() holds, assuming ok is true then false.
template <class Ok>
double bisect_threshold(double lo, double hi, Ok ok, double tol = 1e-12) {
  if (!ok(lo)) return 0.0;
  if (ok(hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace detail

/// First crossing of the GV inequality, searched over [0, 1/4].
inline double gv_threshold(int s) {
  check_spin(s);
  return detail::bisect_threshold(0.0, 0.25, [s](double t) { return gv_lhs(s, t) <= 1.0; });
}

/// First crossing of the Justesen inequality, searched over [0, 0.055].
inline double justesen_threshold(int s) {
  check_spin(s);
  return detail::bisect_threshold(0.0, 0.055, [s](double t) { return justesen_slack(s, t) >= 0.0; });
}

/// tau < 2s/(2s+1), reported next to the Justesen threshold.
inline bool justesen_side_condition(int s, double tau) { return tau < 2.0 * s / (2.0 * s + 1.0); }

struct EmbedResult {
  ClassicalCode spin_code;
  QuantumCode code;
  KLReport report;
  bool all_in_Tn = true;
  bool all_ground_states = true;
};

/// Maps a binary code into the spin alphabet, builds a logical qubit there
/// and checks that every support string is a product ground state.
inline EmbedResult embed_and_check(const ClassicalCode& binary, int s, int d_x, int d_z,
                                   const ConstructOptions& copt = {}, const KLOptions& kopt = {}) {
  ClassicalCode spin = map_beta(binary, s);
  const bool in_tn = filter_forbidden(spin).size() == spin.size();
  QuantumCode code = build_logical_qubit(spin, d_x, d_z, copt);
  KLReport rep = kl_verify(code, d_x, d_z, kopt);
  bool ground = true;
  for (const auto& st : code.states)
    for (const auto& t : st.support) {
      const auto c = canonicalize(t.codeword);
      if (c.zeros != 0 || c.irreducible != t.codeword) ground = false;
    }
  return {std::move(spin), std::move(code), std::move(rep), in_tn, ground};
}

}  // namespace qeccforge

#endif  // QECCFORGE_GROUNDSPACE_HPP
