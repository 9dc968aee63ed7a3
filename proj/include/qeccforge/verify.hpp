#ifndef QECCFORGE_VERIFY_HPP
#define QECCFORGE_VERIFY_HPP

#include "qeccforge/parallel.hpp"
#include "qeccforge/pauli.hpp"
#include "qeccforge/quantum_code.hpp"

#include <atomic>
#include <complex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qeccforge {

enum class WeightMode {
  /// wt_x(P) <= d_X - 1 and wt_z(P) <= d_Z - 1.
  Separate,
  /// Number of non-identity sites <= d_X - 1 (d_Z is ignored).
  Total,
};

struct KLOptions {
  double tol = 1e-8;
  bool fail_fast = false;
  WeightMode mode = WeightMode::Separate;
  unsigned threads = 0;
  /// Keep every c_P with |c_P| above tol; turn off for large scans.
  bool record_c_values = true;
};

struct KLReport {
  bool passed = true;
  int d_x_checked = 1;
  int d_z_checked = 1;
  /// Nonzero c_P values in enumeration order.
  std::vector<std::pair<PauliLabel, std::complex<double>>> c_values;
  std::optional<PauliLabel> worst_label;
  double worst_violation = 0.0;
  std::size_t paulis_checked = 0;
};

namespace detail {

struct KetTerm {
  std::vector<int> res;
  double amp;
};

struct StateIndex {
  std::vector<KetTerm> terms;
  std::unordered_map<std::vector<int>, double, ResidueHash> amp;
};

inline std::vector<std::vector<int>> collect(int q, int n, int w_max) {
  std::vector<std::vector<int>> out;
  WeightedVectorStream s(q, n, 0, w_max);
  while (auto v = s.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace detail

/// Brute-force Knill-Laflamme check: <i|P|j> = 0 for i != j and
/// <i|P|i> = <0|P|0> for every P in the weight window. Reads only the states.
inline KLReport kl_verify(const QuantumCode& code, int d_x, int d_z, const KLOptions& opt = {}) {
  KLReport rep;
  rep.d_x_checked = d_x;
  rep.d_z_checked = d_z;
  const int q = code.q();
  const int n = code.n;
  const std::size_t M = code.states.size();
  if (M == 0 || d_x < 1 || d_z < 1) return rep;

  std::vector<detail::StateIndex> idx(M);
  for (std::size_t i = 0; i < M; ++i) {
    for (const auto& t : code.states[i].support) {
      auto r = residues(t.codeword, q);
      idx[i].amp[r] += t.amp;
      idx[i].terms.push_back({std::move(r), t.amp});
    }
  }

  const int wx = std::min(d_x - 1, n);
  const int wz = opt.mode == WeightMode::Total ? wx : std::min(d_z - 1, n);
  const auto xs = detail::collect(q, n, wx);
  const auto zs = detail::collect(q, n, wz);

  struct Local {
    std::vector<std::pair<PauliLabel, std::complex<double>>> cvals;
    double worst = 0.0;
    std::optional<PauliLabel> worst_label;
    std::size_t checked = 0;
  };
  unsigned threads = opt.threads == 0 ? default_threads() : opt.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(xs.size())));
  std::vector<Local> locals(threads);
  std::atomic<bool> stop{false};

  parallel_chunks(xs.size(), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    Local& loc = locals[w];
    std::vector<int> shifted(static_cast<std::size_t>(n));
    // matched[i][j]: (phase vector residue, product of amplitudes) for <i| X^a |j>.
    std::vector<std::vector<std::vector<std::pair<const std::vector<int>*, double>>>> matched(
        M, std::vector<std::vector<std::pair<const std::vector<int>*, double>>>(M));
    for (std::size_t ai = b; ai < e && !stop.load(std::memory_order_relaxed); ++ai) {
      const auto& a = xs[ai];
      bool any = false;
      for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t i = 0; i < M; ++i) matched[i][j].clear();
        for (const auto& t : idx[j].terms) {
          for (int s = 0; s < n; ++s) shifted[s] = mod_floor(t.res[s] - a[s], q);
          for (std::size_t i = 0; i < M; ++i) {
            auto it = idx[i].amp.find(shifted);
            if (it == idx[i].amp.end()) continue;
            matched[i][j].push_back({&t.res, it->second * t.amp});
            any = true;
          }
        }
      }
      for (const auto& z : zs) {
        if (opt.mode == WeightMode::Total) {
          int tw = 0;
          for (int s = 0; s < n; ++s) tw += (a[s] != 0 || z[s] != 0);
          if (tw > wx) continue;
        }
        ++loc.checked;
        PauliLabel label{q, a, z};
        if (!any) continue;
        auto value = [&](std::size_t i, std::size_t j) {
          std::complex<double> acc = 0.0;
          for (const auto& [res, w] : matched[i][j]) {
            long long k = 0;
            for (int s = 0; s < n; ++s) k += static_cast<long long>(z[s]) * (*res)[s];
            acc += w * Phase{mod_floor(k, q), q}.value();
          }
          return acc;
        };
        const std::complex<double> c0 = value(0, 0);
        double worst = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
          for (std::size_t j = i; j < M; ++j) {
            if (matched[i][j].empty() && (i != j || std::abs(c0) == 0.0)) continue;
            const std::complex<double> v = value(i, j);
            const double viol = i == j ? std::abs(v - c0) : std::abs(v);
            worst = std::max(worst, viol);
          }
        }
        if (opt.record_c_values && std::abs(c0) > opt.tol) loc.cvals.push_back({label, c0});
        if (worst > loc.worst) {
          loc.worst = worst;
          loc.worst_label = label;
        }
        if (opt.fail_fast && worst > opt.tol) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
  });

  for (auto& loc : locals) {
    rep.paulis_checked += loc.checked;
    for (auto& cv : loc.cvals) rep.c_values.push_back(std::move(cv));
    if (loc.worst > rep.worst_violation) {
      rep.worst_violation = loc.worst;
      rep.worst_label = loc.worst_label;
    }
  }
  rep.passed = rep.worst_violation <= opt.tol;
  return rep;
}

struct DistanceCertificate {
  int d_x = 1;
  int d_z = 1;
  int overall() const noexcept { return std::min(d_x, d_z); }
};

/// Largest passing d_X (with d_Z = 1) and largest passing d_Z (with d_X = 1), capped at n + 1.
inline DistanceCertificate certify_distance(const QuantumCode& code, KLOptions opt = {}) {
  opt.fail_fast = true;
  opt.record_c_values = false;
  DistanceCertificate out;
  const int cap = code.n + 1;
  while (out.d_x < cap && kl_verify(code, out.d_x + 1, 1, opt).passed) ++out.d_x;
  while (out.d_z < cap && kl_verify(code, 1, out.d_z + 1, opt).passed) ++out.d_z;
  return out;
}

}  // namespace qeccforge

#endif  // QECCFORGE_VERIFY_HPP
