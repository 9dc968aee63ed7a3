#ifndef QECCFORGE_AMATRIX_HPP
#define QECCFORGE_AMATRIX_HPP

#include "qeccforge/classical.hpp"
#include "qeccforge/linalg.hpp"
#include "qeccforge/parallel.hpp"
#include "qeccforge/pauli.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace qeccforge {

struct RowLabel {
  enum class Kind { AllOnes, Re, Im };
  Kind kind = Kind::AllOnes;
  DiagonalPauli z;

  std::string describe() const {
    if (kind == Kind::AllOnes) return "ones";
    std::string s = kind == Kind::Re ? "re:" : "im:";
    for (int v : z.z) s += std::to_string(v);
    return s;
  }
};

struct PruneEvent {
  enum class Reason { ZeroRow, DuplicateRow };
  RowLabel label;
  Reason reason;
  /// Label of the row this one duplicates (DuplicateRow only).
  std::optional<RowLabel> kept;
};

/// Exact key for cos(2 pi j / 4q): the representative of +-j mod 4q in [0, 2q].
/// Two entries are equal iff their keys are equal; the entry is zero iff key == q.
inline int entry_key(long long j, int q) {
  const int m = 4 * q;
  const int r = mod_floor(j, m);
  return std::min(r, m - r);
}

inline int re_key(int k, int q) { return entry_key(4LL * k, q); }
inline int im_key(int k, int q) { return entry_key(static_cast<long long>(q) - 4LL * k, q); }

inline double key_value(int key, int q) {
  const int m = 4 * q;
  if (key == 0) return 1.0;
  if (2 * key == m) return -1.0;
  if (key == q) return 0.0;
  return std::cos(2.0 * std::numbers::pi * key / m);
}

struct AMatrixOptions {
  bool prune_zero_rows = true;
  bool prune_duplicate_rows = true;
  unsigned threads = 0;
};

/// The real constraint matrix: an all-ones row followed by Re/Im rows of
/// <c|Z^z|c> over every diagonal z with 1 <= wt(z) <= d_Z - 1.
struct AMatrix {
  int q = 2;
  int d_z = 1;
  std::vector<RowLabel> rows;
  std::vector<std::size_t> cols;
  std::vector<Codeword> col_words;
  DenseMatrix<double> entries;
  DenseMatrix<int> keys;
  std::size_t rows_before_pruning = 0;
  std::size_t rows_after_zero_pruning = 0;
  std::vector<PruneEvent> prune_log;

  bool exact() const noexcept { return q == 1 || q == 2 || q == 4; }
  std::size_t num_rows() const noexcept { return rows.size(); }
  std::size_t num_cols() const noexcept { return cols.size(); }

  /// Same rows restricted to the given column positions, in the order given.
  AMatrix select_columns(const std::vector<std::size_t>& pos) const {
    AMatrix out;
    out.q = q;
    out.d_z = d_z;
    out.rows = rows;
    out.rows_before_pruning = rows_before_pruning;
    out.rows_after_zero_pruning = rows_after_zero_pruning;
    out.prune_log = prune_log;
    out.entries = DenseMatrix<double>(rows.size(), pos.size());
    out.keys = DenseMatrix<int>(rows.size(), pos.size());
    for (std::size_t j = 0; j < pos.size(); ++j) {
      out.cols.push_back(cols.at(pos[j]));
      out.col_words.push_back(col_words.at(pos[j]));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out.entries(r, j) = entries(r, pos[j]);
        out.keys(r, j) = keys(r, pos[j]);
      }
    }
    return out;
  }

  /// Entries as exact rationals; only defined when exact().
  DenseMatrix<Rational> rational_entries() const {
    if (!exact()) throw InputError("rational entries need q in {1, 2, 4}");
    DenseMatrix<Rational> m(num_rows(), num_cols());
    for (std::size_t r = 0; r < num_rows(); ++r)
      for (std::size_t c = 0; c < num_cols(); ++c) {
        const int k = keys(r, c);
        m(r, c) = k == 0 ? Rational(1) : (k == q ? Rational(0) : Rational(-1));
      }
    return m;
  }
};

inline AMatrix build_a_matrix(const ClassicalCode& code, int d_z, const AMatrixOptions& opt = {}) {
  if (d_z < 1) throw InputError("build_a_matrix: d_Z must be at least 1");
  if (code.empty()) throw InputError("build_a_matrix: empty code");
  const int q = code.alphabet().modulus();
  const int n = static_cast<int>(code.length());
  const std::size_t m = code.size();
  const auto diag = enumerate_diagonal(q, n, std::min(d_z - 1, n));

  std::vector<RowLabel> all_rows;
  all_rows.push_back({RowLabel::Kind::AllOnes, DiagonalPauli{std::vector<int>(n, 0)}});
  for (const auto& z : diag) {
    all_rows.push_back({RowLabel::Kind::Re, z});
    all_rows.push_back({RowLabel::Kind::Im, z});
  }

  std::vector<std::vector<int>> res(m);
  for (std::size_t c = 0; c < m; ++c) res[c] = residues(code[c], q);

  DenseMatrix<int> all_keys(all_rows.size(), m);
  parallel_for(diag.size(), opt.threads, [&](std::size_t i) {
    const auto& z = diag[i].z;
    for (std::size_t c = 0; c < m; ++c) {
      long long k = 0;
      for (int s = 0; s < n; ++s) k += static_cast<long long>(z[s]) * res[c][s];
      const int kk = mod_floor(k, q);
      all_keys(1 + 2 * i, c) = re_key(kk, q);
      all_keys(2 + 2 * i, c) = im_key(kk, q);
    }
  });
  for (std::size_t c = 0; c < m; ++c) all_keys(0, c) = 0;

  AMatrix a;
  a.q = q;
  a.d_z = d_z;
  a.rows_before_pruning = all_rows.size();
  for (std::size_t c = 0; c < m; ++c) {
    a.cols.push_back(c);
    a.col_words.push_back(code[c]);
  }

  std::vector<std::size_t> keep;
  std::map<std::vector<int>, std::size_t> seen;
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < all_rows.size(); ++r) {
    std::vector<int> row = all_keys.row(r);
    const bool zero = std::all_of(row.begin(), row.end(), [q](int k) { return k == q; });
    if (zero && opt.prune_zero_rows && r != 0) {
      a.prune_log.push_back({all_rows[r], PruneEvent::Reason::ZeroRow, std::nullopt});
      continue;
    }
    ++nonzero;
    if (opt.prune_duplicate_rows) {
      auto [it, inserted] = seen.emplace(row, r);
      if (!inserted) {
        a.prune_log.push_back({all_rows[r], PruneEvent::Reason::DuplicateRow, all_rows[it->second]});
        continue;
      }
    }
    keep.push_back(r);
  }
  a.rows_after_zero_pruning = nonzero;

  a.entries = DenseMatrix<double>(keep.size(), m);
  a.keys = DenseMatrix<int>(keep.size(), m);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    a.rows.push_back(all_rows[keep[i]]);
    for (std::size_t c = 0; c < m; ++c) {
      a.keys(i, c) = all_keys(keep[i], c);
      a.entries(i, c) = key_value(a.keys(i, c), q);
    }
  }
  return a;
}

enum class KernelBackend { Auto, Exact, Float };

inline const char* to_string(KernelBackend b) {
  switch (b) {
    case KernelBackend::Auto: return "auto";
    case KernelBackend::Exact: return "exact";
    case KernelBackend::Float: return "float";
  }
  return "?";
}

struct KernelBasis {
  std::vector<std::vector<double>> vectors;
  /// Exact basis, filled on the exact backend only.
  std::vector<std::vector<Rational>> exact_vectors;
  KernelBackend backend = KernelBackend::Float;
  double tolerance = 0.0;

  std::size_t dimension() const noexcept { return vectors.size(); }
};

struct KernelOptions {
  KernelBackend backend = KernelBackend::Auto;
  double rel_tol = 1e-9;
};

inline KernelBasis kernel(const AMatrix& a, const KernelOptions& opt = {}) {
  KernelBackend be = opt.backend;
  if (be == KernelBackend::Auto) be = a.exact() ? KernelBackend::Exact : KernelBackend::Float;
  if (be == KernelBackend::Exact && !a.exact())
    throw InputError("exact kernel backend needs q in {1, 2, 4}, got q = " + std::to_string(a.q));
  KernelBasis out;
  out.backend = be;
  if (be == KernelBackend::Exact) {
    out.exact_vectors = nullspace_from_rref(rref_exact(a.rational_entries()));
    for (const auto& v : out.exact_vectors) {
      std::vector<double> d(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
      out.vectors.push_back(std::move(d));
    }
    return out;
  }
  out.tolerance = opt.rel_tol;
  out.vectors = svd_nullspace(to_eigen(a.entries), opt.rel_tol).basis;
  return out;
}

/// 1 - 2 Ent_q(d_Z / n): the asymptotic log_q ratio of columns to block size.
inline double rate_bound(int q, int n, int d_z) {
  if (n <= 0) throw InputError("rate_bound: n must be positive");
  const double ratio = static_cast<double>(d_z) / n;
  const double top = static_cast<double>(q - 1) / q;
  if (ratio < 0.0 || ratio > top + 1e-15)
    throw InputError("rate_bound: d_Z/n must lie in [0, (q-1)/q]");
  return 1.0 - 2.0 * q_ary_entropy(q, std::min(ratio, top));
}

}  // namespace qeccforge

#endif  // QECCFORGE_AMATRIX_HPP
