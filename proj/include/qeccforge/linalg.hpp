#ifndef QECCFORGE_LINALG_HPP
#define QECCFORGE_LINALG_HPP

#include "qeccforge/common.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qeccforge {

/// Small row-major dense matrix over an arbitrary field-like scalar.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
std::vector<T> multiply(const DenseMatrix<T>& m, const std::vector<T>& v) {
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

template <class T>
struct RrefResult {
  DenseMatrix<T> reduced;
  std::vector<std::size_t> pivots;
};

/// Exact reduced row-echelon form; pivots are the first nonzero entries.
template <class T>
RrefResult<T> rref_exact(DenseMatrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == T(0)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == T(0)) continue;
      const T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Null-space basis from an RREF: one vector per free column, in ascending
/// free-column order, with 1 at its own free column and 0 at the others.
template <class T>
std::vector<std::vector<T>> nullspace_from_rref(const RrefResult<T>& r) {
  const std::size_t n = r.reduced.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(n, T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct SvdNullspace {
  std::vector<std::vector<double>> basis;
  double sigma_max = 0.0;
  std::size_t rank = 0;
};

/// Floating null space via SVD, returned in the same canonical form as
/// `nullspace_from_rref`.
///
/// Right singular vectors with sigma <= rel_tol * sigma_max span the null
/// space. The free columns are then picked greedily from the right (the
/// complement of the left-greedy pivot set of the matrix), and the basis is
/// re-expressed so each vector is the unit vector on its free column.
inline SvdNullspace svd_nullspace(const Eigen::MatrixXd& a, double rel_tol = 1e-9) {
  SvdNullspace out;
  const auto n = a.cols();
  if (n == 0) return out;
  Eigen::MatrixXd null_block;
  if (a.rows() == 0) {
    null_block = Eigen::MatrixXd::Identity(n, n);
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    out.sigma_max = s.size() > 0 ? s(0) : 0.0;
    const double thresh = rel_tol * std::max(out.sigma_max, 1e-300);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > thresh) ++rank;
    out.rank = static_cast<std::size_t>(rank);
    null_block = svd.matrixV().rightCols(n - rank);
  }
  const auto k = null_block.cols();
  if (k == 0) return out;

  // Greedy-from-right selection of k coordinates on which the null space
  // projects bijectively.
  std::vector<Eigen::Index> free_cols;
  Eigen::MatrixXd chosen(0, k);
  for (Eigen::Index j = n - 1; j >= 0 && static_cast<Eigen::Index>(free_cols.size()) < k; --j) {
    Eigen::VectorXd r = null_block.row(j).transpose();
    Eigen::VectorXd resid = r;
    if (chosen.rows() > 0) {
      Eigen::MatrixXd qt = chosen.transpose();  // k x m, columns orthonormal
      resid -= qt * (qt.transpose() * r);
    }
    if (resid.norm() > 1e-8) {
      resid.normalize();
      chosen.conservativeResize(chosen.rows() + 1, Eigen::NoChange);
      chosen.row(chosen.rows() - 1) = resid.transpose();
      free_cols.push_back(j);
    }
  }
  std::sort(free_cols.begin(), free_cols.end());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) sub.row(i) = null_block.row(free_cols[i]);
  Eigen::MatrixXd canon = null_block * sub.inverse();  // n x k
  for (Eigen::Index i = 0; i < k; ++i) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (Eigen::Index r = 0; r < n; ++r) v[r] = canon(r, i);
    for (Eigen::Index f : free_cols) v[f] = 0.0;
    v[free_cols[i]] = 1.0;
    for (auto& x : v)
      if (std::abs(x) < 1e-13) x = 0.0;
    out.basis.push_back(std::move(v));
  }
  return out;
}

inline Eigen::MatrixXd to_eigen(const DenseMatrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

}  // namespace qeccforge

#endif  // QECCFORGE_LINALG_HPP
