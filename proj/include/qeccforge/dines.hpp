#ifndef QECCFORGE_DINES_HPP
#define QECCFORGE_DINES_HPP

#include "qeccforge/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qeccforge {

struct DinesOptions {
  std::size_t column_cap = 4096;
  /// Float path: a value is zero when |a| <= rel_zero * max|row|.
  double rel_zero = 1e-10;
};

template <class S>
struct DinesOutcome {
  std::optional<std::vector<S>> solution;
  /// Row whose entries were all nonzero with one sign, when infeasible.
  std::optional<std::size_t> same_sign_row;
  std::size_t peak_columns = 0;
  std::string method = "dines";
};

namespace detail {

inline double abs_value(double v) { return std::abs(v); }
inline Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

template <class S>
struct Ray {
  std::vector<S> x;
  boost::dynamic_bitset<> support;
};

template <class S>
void normalize(std::vector<S>& x) {
  if constexpr (std::is_same_v<S, double>) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    if (m > 0.0)
      for (double& v : x) v /= m;
  } else {
    for (const S& v : x)
      if (v != 0) {
        const S lead = v;
        for (S& w : x) w /= lead;
        break;
      }
  }
}

template <class S>
S dot_row(const DenseMatrix<S>& m, std::size_t r, const std::vector<S>& x) {
  S acc = 0;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (x[c] != 0) acc += m(r, c) * x[c];
  return acc;
}

}  // namespace detail

/// Nonnegative nonzero solution of M x = 0 by Dines elimination.
///
/// Columns are eliminated row by row: columns with a zero entry pass through,
/// and every positive/negative pair (i, j) combines into
/// (-a_1j) e_i + a_1i e_j, whose entries on the remaining rows are
/// a_1i a_rj - a_1j a_ri. Each combined column is tracked in original
/// coordinates, so no back-substitution is needed. Pairs whose joint support
/// contains the support of a third column are skipped, which keeps only the
/// extreme columns and leaves the generated cone unchanged.
///
/// Throws ConstructionError(ColumnBlowup) when the column count passes the cap.
template <class S>
DinesOutcome<S> dines_solve(const DenseMatrix<S>& m, const DinesOptions& opt = {}) {
  using detail::abs_value;
  DinesOutcome<S> out;
  const std::size_t n = m.cols();
  if (n == 0) return out;

  for (std::size_t r = 0; r < m.rows(); ++r) {
    S mx = 0;
    for (std::size_t c = 0; c < n; ++c) mx = std::max(mx, S(abs_value(m(r, c))));
    if (mx == 0) continue;
    const S thr = std::is_same_v<S, double> ? S(mx * opt.rel_zero) : S(0);
    bool all_pos = true, all_neg = true;
    for (std::size_t c = 0; c < n; ++c) {
      const S v = m(r, c);
      if (!(v > thr)) all_pos = false;
      if (!(v < -thr)) all_neg = false;
    }
    if (all_pos || all_neg) {
      out.same_sign_row = r;
      return out;
    }
  }

  std::vector<detail::Ray<S>> rays;
  for (std::size_t c = 0; c < n; ++c) {
    detail::Ray<S> ray{std::vector<S>(n, S(0)), boost::dynamic_bitset<>(n)};
    ray.x[c] = 1;
    ray.support.set(c);
    rays.push_back(std::move(ray));
  }
  out.peak_columns = rays.size();

  std::size_t processed = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<S> val(rays.size());
    S mx = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = detail::dot_row(m, r, rays[i].x);
      mx = std::max(mx, S(abs_value(val[i])));
    }
    if (mx == 0) {
      ++processed;
      continue;
    }
    const S thr = std::is_same_v<S, double> ? S(mx * opt.rel_zero) : S(0);
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > thr) pos.push_back(i);
      else if (val[i] < -thr) neg.push_back(i);
      else zero.push_back(i);
    }
    if (zero.empty() && (pos.empty() || neg.empty())) {
      out.same_sign_row = r;
      return out;
    }

    std::vector<detail::Ray<S>> next;
    next.reserve(zero.size());
    for (auto i : zero) next.push_back(rays[i]);
    for (auto i : pos) {
      for (auto j : neg) {
        boost::dynamic_bitset<> uni = rays[i].support | rays[j].support;
        if (uni.count() > processed + 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          if (rays[k].support.is_subset_of(uni)) adjacent = false;
        }
        if (!adjacent) continue;
        const S ci = -val[j];
        const S cj = val[i];
        detail::Ray<S> ray{std::vector<S>(n, S(0)), boost::dynamic_bitset<>(n)};
        for (std::size_t c = 0; c < n; ++c) ray.x[c] = ci * rays[i].x[c] + cj * rays[j].x[c];
        detail::normalize(ray.x);
        for (std::size_t c = 0; c < n; ++c) {
          if constexpr (std::is_same_v<S, double>)
            if (std::abs(ray.x[c]) < 1e-13) ray.x[c] = 0.0;
          if (ray.x[c] != 0) ray.support.set(c);
        }
        next.push_back(std::move(ray));
        if (next.size() > opt.column_cap)
          throw ConstructionError(Failure::ColumnBlowup,
                                  "more than " + std::to_string(opt.column_cap) +
                                      " columns during elimination");
      }
    }
    rays = std::move(next);
    out.peak_columns = std::max(out.peak_columns, rays.size());
    ++processed;
    if (rays.empty()) {
      out.same_sign_row = r;
      return out;
    }
  }
  out.solution = rays.front().x;
  return out;
}

/// Exact phase-1 simplex (Bland's rule) for M z = 0, sum z = 1, z >= 0.
inline std::optional<std::vector<Rational>> phase_one_feasible(const DenseMatrix<Rational>& m) {
  const std::size_t rows = m.rows() + 1;
  const std::size_t n = m.cols();
  if (n == 0) return std::nullopt;
  // Tableau columns: n structural, rows artificial, then rhs.
  const std::size_t width = n + rows + 1;
  DenseMatrix<Rational> t(rows + 1, width);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) t(r, c) = m(r, c);
  }
  for (std::size_t c = 0; c < n; ++c) t(rows - 1, c) = 1;
  t(rows - 1, width - 1) = 1;
  for (std::size_t r = 0; r < rows; ++r) t(r, n + r) = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = n + r;
  // Objective row: minimize the sum of artificials, kept as reduced costs.
  const std::size_t obj = rows;
  for (std::size_t c = 0; c < width; ++c) {
    if (c >= n && c < n + rows) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += t(r, c);
    t(obj, c) = -s;
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c)
      if (t(obj, c) < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t(r, enter) <= 0) continue;
      Rational ratio = t(r, width - 1) / t(r, enter);
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen for phase 1
    const Rational piv = t(leave, enter);
    for (std::size_t c = 0; c < width; ++c) t(leave, c) /= piv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t(r, enter) == 0) continue;
      const Rational f = t(r, enter);
      for (std::size_t c = 0; c < width; ++c) t(r, c) -= f * t(leave, c);
    }
    basis[leave] = enter;
  }
  if (t(obj, width - 1) != 0) return std::nullopt;
  std::vector<Rational> z(n, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < n) z[basis[r]] = t(r, width - 1);
  return z;
}

inline DenseMatrix<Rational> to_rational(const DenseMatrix<double>& m) {
  DenseMatrix<Rational> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

/// Dines elimination with the exact oracle as fallback on column blowup.
template <class S>
DinesOutcome<S> dines_feasible(const DenseMatrix<S>& m, const DinesOptions& opt = {}) {
  try {
    return dines_solve(m, opt);
  } catch (const ConstructionError& e) {
    if (e.kind() != Failure::ColumnBlowup) throw;
  }
  DinesOutcome<S> out;
  out.method = "phase-one";
  std::optional<std::vector<Rational>> z;
  if constexpr (std::is_same_v<S, double>) {
    z = phase_one_feasible(to_rational(m));
  } else {
    z = phase_one_feasible(m);
  }
  if (z) {
    std::vector<S> x(z->size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if constexpr (std::is_same_v<S, double>) x[i] = to_double((*z)[i]);
      else x[i] = (*z)[i];
    }
    out.solution = std::move(x);
  }
  return out;
}

}  // namespace qeccforge

#endif  // QECCFORGE_DINES_HPP
