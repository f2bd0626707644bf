#pragma once

// Rational linear systems and the integral-multiplier query used for
// Cartier indices.

#include "gavkit/exactla/normal_form.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gavkit {

/// Reduced row echelon form over Q together with the pivot columns.
struct RowEchelon {
  RatMat R;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot in each column is the first non-zero
/// entry at or below the current row, so the result is deterministic.
inline RowEchelon rref(RatMat R) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t j = 0; j < R.cols() && row < R.rows(); ++j) {
    std::size_t p = row;
    while (p < R.rows() && R(p, j).is_zero()) ++p;
    if (p == R.rows()) continue;
    R.swap_rows(row, p);
    Rat inv = Rat(1) / R(row, j);
    for (std::size_t k = j; k < R.cols(); ++k) R(row, k) *= inv;
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == row || R(i, j).is_zero()) continue;
      Rat f = -R(i, j);
      for (std::size_t k = j; k < R.cols(); ++k) R(i, k) += f * R(row, k);
    }
    pivots.push_back(j);
    ++row;
  }
  return {std::move(R), std::move(pivots)};
}

inline Rat determinant(RatMat M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: non-square matrix");
  Rat det = 1;
  for (std::size_t col = 0; col < M.cols(); ++col) {
    std::size_t p = col;
    while (p < M.rows() && M(p, col).is_zero()) ++p;
    if (p == M.rows()) return 0;
    if (p != col) {
      M.swap_rows(p, col);
      det = -det;
    }
    det *= M(col, col);
    for (std::size_t row = col + 1; row < M.rows(); ++row)
      if (!M(row, col).is_zero()) M.add_row(row, col, Rat(-M(row, col) / M(col, col)));
  }
  return det;
}

inline std::size_t rank(const RatMat& M) { return rref(M).pivots.size(); }

/// Basis of the rational null space {x : M x = 0}, one vector per free column,
/// each scaled to a primitive integer vector.
inline std::vector<IntVec> nullspace(const RatMat& M) {
  RowEchelon e = rref(M);
  const std::size_t n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(n);
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.R(r, f);
    basis.push_back(primitive(x));
  }
  return basis;
}

namespace detail {

using Wide = __int128;

inline Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

inline Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Integer echelon data of a small matrix: rows reduced Gauss-Jordan style
// without division, pivot columns as in rref.
struct WideEchelon {
  std::vector<std::vector<Wide>> R;
  std::vector<std::size_t> pivots;
};

// Fraction-free elimination in 128-bit arithmetic. Gives up (nothing) when an
// entry leaves the range where the next cross product is still exact.
inline std::optional<WideEchelon> wide_echelon(const IntMat& M) {
  const Wide limit = Wide(1) << 60;
  const BigInt entry_limit = BigInt(1) << 60;
  WideEchelon e;
  e.R.assign(M.rows(), std::vector<Wide>(M.cols(), 0));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const BigInt& x = M(i, j);
      if (x >= entry_limit || -x >= entry_limit) return std::nullopt;
      e.R[i][j] = static_cast<Wide>(static_cast<long long>(x));
    }
  auto reduce = [&](std::vector<Wide>& row) {
    Wide g = 0;
    for (auto x : row) g = wide_gcd(g, x);
    if (g > 1)
      for (auto& x : row) x /= g;
    for (auto x : row)
      if (wide_abs(x) >= limit) return false;
    return true;
  };
  auto& R = e.R;
  std::size_t row = 0;
  for (std::size_t j = 0; j < M.cols() && row < M.rows(); ++j) {
    std::size_t p = row;
    while (p < M.rows() && R[p][j] == 0) ++p;
    if (p == M.rows()) continue;
    std::swap(R[row], R[p]);
    if (R[row][j] < 0)
      for (auto& x : R[row]) x = -x;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == row || R[i][j] == 0) continue;
      const Wide a = R[row][j], b = R[i][j];
      for (std::size_t k = 0; k < M.cols(); ++k) R[i][k] = R[i][k] * a - b * R[row][k];
      if (!reduce(R[i])) return std::nullopt;
    }
    e.pivots.push_back(j);
    ++row;
  }
  return e;
}

// nullspace of an integer matrix through wide_echelon.
inline std::optional<std::vector<IntVec>> wide_nullspace(const IntMat& M) {
  auto e = wide_echelon(M);
  if (!e) return std::nullopt;
  const Wide limit = Wide(1) << 60;
  const std::size_t n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e->pivots) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    // x_f = L and x_{p_r} = -R[r][f] L / R[r][p_r], L the lcm of the pivots involved
    Wide L = 1;
    for (std::size_t r = 0; r < e->pivots.size(); ++r) {
      const Wide a = e->R[r][e->pivots[r]], b = e->R[r][f];
      if (b == 0) continue;
      const Wide g = wide_gcd(b, a);
      L = L / wide_gcd(L, a / g) * (a / g);
      if (L >= limit) return std::nullopt;
    }
    std::vector<Wide> x(n, 0);
    x[f] = L;
    for (std::size_t r = 0; r < e->pivots.size(); ++r) {
      const Wide a = e->R[r][e->pivots[r]], b = e->R[r][f];
      if (b == 0) continue;
      const Wide g = wide_gcd(b, a);
      x[e->pivots[r]] = -(b / g) * (L / (a / g));
    }
    Wide c = 0;
    for (auto v : x) c = wide_gcd(c, v);
    for (auto& v : x) {
      v /= c;
      if (wide_abs(v) >= limit) return std::nullopt;
    }
    IntVec out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = BigInt(static_cast<long long>(x[k]));
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace detail

inline std::size_t rank(const IntMat& M) {
  if (auto e = detail::wide_echelon(M)) return e->pivots.size();
  return rank(to_rat(M));
}

inline std::size_t rank_of(const std::vector<IntVec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(IntMat::from_rows(vs, dim));
}

inline std::vector<IntVec> nullspace(const IntMat& M) {
  if (auto fast = detail::wide_nullspace(M)) return std::move(*fast);
  return nullspace(to_rat(M));
}

/// Lattice basis (HNF rows) of {x in Z^n : M x = 0}; the result is saturated.
/// Goes through the rational kernel: a Smith form of a tall M would carry
/// unreduced transforms whose entries grow without bound.
inline std::vector<IntVec> integer_kernel(const IntMat& M) {
  const std::size_t n = M.cols();
  if (M.rows() == 0) return saturate(IntMat::identity(n).row_list(), n);
  return saturate(nullspace(M), n);
}

/// One solution of M x = b, or nothing if the system is inconsistent. Free
/// variables are set to zero.
inline std::optional<RatVec> solve_rational(const RatMat& M, const RatVec& b) {
  if (b.size() != M.rows()) throw std::invalid_argument("solve_rational: shape mismatch");
  RatMat aug(M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
    aug(i, M.cols()) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == M.cols()) return std::nullopt;
  RatVec x(M.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.R(r, M.cols());
  return x;
}

/// Least m >= 1 such that M w = m b has an integral solution w, or nothing if
/// M x = b has no rational solution. Read off the Smith form: with
/// U M V = diag(d_i), the condition is d_i | m (U b)_i for i < rank and
/// (U b)_i = 0 beyond the rank.
inline std::optional<BigInt> min_integral_multiplier(const IntMat& M, const RatVec& b) {
  if (b.size() != M.rows()) throw std::invalid_argument("min_integral_multiplier: shape mismatch");
  SmithForm sf = snf(M);
  RatVec ub(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Rat s;
    for (std::size_t k = 0; k < M.rows(); ++k)
      if (sf.U(i, k) != 0) s += Rat(sf.U(i, k)) * b[k];
    ub[i] = s;
  }
  BigInt m = 1;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i < sf.rank) {
      Rat q = ub[i] / Rat(sf.S(i, i));
      m = lcm(m, q.den());
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  return m;
}

}  // namespace gavkit
