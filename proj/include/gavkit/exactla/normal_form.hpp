#pragma once

// Hermite and Smith normal forms over the integers, with unimodular
// transformation matrices, plus the lattice utilities built on them.

#include "gavkit/exactla/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace gavkit {

struct HermiteForm {
  IntMat H;  // row Hermite normal form
  IntMat U;  // unimodular, H = U * M
};

/// Row-style HNF: H = U*M is in row echelon form, pivots are positive and
/// entries above a pivot are reduced into [0, pivot). Zero rows come last.
inline HermiteForm hnf(const IntMat& M) {
  IntMat H = M;
  IntMat U = IntMat::identity(M.rows());
  std::size_t p = 0;
  for (std::size_t j = 0; j < H.cols() && p < H.rows(); ++j) {
    // Euclid on the column below p.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < H.rows(); ++i) {
        if (H(i, j) == 0) continue;
        if (!best || abs(H(i, j)) < abs(H(*best, j))) best = i;
      }
      if (!best) break;
      H.swap_rows(p, *best);
      U.swap_rows(p, *best);
      bool done = true;
      for (std::size_t i = p + 1; i < H.rows(); ++i) {
        if (H(i, j) == 0) continue;
        BigInt q = floor_div(H(i, j), H(p, j));
        H.add_row(i, p, BigInt(-q));
        U.add_row(i, p, BigInt(-q));
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(p, j) == 0) continue;
    if (H(p, j) < 0) {
      H.negate_row(p);
      U.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      BigInt q = floor_div(H(i, j), H(p, j));
      H.add_row(i, p, BigInt(-q));
      U.add_row(i, p, BigInt(-q));
    }
    ++p;
  }
  return {std::move(H), std::move(U)};
}

struct SmithForm {
  IntMat S;     // diagonal, d_0 | d_1 | ... , non-negative
  IntMat U;     // unimodular rows x rows
  IntMat V;     // unimodular cols x cols, S = U * M * V
  IntMat Vinv;  // inverse of V
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
  }
};

/// Smith normal form S = U*M*V with the divisibility chain on the diagonal.
inline SmithForm snf(const IntMat& M) {
  const std::size_t m = M.rows(), n = M.cols();
  IntMat S = M;
  IntMat U = IntMat::identity(m);
  IntMat V = IntMat::identity(n);
  IntMat Vi = IntMat::identity(n);

  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    S.add_col(dst, src, f);
    V.add_col(dst, src, f);
    Vi.add_row(src, dst, BigInt(-f));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    S.add_row(dst, src, f);
    U.add_row(dst, src, f);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest non-zero entry of the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (!piv || abs(S(i, j)) < abs(S(piv->first, piv->second)))) piv = {i, j};
    if (!piv) break;
    row_swap(t, piv->first);
    col_swap(t, piv->second);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        BigInt q = floor_div(S(i, t), S(t, t));
        row_add(i, t, BigInt(-q));
        if (S(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        BigInt q = floor_div(S(t, j), S(t, t));
        col_add(j, t, BigInt(-q));
        if (S(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            row_add(t, i, BigInt(1));
            clean = false;
            break;
          }
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    ++t;
  }
  SmithForm out{std::move(S), std::move(U), std::move(V), std::move(Vi), t};
  return out;
}

/// Determinant of a square integer matrix (via fraction-free elimination).
inline BigInt determinant(const IntMat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMat A = M;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && A(r, k) == 0) ++r;
      if (r == n) return 0;
      A.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// Basis (as HNF rows) of the saturated lattice span(vectors) ∩ Z^n.
inline std::vector<IntVec> saturate(const std::vector<IntVec>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  IntMat M = IntMat::from_rows(vectors);
  if (M.cols() != n) throw std::invalid_argument("saturate: dimension mismatch");
  SmithForm sf = snf(M);
  if (sf.rank == 0) return {};
  IntMat B(sf.rank, n);
  for (std::size_t i = 0; i < sf.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = sf.Vinv(i, j);
  IntMat H = hnf(B).H;
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    IntVec r = H.row(i);
    if (!is_zero(r)) out.push_back(std::move(r));
  }
  return out;
}

/// Scales every row of a rational matrix to a primitive integer row (zero rows stay zero).
inline IntMat clear_denominators(const RatMat& M) {
  IntMat out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    RatVec r = M.row(i);
    if (is_zero(r)) continue;
    IntVec p = primitive(r);
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = p[j];
  }
  return out;
}

}  // namespace gavkit
