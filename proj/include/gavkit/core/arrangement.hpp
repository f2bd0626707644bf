#pragma once

// Defining data (A,P) of an explicit general arrangement variety, its
// validation, the trinomial relations and the K-grading.

#include "gavkit/errors.hpp"
#include "gavkit/exactla/linsolve.hpp"
#include "gavkit/polyhedra/cone.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gavkit {

struct ArrangementData {
  std::size_t r = 0;
  std::size_t c = 0;
  std::vector<std::size_t> n;  // n_0 .. n_r
  std::size_t m = 0;
  std::vector<IntVec> l;  // l_i, of length n_i
  RatMat A;               // (c+1) x (r+1)
  IntMat D;               // s x (n+m)

  std::size_t s() const { return D.rows(); }
  std::size_t n_total() const {
    std::size_t t = 0;
    for (auto x : n) t += x;
    return t;
  }
  std::size_t num_columns() const { return n_total() + m; }
  std::size_t ambient_dim() const { return r + s(); }

  /// Column index of v_ij (j 0-based here).
  std::size_t column(std::size_t i, std::size_t j) const {
    std::size_t k = 0;
    for (std::size_t a = 0; a < i; ++a) k += n[a];
    return k + j;
  }
  std::size_t extra_column(std::size_t k) const { return n_total() + k; }

  /// Block index of a column, or r+1 for the extra columns v_k.
  std::size_t block_of(std::size_t col) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i <= r; ++i) {
      if (col < k + n[i]) return i;
      k += n[i];
    }
    return r + 1;
  }
  std::size_t index_in_block(std::size_t col) const {
    std::size_t i = block_of(col);
    return i > r ? col - n_total() : col - column(i, 0);
  }

  /// "v01", "v02", "v11", ... for block columns (j counted from 1), "v1", ... for the extra ones.
  std::string label(std::size_t col) const {
    std::size_t i = block_of(col);
    if (i > r) return "v" + std::to_string(col - n_total() + 1);
    return "v" + std::to_string(i) + std::to_string(index_in_block(col) + 1);
  }

  BigInt l_of(std::size_t col) const { return l.at(block_of(col)).at(index_in_block(col)); }

  IntMat P0() const {
    IntMat p(r, num_columns());
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t j = 0; j < n[0]; ++j) p(row, column(0, j)) = -l[0][j];
      for (std::size_t j = 0; j < n[row + 1]; ++j) p(row, column(row + 1, j)) = l[row + 1][j];
    }
    return p;
  }

  IntMat P() const { return vstack(P0(), D); }

  std::vector<IntVec> P_columns() const { return P().col_list(); }

  /// Shape consistency; throws InvalidData on mismatch.
  void check_shapes() const {
    if (c == 0 || r < c) throw InvalidData("require r >= c > 0");
    if (n.size() != r + 1) throw InvalidData("n must have r+1 entries");
    if (l.size() != r + 1) throw InvalidData("l must have r+1 entries");
    for (std::size_t i = 0; i <= r; ++i) {
      if (n[i] == 0) throw InvalidData("n_i must be positive");
      if (l[i].size() != n[i]) throw InvalidData("l_" + std::to_string(i) + " must have n_i entries");
      for (const auto& x : l[i])
        if (x <= 0) throw InvalidData("entries of l must be positive");
    }
    if (A.rows() != c + 1 || A.cols() != r + 1) throw InvalidData("A must be (c+1) x (r+1)");
    if (D.rows() > 0 && D.cols() != num_columns()) throw InvalidData("D must have n+m columns");
  }
};

/// Violations of the defining conditions; empty means valid.
inline std::vector<std::string> validate(const ArrangementData& d) {
  std::vector<std::string> out;
  try {
    d.check_shapes();
  } catch (const InvalidData& e) {
    out.push_back(std::string("shape: ") + e.what());
    return out;
  }
  detail::for_each_subset(d.r + 1, d.c + 1, [&](const std::vector<std::size_t>& idx) {
    RatMat sub(d.c + 1, d.c + 1);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t row = 0; row <= d.c; ++row) sub(row, a) = d.A(row, idx[a]);
    if (rank(sub) != d.c + 1) {
      std::string cols;
      for (auto i : idx) cols += (cols.empty() ? "" : ",") + std::to_string(i);
      out.push_back("columns of A linearly independent: columns {" + cols + "} are dependent");
    }
  });
  auto cols = d.P_columns();
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = a + 1; b < cols.size(); ++b)
      if (cols[a] == cols[b]) out.push_back("columns pairwise different: " + d.label(a) + " = " + d.label(b));
  for (std::size_t a = 0; a < cols.size(); ++a)
    if (content(cols[a]) != 1) out.push_back("columns primitive: " + d.label(a) + " = " + to_string(cols[a]));
  if (rank_of(cols, d.ambient_dim()) != d.ambient_dim()) out.push_back("columns generate Q^{r+s} as a vector space");
  return out;
}

inline void require_valid(const ArrangementData& d) {
  auto v = validate(d);
  if (!v.empty()) throw InvalidData("invalid arrangement data: " + v.front());
}

/// g_t = sum over k of coefficients[k] * T_{blocks[k]}^{l_{blocks[k]}}.
struct Relation {
  std::size_t t = 0;                // 1 .. r-c
  std::vector<std::size_t> blocks;  // 0, .., c, c+t
  std::vector<Rat> coefficients;    // signed maximal minors of A
};

/// Laplace expansion of det[a_0 .. a_c a_{c+t}; T_0^{l_0} .. T_{c+t}^{l_{c+t}}] along the last row.
inline std::vector<Relation> relations(const ArrangementData& d) {
  std::vector<Relation> out;
  for (std::size_t t = 1; t + d.c <= d.r; ++t) {
    Relation g;
    g.t = t;
    for (std::size_t i = 0; i <= d.c; ++i) g.blocks.push_back(i);
    g.blocks.push_back(d.c + t);
    const std::size_t k = d.c + 2;
    for (std::size_t pos = 0; pos < k; ++pos) {
      RatMat minor(d.c + 1, d.c + 1);
      std::size_t cc = 0;
      for (std::size_t q = 0; q < k; ++q) {
        if (q == pos) continue;
        for (std::size_t row = 0; row <= d.c; ++row) minor(row, cc) = d.A(row, g.blocks[q]);
        ++cc;
      }
      Rat det = determinant(minor);
      Rat sign = ((k - 1 + pos) % 2 == 0) ? Rat(1) : Rat(-1);
      g.coefficients.push_back(sign * det);
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// An element of K = Z^free_rank x prod Z/torsion_i.
struct KElement {
  IntVec free;
  IntVec tors;
  friend bool operator==(const KElement&, const KElement&) = default;
};

struct DegreeData {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // elementary divisors > 1
  IntMat Q_free;                // free_rank x (n+m)
  IntMat Q_tors;                // one congruence row per torsion divisor
  std::vector<KElement> degrees;
  KElement relation_degree;

  KElement class_of(const IntVec& x) const {
    KElement e;
    e.free = Q_free.rows() ? Q_free.apply(x) : IntVec{};
    e.tors = Q_tors.rows() ? Q_tors.apply(x) : IntVec{};
    for (std::size_t i = 0; i < e.tors.size(); ++i) e.tors[i] = floor_mod(e.tors[i], torsion[i]);
    return e;
  }

  KElement add(const KElement& a, const KElement& b, const BigInt& fb = 1) const {
    KElement e = a;
    for (std::size_t i = 0; i < e.free.size(); ++i) e.free[i] += fb * b.free[i];
    for (std::size_t i = 0; i < e.tors.size(); ++i) e.tors[i] = floor_mod(e.tors[i] + fb * b.tors[i], torsion[i]);
    return e;
  }

  std::vector<IntVec> free_degrees() const {
    std::vector<IntVec> out;
    for (const auto& d : degrees) out.push_back(d.free);
    return out;
  }
};

/// K presented through the Smith form of P^T; the free part is put into
/// Hermite form so that the presentation is canonical.
inline DegreeData degree_map(const ArrangementData& d) {
  require_valid(d);
  const IntMat P = d.P();
  const std::size_t N = d.num_columns();
  SmithForm sf = snf(P.transpose());
  DegreeData dd;
  dd.free_rank = N - sf.rank;
  std::vector<IntVec> free_rows;
  for (std::size_t i = sf.rank; i < N; ++i) free_rows.push_back(sf.U.row(i));
  dd.Q_free = free_rows.empty() ? IntMat(0, N) : hnf(IntMat::from_rows(free_rows)).H;
  std::vector<IntVec> tors_rows;
  for (std::size_t i = 0; i < sf.rank; ++i) {
    BigInt di = sf.S(i, i);
    if (di == 1) continue;
    IntVec row = sf.U.row(i);
    for (auto& x : row) x = floor_mod(x, di);
    dd.torsion.push_back(di);
    tors_rows.push_back(row);
  }
  dd.Q_tors = tors_rows.empty() ? IntMat(0, N) : IntMat::from_rows(tors_rows);
  for (std::size_t j = 0; j < N; ++j) {
    IntVec e(N, BigInt(0));
    e[j] = 1;
    dd.degrees.push_back(dd.class_of(e));
  }
  KElement zero = dd.class_of(IntVec(N, BigInt(0)));
  for (std::size_t row = 0; row < P.rows(); ++row)
    if (!(dd.class_of(P.row(row)) == zero)) throw InvariantBreach("degree_map: Q does not annihilate the rows of P");
  for (std::size_t i = 0; i <= d.r; ++i) {
    IntVec x(N, BigInt(0));
    for (std::size_t j = 0; j < d.n[i]; ++j) x[d.column(i, j)] = d.l[i][j];
    KElement mu = dd.class_of(x);
    if (i == 0) dd.relation_degree = mu;
    else if (!(mu == dd.relation_degree))
      throw InvariantBreach("degree_map: monomial degrees differ between blocks 0 and " + std::to_string(i));
  }
  return dd;
}

/// Class of -K = sum of all generator degrees - (r-c) mu, checked against
/// the divisors -D_Z^(i) for every i.
inline KElement anticanonical_class(const ArrangementData& d, const DegreeData& dd) {
  const std::size_t N = d.num_columns();
  KElement result;
  for (std::size_t i = 0; i <= d.r; ++i) {
    IntVec x(N, BigInt(1));
    for (std::size_t j = 0; j < d.n[i]; ++j) x[d.column(i, j)] -= BigInt(d.r - d.c) * d.l[i][j];
    KElement k = dd.class_of(x);
    if (i == 0) result = k;
    else if (!(k == result)) throw InvariantBreach("anticanonical_class depends on the block index");
  }
  KElement sum = dd.class_of(IntVec(N, BigInt(1)));
  if (!(dd.add(sum, dd.relation_degree, BigInt(-BigInt(d.r - d.c))) == result))
    throw InvariantBreach("anticanonical_class: degree sum formula disagrees");
  return result;
}

inline KElement anticanonical_class(const ArrangementData& d) { return anticanonical_class(d, degree_map(d)); }

}  // namespace gavkit
