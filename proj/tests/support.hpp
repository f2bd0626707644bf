#pragma once

// Fixtures and independent oracles shared by the unit tests and the
// acceptance binary.

#include "gavkit/gavkit.hpp"

#include <optional>
#include <random>
#include <set>
#include <vector>

namespace gavkit::testing {

inline RatMat standard_A() {
  RatMat A(2, 3);
  A(0, 0) = -1;
  A(0, 1) = 1;
  A(1, 0) = -1;
  A(1, 2) = 1;
  return A;
}

/// The surface V(T01^2 T02 + T11^2 + T21^3) with P = [v01,v02,v11,v21].
inline ArrangementData worked_example() {
  ArrangementData d;
  d.r = 2;
  d.c = 1;
  d.n = {2, 1, 1};
  d.m = 0;
  d.l = {make_int_vec({2, 1}), make_int_vec({2}), make_int_vec({3})};
  d.A = standard_A();
  d.D = IntMat::from_rows({make_int_vec({-1, -2, 1, 2})});
  return d;
}

/// sigma1 = {v01,v11,v21}, sigma2 = {v02,v11,v21}, sigma3 = {v01,v02}.
inline Fan worked_example_fan() {
  ArrangementData d = worked_example();
  return Fan(3, d.P_columns(), {{0, 2, 3}, {1, 2, 3}, {0, 1}});
}

inline RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (auto x : xs) v.push_back(Rat(x));
  return v;
}

// ---------------------------------------------------------------------------
// Random instances: r <= 3, s <= 2, entries bounded by 4.

inline long long uniform(std::mt19937_64& g, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(g);
}

/// Every (c+1) x (c+1) minor of A is nonzero.
inline bool general_position(const RatMat& A) {
  bool ok = true;
  detail::for_each_subset(A.cols(), A.rows(), [&](const IndexSet& idx) {
    RatMat M(A.rows(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) M(i, j) = A(i, idx[j]);
    if (determinant(M).is_zero()) ok = false;
  });
  return ok;
}

inline RatMat random_A(std::mt19937_64& g, std::size_t r, std::size_t c) {
  if (r == 2 && c == 1) return standard_A();
  while (true) {
    RatMat A(c + 1, r + 1);
    for (std::size_t i = 0; i <= c; ++i)
      for (std::size_t j = 0; j <= r; ++j) A(i, j) = Rat(uniform(g, -4, 4));
    if (general_position(A)) return A;
  }
}

/// Random data of one of the shapes (r,c) in {(2,1),(3,1),(3,2)}; not
/// necessarily valid.
inline ArrangementData random_arrangement(std::mt19937_64& g) {
  static const std::size_t shapes[3][2] = {{2, 1}, {3, 1}, {3, 2}};
  const auto& sh = shapes[uniform(g, 0, 2)];
  ArrangementData d;
  d.r = sh[0];
  d.c = sh[1];
  d.A = random_A(g, d.r, d.c);
  const std::size_t s = static_cast<std::size_t>(uniform(g, 0, 2));
  for (std::size_t i = 0; i <= d.r; ++i) {
    d.n.push_back(static_cast<std::size_t>(uniform(g, 1, 2)));
    IntVec li;
    for (std::size_t j = 0; j < d.n.back(); ++j) li.push_back(uniform(g, 1, 4));
    d.l.push_back(li);
  }
  d.m = s > 0 ? static_cast<std::size_t>(uniform(g, 0, 1)) : 0;
  d.D = IntMat(s, d.num_columns());
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < d.num_columns(); ++b) d.D(a, b) = uniform(g, -4, 4);
  return d;
}

struct FanoInstance {
  ArrangementData data;
  Fan fan;  // Sigma(-K)
};

/// Draws until a valid Fano instance appears (bounded number of attempts).
inline std::optional<FanoInstance> random_fano(std::mt19937_64& g, int attempts = 2000) {
  for (int t = 0; t < attempts; ++t) {
    ArrangementData d = random_arrangement(g);
    if (!validate(d).empty()) continue;
    FanoResult fr = is_fano(d);
    if (!fr.fano) continue;
    return FanoInstance{std::move(d), std::move(*fr.fan)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounds and divisibility conditions of the five settings, read directly off
// the proposition statements. Parameters are in normal form.

inline bool int_div(long long a, long long b, long long& q) {
  if (b == 0 || a % b != 0) return false;
  q = a / b;
  return true;
}

inline bool rat_divides(const Rat& a, long long b) {
  if (!a.is_integer() || a.is_zero()) return false;
  return BigInt(b) % a.num() == 0;
}

inline bool conforms_setting1(const Params& p, long long iota) {
  long long l21 = p[0], d12 = p[1], d21 = p[2], k;
  if (!(2 < d12 && d12 <= 3 * iota)) return false;
  if (!int_div(iota * (l21 + 1), d21, k) || !(-iota <= k && k < 0)) return false;
  long long a = (k * d12 + iota) * l21 + iota;
  return a != 0 && (iota * k * k * d12) % a == 0;
}

inline bool conforms_setting2(const Params& p, long long iota) {
  long long l21 = p[0], l22 = p[1], d01 = p[2], d21 = p[3], d22 = p[4];
  if (d01 == 0) {
    if (iota % 2 != 0) return false;
    long long h = iota / 2;
    if (l21 == l22)
      return iota % l21 == 0 && d21 != 0 && d22 != 0 && ((2 + l21) * h) % d21 == 0 && ((2 + l22) * h) % d22 == 0;
    if (!(l21 > l22 && 1 < l22 && l22 < iota && 0 < d22 && d22 < iota)) return false;
    for (long long k = 1; k < iota; ++k) {
      long long q = d21 / std::gcd(d21, d22);
      if (q != 0 && (h + k) % q == 0 && k * (l21 * d22 - d21 * l22) == iota * (d22 - d21)) return true;
    }
    return false;
  }
  if (d01 != -1) return false;
  // (sa, la) and (tb, lb) in the roles of (s, l21) and (t, l22).
  auto check = [&](long long la, long long lb, long long sa, long long tb) {
    if (!(1 < la && la < 4 * iota && 0 < sa && 0 < tb)) return false;
    if ((iota * (la + 2)) % sa != 0) return false;
    for (long long k = 1; k <= iota; ++k)
      if ((2 * iota * iota * sa + 2 * k * sa * iota) % tb == 0 && k * (tb * la + sa * lb) == 2 * iota * (tb + sa))
        return true;
    return false;
  };
  long long sp = l21 - 2 * d21, tp = 2 * d22 - l22;
  return check(l21, l22, sp, tp) || check(l22, l21, tp, sp);
}

inline bool conforms_setting3(const Params& p, long long iota) {
  long long l22 = p[0], d01 = p[1], d21 = p[2], d22 = p[3], k01, k22;
  if (d21 != 0 || !(-3 * iota <= d01 && d01 < 0)) return false;
  if (!int_div(3 * iota, d01, k01) || !(-3 * iota <= k01 && k01 < 0)) return false;
  if (!int_div(iota * (l22 - 1), d22, k22) || !(0 < k22 && k22 < iota)) return false;
  Rat a = Rat(iota) * (Rat(3, k01) + Rat(2, k22)) * Rat(l22) - Rat(2 * iota, k22);
  return rat_divides(a, 6 * iota * (k22 + k01));
}

inline bool conforms_setting4(const Params& p, long long iota) {
  long long l22 = p[0], d01 = p[1], d21 = p[2], d22 = p[3], k;
  if (d21 != 0 || !(-2 * iota <= d01 && d01 <= 0)) return false;
  if (!int_div(iota * (l22 - 1), d22, k) || !(0 < k && k < 2 * iota)) return false;
  Rat a = Rat(d01 * k + 2 * iota) * Rat(l22, k) - Rat(2 * iota, k);
  return rat_divides(a, 2 * iota * (d01 * k + 3 * iota));
}

inline bool conforms_setting5(const Params& p, long long iota) {
  long long l21 = p[0], d21 = p[1], k;
  if (!int_div(iota * (d21 - 1), l21, k) || !(-iota <= k && 2 * k < -iota)) return false;
  Rat a = Rat(l21) * Rat(2 * k + iota, iota) + Rat(2);
  return rat_divides(a, 4 * k * iota);
}

inline bool conforms(int id, const Params& p, long long iota) {
  switch (id) {
    case 1: return conforms_setting1(p, iota);
    case 2: return conforms_setting2(p, iota);
    case 3: return conforms_setting3(p, iota);
    case 4: return conforms_setting4(p, iota);
    case 5: return conforms_setting5(p, iota);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lattice-distance oracles.

/// Number of levels t in (0,1] such that t * A (A = p + lin(dirs)) contains
/// a lattice point, found by scanning the lattice points of lin(A ∪ {0}) in
/// the box [-R, R]^n.
inline long long count_levels(const std::vector<long long>& p, const std::vector<std::vector<long long>>& dirs,
                              long long R) {
  const std::size_t n = p.size();
  auto to_iv = [](const std::vector<long long>& v) {
    IntVec w;
    for (auto x : v) w.push_back(x);
    return w;
  };
  std::vector<IntVec> span{to_iv(p)};
  std::vector<IntVec> drows;
  for (const auto& d : dirs) {
    span.push_back(to_iv(d));
    drows.push_back(to_iv(d));
  }
  // Normals of lin(A ∪ {0}) for membership, and a form psi vanishing on dirs.
  std::vector<IntVec> normals = integer_kernel(IntMat::from_rows(span));
  std::vector<IntVec> forms = drows.empty() ? integer_kernel(IntMat(0, n)) : integer_kernel(IntMat::from_rows(drows));
  IntVec psi;
  for (const auto& f : forms)
    if (dot(f, to_iv(p)) != 0) psi = f;
  std::vector<std::vector<long long>> nl;
  for (const auto& v : normals) {
    std::vector<long long> w;
    for (const auto& x : v) w.push_back(static_cast<long long>(x));
    nl.push_back(w);
  }
  std::vector<long long> ps;
  for (const auto& x : psi) ps.push_back(static_cast<long long>(x));
  long long top = 0;
  for (std::size_t i = 0; i < n; ++i) top += ps[i] * p[i];
  if (top < 0) {
    top = -top;
    for (auto& x : ps) x = -x;
  }
  std::set<long long> levels;
  std::vector<long long> q(n, -R);
  while (true) {
    bool inside = true;
    for (const auto& v : nl) {
      long long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += v[i] * q[i];
      if (s != 0) inside = false;
    }
    if (inside) {
      long long t = 0;
      for (std::size_t i = 0; i < n; ++i) t += ps[i] * q[i];
      if (0 < t && t <= top) levels.insert(t);
    }
    std::size_t k = 0;
    while (k < n && q[k] == R) q[k++] = -R;
    if (k == n) break;
    ++q[k];
  }
  return static_cast<long long>(levels.size());
}

/// Smallest m in [1, max_m] such that some integral u satisfies <u,v> = m
/// for all v in rays, by scanning u in [-U, U]^2. Zero if none.
inline long long toric_cone_scan(const std::vector<std::array<long long, 2>>& rays, long long max_m, long long U) {
  for (long long m = 1; m <= max_m; ++m)
    for (long long a = -U; a <= U; ++a)
      for (long long b = -U; b <= U; ++b) {
        bool ok = true;
        for (const auto& v : rays)
          if (a * v[0] + b * v[1] != m) ok = false;
        if (ok) return m;
      }
  return 0;
}

}  // namespace gavkit::testing
