#pragma once

// Brute-force scan of all raw setting parameters in a box |p| <= B. Tuples
// are screened by the per-cone Cartier index c_sigma in machine integers
// (a listed cone depends on few parameters, so the scan is split cone by
// cone); survivors go through full verification.

#include "gavkit/classify/parallel.hpp"
#include "gavkit/classify/verify.hpp"

#include <array>
#include <map>
#include <numeric>
#include <vector>

namespace gavkit {

namespace detail {

using I128 = __int128;
using Col4 = std::array<long long, 4>;

/// Columns of P for a tuple, in machine integers.
inline std::array<Col4, 5> fast_columns(int id, const Params& p) {
  switch (id) {
    case 1:
      return {{{-1, -1, -1, 0}, {-1, -1, 0, 0}, {1, 0, 0, 0}, {1, 0, 1, p[1]}, {0, p[0], 0, p[2]}}};
    case 2:
      return {{{-2, -2, -1, p[2]}, {1, 0, 0, 0}, {1, 0, 1, 0}, {0, p[0], 0, p[3]}, {0, p[1], 0, p[4]}}};
    case 3:
    case 4:
      return {{{-2, -2, -1, p[1]}, {1, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, p[2]}, {0, p[0], 0, p[3]}}};
    case 5:
      return {{{-2, -2, -1, 1}, {1, 0, 0, 0}, {1, 0, 1, 0}, {0, p[0], 0, p[1]}, {0, 0, 0, 1}}};
  }
  throw PreconditionViolation("unknown setting");
}

/// Coefficients of D_Z^(0) on the columns.
inline std::array<long long, 5> fast_coefficients(int id) {
  if (id == 1) return {0, 0, -1, -1, -1};
  return {1, -1, -1, -1, -1};
}

inline I128 det4(const std::array<std::array<I128, 4>, 4>& m) {
  auto det3 = [&](int skip) {
    int c[3], k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip) c[k++] = j;
    return m[1][c[0]] * (m[2][c[1]] * m[3][c[2]] - m[2][c[2]] * m[3][c[1]]) -
           m[1][c[1]] * (m[2][c[0]] * m[3][c[2]] - m[2][c[2]] * m[3][c[0]]) +
           m[1][c[2]] * (m[2][c[0]] * m[3][c[1]] - m[2][c[1]] * m[3][c[0]]);
  };
  I128 d = 0;
  for (int j = 0; j < 4; ++j) d += (j % 2 ? -1 : 1) * m[0][j] * det3(j);
  return d;
}

inline I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// c_sigma of a simplicial full-dimensional cone on four columns: the least
/// m with m * M^{-1} b integral. Returns 0 if the columns are dependent.
inline long long fast_c_sigma(const std::array<Col4, 5>& cols, const std::array<long long, 5>& coef,
                              const IndexSet& cone) {
  std::array<std::array<I128, 4>, 4> M;
  for (int a = 0; a < 4; ++a)
    for (int q = 0; q < 4; ++q) M[a][q] = cols[cone[a]][q];
  I128 det = det4(M);
  if (det == 0) return 0;
  I128 g = det;
  for (int q = 0; q < 4; ++q) {
    auto Mq = M;
    for (int a = 0; a < 4; ++a) Mq[a][q] = coef[cone[a]];
    g = gcd128(g, det4(Mq));
  }
  I128 c = det / g;
  return static_cast<long long>(c < 0 ? -c : c);
}

inline bool divides(long long a, long long b) { return a != 0 && b % a == 0; }

/// Screen on the full-dimensional listed cones: each c_sigma must divide
/// iota, their lcm must equal iota when every listed cone is full-dimensional.
inline bool passes_screen(int id, const Params& p, long long iota) {
  auto cols = fast_columns(id, p);
  auto coef = fast_coefficients(id);
  long long l = 1;
  for (const auto& c : listed_cones(id, p)) {
    if (c.size() != 4) continue;
    long long cs = fast_c_sigma(cols, coef, c);
    if (!divides(cs, iota)) return false;
    l = std::lcm(l, cs);
  }
  return id == 5 ? iota % l == 0 : l == iota;
}

}  // namespace detail

struct BoxResult {
  std::vector<Params> accepted;  // raw tuples, sorted
  std::size_t screened = 0;      // tuples passing the inequalities and the c_sigma screen
};

/// Every tuple with all entries in [-B, B] that satisfies the setting's
/// inequalities and verifies at Gorenstein index iota.
inline BoxResult brute_force_box(int id, long long iota, long long B, std::size_t jobs = 1) {
  if (B < 1) throw PreconditionViolation("brute_force_box: bound must be positive");
  if (iota < 1) throw PreconditionViolation("brute_force_box: iota must be positive");
  using detail::divides;
  const auto coef = detail::fast_coefficients(id);
  auto c_of = [&](const Params& p, const IndexSet& cone) {
    return detail::fast_c_sigma(detail::fast_columns(id, p), coef, cone);
  };
  std::vector<Params> survivors;
  auto consider = [&](const Params& p) {
    if (satisfies_inequalities(id, p) && detail::passes_screen(id, p, iota)) survivors.push_back(p);
  };
  switch (id) {
    case 1:
      for (long long l21 = -B; l21 <= B; ++l21)
        for (long long d12 = -B; d12 <= B; ++d12)
          for (long long d21 = -B; d21 <= B; ++d21) consider({l21, d12, d21});
      break;
    case 2: {
      // sigma1 = {0,1,2,3} sees (l21, d01, d21); sigma2 = {0,1,2,4} sees (l22, d01, d22).
      std::map<long long, std::vector<std::pair<long long, long long>>> left, right;
      for (long long d01 = -B; d01 <= B; ++d01)
        for (long long l = -B; l <= B; ++l)
          for (long long d = -B; d <= B; ++d) {
            if (l > 1 && -2 * d > d01 * l && divides(c_of({l, 0, d01, d, 0}, {0, 1, 2, 3}), iota))
              left[d01].push_back({l, d});
            if (l > 1 && 2 * d > -d01 * l && divides(c_of({0, l, d01, 0, d}, {0, 1, 2, 4}), iota))
              right[d01].push_back({l, d});
          }
      for (const auto& [d01, ls] : left) {
        auto it = right.find(d01);
        if (it == right.end()) continue;
        for (const auto& [l21, d21] : ls)
          for (const auto& [l22, d22] : it->second) consider({l21, l22, d01, d21, d22});
      }
      break;
    }
    case 3:
    case 4: {
      // {0,1,2,3} sees (d01, d21); {0,1,2,4} sees (l22, d01, d22).
      std::map<long long, std::vector<long long>> left;
      std::map<long long, std::vector<std::pair<long long, long long>>> right;
      for (long long d01 = -B; d01 <= B; ++d01) {
        for (long long d21 = -B; d21 <= B; ++d21) {
          // In setting 4 the cone is only listed when 2 d21 + d01 != 0.
          if (id == 4 && 2 * d21 + d01 == 0) left[d01].push_back(d21);
          else if (divides(c_of({2, d01, d21, 0}, {0, 1, 2, 3}), iota)) left[d01].push_back(d21);
        }
        for (long long l22 = 2; l22 <= B; ++l22)
          for (long long d22 = -B; d22 <= B; ++d22)
            if (2 * d22 > -d01 * l22 && divides(c_of({l22, d01, 0, d22}, {0, 1, 2, 4}), iota))
              right[d01].push_back({l22, d22});
      }
      for (const auto& [d01, ls] : left) {
        auto it = right.find(d01);
        if (it == right.end()) continue;
        for (long long d21 : ls)
          for (const auto& [l22, d22] : it->second) consider({l22, d01, d21, d22});
      }
      break;
    }
    case 5:
      for (long long l21 = -B; l21 <= B; ++l21)
        for (long long d21 = -B; d21 <= B; ++d21) consider({l21, d21});
      break;
    default:
      throw PreconditionViolation("unknown setting " + std::to_string(id));
  }
  std::sort(survivors.begin(), survivors.end());
  BoxResult res;
  res.screened = survivors.size();
  const BigInt target(iota);
  auto ok = parallel_map<char>(survivors.size(), jobs,
                               [&](std::size_t k) { return char(check_tuple(id, survivors[k], target).has_value()); });
  for (std::size_t k = 0; k < survivors.size(); ++k)
    if (ok[k]) res.accepted.push_back(survivors[k]);
  return res;
}

}  // namespace gavkit
