#pragma once

// The five families of Fano threefolds with a two-dimensional torus action:
// parameter templates for P, inequality constraints and listed fans.

#include "gavkit/core/arrangement.hpp"
#include "gavkit/polyhedra/fan.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gavkit {

using Params = std::vector<long long>;

struct SettingSpec {
  int id;
  std::vector<std::string> names;
};

inline const SettingSpec& setting_spec(int id) {
  static const std::array<SettingSpec, 5> specs{{
      {1, {"l21", "d12", "d21"}},
      {2, {"l21", "l22", "d01", "d21", "d22"}},
      {3, {"l22", "d01", "d21", "d22"}},
      {4, {"l22", "d01", "d21", "d22"}},
      {5, {"l21", "d21"}},
  }};
  if (id < 1 || id > 5) throw PreconditionViolation("unknown setting " + std::to_string(id));
  return specs[static_cast<std::size_t>(id - 1)];
}

inline std::string params_str(int id, const Params& p) {
  const auto& names = setting_spec(id).names;
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + names[k] + "=" + std::to_string(p[k]);
  return s + ")";
}

/// The inequalities attached to each setting.
inline bool satisfies_inequalities(int id, const Params& p) {
  switch (id) {
    case 1: {
      auto [l21, d12, d21] = std::array<long long, 3>{p[0], p[1], p[2]};
      return l21 > 1 && d12 > 2 && -d21 < l21 * (d12 - 1) && l21 < -d21;
    }
    case 2: {
      long long l21 = p[0], l22 = p[1], d01 = p[2], d21 = p[3], d22 = p[4];
      return l21 > 1 && l22 > 1 && 2 * d22 > -d01 * l22 && -2 * d21 > d01 * l21;
    }
    case 3: {
      long long l22 = p[0], d01 = p[1], d21 = p[2], d22 = p[3];
      return l22 > 1 && d22 > d21 * l22 + l22 && 2 * d22 > -d01 * l22 && -2 * d21 > d01;
    }
    case 4: {
      long long l22 = p[0], d01 = p[1], d21 = p[2], d22 = p[3];
      return l22 > 1 && 2 * d22 > -d01 * l22 && 1 - 2 * d21 > d01;
    }
    case 5: {
      long long l21 = p[0], d21 = p[1];
      return 1 < l21 && l21 < -2 * d21 && -2 * d21 < 2 * l21;
    }
  }
  return false;
}

inline std::size_t param_count(int id) { return setting_spec(id).names.size(); }

/// Maximal cones listed for the setting, as 0-based column indices.
inline std::vector<IndexSet> listed_cones(int id, const Params& p) {
  switch (id) {
    case 1:
      // columns v01, v02, v11, v12, v21
      return {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
    case 2:
    case 3:
      // columns v01, v11, v12, v21, v22
      return {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}};
    case 4: {
      std::vector<IndexSet> c{{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}};
      if (2 * p[2] + p[1] != 0) c.push_back({0, 1, 2, 3});
      return c;
    }
    case 5:
      // columns v01, v11, v12, v21, v1
      return {{0, 1, 3, 4}, {0, 2, 3, 4}, {0, 1, 2, 3}, {1, 2, 4}};
  }
  throw PreconditionViolation("unknown setting");
}

inline ArrangementData setting_data(int id, const Params& p) {
  if (p.size() != param_count(id)) throw PreconditionViolation("wrong number of parameters for setting " + std::to_string(id));
  ArrangementData d;
  d.r = 2;
  d.c = 1;
  d.A = RatMat(2, 3);
  d.A(0, 0) = -1;
  d.A(0, 1) = 1;
  d.A(1, 0) = -1;
  d.A(1, 2) = 1;
  auto iv = [](std::initializer_list<long long> xs) { return make_int_vec(xs); };
  switch (id) {
    case 1:
      d.n = {2, 2, 1};
      d.l = {iv({1, 1}), iv({1, 1}), iv({p[0]})};
      d.D = IntMat::from_rows({iv({-1, 0, 0, 1, 0}), iv({0, 0, 0, p[1], p[2]})});
      break;
    case 2:
      d.n = {1, 2, 2};
      d.l = {iv({2}), iv({1, 1}), iv({p[0], p[1]})};
      d.D = IntMat::from_rows({iv({-1, 0, 1, 0, 0}), iv({p[2], 0, 0, p[3], p[4]})});
      break;
    case 3:
    case 4:
      d.n = {1, 2, 2};
      d.l = {iv({2}), iv({1, 1}), iv({1, p[0]})};
      d.D = IntMat::from_rows({iv({-1, 0, 1, 0, 0}), iv({p[1], 0, 0, p[2], p[3]})});
      break;
    case 5:
      d.n = {1, 2, 1};
      d.m = 1;
      d.l = {iv({2}), iv({1, 1}), iv({p[0]})};
      d.D = IntMat::from_rows({iv({-1, 0, 1, 0, 0}), iv({1, 0, 0, p[1], 1})});
      break;
  }
  return d;
}

struct Instance {
  ArrangementData data;
  Fan fan;
};

/// Data and listed fan of a parameter tuple. Throws PreconditionViolation if
/// the inequalities fail and InvalidCandidate if the data or fan is invalid.
inline Instance instantiate(int id, const Params& p) {
  if (!satisfies_inequalities(id, p))
    throw PreconditionViolation("setting " + std::to_string(id) + " inequalities fail for " + params_str(id, p));
  ArrangementData d = setting_data(id, p);
  auto v = validate(d);
  if (!v.empty()) throw InvalidCandidate(v.front());
  try {
    Fan f(d.ambient_dim(), d.P_columns(), listed_cones(id, p));
    return {std::move(d), std::move(f)};
  } catch (const InvalidData& e) {
    throw InvalidCandidate(std::string("listed fan: ") + e.what());
  }
}

/// Representative of a tuple under the lattice automorphisms that keep the
/// shape of P: adding multiples of the second row of P to the last one, and
/// for setting 2 the exchange of v21 and v22.
inline Params normal_form(int id, Params p) {
  if (id == 2) {
    long long& l21 = p[0];
    long long& l22 = p[1];
    long long& d01 = p[2];
    long long& d21 = p[3];
    long long& d22 = p[4];
    // (d01, d21, d22) -> (d01 - 2b, d21 + b l21, d22 + b l22), b = ceil(d01 / 2)
    long long b = d01 >= 0 ? (d01 + 1) / 2 : -((-d01) / 2);
    d01 -= 2 * b;
    d21 += b * l21;
    d22 += b * l22;
    Params q = p;
    if (d01 == 0) {
      q = {l22, l21, 0, -d22, -d21};
      if (l21 > l22) return p;
      if (l22 > l21) return q;
    } else {
      q = {l22, l21, -1, l22 - d22, l21 - d21};
    }
    return std::min(p, q);
  }
  if (id == 3 || id == 4) {
    // (d01, d21, d22) -> (d01 + 2 d21, 0, d22 - d21 l22)
    long long l22 = p[0], d01 = p[1], d21 = p[2], d22 = p[3];
    return {l22, d01 + 2 * d21, 0, d22 - d21 * l22};
  }
  return p;
}

}  // namespace gavkit
