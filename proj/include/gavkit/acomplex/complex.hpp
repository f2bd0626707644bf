#pragma once

// Weakly tropical resolution, the anticanonical complex and the Gorenstein
// index, once through boundary lattice distances and once cone by cone.

#include "gavkit/acomplex/distance.hpp"
#include "gavkit/core/arrangement.hpp"
#include "gavkit/polyhedra/cell.hpp"
#include "gavkit/polyhedra/fan.hpp"
#include "gavkit/tropical/trop.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace gavkit {

/// Coefficient of D_rho in D_Z^(i): (r-c) l_ij - 1 on block i, -1 elsewhere.
inline BigInt divisor_coefficient(const ArrangementData& d, std::size_t col, std::size_t i) {
  if (d.block_of(col) == i) return BigInt(d.r - d.c) * d.l_of(col) - 1;
  return -1;
}

/// Column indices of P (= rays of the fan built over P's columns) in a maximal cone.
inline IndexSet fan_columns(const Fan& fan, std::size_t k) { return fan.max_cones().at(k); }

/// Checks that the (pruned) fan is of the kind the index formulas apply to:
/// either its support contains trop(X) (X complete) or it consists of a single
/// big cone (X affine). Returns true for the complete case.
inline bool check_complete_or_affine(const TropStructure& trop, const Fan& fan) {
  if (fan.max_cones().size() == 1 && classify_cone(trop, fan.cone(0)).is_big()) return false;
  for (const auto& I : trop.leaf_indices(trop.c())) {
    Cone leaf = trop.leaf(I);
    std::vector<Cone> pieces;
    for (const auto& c : fan.cones()) pieces.push_back(intersect(c, leaf));
    if (!covers(leaf, pieces))
      throw PreconditionViolation("fan neither covers trop(X) nor is a single big cone");
  }
  return true;
}

struct ResolvedCone {
  Cone cone;
  std::size_t parent = 0;  // maximal cone of Sigma containing it
  IndexSet leaf;           // the maximal leaf lambda_I containing it
};

struct WeakResolution {
  Fan sigma;                        // the minimal fan Sigma
  std::vector<ResolvedCone> cones;  // maximal cones of Sigma' = Sigma ⊓ trop(X)
  Fan fan() const {
    std::vector<Cone> cs;
    for (const auto& c : cones) cs.push_back(c.cone);
    return Fan::from_cones(sigma.ambient_dim(), cs);
  }
};

/// Sigma' as the maximal cones among sigma ∩ lambda_I, |I| = c. The input fan
/// is pruned to the minimal ambient fan first.
inline WeakResolution weakly_tropical_resolution(const ArrangementData& d, const Fan& fan) {
  TropStructure trop(d);
  WeakResolution res{prune_to_minimal(trop, fan), {}};
  auto leaves = trop.leaf_indices(trop.c());
  std::vector<Cone> pieces;
  for (const auto& I : leaves) pieces.push_back(trop.leaf(I));
  for (auto& rc : refine_cones(res.sigma, pieces)) res.cones.push_back({rc.cone, rc.parent, leaves[rc.piece]});
  std::sort(res.cones.begin(), res.cones.end(), [](const ResolvedCone& a, const ResolvedCone& b) {
    if (a.leaf != b.leaf) return a.leaf < b.leaf;
    return a.cone < b.cone;
  });
  return res;
}

struct SupportFunction {
  RatVec u;
  std::size_t block = 0;  // the i of D_Z^(i) used
};

/// u with div(chi^u) = D_Z^(i) on the parent cone, i the smallest block with
/// no column in sigma'. All admissible i must give the same values on sigma'.
inline SupportFunction support_function(const ArrangementData& d, const Fan& sigma, std::size_t parent,
                                        const Cone& sigma_prime) {
  const auto cols = d.P_columns();
  const IndexSet pc = fan_columns(sigma, parent);
  std::vector<std::size_t> admissible;
  for (std::size_t i = 0; i <= d.r; ++i) {
    bool avoids = true;
    for (std::size_t j = 0; j < d.n[i]; ++j)
      if (sigma_prime.contains(cols[d.column(i, j)])) avoids = false;
    if (avoids) admissible.push_back(i);
  }
  if (admissible.empty()) throw PreconditionViolation("support_function: cone meets every block");
  RatMat M(pc.size(), d.ambient_dim());
  for (std::size_t a = 0; a < pc.size(); ++a)
    for (std::size_t k = 0; k < d.ambient_dim(); ++k) M(a, k) = Rat(cols[pc[a]][k]);
  std::optional<SupportFunction> first;
  for (auto i : admissible) {
    RatVec b(pc.size());
    for (std::size_t a = 0; a < pc.size(); ++a) b[a] = Rat(divisor_coefficient(d, pc[a], i));
    auto u = solve_rational(M, b);
    if (!u) throw NotQGorensteinOnCone("D_Z^(" + std::to_string(i) + ") is not Q-Cartier", sigma.cone(parent).str());
    if (!first) {
      first = SupportFunction{*u, i};
      continue;
    }
    for (const auto& g : sigma_prime.generators())
      if (dot(*u, g) != dot(first->u, g))
        throw InvariantBreach("support_function: values on " + sigma_prime.str() + " depend on the block index");
  }
  return *first;
}

struct ComplexCell {
  Cone cone;  // sigma'
  std::size_t parent = 0;
  IndexSet leaf;
  SupportFunction support;
  Cell cell;      // A_sigma'
  Cell boundary;  // C_sigma' = A_sigma' ∩ {<u,.> = -1}
};

struct AnticanonicalComplex {
  std::size_t dim = 0;
  bool complete = true;  // false for the affine case
  Fan sigma;
  std::vector<ComplexCell> cells;
  std::vector<RatVec> vertex_set;            // without 0
  std::vector<std::size_t> boundary_cells;   // indices into cells
};

inline AnticanonicalComplex build_complex(const ArrangementData& d, const Fan& fan) {
  require_valid(d);
  TropStructure trop(d);
  WeakResolution wr = weakly_tropical_resolution(d, fan);
  AnticanonicalComplex ac;
  ac.dim = d.ambient_dim();
  ac.complete = check_complete_or_affine(trop, wr.sigma);
  ac.sigma = wr.sigma;
  const RatVec zero(ac.dim);
  for (const auto& rc : wr.cones) {
    ComplexCell cc;
    cc.cone = rc.cone;
    cc.parent = rc.parent;
    cc.leaf = rc.leaf;
    cc.support = support_function(d, wr.sigma, rc.parent, rc.cone);
    // -K ample on Z is not enough for a bounded complex: a big cone whose
    // exponents are not platonic puts a positive value on a lineality ray.
    for (const auto& g : rc.cone.generators())
      if (dot(cc.support.u, g).sign() > 0)
        throw PreconditionViolation("anticanonical complex unbounded: <u," + to_string(g) + "> > 0 on " +
                                    rc.cone.str());
    cc.cell = truncate(rc.cone, cc.support.u);
    cc.boundary.rays = cc.cell.rays;
    cc.boundary.lineality = cc.cell.lineality;
    for (const auto& v : cc.cell.vertices)
      if (v != zero) cc.boundary.vertices.push_back(v);
    ac.cells.push_back(std::move(cc));
  }
  for (std::size_t k = 0; k < ac.cells.size(); ++k) {
    for (const auto& v : ac.cells[k].cell.vertices)
      if (v != zero && std::find(ac.vertex_set.begin(), ac.vertex_set.end(), v) == ac.vertex_set.end())
        ac.vertex_set.push_back(v);
    if (!ac.cells[k].boundary.vertices.empty()) ac.boundary_cells.push_back(k);
  }
  std::sort(ac.vertex_set.begin(), ac.vertex_set.end());
  return ac;
}

inline BigInt boundary_distance(const ComplexCell& cell) {
  std::vector<IntVec> dirs = cell.boundary.rays;
  dirs.insert(dirs.end(), cell.boundary.lineality.begin(), cell.boundary.lineality.end());
  return lattice_distance(IntVec(cell.cone.ambient_dim(), BigInt(0)), cell.boundary.vertices, dirs);
}

struct DistanceReport {
  std::vector<BigInt> cell_distances;  // aligned with boundary_cells
  BigInt gorenstein_index = 1;
};

inline DistanceReport distance_report(const AnticanonicalComplex& ac) {
  DistanceReport rep;
  for (auto k : ac.boundary_cells) {
    BigInt dist = boundary_distance(ac.cells[k]);
    rep.cell_distances.push_back(dist);
    rep.gorenstein_index = lcm(rep.gorenstein_index, dist);
  }
  return rep;
}

inline BigInt gorenstein_index_via_complex(const AnticanonicalComplex& ac) {
  return distance_report(ac).gorenstein_index;
}

struct ConeIndexReport {
  Fan sigma;
  std::vector<BigInt> c_sigma;                // per maximal cone of sigma
  std::vector<std::vector<BigInt>> per_block;  // c_sigma computed with each D_Z^(i)
  BigInt gorenstein_index = 1;
};

/// c_sigma for every maximal cone of the minimal fan and every block i;
/// they must agree across i. The index is their lcm.
inline ConeIndexReport gorenstein_index_via_cones(const ArrangementData& d, const Fan& fan) {
  require_valid(d);
  TropStructure trop(d);
  ConeIndexReport rep;
  rep.sigma = prune_to_minimal(trop, fan);
  check_complete_or_affine(trop, rep.sigma);
  const auto cols = d.P_columns();
  for (std::size_t k = 0; k < rep.sigma.max_cones().size(); ++k) {
    const IndexSet pc = fan_columns(rep.sigma, k);
    IntMat M(pc.size(), d.ambient_dim());
    for (std::size_t a = 0; a < pc.size(); ++a)
      for (std::size_t q = 0; q < d.ambient_dim(); ++q) M(a, q) = cols[pc[a]][q];
    std::vector<BigInt> per;
    for (std::size_t i = 0; i <= d.r; ++i) {
      RatVec b(pc.size());
      for (std::size_t a = 0; a < pc.size(); ++a) b[a] = Rat(divisor_coefficient(d, pc[a], i));
      auto m = min_integral_multiplier(M, b);
      if (!m)
        throw NotQGorensteinOnCone("D_Z^(" + std::to_string(i) + ") is not Q-Cartier", rep.sigma.cone(k).str());
      per.push_back(*m);
    }
    for (const auto& x : per)
      if (x != per[0]) throw InvariantBreach("c_sigma depends on the block index on " + rep.sigma.cone(k).str());
    rep.c_sigma.push_back(per[0]);
    rep.per_block.push_back(std::move(per));
    rep.gorenstein_index = lcm(rep.gorenstein_index, rep.c_sigma.back());
  }
  return rep;
}

}  // namespace gavkit
