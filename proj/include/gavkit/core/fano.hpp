#pragma once

// Moving cone, the fans Sigma(u) and the Fano test.

#include "gavkit/core/arrangement.hpp"
#include "gavkit/polyhedra/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gavkit {

inline constexpr std::size_t kMaxFaceEnumColumns = 20;

/// Intersection over the facets of the positive orthant of the cones spanned
/// by the remaining (free) generator degrees.
inline Cone moving_cone(const ArrangementData& d, const DegreeData& dd) {
  const std::size_t dim = d.ambient_dim();
  auto cols = d.P_columns();
  if (!(Cone::from_generators(dim, cols) == Cone::full_space(dim)))
    throw NotQuasiprojectiveSetup("columns of P do not generate Q^{r+s} as a cone");
  const std::size_t k = dd.free_rank;
  const auto w = dd.free_degrees();
  Cone mov = Cone::full_space(k);
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    std::vector<IntVec> g;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != skip) g.push_back(w[j]);
    mov = intersect(mov, Cone::from_generators(k, g));
  }
  return mov;
}

inline Cone moving_cone(const ArrangementData& d) { return moving_cone(d, degree_map(d)); }

/// Sigma(u) = { P(gamma0^*) : u in Q(gamma0)° }, maximal cones only; u is
/// given in the free part of K.
inline Fan fan_from_ample(const ArrangementData& d, const DegreeData& dd, const RatVec& u) {
  const std::size_t N = d.num_columns();
  if (N > kMaxFaceEnumColumns) throw DimensionGuard("fan_from_ample: more than 20 columns");
  if (u.size() != dd.free_rank) throw PreconditionViolation("fan_from_ample: u has wrong length");
  Cone mov = moving_cone(d, dd);
  if (!mov.contains_in_relative_interior(u)) throw NotAmple("u is not in the relative interior of the moving cone");
  const auto w = dd.free_degrees();
  std::vector<IndexSet> cones;
  for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
    std::vector<IntVec> g;
    IndexSet comp;
    for (std::size_t j = 0; j < N; ++j) {
      if (mask & (1ul << j)) g.push_back(w[j]);
      else comp.push_back(j);
    }
    if (g.empty()) {
      if (!is_zero(u)) continue;
    } else if (!Cone::from_generators(dd.free_rank, g).contains_in_relative_interior(u)) {
      continue;
    }
    cones.push_back(comp);
  }
  return Fan(d.ambient_dim(), d.P_columns(), cones);
}

inline Fan fan_from_ample(const ArrangementData& d, const RatVec& u) { return fan_from_ample(d, degree_map(d), u); }

struct FanoResult {
  bool fano = false;
  std::optional<Fan> fan;  // Sigma(-K) when -K lies in Mov°
  std::string reason;
};

/// Fano iff -K lies in the interior of a full-dimensional moving cone and
/// Sigma(-K) is complete.
inline FanoResult is_fano(const ArrangementData& d, const DegreeData& dd) {
  FanoResult res;
  KElement k = anticanonical_class(d, dd);
  RatVec u = to_rat(k.free);
  if (is_zero(u)) {
    res.reason = "-K is zero in K_Q";
    return res;
  }
  Cone mov;
  try {
    mov = moving_cone(d, dd);
  } catch (const NotQuasiprojectiveSetup& e) {
    res.reason = e.what();
    return res;
  }
  if (mov.dimension() != dd.free_rank || !mov.contains_in_relative_interior(u)) {
    res.reason = "-K is not in the interior of the moving cone";
    return res;
  }
  res.fan = fan_from_ample(d, dd, u);
  if (!is_complete(*res.fan)) {
    res.reason = "Sigma(-K) is not complete";
    return res;
  }
  res.fano = true;
  return res;
}

inline FanoResult is_fano(const ArrangementData& d) { return is_fano(d, degree_map(d)); }

}  // namespace gavkit
