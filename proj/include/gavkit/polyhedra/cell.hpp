#pragma once

#include "gavkit/polyhedra/cone.hpp"

#include <vector>

namespace gavkit {

/// conv(vertices) + cone(rays) + lin(lineality).
struct Cell {
  std::vector<RatVec> vertices;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;

  bool is_polytope() const { return rays.empty() && lineality.empty(); }

  bool has_vertex(const RatVec& v) const {
    for (const auto& w : vertices)
      if (w == v) return true;
    return false;
  }
};

/// c ∩ { v : <u,v> >= -1 }. Requires <u,g> <= 0 on all generators of c.
/// For non-pointed cones 0 is not listed: the cell is then
/// conv(0, vertices) + cone(rays) + lin(lineality).
inline Cell truncate(const Cone& c, const RatVec& u) {
  if (u.size() != c.ambient_dim()) throw PreconditionViolation("truncate: dimension mismatch");
  Cell cell;
  cell.lineality = c.lineality();
  for (const auto& l : c.lineality())
    if (!dot(u, l).is_zero()) throw PreconditionViolation("truncate: u does not vanish on the lineality space");
  if (c.is_pointed()) cell.vertices.push_back(RatVec(c.ambient_dim()));
  for (const auto& g : c.rays()) {
    Rat v = dot(u, g);
    if (v.sign() > 0) throw PreconditionViolation("truncate: <u,g> > 0 for generator " + to_string(g));
    if (v.is_zero()) {
      cell.rays.push_back(g);
      continue;
    }
    Rat s = Rat(-1) / v;
    RatVec p(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) p[i] = s * Rat(g[i]);
    cell.vertices.push_back(std::move(p));
  }
  return cell;
}

}  // namespace gavkit
