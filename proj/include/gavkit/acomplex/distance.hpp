#pragma once

// Lattice distance between an integral point and the affine hull of a cell.

#include "gavkit/errors.hpp"
#include "gavkit/exactla/linsolve.hpp"

#include <vector>

namespace gavkit {

/// Positive generator of the value group { phi(p) - phi(x) : phi integral,
/// constant on aff(points) + lin(directions) }. For a lattice subspace this is
/// the number of lattice hyperplanes between x and the subspace.
inline BigInt lattice_distance(const IntVec& x, const std::vector<RatVec>& points,
                               const std::vector<IntVec>& directions = {}) {
  if (points.empty()) throw PreconditionViolation("lattice_distance: empty cell");
  const std::size_t n = x.size();
  const RatVec& p0 = points[0];
  std::vector<IntVec> dirs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    RatVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = points[k][i] - p0[i];
    if (!is_zero(d)) dirs.push_back(primitive(d));
  }
  for (const auto& d : directions)
    if (!is_zero(d)) dirs.push_back(d);
  std::vector<IntVec> forms = dirs.empty() ? integer_kernel(IntMat(0, n)) : integer_kernel(IntMat::from_rows(dirs));
  const RatVec xr = to_rat(x);
  BigInt num_gcd = 0, den_lcm = 1;
  std::vector<Rat> values;
  for (const auto& phi : forms) {
    Rat v = dot(p0, phi) - dot(xr, phi);
    values.push_back(v);
    den_lcm = lcm(den_lcm, v.den());
  }
  for (const auto& v : values) num_gcd = gcd(num_gcd, v.num() * (den_lcm / v.den()));
  if (num_gcd == 0) throw DegenerateCell("lattice_distance: point lies in the affine hull of the cell");
  Rat delta(num_gcd, den_lcm);
  if (!delta.is_integer()) throw NotLatticeMeasurable("lattice_distance: value group generated by " + delta.str());
  return delta.num();
}

}  // namespace gavkit
