#pragma once

// Rational polyhedral cones carrying both the generator and the inequality
// description. All vectors are stored as primitive integer vectors.

#include "gavkit/errors.hpp"
#include "gavkit/exactla/linsolve.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace gavkit {

inline constexpr std::size_t kMaxConeDim = 12;

namespace detail {

inline void check_dim(std::size_t dim) {
  if (dim > kMaxConeDim)
    throw DimensionGuard("cone ambient dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxConeDim));
}

inline std::vector<IntVec> sorted_unique(std::vector<IntVec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline std::vector<IntVec> clean_generators(const std::vector<IntVec>& gens) {
  std::vector<IntVec> out;
  for (const auto& g : gens)
    if (!is_zero(g)) out.push_back(primitive(g));
  return sorted_unique(std::move(out));
}

inline IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

// Calls f on every k-subset of {0..n-1} (as an index vector), in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct DualData {
  std::vector<IntVec> facets;     // primitive, inside span(gens), sorted
  std::vector<IntVec> equations;  // lattice basis of span(gens)^perp
};

// Facet normals of cone(gens) chosen inside span(gens), plus the equations of
// the span. Candidate normals come from (w-1)-subsets of the generators.
inline DualData facets_of(std::size_t dim, const std::vector<IntVec>& gens) {
  DualData out;
  if (gens.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, BigInt(0));
      e[i] = 1;
      out.equations.push_back(e);
    }
    return out;
  }
  out.equations = integer_kernel(IntMat::from_rows(gens));
  const std::size_t w = dim - out.equations.size();
  if (w == 0) return out;
  std::set<IntVec> found;
  for_each_subset(gens.size(), w - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVec> rows;
    rows.reserve(idx.size() + out.equations.size());
    for (auto i : idx) rows.push_back(gens[i]);
    for (const auto& e : out.equations) rows.push_back(e);
    std::vector<IntVec> ns = rows.empty() ? std::vector<IntVec>{} : nullspace(IntMat::from_rows(rows));
    if (rows.empty()) {
      // dim == 1 and w == 1: the only normal direction is +-1.
      ns.push_back(IntVec{BigInt(1)});
    }
    if (ns.size() != 1) return;
    IntVec a = primitive(ns[0]);
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      BigInt v = dot(a, g);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
      if (pos && neg) return;
    }
    if (pos) found.insert(a);
    else if (neg) found.insert(negated(a));
  });
  out.facets.assign(found.begin(), found.end());
  return out;
}

}  // namespace detail

/// A rational polyhedral cone in Q^dim.
///
/// Invariants: rays() are primitive, sorted and represent the extreme rays
/// modulo the lineality space; facets() are primitive normals inside the
/// linear span, so that the cone is { x : <f,x> >= 0 for f in facets,
/// <e,x> = 0 for e in equations }.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t dim, const std::vector<IntVec>& gens) {
    detail::check_dim(dim);
    for (const auto& g : gens)
      if (g.size() != dim) throw std::invalid_argument("Cone: generator of wrong dimension");
    Cone c;
    c.dim_ = dim;
    std::vector<IntVec> g = detail::clean_generators(gens);
    detail::DualData dd = detail::facets_of(dim, g);
    c.facets_ = std::move(dd.facets);
    c.equations_ = std::move(dd.equations);
    const std::size_t w = dim - c.equations_.size();
    // Lineality: the facet-tight part of the span.
    std::vector<IntVec> tight_rows = c.facets_;
    tight_rows.insert(tight_rows.end(), c.equations_.begin(), c.equations_.end());
    c.lineality_ = tight_rows.empty() ? integer_kernel(IntMat(0, dim)) : integer_kernel(IntMat::from_rows(tight_rows));
    if (c.lineality_.empty()) {
      for (const auto& v : g) {
        std::vector<IntVec> tight;
        for (const auto& f : c.facets_)
          if (dot(f, v) == 0) tight.push_back(f);
        if (rank_of(tight, dim) + 1 == w) c.rays_.push_back(v);
      }
    } else if (!c.facets_.empty()) {
      // Extreme rays modulo lineality are the facets of the dual cone.
      std::vector<IntVec> dual_gens = c.facets_;
      for (const auto& e : c.equations_) {
        dual_gens.push_back(e);
        dual_gens.push_back(detail::negated(e));
      }
      c.rays_ = detail::facets_of(dim, detail::clean_generators(dual_gens)).facets;
    }
    c.rays_ = detail::sorted_unique(std::move(c.rays_));
    return c;
  }

  static Cone from_generators(std::size_t dim, const std::vector<RatVec>& gens) {
    std::vector<IntVec> ig;
    for (const auto& g : gens)
      if (!is_zero(g)) ig.push_back(primitive(g));
    return from_generators(dim, ig);
  }

  /// The cone { x : <a,x> >= 0 (a in ineqs), <e,x> = 0 (e in eqs) }.
  static Cone from_inequalities(std::size_t dim, const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs) {
    detail::check_dim(dim);
    std::vector<IntVec> dual_gens = ineqs;
    for (const auto& e : eqs) {
      dual_gens.push_back(e);
      dual_gens.push_back(detail::negated(e));
    }
    detail::DualData dd = detail::facets_of(dim, detail::clean_generators(dual_gens));
    std::vector<IntVec> gens = dd.facets;
    for (const auto& l : dd.equations) {
      gens.push_back(l);
      gens.push_back(detail::negated(l));
    }
    return from_generators(dim, gens);
  }

  static Cone zero(std::size_t dim) { return from_generators(dim, std::vector<IntVec>{}); }

  static Cone full_space(std::size_t dim) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, BigInt(0));
      e[i] = 1;
      gens.push_back(e);
      gens.push_back(detail::negated(e));
    }
    return from_generators(dim, gens);
  }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& equations() const { return equations_; }

  std::size_t dimension() const { return dim_ - equations_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_trivial() const { return dimension() == 0; }

  /// Rays followed by +-lineality basis vectors.
  std::vector<IntVec> generators() const {
    std::vector<IntVec> g = rays_;
    for (const auto& l : lineality_) {
      g.push_back(l);
      g.push_back(detail::negated(l));
    }
    return g;
  }

  template <class Vec>
  bool contains(const Vec& x) const {
    for (const auto& e : equations_)
      if (sign_of(e, x) != 0) return false;
    for (const auto& f : facets_)
      if (sign_of(f, x) < 0) return false;
    return true;
  }

  template <class Vec>
  bool contains_in_relative_interior(const Vec& x) const {
    for (const auto& e : equations_)
      if (sign_of(e, x) != 0) return false;
    for (const auto& f : facets_)
      if (sign_of(f, x) <= 0) return false;
    return true;
  }

  bool contains(const Cone& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Sum of the rays; lies strictly inside every facet. Zero for cones without rays.
  IntVec relative_interior_point() const {
    IntVec p(dim_, BigInt(0));
    for (const auto& r : rays_)
      for (std::size_t i = 0; i < dim_; ++i) p[i] += r[i];
    return p;
  }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
    return a.lineality_ < b.lineality_;
  }

  std::string str() const {
    std::string s = "cone{";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (i) s += ",";
      s += to_string(rays_[i]);
    }
    if (!lineality_.empty()) {
      s += "; lin";
      for (const auto& l : lineality_) s += to_string(l);
    }
    return s + "}";
  }

 private:
  static int sign_of(const IntVec& a, const IntVec& x) {
    BigInt v = dot(a, x);
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
  }
  static int sign_of(const IntVec& a, const RatVec& x) { return dot(x, a).sign(); }

  std::size_t dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
};

/// Facet normals of cone(generators), lexicographically sorted primitive vectors.
/// For non-full-dimensional cones the normals are taken inside the linear span.
inline std::vector<IntVec> dual_description(std::size_t dim, const std::vector<IntVec>& generators) {
  return Cone::from_generators(dim, generators).facets();
}

inline Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionViolation("intersect: ambient dimensions differ");
  std::vector<IntVec> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<IntVec> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

/// Whether tau is a face of sigma. The smallest face of sigma containing tau is
/// cut out by the facets vanishing on tau; tau is a face iff it equals that face.
inline bool is_face_of(const Cone& tau, const Cone& sigma) {
  if (!sigma.contains(tau)) return false;
  std::vector<IntVec> vanishing;
  const auto tg = tau.generators();
  for (const auto& f : sigma.facets()) {
    bool all_zero = true;
    for (const auto& g : tg)
      if (dot(f, g) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) vanishing.push_back(f);
  }
  for (const auto& g : sigma.generators()) {
    bool on_face = true;
    for (const auto& f : vanishing)
      if (dot(f, g) != 0) {
        on_face = false;
        break;
      }
    if (on_face && !tau.contains(g)) return false;
  }
  return true;
}

/// True iff tau meets the relative interior of sigma (tau inside sigma).
/// Equivalent to: tau is not contained in any facet of sigma.
inline bool meets_relative_interior(const Cone& tau, const Cone& sigma) {
  const auto tg = tau.generators();
  for (const auto& f : sigma.facets()) {
    bool positive_somewhere = false;
    for (const auto& g : tg)
      if (dot(f, g) > 0) {
        positive_somewhere = true;
        break;
      }
    if (!positive_somewhere) return false;
  }
  return true;
}

}  // namespace gavkit
