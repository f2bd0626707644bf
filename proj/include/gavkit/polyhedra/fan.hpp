#pragma once

// Fans given by a ray matrix and maximal cones as index sets into its columns.

#include "gavkit/polyhedra/cone.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gavkit {

using IndexSet = std::vector<std::size_t>;

/// A (quasi)fan. Every maximal cone is cone(rays[i], i in set) + lin(lineality);
/// a non-empty lineality basis marks all cones as non-pointed.
class Fan {
 public:
  Fan() = default;

  /// Builds and validates a fan. Index sets are sorted; cones contained in
  /// another listed cone are dropped.
  Fan(std::size_t dim, std::vector<IntVec> rays, std::vector<IndexSet> cones, std::vector<IntVec> lineality = {},
      bool validate = true)
      : dim_(dim), rays_(std::move(rays)), lineality_(std::move(lineality)) {
    for (auto& r : rays_) {
      if (r.size() != dim_) throw InvalidData("Fan: ray of wrong dimension");
      if (is_zero(r)) throw InvalidData("Fan: zero ray");
      r = primitive(r);
    }
    for (auto& c : cones) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (auto i : c)
        if (i >= rays_.size()) throw InvalidData("Fan: cone index out of range");
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    for (std::size_t a = 0; a < cones.size(); ++a) {
      bool contained = false;
      for (std::size_t b = 0; b < cones.size() && !contained; ++b)
        if (a != b && std::includes(cones[b].begin(), cones[b].end(), cones[a].begin(), cones[a].end()))
          contained = true;
      if (!contained) cones_.push_back(cones[a]);
    }
    for (const auto& c : cones_) cone_cache_.push_back(make_cone(c));
    if (validate) check();
  }

  /// Collects the rays of the given cones (all sharing the same lineality) into a fan.
  static Fan from_cones(std::size_t dim, const std::vector<Cone>& cones, bool validate = true) {
    std::vector<IntVec> rays;
    std::map<IntVec, std::size_t> index;
    std::vector<IndexSet> sets;
    std::vector<IntVec> lin;
    for (const auto& c : cones) {
      if (c.ambient_dim() != dim) throw PreconditionViolation("Fan::from_cones: ambient dimension mismatch");
      if (sets.empty()) lin = c.lineality();
      else if (c.lineality() != lin) throw PreconditionViolation("Fan::from_cones: cones with different lineality");
      IndexSet s;
      for (const auto& r : c.rays()) {
        auto it = index.find(r);
        if (it == index.end()) {
          it = index.emplace(r, rays.size()).first;
          rays.push_back(r);
        }
        s.push_back(it->second);
      }
      sets.push_back(std::move(s));
    }
    return Fan(dim, std::move(rays), std::move(sets), std::move(lin), validate);
  }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IndexSet>& max_cones() const { return cones_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  bool is_pointed() const { return lineality_.empty(); }
  const Cone& cone(std::size_t k) const { return cone_cache_.at(k); }
  const std::vector<Cone>& cones() const { return cone_cache_; }

  IntMat ray_matrix() const { return IntMat::from_cols(rays_, dim_); }

  std::vector<IntVec> rays_of(const IndexSet& s) const {
    std::vector<IntVec> out;
    for (auto i : s) out.push_back(rays_[i]);
    return out;
  }

  /// Maximal cones as canonical Cone objects, sorted. Fan equality is set
  /// equality of these.
  std::vector<Cone> canonical_cones() const {
    std::vector<Cone> out = cone_cache_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool same_fan(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.canonical_cones() == b.canonical_cones();
  }

  std::string str() const {
    std::string s;
    for (const auto& c : canonical_cones()) s += c.str() + "\n";
    return s;
  }

 private:
  Cone make_cone(const IndexSet& s) const {
    std::vector<IntVec> g = rays_of(s);
    for (const auto& l : lineality_) {
      g.push_back(l);
      g.push_back(detail::negated(l));
    }
    return Cone::from_generators(dim_, g);
  }

  void check() const {
    for (std::size_t k = 0; k < cones_.size(); ++k) {
      const Cone& c = cone_cache_[k];
      if (c.lineality().size() != lineality_.size())
        throw InvalidData("Fan: cone " + std::to_string(k) + " has unexpected lineality");
      for (auto i : cones_[k]) {
        if (std::find(c.rays().begin(), c.rays().end(), rays_[i]) == c.rays().end() && is_pointed())
          throw InvalidData("Fan: ray " + std::to_string(i) + " is not extremal in cone " + std::to_string(k));
      }
    }
    for (std::size_t a = 0; a < cones_.size(); ++a)
      for (std::size_t b = a + 1; b < cones_.size(); ++b) {
        Cone t = intersect(cone_cache_[a], cone_cache_[b]);
        if (!is_face_of(t, cone_cache_[a]) || !is_face_of(t, cone_cache_[b]))
          throw InvalidData("Fan: cones " + std::to_string(a) + " and " + std::to_string(b) +
                            " do not intersect in a common face");
      }
  }

  std::size_t dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IndexSet> cones_;
  std::vector<IntVec> lineality_;
  std::vector<Cone> cone_cache_;
};

/// Facet-pairing completeness test: every maximal cone is full-dimensional,
/// every facet is shared with exactly one maximal cone on the other side, and
/// the cones are connected through facets.
inline bool is_complete(const Fan& fan) {
  const std::size_t d = fan.ambient_dim();
  const auto& cones = fan.cones();
  if (cones.empty()) return d == 0;
  for (const auto& c : cones)
    if (c.dimension() != d) return false;
  if (cones.size() == 1) return cones[0].facets().empty();
  std::vector<std::vector<std::size_t>> adj(cones.size());
  for (std::size_t a = 0; a < cones.size(); ++a) {
    for (const auto& f : cones[a].facets()) {
      std::size_t partners = 0;
      IntVec nf = detail::negated(f);
      for (std::size_t b = 0; b < cones.size(); ++b) {
        if (b == a) continue;
        if (std::find(cones[b].facets().begin(), cones[b].facets().end(), nf) == cones[b].facets().end()) continue;
        // Same hyperplane from the other side; check the facet cones coincide.
        bool same = true;
        for (const auto& g : cones[a].generators())
          if (dot(f, g) == 0 && !cones[b].contains(g)) same = false;
        for (const auto& g : cones[b].generators())
          if (dot(nf, g) == 0 && !cones[a].contains(g)) same = false;
        if (same) {
          ++partners;
          adj[a].push_back(b);
        }
      }
      if (partners != 1) return false;
    }
  }
  std::vector<bool> seen(cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (auto b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
}

/// Whether the union of `cones` equals `region`. Cones not of full dimension
/// in the region are ignored; every facet of a full one must either lie in the
/// boundary of the region or be shared with exactly one cone on the other side.
inline bool covers(const Cone& region, const std::vector<Cone>& cones) {
  const std::size_t w = region.dimension();
  std::vector<const Cone*> full;
  for (const auto& c : cones) {
    if (!region.contains(c)) return false;
    if (c.dimension() == w) full.push_back(&c);
  }
  if (full.empty()) return w == 0;
  for (std::size_t a = 0; a < full.size(); ++a) {
    for (const auto& f : full[a]->facets()) {
      std::vector<IntVec> face;
      for (const auto& g : full[a]->generators())
        if (dot(f, g) == 0) face.push_back(g);
      bool on_boundary = false;
      for (const auto& h : region.facets()) {
        bool all_zero = true;
        for (const auto& g : face)
          if (dot(h, g) != 0) all_zero = false;
        if (all_zero) on_boundary = true;
      }
      if (on_boundary) continue;
      IntVec nf = detail::negated(f);
      std::size_t partners = 0;
      for (std::size_t b = 0; b < full.size(); ++b) {
        if (b == a) continue;
        const auto& fb = full[b]->facets();
        if (std::find(fb.begin(), fb.end(), nf) == fb.end()) continue;
        bool same = true;
        for (const auto& g : face)
          if (!full[b]->contains(g)) same = false;
        for (const auto& g : full[b]->generators())
          if (dot(nf, g) == 0 && !full[a]->contains(g)) same = false;
        if (same) ++partners;
      }
      if (partners != 1) return false;
    }
  }
  return true;
}

/// Index of the toric anticanonical divisor: lcm over maximal cones of the
/// least m with <u, v> = -m solvable in integers on all rays v of the cone.
inline BigInt toric_gorenstein_index(const Fan& fan) {
  if (!is_complete(fan)) throw PreconditionViolation("toric_gorenstein_index: fan is not complete");
  BigInt idx = 1;
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
    std::vector<IntVec> rs = fan.rays_of(fan.max_cones()[k]);
    RatVec b(rs.size(), Rat(-1));
    auto m = min_integral_multiplier(IntMat::from_rows(rs, fan.ambient_dim()), b);
    if (!m) throw NotQGorensteinOnCone("anticanonical divisor is not Q-Cartier", fan.cone(k).str());
    idx = lcm(idx, *m);
  }
  return idx;
}

struct RefinedCone {
  Cone cone;
  std::size_t parent;  // index of the maximal cone of the input fan
  std::size_t piece;   // index into the piece list
};

/// Maximal cones among sigma ∩ p for sigma maximal in fan and p in pieces,
/// each tagged with one (parent, piece) pair containing it. Output order is
/// deterministic: by parent, then piece.
inline std::vector<RefinedCone> refine_cones(const Fan& fan, const std::vector<Cone>& pieces) {
  std::vector<RefinedCone> all;
  for (std::size_t k = 0; k < fan.cones().size(); ++k)
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      Cone t = intersect(fan.cone(k), pieces[p]);
      if (t.is_trivial()) continue;
      all.push_back({std::move(t), k, p});
    }
  std::vector<RefinedCone> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < all.size() && !drop; ++b) {
      if (a == b || !all[b].cone.contains(all[a].cone)) continue;
      // Strictly smaller, or equal and appearing later.
      if (!(all[a].cone == all[b].cone) || b < a) drop = true;
    }
    if (!drop) out.push_back(all[a]);
  }
  return out;
}

inline Fan refine_fan(const Fan& fan, const std::vector<Cone>& pieces) {
  std::vector<Cone> cs;
  for (auto& rc : refine_cones(fan, pieces)) cs.push_back(rc.cone);
  return Fan::from_cones(fan.ambient_dim(), cs);
}

}  // namespace gavkit
