#pragma once

// The quasifan trop(X) = Sigma_{P^r}^{<=c} x Q^s, leaf/big classification of
// cones and pruning to the minimal ambient fan.

#include "gavkit/core/arrangement.hpp"
#include "gavkit/polyhedra/fan.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gavkit {

class TropStructure {
 public:
  TropStructure(std::size_t r, std::size_t c, std::size_t s) : r_(r), c_(c), s_(s) {
    if (c == 0 || r < c) throw PreconditionViolation("TropStructure: require r >= c > 0");
  }
  explicit TropStructure(const ArrangementData& d) : TropStructure(d.r, d.c, d.s()) {}

  std::size_t r() const { return r_; }
  std::size_t c() const { return c_; }
  std::size_t s() const { return s_; }
  std::size_t dim() const { return r_ + s_; }

  /// e_0 = -(e_1 + ... + e_r); e_i for 1 <= i <= r+s.
  IntVec e(std::size_t i) const {
    IntVec v(dim(), BigInt(0));
    if (i == 0)
      for (std::size_t k = 0; k < r_; ++k) v[k] = -1;
    else
      v[i - 1] = 1;
    return v;
  }

  std::vector<IntVec> lineality_basis() const {
    std::vector<IntVec> b;
    for (std::size_t k = 0; k < s_; ++k) b.push_back(e(r_ + 1 + k));
    return b;
  }

  /// lambda_I = cone(e_i; i in I) + lin(e_{r+1}, ..., e_{r+s}).
  Cone leaf(const IndexSet& I) const {
    if (I.size() > c_) throw PreconditionViolation("leaf: |I| exceeds the complexity");
    std::vector<IntVec> g;
    for (auto i : I) {
      if (i > r_) throw PreconditionViolation("leaf: index out of range");
      g.push_back(e(i));
    }
    for (const auto& l : lineality_basis()) {
      g.push_back(l);
      g.push_back(detail::negated(l));
    }
    return Cone::from_generators(dim(), g);
  }

  Cone lineality() const { return leaf({}); }

  /// All I with |I| = k, lexicographically.
  std::vector<IndexSet> leaf_indices(std::size_t k) const {
    std::vector<IndexSet> out;
    detail::for_each_subset(r_ + 1, k, [&](const IndexSet& idx) { out.push_back(idx); });
    return out;
  }

  /// Leaves of dimension 1..c, ordered by size then lexicographically.
  std::vector<IndexSet> all_leaf_indices() const {
    std::vector<IndexSet> out;
    for (std::size_t k = 1; k <= c_; ++k) {
      auto v = leaf_indices(k);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  /// Support in the P^r fan of the first r coordinates: the minimal I with x in lambda_I
  /// (ignoring the bound |I| <= c).
  template <class Vec>
  IndexSet support(const Vec& x) const {
    using T = typename Vec::value_type;
    T mn = T(0);
    for (std::size_t k = 0; k < r_; ++k)
      if (x[k] < mn) mn = x[k];
    T t0 = -mn;
    IndexSet I;
    if (t0 > T(0)) I.push_back(0);
    for (std::size_t k = 0; k < r_; ++k)
      if (x[k] + t0 > T(0)) I.push_back(k + 1);
    return I;
  }

  template <class Vec>
  bool in_trop(const Vec& x) const {
    return support(x).size() <= c_;
  }

 private:
  std::size_t r_, c_, s_;
};

enum class ConeKind { Leaf, Big, ElementaryBig };

struct ConeClass {
  ConeKind kind = ConeKind::Leaf;
  IndexSet leaf;  // minimal I with sigma in lambda_I, for Leaf

  bool is_leaf() const { return kind == ConeKind::Leaf; }
  bool is_big() const { return kind != ConeKind::Leaf; }
  std::string str() const {
    if (kind == ConeKind::Big) return "big";
    if (kind == ConeKind::ElementaryBig) return "elementary big";
    std::string s = "leaf{";
    for (std::size_t k = 0; k < leaf.size(); ++k) s += (k ? "," : "") + std::to_string(leaf[k]);
    return s + "}";
  }
};

/// sigma ∩ lambda_i° != ∅ for the 1-leaf lambda_i.
inline bool meets_one_leaf_interior(const TropStructure& trop, const Cone& sigma, std::size_t i) {
  Cone tau = intersect(sigma, trop.leaf({i}));
  for (const auto& g : tau.generators()) {
    auto I = trop.support(g);
    if (I.size() == 1 && I[0] == i) return true;
  }
  return false;
}

inline ConeClass classify_cone(const TropStructure& trop, const Cone& sigma) {
  if (sigma.ambient_dim() != trop.dim()) throw PreconditionViolation("classify_cone: dimension mismatch");
  std::set<std::size_t> uni;
  for (const auto& g : sigma.generators())
    for (auto i : trop.support(g)) uni.insert(i);
  ConeClass cls;
  if (uni.size() <= trop.c()) {
    cls.kind = ConeKind::Leaf;
    cls.leaf.assign(uni.begin(), uni.end());
    for (std::size_t k = 0; k < cls.leaf.size(); ++k) {
      IndexSet smaller = cls.leaf;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      if (trop.leaf(smaller).contains(sigma)) throw InvariantBreach("classify_cone: leaf index set is not minimal");
    }
    return cls;
  }
  for (std::size_t i = 0; i <= trop.r(); ++i)
    if (!meets_one_leaf_interior(trop, sigma, i))
      throw MalformedFanCone("cone " + sigma.str() + " is neither a leaf cone nor a big cone");
  cls.kind = ConeKind::Big;
  bool elementary = true;
  for (std::size_t i = 0; i <= trop.r() && elementary; ++i) {
    std::size_t count = 0;
    for (const auto& g : sigma.rays()) {
      auto I = trop.support(g);
      if (I.size() == 1 && I[0] == i) ++count;
    }
    if (count != 1) elementary = false;
  }
  if (elementary) cls.kind = ConeKind::ElementaryBig;
  return cls;
}

/// Relative interior of sigma meets |trop(X)|; checked on the maximal leaves.
inline bool interior_meets_trop(const TropStructure& trop, const Cone& sigma) {
  for (const auto& I : trop.leaf_indices(trop.c()))
    if (meets_relative_interior(intersect(sigma, trop.leaf(I)), sigma)) return true;
  return false;
}

/// Repeatedly removes maximal cones whose relative interior misses trop(X).
/// A removed cone hands down those facets not lying in another kept cone;
/// deeper faces only matter once their facets are removed in turn.
inline Fan prune_to_minimal(const TropStructure& trop, const Fan& fan) {
  auto in_other = [](const std::set<IndexSet>& cones, const IndexSet& s) {
    for (const auto& o : cones)
      if (o.size() > s.size() && std::includes(o.begin(), o.end(), s.begin(), s.end())) return true;
    return false;
  };
  std::set<IndexSet> kept;
  std::vector<IndexSet> work(fan.max_cones().begin(), fan.max_cones().end());
  std::set<IndexSet> seen(work.begin(), work.end());
  std::vector<IndexSet> removed;
  while (!work.empty()) {
    for (const auto& s : work) {
      if (s.empty()) continue;
      Cone c = Cone::from_generators(fan.ambient_dim(), fan.rays_of(s));
      if (interior_meets_trop(trop, c)) {
        kept.insert(s);
        continue;
      }
      for (const auto& f : c.facets()) {
        IndexSet face;
        for (auto i : s)
          if (dot(f, fan.rays()[i]) == 0) face.push_back(i);
        if (seen.insert(face).second) removed.push_back(face);
      }
    }
    // a candidate is maximal once no kept or pending candidate contains it
    std::set<IndexSet> others(kept.begin(), kept.end());
    others.insert(removed.begin(), removed.end());
    work.clear();
    std::vector<IndexSet> rest;
    for (const auto& f : removed) (in_other(others, f) ? rest : work).push_back(f);
    removed = std::move(rest);
  }
  // a subfan of a valid fan needs no second face check
  std::vector<IndexSet> out(kept.begin(), kept.end());
  return Fan(fan.ambient_dim(), fan.rays(), out, fan.lineality(), false);
}

struct LinealityReport {
  bool interior_meets = false;  // sigma° ∩ lambda_lin != ∅
  std::size_t dim = 0;          // dim(sigma ∩ lambda_lin)
  bool full = false;            // dim == s
};

inline LinealityReport check_big_cone_lineality(const TropStructure& trop, const Cone& sigma) {
  if (!classify_cone(trop, sigma).is_big()) throw PreconditionViolation("check_big_cone_lineality: cone is not big");
  Cone tau = intersect(sigma, trop.lineality());
  LinealityReport rep;
  rep.interior_meets = meets_relative_interior(tau, sigma);
  rep.dim = tau.dimension();
  rep.full = rep.dim == trop.s();
  return rep;
}

}  // namespace gavkit
