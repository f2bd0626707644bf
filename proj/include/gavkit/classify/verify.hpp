#pragma once

// Full verification of a candidate and fingerprint grouping of accepted ones.

#include "gavkit/acomplex/complex.hpp"
#include "gavkit/classify/settings.hpp"
#include "gavkit/core/fano.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gavkit {

struct Verdict {
  bool accepted = false;
  std::string reason;  // empty when accepted
  BigInt index = 0;    // the computed Gorenstein index, if it got that far
};

/// Accepted iff the data is valid, K has rank one, X is Fano, Sigma(-K)
/// pruned to the minimal fan equals `listed`, and both index computations
/// return `iota`. Rejection reasons: invalid_data, picard_rank, not_fano,
/// fan_mismatch, not_q_gorenstein, oracle_disagreement, index_mismatch:<v>.
inline Verdict verify(const ArrangementData& d, const Fan& listed, const BigInt& iota) {
  Verdict v;
  if (!validate(d).empty()) {
    v.reason = "invalid_data";
    return v;
  }
  DegreeData dd = degree_map(d);
  if (dd.free_rank != 1) {
    v.reason = "picard_rank";
    return v;
  }
  FanoResult fr = is_fano(d, dd);
  if (!fr.fano) {
    v.reason = "not_fano";
    return v;
  }
  TropStructure trop(d);
  Fan minimal;
  try {
    minimal = prune_to_minimal(trop, *fr.fan);
  } catch (const Error&) {
    v.reason = "fan_mismatch";
    return v;
  }
  if (!same_fan(minimal, listed)) {
    v.reason = "fan_mismatch";
    return v;
  }
  BigInt via_complex, via_cones;
  try {
    via_complex = gorenstein_index_via_complex(build_complex(d, listed));
    via_cones = gorenstein_index_via_cones(d, listed).gorenstein_index;
  } catch (const NotQGorenstein&) {
    v.reason = "not_q_gorenstein";
    return v;
  }
  if (via_complex != via_cones) {
    v.reason = "oracle_disagreement";
    return v;
  }
  v.index = via_cones;
  if (via_cones != iota) {
    v.reason = "index_mismatch:" + via_cones.str();
    return v;
  }
  v.accepted = true;
  return v;
}

struct Candidate {
  int setting = 0;
  Params params;
  ArrangementData data;
  Fan fan;
  std::optional<DegreeData> degrees;  // filled for accepted candidates
  KElement anticanonical;
  BigInt index = 0;
};

struct Rejection {
  int setting = 0;
  Params params;
  std::string reason;
};

/// Instantiates and verifies a tuple. Returns the candidate if accepted,
/// otherwise fills `rej`.
inline std::optional<Candidate> check_tuple(int id, const Params& p, const BigInt& iota, Rejection* rej = nullptr) {
  auto reject = [&](std::string why) -> std::optional<Candidate> {
    if (rej) *rej = {id, p, std::move(why)};
    return std::nullopt;
  };
  if (!satisfies_inequalities(id, p)) return reject("inequalities");
  std::optional<Instance> inst;
  try {
    inst = instantiate(id, p);
  } catch (const InvalidCandidate&) {
    return reject("invalid_data");
  }
  Verdict v = verify(inst->data, inst->fan, iota);
  if (!v.accepted) return reject(v.reason);
  Candidate c{id, p, std::move(inst->data), std::move(inst->fan), std::nullopt, {}, v.index};
  c.degrees = degree_map(c.data);
  c.anticanonical = anticanonical_class(c.data, *c.degrees);
  return c;
}

/// Invariants of the graded Cox ring that any isomorphism preserves.
struct Fingerprint {
  BigInt index;
  std::vector<BigInt> torsion;
  std::vector<IntVec> degrees;          // sorted generator degrees, free part
  std::vector<std::vector<BigInt>> exponents;  // sorted multiset of sorted l_i
  std::vector<std::size_t> blocks;      // sorted n_i, then m
  auto key() const { return std::tie(index, torsion, degrees, exponents, blocks); }
  bool operator<(const Fingerprint& o) const { return key() < o.key(); }
  bool operator==(const Fingerprint& o) const { return key() == o.key(); }

  std::string str() const {
    std::string s = "iota=" + index.str() + " deg=[";
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      s += k ? "," : "";
      for (std::size_t q = 0; q < degrees[k].size(); ++q) s += (q ? " " : "") + degrees[k][q].str();
    }
    s += "] l=[";
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      s += k ? ";" : "";
      for (std::size_t q = 0; q < exponents[k].size(); ++q) s += (q ? " " : "") + exponents[k][q].str();
    }
    s += "] n=[";
    for (std::size_t k = 0; k < blocks.size(); ++k) s += (k ? " " : "") + std::to_string(blocks[k]);
    s += "]";
    if (!torsion.empty()) {
      s += " tors=[";
      for (std::size_t k = 0; k < torsion.size(); ++k) s += (k ? " " : "") + torsion[k].str();
      s += "]";
    }
    return s;
  }
};

inline Fingerprint fingerprint(const ArrangementData& d, const BigInt& iota) {
  DegreeData dd = degree_map(d);
  Fingerprint f;
  f.index = iota;
  f.torsion = dd.torsion;
  for (const auto& g : dd.degrees) f.degrees.push_back(g.free);
  // Orient the free part so that -K is positive; rank one is the case of interest.
  KElement k = anticanonical_class(d, dd);
  if (k.free.size() == 1 && k.free[0] < 0)
    for (auto& g : f.degrees) g[0] = -g[0];
  std::sort(f.degrees.begin(), f.degrees.end());
  for (const auto& li : d.l) {
    std::vector<BigInt> e(li.begin(), li.end());
    std::sort(e.begin(), e.end());
    f.exponents.push_back(std::move(e));
  }
  std::sort(f.exponents.begin(), f.exponents.end());
  f.blocks = d.n;
  std::sort(f.blocks.begin(), f.blocks.end());
  f.blocks.push_back(d.m);
  return f;
}

struct DedupeResult {
  std::vector<std::size_t> representatives;  // indices into the input
  std::vector<std::size_t> duplicate_of;     // per input: index of its representative
};

/// Groups candidates by fingerprint; the first in input order represents the
/// group and the others are recorded as potential duplicates.
inline DedupeResult dedupe(const std::vector<Candidate>& cands) {
  DedupeResult res;
  std::map<Fingerprint, std::size_t> seen;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    auto [it, fresh] = seen.emplace(fingerprint(cands[k].data, cands[k].index), k);
    res.duplicate_of.push_back(it->second);
    if (fresh) res.representatives.push_back(k);
  }
  return res;
}

}  // namespace gavkit
