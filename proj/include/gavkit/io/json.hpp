#pragma once

// JSON input documents and reports. Rationals travel as "p/q" strings,
// integers as JSON numbers when they fit in 64 bits and as strings otherwise.

#include "gavkit/acomplex/complex.hpp"
#include "gavkit/classify/box.hpp"
#include "gavkit/classify/pipeline.hpp"
#include "gavkit/core/fano.hpp"
#include "gavkit/tropical/trop.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gavkit {

using json = nlohmann::ordered_json;

inline json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}
inline json to_json(const Rat& x) { return x.str(); }
inline json to_json(std::size_t x) { return x; }
inline json to_json(long long x) { return x; }

template <class T>
json to_json(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

template <class T>
json to_json(const Matrix<T>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline BigInt bigint_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    Rat r;
    try {
      r = Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InvalidData(where + ": " + e.what());
    }
    if (!r.is_integer()) throw InvalidData(where + ": expected an integer");
    return r.num();
  }
  throw InvalidData(where + ": expected an integer");
}

inline Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InvalidData(where + ": " + e.what());
    }
  }
  throw InvalidData(where + ": expected a rational as \"p/q\" or an integer");
}

inline std::size_t size_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InvalidData(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidData(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline const json& array_field(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidData(where + ": expected an array");
  return j;
}

struct InputDocument {
  ArrangementData data;
  std::optional<std::vector<IndexSet>> fan;
};

inline InputDocument parse_input(const json& j) {
  if (!j.is_object()) throw InvalidData("input document must be a JSON object");
  InputDocument doc;
  ArrangementData& d = doc.data;
  d.r = size_from_json(field(j, "r"), "r");
  d.c = size_from_json(field(j, "c"), "c");
  d.m = j.contains("m") ? size_from_json(j.at("m"), "m") : 0;
  for (const auto& x : array_field(field(j, "n"), "n")) d.n.push_back(size_from_json(x, "n"));
  for (const auto& li : array_field(field(j, "l"), "l")) {
    IntVec v;
    for (const auto& x : array_field(li, "l")) v.push_back(bigint_from_json(x, "l"));
    d.l.push_back(std::move(v));
  }
  const json& A = array_field(field(j, "A"), "A");
  const std::size_t acols = A.empty() ? 0 : array_field(A[0], "A").size();
  d.A = RatMat(A.size(), acols);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (array_field(A[i], "A").size() != acols) throw InvalidData("A: rows of different length");
    for (std::size_t k = 0; k < acols; ++k) d.A(i, k) = rat_from_json(A[i][k], "A");
  }
  const json& D = array_field(field(j, "D"), "D");
  std::vector<IntVec> rows;
  for (const auto& row : D) {
    IntVec v;
    for (const auto& x : array_field(row, "D")) v.push_back(bigint_from_json(x, "D"));
    rows.push_back(std::move(v));
  }
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) throw InvalidData("D: rows of different length");
  std::size_t ncols = d.m;
  for (auto k : d.n) ncols += k;
  d.D = rows.empty() ? IntMat(0, ncols) : IntMat::from_rows(rows);
  d.check_shapes();
  if (j.contains("fan") && !j.at("fan").is_null()) {
    std::vector<IndexSet> cones;
    for (const auto& c : array_field(j.at("fan"), "fan")) {
      IndexSet s;
      for (const auto& x : array_field(c, "fan")) {
        std::size_t k = size_from_json(x, "fan");
        if (k >= d.num_columns()) throw InvalidData("fan: column index " + std::to_string(k) + " out of range");
        s.push_back(k);
      }
      cones.push_back(std::move(s));
    }
    doc.fan = std::move(cones);
  }
  return doc;
}

/// Parses text; syntax errors become InvalidData with the byte position.
inline InputDocument parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidData(std::string("parse error: ") + e.what());
  }
  return parse_input(j);
}

inline json to_json(const InputDocument& doc) {
  const ArrangementData& d = doc.data;
  json j;
  j["r"] = d.r;
  j["c"] = d.c;
  j["n"] = to_json(d.n);
  j["m"] = d.m;
  j["l"] = to_json(d.l);
  j["A"] = to_json(d.A);
  j["D"] = to_json(d.D);
  if (doc.fan) j["fan"] = to_json(*doc.fan);
  return j;
}

inline json cone_json(const Cone& c) {
  json j;
  j["rays"] = to_json(c.rays());
  j["lineality"] = to_json(c.lineality());
  j["dim"] = c.dimension();
  return j;
}

inline json labels_json(const ArrangementData& d, const IndexSet& cols) {
  json a = json::array();
  for (auto k : cols) a.push_back(d.label(k));
  return a;
}

inline json relations_json(const ArrangementData& d) {
  json a = json::array();
  for (const auto& rel : relations(d)) {
    json r;
    r["t"] = rel.t;
    r["blocks"] = to_json(rel.blocks);
    r["coefficients"] = to_json(rel.coefficients);
    a.push_back(r);
  }
  return a;
}

inline json k_element_json(const KElement& e) {
  json j;
  j["free"] = to_json(e.free);
  j["torsion"] = to_json(e.tors);
  return j;
}

inline json validate_report(const ArrangementData& d) {
  json j;
  auto v = validate(d);
  j["valid"] = v.empty();
  j["violations"] = v;
  return j;
}

inline json info_report(const ArrangementData& d) {
  json j;
  j["validation"] = validate_report(d);
  j["P"] = to_json(d.P());
  json labels = json::array();
  for (std::size_t k = 0; k < d.num_columns(); ++k) labels.push_back(d.label(k));
  j["labels"] = labels;
  j["relations"] = relations_json(d);
  DegreeData dd = degree_map(d);
  json K;
  K["free_rank"] = dd.free_rank;
  K["torsion"] = to_json(dd.torsion);
  K["Q_free"] = to_json(dd.Q_free);
  K["Q_torsion"] = to_json(dd.Q_tors);
  json degs = json::array();
  for (const auto& g : dd.degrees) degs.push_back(k_element_json(g));
  K["degrees"] = degs;
  K["relation_degree"] = k_element_json(dd.relation_degree);
  j["K"] = K;
  j["anticanonical"] = k_element_json(anticanonical_class(d, dd));
  try {
    j["moving_cone"] = cone_json(moving_cone(d, dd));
  } catch (const NotQuasiprojectiveSetup& e) {
    j["moving_cone"] = e.what();
  }
  FanoResult fr = is_fano(d, dd);
  j["fano"] = fr.fano;
  if (!fr.fano) j["fano_reason"] = fr.reason;
  return j;
}

/// The fan named in the document, or Sigma(-K). Throws NotAmple if X is not
/// Fano and no fan is given.
inline Fan resolve_fan(const InputDocument& doc) {
  if (doc.fan) return Fan(doc.data.ambient_dim(), doc.data.P_columns(), *doc.fan);
  FanoResult fr = is_fano(doc.data);
  if (!fr.fano) throw NotAmple("no fan given and X is not Fano: " + fr.reason);
  return *fr.fan;
}

inline json fan_json(const ArrangementData& d, const Fan& f) {
  TropStructure trop(d);
  json a = json::array();
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
    json c = cone_json(f.cone(k));
    c["columns"] = to_json(f.max_cones()[k]);
    c["labels"] = labels_json(d, f.max_cones()[k]);
    c["class"] = classify_cone(trop, f.cone(k)).str();
    a.push_back(c);
  }
  return a;
}

inline json fan_report(const InputDocument& doc) {
  Fan f = resolve_fan(doc);
  json j;
  j["source"] = doc.fan ? "input" : "Sigma(-K)";
  j["fan"] = fan_json(doc.data, f);
  Fan minimal = prune_to_minimal(TropStructure(doc.data), f);
  j["minimal_fan"] = fan_json(doc.data, minimal);
  return j;
}

inline json trop_report(const InputDocument& doc) {
  TropStructure trop(doc.data);
  json j;
  json leaves = json::array();
  for (const auto& I : trop.all_leaf_indices()) {
    json l = cone_json(trop.leaf(I));
    l["I"] = to_json(I);
    leaves.push_back(l);
  }
  j["leaves"] = leaves;
  Fan minimal = prune_to_minimal(trop, resolve_fan(doc));
  json cones = json::array();
  for (std::size_t k = 0; k < minimal.max_cones().size(); ++k) {
    json c;
    c["labels"] = labels_json(doc.data, minimal.max_cones()[k]);
    ConeClass cls = classify_cone(trop, minimal.cone(k));
    c["class"] = cls.str();
    if (cls.is_big()) {
      LinealityReport lr = check_big_cone_lineality(trop, minimal.cone(k));
      c["interior_meets_lineality"] = lr.interior_meets;
      c["lineality_intersection_dim"] = lr.dim;
    }
    cones.push_back(c);
  }
  j["minimal_fan"] = cones;
  return j;
}

inline json acomplex_report(const InputDocument& doc) {
  AnticanonicalComplex ac = build_complex(doc.data, resolve_fan(doc));
  DistanceReport dr = distance_report(ac);
  json j;
  j["complete"] = ac.complete;
  j["vertices"] = to_json(ac.vertex_set);
  json cells = json::array();
  for (std::size_t k = 0; k < ac.cells.size(); ++k) {
    const ComplexCell& c = ac.cells[k];
    json e;
    e["cone"] = cone_json(c.cone);
    e["parent"] = labels_json(doc.data, ac.sigma.max_cones()[c.parent]);
    e["leaf"] = to_json(c.leaf);
    e["u"] = to_json(c.support.u);
    e["vertices"] = to_json(c.cell.vertices);
    auto it = std::find(ac.boundary_cells.begin(), ac.boundary_cells.end(), k);
    e["boundary"] = it != ac.boundary_cells.end();
    if (it != ac.boundary_cells.end()) e["distance"] = to_json(dr.cell_distances[it - ac.boundary_cells.begin()]);
    cells.push_back(e);
  }
  j["cells"] = cells;
  j["gorenstein_index"] = to_json(dr.gorenstein_index);
  return j;
}

enum class IndexMethod { Complex, Cones, Both };

/// Index report; with Both, a disagreement throws InvariantBreach.
inline json gorenstein_report(const InputDocument& doc, IndexMethod method) {
  Fan f = resolve_fan(doc);
  json j;
  std::optional<BigInt> a, b;
  if (method != IndexMethod::Cones) {
    a = gorenstein_index_via_complex(build_complex(doc.data, f));
    j["via_complex"] = to_json(*a);
  }
  if (method != IndexMethod::Complex) {
    ConeIndexReport rep = gorenstein_index_via_cones(doc.data, f);
    b = rep.gorenstein_index;
    json table = json::array();
    for (std::size_t k = 0; k < rep.c_sigma.size(); ++k) {
      json row;
      row["labels"] = labels_json(doc.data, rep.sigma.max_cones()[k]);
      row["c_sigma"] = to_json(rep.c_sigma[k]);
      row["per_block"] = to_json(rep.per_block[k]);
      table.push_back(row);
    }
    j["c_sigma"] = table;
    j["via_cones"] = to_json(*b);
  }
  if (a && b && *a != *b) throw InvariantBreach("index methods disagree: " + a->str() + " vs " + b->str());
  j["gorenstein_index"] = to_json(a ? *a : *b);
  return j;
}

/// Bare-fan document for the toric oracle: {"dim": d, "rays": [...], "cones": [...]}.
inline Fan parse_toric_fan(const json& j) {
  if (!j.is_object()) throw InvalidData("toric document must be a JSON object");
  std::size_t dim = size_from_json(field(j, "dim"), "dim");
  std::vector<IntVec> rays;
  for (const auto& r : array_field(field(j, "rays"), "rays")) {
    IntVec v;
    for (const auto& x : array_field(r, "rays")) v.push_back(bigint_from_json(x, "rays"));
    if (v.size() != dim) throw InvalidData("rays: wrong dimension");
    rays.push_back(std::move(v));
  }
  std::vector<IndexSet> cones;
  for (const auto& c : array_field(field(j, "cones"), "cones")) {
    IndexSet s;
    for (const auto& x : array_field(c, "cones")) s.push_back(size_from_json(x, "cones"));
    cones.push_back(std::move(s));
  }
  return Fan(dim, rays, cones);
}

inline json candidate_json(const Candidate& c) {
  json j;
  j["setting"] = c.setting;
  j["params"] = to_json(c.params);
  json named;
  const auto& names = setting_spec(c.setting).names;
  for (std::size_t k = 0; k < names.size(); ++k) named[names[k]] = c.params[k];
  j["named"] = named;
  j["P"] = to_json(c.data.P());
  j["gorenstein_index"] = to_json(c.index);
  if (c.degrees) {
    json degs = json::array();
    for (const auto& g : c.degrees->degrees) degs.push_back(k_element_json(g));
    j["degrees"] = degs;
  }
  j["anticanonical"] = k_element_json(c.anticanonical);
  j["fingerprint"] = fingerprint(c.data, c.index).str();
  return j;
}

inline json classify_report(const ClassifyRun& run) {
  json j;
  j["index"] = run.iota;
  json settings = json::array();
  for (const auto& s : run.settings) {
    json e;
    e["setting"] = s.setting;
    e["enumerated"] = s.enumerated.size();
    e["accepted"] = s.accepted.size();
    json cands = json::array();
    for (const auto& c : s.accepted) cands.push_back(candidate_json(c));
    e["candidates"] = cands;
    json rej = json::array();
    for (const auto& r : s.rejected) {
      json x;
      x["params"] = to_json(r.params);
      x["reason"] = r.reason;
      rej.push_back(x);
    }
    e["rejections"] = rej;
    e["skipped"] = s.log.skipped;
    settings.push_back(e);
  }
  j["settings"] = settings;
  json groups = json::array();
  for (auto rep : run.groups.representatives) {
    json g;
    g["representative"] = rep;
    json members = json::array();
    for (std::size_t k = 0; k < run.groups.duplicate_of.size(); ++k)
      if (run.groups.duplicate_of[k] == rep && k != rep) members.push_back(k);
    g["potential_duplicates"] = members;
    groups.push_back(g);
  }
  j["fingerprint_groups"] = groups;
  j["total_accepted"] = run.all.size();
  j["distinct_fingerprints"] = run.groups.representatives.size();
  return j;
}

inline json box_report(int id, long long iota, long long B, const BoxResult& res) {
  json j;
  j["setting"] = id;
  j["index"] = iota;
  j["bound"] = B;
  j["screened"] = res.screened;
  j["accepted"] = to_json(res.accepted);
  json nf = json::array();
  std::set<Params> seen;
  for (const auto& p : res.accepted)
    if (seen.insert(normal_form(id, p)).second) nf.push_back(to_json(normal_form(id, p)));
  j["normal_forms"] = nf;
  return j;
}

}  // namespace gavkit
