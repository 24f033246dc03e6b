#pragma once

// JSON schemas for reports, contribution records, classified subdivisions,
// paths, and tropical curves.  Field order is fixed (ordered_json) so that
// serialized output is byte-deterministic.

#include <json.hpp>

#include "tropcount/engine.hpp"
#include "tropcount/tropical.hpp"

namespace tropcount {

using Json = nlohmann::ordered_json;

inline Json to_json(Pt p) { return Json::array({p.i, p.j}); }

inline Json to_json(const Path& path) {
  Json arr = Json::array();
  for (Pt p : path) arr.push_back(to_json(p));
  return arr;
}

inline Path path_from_json(const Json& arr) {
  Path path;
  for (const auto& e : arr) path.push_back({e.at(0).get<long long>(), e.at(1).get<long long>()});
  return path;
}

inline Json to_json(const Cell& c) {
  Json j;
  j["kind"] = c.kind == CellKind::triangle ? "triangle" : "parallelogram";
  Json vs = Json::array();
  for (int k = 0; k < c.nv; ++k) vs.push_back(to_json(c.v[k]));
  j["vertices"] = vs;
  return j;
}

inline Json to_json(const CellList& cells) {
  Json arr = Json::array();
  for (const Cell& c : cells) arr.push_back(to_json(c));
  return arr;
}

// Classified subdivision record.
inline Json classified_json(const CellList& cells, long long r_delta) {
  Json j;
  j["cells"] = to_json(cells);
  j["rank"] = rank(cells);
  j["multiplicity"] = multiplicity(cells).to_i64();
  j["odd"] = is_odd(cells);
  j["sign"] = sign_of(cells);
  j["irreducible"] = is_irreducible(cells);
  j["genus"] = rank(cells) - r_delta;
  return j;
}

inline Json to_json(const Contribution& c, long long r_delta) {
  Json j;
  j["path_index"] = c.path_index;
  j["path"] = to_json(c.path);
  Json cls = classified_json(c.cells, r_delta);
  for (auto& [k, v] : cls.items()) j[k] = v;
  return j;
}

struct ReportRequest {
  std::string spec;
  long long genus = 0;
  std::string lambda;
  bool want_total = true, want_irreducible = true, want_welschinger = true;
};

inline Json report_json(const ReportRequest& rq, const CountReport& rep) {
  Json j;
  j["spec"] = rq.spec;
  j["genus"] = rq.genus;
  j["lambda"] = rq.lambda;
  Json counts;
  counts["complex_total"] = rq.want_total ? Json(rep.complex_total.to_i64()) : Json(nullptr);
  counts["complex_irreducible"] =
      rq.want_irreducible ? Json(rep.complex_irreducible.to_i64()) : Json(nullptr);
  counts["welschinger"] = rq.want_welschinger ? Json(rep.welschinger.to_i64()) : Json(nullptr);
  j["counts"] = counts;
  Json diag;
  diag["paths_enumerated"] = rep.diagnostics.paths_enumerated;
  diag["dead_ends"] = rep.diagnostics.dead_ends;
  diag["rank_violations"] = rep.diagnostics.rank_violations;
  diag["dedup_collisions"] = rep.diagnostics.dedup_collisions;
  diag["face_to_face_rejections"] = rep.diagnostics.face_to_face_rejections;
  j["diagnostics"] = diag;
  return j;
}

inline std::string rat_str(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline Rat rat_from_json(const Json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  std::string s = v.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline Json to_json(const TropicalCurve& curve) {
  Json j;
  Json vs = Json::array();
  for (const RatPt& v : curve.vertices) vs.push_back(Json::array({rat_str(v.x), rat_str(v.y)}));
  j["vertices"] = vs;
  Json be = Json::array();
  for (const auto& e : curve.bounded) {
    Json one;
    one["ends"] = Json::array({e.a, e.b});
    one["direction"] = to_json(e.dir);
    one["weight"] = e.weight;
    be.push_back(one);
  }
  j["bounded_edges"] = be;
  Json rays = Json::array();
  for (const auto& r : curve.rays) {
    Json one;
    one["vertex"] = r.a;
    one["direction"] = to_json(r.dir);
    one["weight"] = r.weight;
    rays.push_back(one);
  }
  j["rays"] = rays;
  return j;
}

}  // namespace tropcount
