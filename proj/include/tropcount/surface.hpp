#pragma once

// Toric Del Pezzo surfaces and very ample divisor classes, mapped to their
// Newton polygons.  The five families: the plane, the quadric P1 x P1, and
// the plane blown up at 1..3 generic points.

#include <sstream>
#include <stdexcept>
#include <string>

#include "tropcount/geometry.hpp"

namespace tropcount {

enum class SurfaceKind { p2, quadric, p1blow, p2blow, p3blow };

struct invalid_divisor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Divisor data per family:
//   p2       d            : d * line
//   quadric  (d1, d2)     : bidegree
//   p1blow   d; d1        : dL - d1 E1
//   p2blow   d; d1, d2    : dL - d1 E1 - d2 E2
//   p3blow   d; d1,d2,d3  : dL - d1 E1 - d2 E2 - d3 E3
// Blow-up multiplicities are kept sorted descending (permuting the E_k is a
// symmetry of the surface).
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::p2;
  long long d = 1, d1 = 0, d2 = 0, d3 = 0;

  static SurfaceSpec plane(long long d) { return {SurfaceKind::p2, d, 0, 0, 0}; }
  static SurfaceSpec quadric(long long d1, long long d2) { return {SurfaceKind::quadric, 0, d1, d2, 0}; }
  static SurfaceSpec blow1(long long d, long long d1) { return {SurfaceKind::p1blow, d, d1, 0, 0}; }
  static SurfaceSpec blow2(long long d, long long d1, long long d2) {
    if (d1 < d2) std::swap(d1, d2);
    return {SurfaceKind::p2blow, d, d1, d2, 0};
  }
  static SurfaceSpec blow3(long long d, long long d1, long long d2, long long d3) {
    if (d1 < d2) std::swap(d1, d2);
    if (d2 < d3) std::swap(d2, d3);
    if (d1 < d2) std::swap(d1, d2);
    return {SurfaceKind::p3blow, d, d1, d2, d3};
  }

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
    return a.kind == b.kind && a.d == b.d && a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3;
  }

  std::string str() const {
    std::ostringstream os;
    switch (kind) {
      case SurfaceKind::p2: os << "p2:" << d; break;
      case SurfaceKind::quadric: os << "quadric:" << d1 << "," << d2; break;
      case SurfaceKind::p1blow: os << "p1:" << d << ";" << d1; break;
      case SurfaceKind::p2blow: os << "p2b:" << d << ";" << d1 << "," << d2; break;
      case SurfaceKind::p3blow: os << "p3b:" << d << ";" << d1 << "," << d2 << "," << d3; break;
    }
    return os.str();
  }
};

// Grammar: "p2:d", "quadric:d1,d2", "p1:d;d1", "p2b:d;d1,d2", "p3b:d;d1,d2,d3".
inline SurfaceSpec parse_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw invalid_divisor("spec string needs '<surface>:<degrees>'");
  std::string name = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  for (char& ch : rest)
    if (ch == ';') ch = ',';
  std::vector<long long> ds;
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw invalid_divisor("empty degree in spec string");
    ds.push_back(std::stoll(tok));
  }
  auto want = [&](size_t n) {
    if (ds.size() != n) throw invalid_divisor("wrong number of degrees for surface '" + name + "'");
  };
  if (name == "p2") {
    want(1);
    return SurfaceSpec::plane(ds[0]);
  }
  if (name == "quadric") {
    want(2);
    return SurfaceSpec::quadric(ds[0], ds[1]);
  }
  if (name == "p1") {
    want(2);
    return SurfaceSpec::blow1(ds[0], ds[1]);
  }
  if (name == "p2b") {
    want(3);
    return SurfaceSpec::blow2(ds[0], ds[1], ds[2]);
  }
  if (name == "p3b") {
    want(4);
    return SurfaceSpec::blow3(ds[0], ds[1], ds[2], ds[3]);
  }
  throw invalid_divisor("unknown surface '" + name + "'");
}

// Quadratic Cremona transformation for the 3-point blow-up:
// d' = 2d - d1 - d2 - d3, d'_i = d - d_j - d_k.  Applied when the
// multiplicities sum past d; idempotent on the result.
inline SurfaceSpec cremona_normalize(const SurfaceSpec& s) {
  if (s.kind != SurfaceKind::p3blow) throw invalid_divisor("cremona_normalize expects a p3b spec");
  if (s.d1 + s.d2 + s.d3 <= s.d) return s;
  long long nd = 2 * s.d - s.d1 - s.d2 - s.d3;
  long long n1 = s.d - s.d2 - s.d3;
  long long n2 = s.d - s.d1 - s.d3;
  long long n3 = s.d - s.d1 - s.d2;
  if (nd <= 0 || n1 < 0 || n2 < 0 || n3 < 0)
    throw invalid_divisor("Cremona image of " + s.str() + " is not effective");
  return SurfaceSpec::blow3(nd, n1, n2, n3);
}

namespace detail {
inline Polygon make_polygon(std::vector<Pt> vs, const std::string& what) {
  // Merge coincident consecutive vertices (degenerate edge lengths from
  // boundary-value divisors), then insist on a strictly convex ccw result.
  std::vector<Pt> merged;
  for (Pt v : vs) {
    if (merged.empty() || merged.back() != v) merged.push_back(v);
  }
  while (merged.size() > 1 && merged.front() == merged.back()) merged.pop_back();
  if (merged.size() < 3 || !is_strictly_convex_ccw(merged))
    throw invalid_divisor(what + ": degenerate or non-convex Newton polygon");
  return Polygon{std::move(merged)};
}
}  // namespace detail

inline Polygon newton_polygon(const SurfaceSpec& s) {
  const long long d = s.d, d1 = s.d1, d2 = s.d2, d3 = s.d3;
  switch (s.kind) {
    case SurfaceKind::p2:
      if (d < 1) throw invalid_divisor("p2 needs d >= 1");
      return detail::make_polygon({{0, 0}, {d, 0}, {0, d}}, s.str());
    case SurfaceKind::quadric:
      if (d1 < 1 || d2 < 1) throw invalid_divisor("quadric needs d1, d2 >= 1");
      return detail::make_polygon({{0, 0}, {d1, 0}, {d1, d2}, {0, d2}}, s.str());
    case SurfaceKind::p1blow:
      if (d1 < 0 || d1 >= d) throw invalid_divisor("p1 blow-up needs d > d1 >= 0");
      return detail::make_polygon({{0, 0}, {d - d1, 0}, {d - d1, d1}, {0, d}}, s.str());
    case SurfaceKind::p2blow:
      if (d2 < 0 || d1 + d2 > d) throw invalid_divisor("p2 blow-up needs d1 + d2 <= d, d_i >= 0");
      return detail::make_polygon({{0, 0}, {d - d1, 0}, {d - d1, d1}, {d2, d - d2}, {0, d - d2}}, s.str());
    case SurfaceKind::p3blow:
      if (d3 < 0 || d1 + d2 > d || d1 + d3 > d || d2 + d3 > d)
        throw invalid_divisor("p3 blow-up needs pairwise d_i + d_j <= d, d_i >= 0");
      return detail::make_polygon(
          {{d3, 0}, {d - d1, 0}, {d - d1, d1}, {d2, d - d2}, {0, d - d2}, {0, d3}}, s.str());
  }
  throw invalid_divisor("unreachable");
}

// c1(Sigma)·D, from the divisor class alone (no lattice counting).
inline long long c1_dot_D(const SurfaceSpec& s) {
  switch (s.kind) {
    case SurfaceKind::p2: return 3 * s.d;
    case SurfaceKind::quadric: return 2 * (s.d1 + s.d2);
    case SurfaceKind::p1blow: return 3 * s.d - s.d1;
    case SurfaceKind::p2blow: return 3 * s.d - s.d1 - s.d2;
    case SurfaceKind::p3blow: return 3 * s.d - s.d1 - s.d2 - s.d3;
  }
  return 0;
}

// r(Delta) from lattice counting always equals c1·D - 1 from the divisor.
inline long long r_of(const SurfaceSpec& s) { return r_of(newton_polygon(s)); }

inline long long delta_of(const SurfaceSpec& s) { return delta_of(newton_polygon(s)); }

}  // namespace tropcount
