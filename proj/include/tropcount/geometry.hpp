#pragma once

// Exact integer planar lattice geometry: points, segments, convex polygons,
// areas, lattice point enumeration.  Everything is integer arithmetic; areas
// are normalized (twice Euclidean) so the smallest lattice triangle has area 1
// and all downstream multiplicities stay integral.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tropcount/util.hpp"

namespace tropcount {

struct Pt {
  long long i = 0;  // exponent of x
  long long j = 0;  // exponent of y

  friend Pt operator+(Pt a, Pt b) { return {a.i + b.i, a.j + b.j}; }
  friend Pt operator-(Pt a, Pt b) { return {a.i - b.i, a.j - b.j}; }
  friend bool operator==(Pt a, Pt b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(Pt a, Pt b) { return !(a == b); }
  friend bool operator<(Pt a, Pt b) { return a.i < b.i || (a.i == b.i && a.j < b.j); }
};

inline long long cross(Pt a, Pt b) { return a.i * b.j - a.j * b.i; }
inline long long dot(Pt a, Pt b) { return a.i * b.i + a.j * b.j; }

struct PtHash {
  std::size_t operator()(Pt p) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = hash_mix(h, std::uint64_t(p.i));
    h = hash_mix(h, std::uint64_t(p.j));
    return std::size_t(h);
  }
};

using PtSet = std::unordered_set<Pt, PtHash>;

// Number of lattice points on the open segment (a,b) is lattice_length-1.
inline long long lattice_length(Pt a, Pt b) {
  long long di = std::llabs(b.i - a.i), dj = std::llabs(b.j - a.j);
  return std::gcd(di, dj);
}

inline bool on_segment(Pt p, Pt a, Pt b) {
  if (cross(b - a, p - a) != 0) return false;
  return dot(p - a, b - p) >= 0;
}

inline bool strictly_inside_segment(Pt p, Pt a, Pt b) {
  return on_segment(p, a, b) && p != a && p != b;
}

enum class Side { plus_side, minus_side };  // plus = region left of the path, minus = right

// True iff the region lying on `side` of the path prev -> v -> next has an
// interior angle < pi at v.  Collinear triples give exactly pi on both sides.
inline bool interior_angle_lt_pi(Pt prev, Pt v, Pt next, Side side) {
  long long c = cross(v - prev, next - v);
  return side == Side::plus_side ? c > 0 : c < 0;
}

// Convex lattice polygon, vertices counterclockwise, no three consecutive
// collinear vertices.  Degenerate inputs (fewer than 3 distinct points) are
// rejected at construction; compression handles its empty-region boundary
// case without ever building a degenerate polygon.
struct Polygon {
  std::vector<Pt> verts;

  Polygon() = default;
  explicit Polygon(std::vector<Pt> v) : verts(std::move(v)) {}
};

// Shoelace sum = twice the signed Euclidean area; positive for ccw.
inline long long signed_area2(const std::vector<Pt>& vs) {
  long long s = 0;
  for (size_t k = 0; k < vs.size(); ++k) {
    Pt a = vs[k], b = vs[(k + 1) % vs.size()];
    s += cross(a, b);
  }
  return s;
}

inline long long normalized_area(const Polygon& p) {
  long long s = signed_area2(p.verts);
  return s < 0 ? -s : s;
}

inline bool is_strictly_convex_ccw(const std::vector<Pt>& vs) {
  size_t n = vs.size();
  if (n < 3) return false;
  for (size_t k = 0; k < n; ++k) {
    Pt a = vs[k], b = vs[(k + 1) % n], c = vs[(k + 2) % n];
    if (cross(b - a, c - b) <= 0) return false;
  }
  return true;
}

inline void validate_polygon(const Polygon& p) {
  if (!is_strictly_convex_ccw(p.verts)) throw std::invalid_argument("polygon is not strictly convex ccw");
}

// Boundary-inclusive containment test for a ccw convex polygon.
inline bool contains(const Polygon& p, Pt q) {
  size_t n = p.verts.size();
  for (size_t k = 0; k < n; ++k) {
    if (cross(p.verts[(k + 1) % n] - p.verts[k], q - p.verts[k]) < 0) return false;
  }
  return true;
}

inline bool strictly_contains(const Polygon& p, Pt q) {
  size_t n = p.verts.size();
  for (size_t k = 0; k < n; ++k) {
    if (cross(p.verts[(k + 1) % n] - p.verts[k], q - p.verts[k]) <= 0) return false;
  }
  return true;
}

// All lattice points on the boundary, in ccw order starting from verts[0],
// each exactly once.
inline std::vector<Pt> boundary_lattice_points(const Polygon& p) {
  std::vector<Pt> out;
  size_t n = p.verts.size();
  for (size_t k = 0; k < n; ++k) {
    Pt a = p.verts[k], b = p.verts[(k + 1) % n];
    long long g = lattice_length(a, b);
    Pt step{(b.i - a.i) / g, (b.j - a.j) / g};
    for (long long t = 0; t < g; ++t) out.push_back({a.i + t * step.i, a.j + t * step.j});
  }
  return out;
}

inline std::vector<Pt> interior_lattice_points(const Polygon& p) {
  long long ilo = p.verts[0].i, ihi = ilo, jlo = p.verts[0].j, jhi = jlo;
  for (Pt v : p.verts) {
    ilo = std::min(ilo, v.i);
    ihi = std::max(ihi, v.i);
    jlo = std::min(jlo, v.j);
    jhi = std::max(jhi, v.j);
  }
  std::vector<Pt> out;
  for (long long i = ilo; i <= ihi; ++i)
    for (long long j = jlo; j <= jhi; ++j)
      if (strictly_contains(p, {i, j})) out.push_back({i, j});
  return out;
}

// Boundary + interior, sorted λ0-style (by i, then by -j) for determinism.
inline std::vector<Pt> all_lattice_points(const Polygon& p) {
  std::vector<Pt> out = boundary_lattice_points(p);
  auto inner = interior_lattice_points(p);
  out.insert(out.end(), inner.begin(), inner.end());
  std::sort(out.begin(), out.end(), [](Pt a, Pt b) {
    return a.i < b.i || (a.i == b.i && a.j > b.j);
  });
  return out;
}

// r(Delta) = #(boundary lattice points) - 1; the number of point conditions
// that pin a rational curve with this Newton polygon.
inline long long r_of(const Polygon& delta) {
  return (long long)boundary_lattice_points(delta).size() - 1;
}

// delta(Delta) = #(interior lattice points) = genus of smooth members.
inline long long delta_of(const Polygon& delta) {
  return (long long)interior_lattice_points(delta).size();
}

inline Polygon convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n < 3) throw std::invalid_argument("convex hull needs >= 3 distinct points");
  std::vector<Pt> h(2 * n);
  size_t k = 0;
  for (size_t a = 0; a < n; ++a) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[a] - h[k - 1]) <= 0) --k;
    h[k++] = pts[a];
  }
  size_t lower = k + 1;
  for (size_t a = n - 1; a-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[a] - h[k - 1]) <= 0) --k;
    h[k++] = pts[a];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw std::invalid_argument("points are collinear");
  return Polygon{std::move(h)};
}

enum class CellKind { triangle, parallelogram };

// Subdivision cell: a lattice triangle, or a parallelogram with the cyclic
// vertex order v0 v1 v2 v3 satisfying v0 + v2 = v1 + v3.
struct Cell {
  CellKind kind;
  std::array<Pt, 4> v{};
  int nv = 0;

  static Cell triangle(Pt a, Pt b, Pt c) {
    Cell cell{CellKind::triangle, {a, b, c, Pt{}}, 3};
    cell.canonicalize();
    return cell;
  }

  static Cell parallelogram(Pt a, Pt b, Pt c, Pt d) {
    Cell cell{CellKind::parallelogram, {a, b, c, d}, 4};
    cell.canonicalize();
    return cell;
  }

  // ccw orientation, minimal vertex first.  Makes cell lists comparable.
  void canonicalize() {
    std::vector<Pt> vs(v.begin(), v.begin() + nv);
    if (signed_area2(vs) < 0) std::reverse(vs.begin(), vs.end());
    int best = 0;
    for (int k = 1; k < nv; ++k)
      if (vs[k] < vs[best]) best = k;
    for (int k = 0; k < nv; ++k) v[k] = vs[(best + k) % nv];
  }

  long long area() const {
    std::vector<Pt> vs(v.begin(), v.begin() + nv);
    long long s = signed_area2(vs);
    return s < 0 ? -s : s;
  }

  long long boundary_point_count() const {
    long long b = 0;
    for (int k = 0; k < nv; ++k) b += lattice_length(v[k], v[(k + 1) % nv]);
    return b;
  }

  // Pick's theorem: normalized area = 2*interior + boundary - 2.
  long long interior_point_count() const {
    return (area() - boundary_point_count() + 2) / 2;
  }

  friend bool operator==(const Cell& a, const Cell& b) {
    if (a.kind != b.kind || a.nv != b.nv) return false;
    for (int k = 0; k < a.nv; ++k)
      if (a.v[k] != b.v[k]) return false;
    return true;
  }
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.nv != b.nv) return a.nv < b.nv;
    for (int k = 0; k < a.nv; ++k) {
      if (a.v[k] != b.v[k]) return a.v[k] < b.v[k];
    }
    return false;
  }
};

inline void validate_cell(const Cell& c, std::string_view what = "cell") {
  if (c.kind == CellKind::triangle) {
    if (c.nv != 3 || c.area() == 0) throw std::invalid_argument(std::string(what) + ": degenerate triangle");
  } else {
    if (c.nv != 4 || c.v[0] + c.v[2] != c.v[1] + c.v[3] || c.area() == 0)
      throw std::invalid_argument(std::string(what) + ": not a parallelogram");
  }
}

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = hash_mix(h, std::uint64_t(c.nv));
    for (int k = 0; k < c.nv; ++k) {
      h = hash_mix(h, std::uint64_t(c.v[k].i));
      h = hash_mix(h, std::uint64_t(c.v[k].j));
    }
    return std::size_t(h);
  }
};

using CellList = std::vector<Cell>;

inline void canonicalize_cell_list(CellList& cells) { std::sort(cells.begin(), cells.end()); }

struct CellListHash {
  std::size_t operator()(const CellList& cells) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    CellHash ch;
    for (const Cell& c : cells) h = hash_mix(h, ch(c));
    return std::size_t(h);
  }
};

// Integer 2x2 map with |det| = 1 plus translation; used by tests to check
// unimodular invariance of areas and classifications.
struct Unimodular {
  long long a = 1, b = 0, c = 0, d = 1;
  Pt shift{0, 0};

  Pt operator()(Pt p) const { return {a * p.i + b * p.j + shift.i, c * p.i + d * p.j + shift.j}; }
  long long det() const { return a * d - b * c; }
};

inline Polygon apply(const Unimodular& m, const Polygon& p) {
  std::vector<Pt> vs;
  vs.reserve(p.verts.size());
  for (Pt v : p.verts) vs.push_back(m(v));
  if (signed_area2(vs) < 0) std::reverse(vs.begin(), vs.end());
  return Polygon{std::move(vs)};
}

inline Cell apply(const Unimodular& m, const Cell& c) {
  if (c.kind == CellKind::triangle) return Cell::triangle(m(c.v[0]), m(c.v[1]), m(c.v[2]));
  return Cell::parallelogram(m(c.v[0]), m(c.v[1]), m(c.v[2]), m(c.v[3]));
}

}  // namespace tropcount
