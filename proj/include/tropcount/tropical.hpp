#pragma once

// Tropical curves from lift functions: the Legendre transform, its corner
// locus as a weighted balanced graph, the regular subdivision induced on the
// Newton polygon, and the duality check tying the two together.
//
// This module is not on the counting path (the path algorithm never builds a
// lift); it renders curves for arbitrary user lifts and cross-validates the
// dual-graph conventions used by the classifier.  All arithmetic is exact
// rational.

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <set>

#include "tropcount/geometry.hpp"

namespace tropcount {

using Rat = boost::rational<long long>;

struct RatPt {
  Rat x{0}, y{0};

  friend bool operator==(const RatPt& a, const RatPt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const RatPt& a, const RatPt& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend RatPt operator+(const RatPt& a, const RatPt& b) { return {a.x + b.x, a.y + b.y}; }
};

struct degenerate_support : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LiftFunction {
  std::vector<Pt> support;  // A, distinct points
  std::vector<Rat> values;  // nu per point

  void validate() const {
    if (support.size() != values.size()) throw std::invalid_argument("lift size mismatch");
    if (support.empty()) throw degenerate_support("empty support");
    PtSet seen;
    for (Pt p : support)
      if (!seen.insert(p).second) throw std::invalid_argument("repeated support point");
  }
};

// Legendre transform value max_{(i,j) in A} (i x + j y - nu(i,j)).
inline Rat legendre_value(const LiftFunction& f, const RatPt& at) {
  f.validate();
  std::optional<Rat> best;
  for (size_t k = 0; k < f.support.size(); ++k) {
    Rat v = Rat(f.support[k].i) * at.x + Rat(f.support[k].j) * at.y - f.values[k];
    if (!best || v > *best) best = v;
  }
  return *best;
}

struct TropicalCurve {
  struct BoundedEdge {
    int a, b;        // vertex indices
    Pt dir;          // primitive direction from a to b
    long long weight;
  };
  struct RayEdge {
    int a;
    Pt dir;  // primitive
    long long weight;
  };
  std::vector<RatPt> vertices;
  std::vector<BoundedEdge> bounded;
  std::vector<RayEdge> rays;
};

namespace detail {

inline Pt primitive(Pt v) {
  long long g = std::gcd(std::llabs(v.i), std::llabs(v.j));
  return g == 0 ? v : Pt{v.i / g, v.j / g};
}

struct LinePiece {
  Pt normal;        // primitive, sign-normalized; the line is <normal, z> = offset
  Rat offset;
  RatPt base;       // z0, canonical parametrization z(t) = base + t * dir
  Pt dir;           // rot90(normal), primitive
  bool lo_open, hi_open;  // unbounded ends
  Rat lo{0}, hi{0};
  Pt dual_a, dual_b;  // extreme support points across the edge
  long long weight;
};

}  // namespace detail

// The corner locus of the Legendre transform, assembled edge by edge from
// the tie loci of support-point pairs.  The dominating part of each tie line
// is a 1-dimensional LP over exact rationals; the weight across an edge is
// the lattice length between the extreme support points whose regions the
// edge separates.  Unbounded-on-both-sides pieces (collinear supports) are
// split at the parameter origin into two opposite rays.
inline TropicalCurve corner_locus(const LiftFunction& f) {
  f.validate();
  if (f.support.size() < 2) throw degenerate_support("corner locus needs at least two support points");
  const auto& A = f.support;
  const auto& nu = f.values;

  // Two pairs can tie along the same geometric line yet dominate on different
  // stretches of it, so pieces are keyed by line and parameter interval; only
  // genuinely identical pieces (collinear support families) deduplicate.
  using PieceKey = std::tuple<long long, long long, Rat, bool, Rat, bool, Rat>;
  std::map<PieceKey, detail::LinePiece> pieces;
  for (size_t a = 0; a < A.size(); ++a) {
    for (size_t b = a + 1; b < A.size(); ++b) {
      Pt w = A[a] - A[b];
      Rat rhs = nu[a] - nu[b];
      long long g = std::gcd(std::llabs(w.i), std::llabs(w.j));
      Pt n{w.i / g, w.j / g};
      Rat off = rhs / g;
      if (n.i < 0 || (n.i == 0 && n.j < 0)) {  // sign-normalize the line id
        n = Pt{-n.i, -n.j};
        off = -off;
      }

      detail::LinePiece piece;
      piece.normal = n;
      piece.offset = off;
      long long n2 = n.i * n.i + n.j * n.j;
      piece.base = RatPt{off * Rat(n.i) / n2, off * Rat(n.j) / n2};
      piece.dir = Pt{-n.j, n.i};

      bool feasible = true, lo_open = true, hi_open = true;
      Rat lo{0}, hi{0};
      for (size_t k = 0; k < A.size(); ++k) {
        if (k == a) continue;
        Pt dk = A[a] - A[k];
        // f_a(z) >= f_k(z) along z(t) = base + t*dir
        long long coef = dot(dk, piece.dir);
        Rat cons = (nu[a] - nu[k]) - (Rat(dk.i) * piece.base.x + Rat(dk.j) * piece.base.y);
        if (coef == 0) {
          if (cons > Rat(0)) {
            feasible = false;
            break;
          }
        } else if (coef > 0) {
          Rat bound = cons / coef;
          if (lo_open || bound > lo) lo = bound;
          lo_open = false;
        } else {
          Rat bound = cons / coef;
          if (hi_open || bound < hi) hi = bound;
          hi_open = false;
        }
      }
      if (!feasible) continue;
      if (!lo_open && !hi_open && lo >= hi) continue;  // empty or a single point

      // Extremes of the maximizer set at a relative-interior sample.
      Rat ts;
      if (!lo_open && !hi_open)
        ts = (lo + hi) / 2;
      else if (!lo_open)
        ts = lo + 1;
      else if (!hi_open)
        ts = hi - 1;
      else
        ts = Rat(0);
      RatPt zs{piece.base.x + ts * Rat(piece.dir.i), piece.base.y + ts * Rat(piece.dir.j)};
      Rat fmax = legendre_value(f, zs);
      std::vector<Pt> maximizers;
      for (size_t k = 0; k < A.size(); ++k) {
        Rat v = Rat(A[k].i) * zs.x + Rat(A[k].j) * zs.y - nu[k];
        if (v == fmax) maximizers.push_back(A[k]);
      }
      Pt axis = A[b] - A[a];
      auto along = [&](Pt p) { return dot(p - A[a], axis); };
      Pt pa = maximizers[0], pb = maximizers[0];
      for (Pt m : maximizers) {
        if (along(m) < along(pa)) pa = m;
        if (along(m) > along(pb)) pb = m;
      }
      piece.lo_open = lo_open;
      piece.hi_open = hi_open;
      piece.lo = lo_open ? Rat(0) : lo;
      piece.hi = hi_open ? Rat(0) : hi;
      piece.dual_a = pa;
      piece.dual_b = pb;
      piece.weight = lattice_length(pa, pb);
      pieces.insert({{n.i, n.j, off, lo_open, piece.lo, hi_open, piece.hi}, piece});
    }
  }

  TropicalCurve curve;
  std::map<RatPt, int> vid;
  auto vertex = [&](const RatPt& p) {
    auto [it, fresh] = vid.try_emplace(p, (int)curve.vertices.size());
    if (fresh) curve.vertices.push_back(p);
    return it->second;
  };
  auto at = [](const detail::LinePiece& pc, const Rat& t) {
    return RatPt{pc.base.x + t * Rat(pc.dir.i), pc.base.y + t * Rat(pc.dir.j)};
  };
  for (auto& [key, pc] : pieces) {
    if (!pc.lo_open && !pc.hi_open) {
      int va = vertex(at(pc, pc.lo));
      int vb = vertex(at(pc, pc.hi));
      curve.bounded.push_back({va, vb, pc.dir, pc.weight});
    } else if (!pc.lo_open) {
      curve.rays.push_back({vertex(at(pc, pc.lo)), pc.dir, pc.weight});
    } else if (!pc.hi_open) {
      curve.rays.push_back({vertex(at(pc, pc.hi)), Pt{-pc.dir.i, -pc.dir.j}, pc.weight});
    } else {
      int v0 = vertex(pc.base);
      curve.rays.push_back({v0, pc.dir, pc.weight});
      curve.rays.push_back({v0, Pt{-pc.dir.i, -pc.dir.j}, pc.weight});
    }
  }
  return curve;
}

// Sum of weight * primitive outgoing direction vanishes at every vertex.
inline bool balancing_check(const TropicalCurve& curve) {
  std::vector<Pt> sums(curve.vertices.size(), Pt{0, 0});
  for (const auto& e : curve.bounded) {
    sums[e.a] = sums[e.a] + Pt{e.weight * e.dir.i, e.weight * e.dir.j};
    sums[e.b] = sums[e.b] - Pt{e.weight * e.dir.i, e.weight * e.dir.j};
  }
  for (const auto& r : curve.rays)
    sums[r.a] = sums[r.a] + Pt{r.weight * r.dir.i, r.weight * r.dir.j};
  for (Pt s : sums)
    if (s != Pt{0, 0}) return false;
  return true;
}

// One cell of a regular subdivision: its vertex cycle plus the supporting
// plane nu = alpha*i + beta*j + c, whose gradient is the dual curve vertex.
struct HullCell {
  std::vector<Pt> points;  // ccw cycle (2 points when the support is collinear)
  Rat alpha, beta, c;
};

// Regular subdivision of Delta(A) from the lower hull of the lifted points
// (i, j, nu(i,j)).  Support points lying strictly above the hull appear in
// no cell.
inline std::vector<HullCell> regular_subdivision(const LiftFunction& f) {
  f.validate();
  const auto& A = f.support;
  const auto& nu = f.values;
  if (A.size() < 2) throw degenerate_support("subdivision needs at least two support points");

  bool collinear = true;
  for (size_t k = 2; k < A.size() && collinear; ++k)
    if (cross(A[1] - A[0], A[k] - A[0]) != 0) collinear = false;

  std::vector<HullCell> cells;
  if (collinear) {
    // 1-dimensional lower hull along the support line.
    Pt dir = detail::primitive(A.back() - A.front());
    std::vector<std::pair<long long, size_t>> order;
    for (size_t k = 0; k < A.size(); ++k) order.push_back({dot(A[k] - A[0], dir), k});
    std::sort(order.begin(), order.end());
    std::vector<size_t> hull;
    for (auto [t, k] : order) {
      while (hull.size() >= 2) {
        size_t p = hull[hull.size() - 2], q = hull[hull.size() - 1];
        Rat tp(dot(A[p] - A[0], dir)), tq(dot(A[q] - A[0], dir)), tk(dot(A[k] - A[0], dir));
        if ((nu[q] - nu[p]) * (tk - tq) <= (nu[k] - nu[q]) * (tq - tp)) break;
        hull.pop_back();
      }
      hull.push_back(k);
    }
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
      HullCell cell;
      cell.points = {A[hull[s]], A[hull[s + 1]]};
      cells.push_back(cell);
    }
    return cells;
  }

  std::set<std::vector<Pt>> seen;
  for (size_t a = 0; a < A.size(); ++a) {
    for (size_t b = a + 1; b < A.size(); ++b) {
      for (size_t c = b + 1; c < A.size(); ++c) {
        long long det = cross(A[b] - A[a], A[c] - A[a]);
        if (det == 0) continue;
        // Plane through the three lifted points.
        Rat va = nu[a], vb = nu[b], vc = nu[c];
        Pt ab = A[b] - A[a], ac = A[c] - A[a];
        Rat alpha = ((vb - va) * ac.j - (vc - va) * ab.j) / det;
        Rat beta = ((vc - va) * ab.i - (vb - va) * ac.i) / det;
        Rat cst = va - alpha * A[a].i - beta * A[a].j;
        bool lower = true;
        for (size_t k = 0; k < A.size() && lower; ++k)
          if (nu[k] < alpha * A[k].i + beta * A[k].j + cst) lower = false;
        if (!lower) continue;
        std::vector<Pt> face;
        for (size_t k = 0; k < A.size(); ++k)
          if (nu[k] == alpha * A[k].i + beta * A[k].j + cst) face.push_back(A[k]);
        Polygon hull = convex_hull(face);
        if (!seen.insert(hull.verts).second) continue;
        HullCell cell;
        cell.points = hull.verts;
        cell.alpha = alpha;
        cell.beta = beta;
        cell.c = cst;
        cells.push_back(cell);
      }
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const HullCell& x, const HullCell& y) { return x.points < y.points; });
  return cells;
}

// Duality between the corner locus and the regular subdivision of the same
// lift: cells correspond to curve vertices placed at the plane gradients,
// interior subdivision edges to bounded curve edges orthogonal to them with
// the lattice length as weight, boundary edges to rays along outward
// normals.  Both sides are computed independently; this compares them.
inline bool duality_check(const TropicalCurve& curve, const std::vector<HullCell>& cells) {
  if (cells.empty()) return false;
  for (const auto& cell : cells)
    if (cell.points.size() < 3) return false;  // collinear supports are out of scope here

  // Cell <-> vertex bijection via gradient positions.
  std::map<RatPt, int> cell_at;
  for (size_t k = 0; k < cells.size(); ++k) {
    RatPt g{cells[k].alpha, cells[k].beta};
    if (!cell_at.emplace(g, (int)k).second) return false;
    bool found = false;
    for (const RatPt& v : curve.vertices) found = found || v == g;
    if (!found) return false;
  }
  if (curve.vertices.size() != cells.size()) return false;

  // Edge incidence of the subdivision.
  std::map<std::pair<Pt, Pt>, std::vector<int>> edge_cells;
  for (size_t k = 0; k < cells.size(); ++k) {
    const auto& pts = cells[k].points;
    for (size_t e = 0; e < pts.size(); ++e) {
      Pt u = pts[e], v = pts[(e + 1) % pts.size()];
      if (v < u) std::swap(u, v);
      edge_cells[{u, v}].push_back((int)k);
    }
  }

  size_t expected_bounded = 0, expected_rays = 0;
  for (auto& [edge, inc] : edge_cells) {
    auto [u, v] = edge;
    long long w = lattice_length(u, v);
    if (inc.size() == 2) {
      ++expected_bounded;
      RatPt ga{cells[inc[0]].alpha, cells[inc[0]].beta};
      RatPt gb{cells[inc[1]].alpha, cells[inc[1]].beta};
      bool found = false;
      for (const auto& be : curve.bounded) {
        RatPt ca = curve.vertices[be.a], cb = curve.vertices[be.b];
        if (!((ca == ga && cb == gb) || (ca == gb && cb == ga))) continue;
        if (be.weight != w) continue;
        if (dot(be.dir, v - u) != 0) continue;  // dual directions are orthogonal
        found = true;
        break;
      }
      if (!found) return false;
    } else if (inc.size() == 1) {
      ++expected_rays;
      RatPt g{cells[inc[0]].alpha, cells[inc[0]].beta};
      bool found = false;
      for (const auto& ray : curve.rays) {
        if (!(curve.vertices[ray.a] == g)) continue;
        if (ray.weight != w) continue;
        if (dot(ray.dir, v - u) != 0) continue;
        // Outward: the ray must point away from the cell, i.e. against the
        // third-point side of the edge line.
        Pt inner = cells[inc[0]].points[0];
        for (Pt p : cells[inc[0]].points)
          if (!on_segment(p, u, v)) inner = p;
        long long side_in = cross(v - u, inner - u);
        long long side_ray = cross(v - u, ray.dir);
        if (side_in * side_ray >= 0) continue;
        found = true;
        break;
      }
      if (!found) return false;
    } else {
      return false;
    }
  }
  return curve.bounded.size() == expected_bounded && curve.rays.size() == expected_rays;
}

}  // namespace tropcount
