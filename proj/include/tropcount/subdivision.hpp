#pragma once

// Classification of assembled subdivisions: nodality, rank, multiplicity,
// oddness, Welschinger sign, genus, irreducibility.

#include <numeric>
#include <unordered_map>
#include <vector>

#include "tropcount/compression.hpp"

namespace tropcount {

struct Subdivision {
  const Polygon* ambient = nullptr;
  CellList cells;      // canonical order
  const Path* provenance = nullptr;
};

// Nodality of the assembled subdivision.  Cells are triangles and
// parallelograms by construction; what remains is that every boundary
// lattice point of Delta is a cell vertex and that cells meet face to face.
// The latter is equivalent, for interior-disjoint convex cells, to no cell
// vertex lying strictly inside another cell's edge.  `face_to_face_failed`
// is set when only that final test rejects; the counter is expected to stay
// at zero on every workload.
struct NodalityCheck {
  bool nodal = false;
  bool face_to_face_failed = false;
};

inline std::vector<Pt> subdivision_vertices(const CellList& cells) {
  std::vector<Pt> vs;
  for (const Cell& c : cells)
    for (int k = 0; k < c.nv; ++k) vs.push_back(c.v[k]);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline NodalityCheck check_nodal(const CellList& cells, const std::vector<Pt>& delta_boundary) {
  NodalityCheck res;
  if (cells.empty()) return res;
  auto verts = subdivision_vertices(cells);
  PtSet vset(verts.begin(), verts.end());
  for (Pt b : delta_boundary)
    if (!vset.count(b)) return res;
  for (const Cell& c : cells) {
    for (int e = 0; e < c.nv; ++e) {
      Pt a = c.v[e], b = c.v[(e + 1) % c.nv];
      long long lo_i = std::min(a.i, b.i), hi_i = std::max(a.i, b.i);
      long long lo_j = std::min(a.j, b.j), hi_j = std::max(a.j, b.j);
      for (Pt w : verts) {
        if (w.i < lo_i || w.i > hi_i || w.j < lo_j || w.j > hi_j) continue;
        if (strictly_inside_segment(w, a, b)) {
          res.face_to_face_failed = true;
          return res;
        }
      }
    }
  }
  res.nodal = true;
  return res;
}

inline bool is_nodal(const Subdivision& s) {
  return check_nodal(s.cells, boundary_lattice_points(*s.ambient)).nodal;
}

inline long long parallelogram_count(const CellList& cells) {
  long long n = 0;
  for (const Cell& c : cells)
    if (c.kind == CellKind::parallelogram) ++n;
  return n;
}

// rank = #vertices - #parallelograms - 1.
inline long long rank(const CellList& cells) {
  return (long long)subdivision_vertices(cells).size() - parallelogram_count(cells) - 1;
}
inline long long rank(const Subdivision& s) { return rank(s.cells); }

// Product of normalized triangle areas; the weight of the subdivision in
// complex counts.  Empty product is 1.
inline Int128 multiplicity(const CellList& cells) {
  Int128 mu{1};
  for (const Cell& c : cells)
    if (c.kind == CellKind::triangle) mu *= Int128{c.area()};
  return mu;
}
inline Int128 multiplicity(const Subdivision& s) { return multiplicity(s.cells); }

inline bool is_odd(const CellList& cells) {
  for (const Cell& c : cells)
    if (c.kind == CellKind::triangle && c.area() % 2 == 0) return false;
  return true;
}
inline bool is_odd(const Subdivision& s) { return is_odd(s.cells); }

// +1 when the total number of interior lattice points over the triangles is
// even ("positive"), -1 when odd ("negative").
inline int sign_of(const CellList& cells) {
  long long total = 0;
  for (const Cell& c : cells)
    if (c.kind == CellKind::triangle) total += c.interior_point_count();
  return total % 2 == 0 ? 1 : -1;
}
inline int sign_of(const Subdivision& s) { return sign_of(s.cells); }

namespace detail {
struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};
}  // namespace detail

// Irreducibility via the dual component graph.  Nodes are the subdivision's
// edges (each dual to an edge or ray of the tropical curve); a triangle is a
// trivalent vertex merging its three edges into one component, a
// parallelogram is a node whose two branches pass through, pairing opposite
// sides only.  The curve is irreducible iff the graph is connected.
inline bool is_irreducible(const CellList& cells) {
  struct PairHash {
    std::size_t operator()(const std::pair<Pt, Pt>& e) const {
      std::uint64_t h = 0xcbf29ce484222325ull;
      h = hash_mix(h, std::uint64_t(e.first.i));
      h = hash_mix(h, std::uint64_t(e.first.j));
      h = hash_mix(h, std::uint64_t(e.second.i));
      h = hash_mix(h, std::uint64_t(e.second.j));
      return std::size_t(h);
    }
  };
  std::unordered_map<std::pair<Pt, Pt>, int, PairHash> ids;
  auto edge_id = [&](Pt a, Pt b) {
    if (b < a) std::swap(a, b);
    auto [it, fresh] = ids.try_emplace({a, b}, (int)ids.size());
    return it->second;
  };
  std::vector<std::pair<int, int>> links;
  for (const Cell& c : cells) {
    if (c.kind == CellKind::triangle) {
      int e0 = edge_id(c.v[0], c.v[1]);
      int e1 = edge_id(c.v[1], c.v[2]);
      int e2 = edge_id(c.v[2], c.v[0]);
      links.push_back({e0, e1});
      links.push_back({e1, e2});
    } else {
      int e0 = edge_id(c.v[0], c.v[1]);
      int e1 = edge_id(c.v[1], c.v[2]);
      int e2 = edge_id(c.v[2], c.v[3]);
      int e3 = edge_id(c.v[3], c.v[0]);
      links.push_back({e0, e2});  // opposite sides pass through the node
      links.push_back({e1, e3});
    }
  }
  if (ids.empty()) return false;
  detail::Dsu dsu((int)ids.size());
  for (auto [a, b] : links) dsu.join(a, b);
  int root = dsu.find(0);
  for (int k = 1; k < (int)ids.size(); ++k)
    if (dsu.find(k) != root) return false;
  return true;
}
inline bool is_irreducible(const Subdivision& s) { return is_irreducible(s.cells); }

inline long long genus_of(const Subdivision& s) { return rank(s.cells) - r_of(*s.ambient); }

// Interior-disjointness plus exact tiling; quadratic, used by tests.
inline bool tiles_ambient(const Subdivision& s) {
  long long sum = 0;
  for (const Cell& c : s.cells) sum += c.area();
  return sum == normalized_area(*s.ambient);
}

}  // namespace tropcount
