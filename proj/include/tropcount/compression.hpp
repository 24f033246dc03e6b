#pragma once

// The compression operation on the two regions cut out of Delta by a
// lambda-admissible path, and the enumeration of all compressing
// subdivisions of those regions.
//
// A path from p to q splits Delta into the part Delta_+ between the path and
// the upper boundary arc (left of the walking direction) and the part
// Delta_- between the path and the lower arc (right).  One compression step
// picks the first path vertex where the region's angle is < pi and either
//   (a) cuts the corner, appending the triangle (g(j-1), g(j), g(j+1)), or
//   (b) reflects it to w = g(j-1) + g(j+1) - g(j) when w lies in Delta,
//       appending the parallelogram (g(j-1), g(j), g(j+1), w).
// A branch whose path image reaches the boundary arc contributes its
// accumulated cells; a branch with no pivot and the arc not reached is a dead
// end.  Every reachable cell list is produced exactly once (distinct move
// sequences cannot collide on a cell set), which the dedup counter verifies.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "tropcount/path.hpp"

namespace tropcount {

// Immutable per-polygon context shared by both regions of every path.
struct RegionGeometry {
  Polygon delta;
  Pt p, q;
  std::vector<Pt> upper_arc;  // boundary lattice points p..q along the upper part
  std::vector<Pt> lower_arc;  // same along the lower part
  PtSet upper_set, lower_set;
  std::vector<Pt> upper_corners;  // polygon vertices strictly inside the arcs
  std::vector<Pt> lower_corners;

  explicit RegionGeometry(const Polygon& d) : delta(d) {
    auto [pp, qq] = path_endpoints(delta);
    p = pp;
    q = qq;
    auto ring = boundary_lattice_points(delta);  // ccw
    size_t ip = 0, iq = 0;
    for (size_t k = 0; k < ring.size(); ++k) {
      if (ring[k] == p) ip = k;
      if (ring[k] == q) iq = k;
    }
    // ccw from p to q is the lower arc, ccw from q to p the upper arc.
    for (size_t k = ip;; k = (k + 1) % ring.size()) {
      lower_arc.push_back(ring[k]);
      if (ring[k] == q) break;
    }
    for (size_t k = iq;; k = (k + 1) % ring.size()) {
      upper_arc.push_back(ring[k]);
      if (ring[k] == p) break;
    }
    std::reverse(upper_arc.begin(), upper_arc.end());  // run p -> q
    upper_set.insert(upper_arc.begin(), upper_arc.end());
    lower_set.insert(lower_arc.begin(), lower_arc.end());
    PtSet corners(delta.verts.begin(), delta.verts.end());
    auto collect = [&](const std::vector<Pt>& arc, std::vector<Pt>& out) {
      for (size_t k = 1; k + 1 < arc.size(); ++k)
        if (corners.count(arc[k])) out.push_back(arc[k]);
    };
    collect(upper_arc, upper_corners);
    collect(lower_arc, lower_corners);
  }

  const std::vector<Pt>& arc(Side s) const { return s == Side::plus_side ? upper_arc : lower_arc; }
  const PtSet& arc_set(Side s) const { return s == Side::plus_side ? upper_set : lower_set; }
  const std::vector<Pt>& arc_corners(Side s) const {
    return s == Side::plus_side ? upper_corners : lower_corners;
  }
};

// Side of Delta cut out by one path, together with its target boundary arc.
struct Region {
  const RegionGeometry* geo = nullptr;
  Side side = Side::plus_side;
  Path path;
};

struct CompressionState {
  Path path;
  CellList cells;
};

// Smallest interior index whose angle on the region's side is < pi, or -1 if
// the path is concave-straight everywhere.
inline int find_pivot(const Path& path, Side side) {
  for (size_t j = 1; j + 1 < path.size(); ++j) {
    if (interior_angle_lt_pi(path[j - 1], path[j], path[j + 1], side)) return (int)j;
  }
  return -1;
}

inline CompressionState step_triangle(const CompressionState& st, int j) {
  CompressionState out;
  out.cells = st.cells;
  out.cells.push_back(Cell::triangle(st.path[j - 1], st.path[j], st.path[j + 1]));
  out.path.reserve(st.path.size() - 1);
  out.path.insert(out.path.end(), st.path.begin(), st.path.begin() + j);
  out.path.insert(out.path.end(), st.path.begin() + j + 1, st.path.end());
  return out;
}

// Returns nothing when the reflected corner leaves Delta; containment is
// non-strict (Delta is closed).
inline std::optional<CompressionState> step_parallelogram(const CompressionState& st, int j,
                                                          const Polygon& delta) {
  Pt w = st.path[j - 1] + st.path[j + 1] - st.path[j];
  if (!contains(delta, w)) return std::nullopt;
  CompressionState out;
  out.cells = st.cells;
  out.cells.push_back(Cell::parallelogram(st.path[j - 1], st.path[j], st.path[j + 1], w));
  out.path = st.path;
  out.path[j] = w;
  return out;
}

// Path image coincides with the target arc iff every path point lies on the
// arc and every polygon corner interior to the arc is a path point (then
// consecutive path points share an edge of Delta and the segments cover the
// arc).
inline bool path_covers_arc(const Path& path, const Region& r) {
  const PtSet& on = r.geo->arc_set(r.side);
  for (Pt pt : path)
    if (!on.count(pt)) return false;
  PtSet in_path(path.begin(), path.end());
  for (Pt c : r.geo->arc_corners(r.side))
    if (!in_path.count(c)) return false;
  return true;
}

struct CompressionResult {
  std::vector<CellList> subdivisions;  // canonical, deduplicated
  std::uint64_t dead_ends = 0;
  std::uint64_t dedup_collisions = 0;
};

namespace detail {
inline void compress_dfs(const Region& r, CompressionState st, CompressionResult& out,
                         std::unordered_set<CellList, CellListHash>& seen) {
  if (path_covers_arc(st.path, r)) {
    canonicalize_cell_list(st.cells);
    if (!seen.insert(st.cells).second)
      ++out.dedup_collisions;
    else
      out.subdivisions.push_back(st.cells);
    return;
  }
  int j = find_pivot(st.path, r.side);
  if (j < 0) {
    ++out.dead_ends;
    return;
  }
  if (auto par = step_parallelogram(st, j, r.geo->delta)) compress_dfs(r, std::move(*par), out, seen);
  compress_dfs(r, step_triangle(st, j), out, seen);
}
}  // namespace detail

// All compressing subdivisions of one region.  A region whose path already
// covers the arc (the empty region) yields the single empty cell list.
inline CompressionResult compressing_subdivisions(const Region& r) {
  CompressionResult out;
  std::unordered_set<CellList, CellListHash> seen;
  detail::compress_dfs(r, CompressionState{r.path, {}}, out, seen);
  std::sort(out.subdivisions.begin(), out.subdivisions.end());
  return out;
}

// Union of compressing subdivisions of the two sides of the same path.
inline CellList assemble(const CellList& plus_side, const CellList& minus_side) {
  CellList cells = plus_side;
  cells.insert(cells.end(), minus_side.begin(), minus_side.end());
  canonicalize_cell_list(cells);
  return cells;
}

}  // namespace tropcount
