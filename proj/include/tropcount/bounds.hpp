#pragma once

// Lower bounds rho on the Welschinger invariant, the canonical lambda^0
// paths whose compressions realize them, and the lambda^0 positivity audit.

#include "tropcount/engine.hpp"

namespace tropcount {

struct hypotheses_violated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RhoBound {
  SurfaceSpec spec;
  Int128 rho{0};
};

// Case table:
//   p2       d!/2
//   quadric  max(d1, d2)
//   p1blow   (1/2) d!/d1!          (d > d1 > 0)
//   p2blow   (d-d2)!/d1!           (d1 + d2 < d, d1 >= d2 > 0)
//   p3blow   (d-d2-d3)!/d1!        (sum <= d, d1 >= d2 >= d3 > 0)
//            d1!/(d-d2-d3)!        (sum > d)
// The halved factorials are rounded up when odd (d = 1 for the plane); the
// bound on an integer count is unchanged.
inline Int128 rho(const SurfaceSpec& s) {
  auto falling = [](long long hi, long long lo) {  // hi! / lo!
    if (lo > hi) throw hypotheses_violated("falling factorial with lo > hi");
    Int128 r{1};
    for (long long k = lo + 1; k <= hi; ++k) r *= Int128{k};
    return r;
  };
  switch (s.kind) {
    case SurfaceKind::p2: {
      if (s.d < 1) throw hypotheses_violated("p2 bound needs d >= 1");
      Int128 f = factorial128((int)s.d);
      return Int128::raw((f.v + 1) / 2);
    }
    case SurfaceKind::quadric:
      if (s.d1 < 1 || s.d2 < 1) throw hypotheses_violated("quadric bound needs d1, d2 >= 1");
      return Int128{std::max(s.d1, s.d2)};
    case SurfaceKind::p1blow: {
      if (!(s.d > s.d1 && s.d1 > 0)) throw hypotheses_violated("p1 bound needs d > d1 > 0");
      Int128 f = falling(s.d, s.d1);
      return Int128::raw((f.v + 1) / 2);
    }
    case SurfaceKind::p2blow:
      if (!(s.d1 + s.d2 < s.d && s.d1 >= s.d2 && s.d2 > 0))
        throw hypotheses_violated("p2 blow-up bound needs d1 + d2 < d, d1 >= d2 > 0");
      return falling(s.d - s.d2, s.d1);
    case SurfaceKind::p3blow: {
      if (!(s.d1 >= s.d2 && s.d2 >= s.d3 && s.d3 > 0))
        throw hypotheses_violated("p3 blow-up bound needs d1 >= d2 >= d3 > 0");
      if (s.d1 + s.d2 > s.d || s.d1 + s.d3 > s.d || s.d2 + s.d3 > s.d)
        throw hypotheses_violated("p3 blow-up bound needs pairwise d_i + d_j <= d");
      if (s.d1 + s.d2 + s.d3 <= s.d) return falling(s.d - s.d2 - s.d3, s.d1);
      return falling(s.d1, s.d - s.d2 - s.d3);
    }
  }
  throw hypotheses_violated("unreachable");
}

// The chosen lambda^0-admissible path of length r(Delta): down the left
// boundary, across the bottom in a height-1 staircase (with a diagonal
// staircase around the clipped corner of the hexagon), then down the right
// edge from its top.  Compressing this single path already realizes the rho
// lower bound with no negative terms; the positivity audit validates the
// whole family.
inline Path canonical_path(const SurfaceSpec& in) {
  SurfaceSpec s = pipeline_spec(in);
  const long long d = s.d, d1 = s.d1, d2 = s.d2, d3 = s.d3;
  Path path;
  switch (s.kind) {
    case SurfaceKind::p2:
      if (d < 1) throw hypotheses_violated("canonical path needs d >= 1");
      for (long long j = 0; j <= d; ++j) path.push_back({0, d - j});
      for (long long i = 1; i <= d - 1; ++i) {
        path.push_back({i, 1});
        path.push_back({i, 0});
      }
      path.push_back({d, 0});
      break;
    case SurfaceKind::quadric:
      for (long long j = 0; j <= d2; ++j) path.push_back({0, d2 - j});
      for (long long i = 1; i <= d1 - 1; ++i) {
        path.push_back({i, 1});
        path.push_back({i, 0});
      }
      for (long long j = 0; j <= d2; ++j) path.push_back({d1, d2 - j});
      break;
    case SurfaceKind::p1blow:
      if (!(d > d1 && d1 > 0)) throw hypotheses_violated("canonical path needs d > d1 > 0");
      for (long long j = 0; j <= d; ++j) path.push_back({0, d - j});
      for (long long i = 1; i <= d - d1 - 1; ++i) {
        path.push_back({i, 1});
        path.push_back({i, 0});
      }
      for (long long j = 0; j <= d1; ++j) path.push_back({d - d1, d1 - j});
      break;
    case SurfaceKind::p2blow:
      if (!(d1 >= d2 && d2 > 0 && d1 + d2 < d))
        throw hypotheses_violated("canonical path needs d1 + d2 < d, d1 >= d2 > 0");
      for (long long j = 0; j <= d - d2; ++j) path.push_back({0, d - d2 - j});
      for (long long i = 1; i <= d - d1 - 1; ++i) {
        path.push_back({i, 1});
        path.push_back({i, 0});
      }
      for (long long j = 0; j <= d1; ++j) path.push_back({d - d1, d1 - j});
      break;
    case SurfaceKind::p3blow:
      if (!(d1 >= d2 && d2 >= d3 && d3 > 0))
        throw hypotheses_violated("canonical path needs d1 >= d2 >= d3 > 0");
      for (long long j = 0; j <= d - d2 - d3; ++j) path.push_back({0, d - d2 - j});
      for (long long i = 1; i <= d3; ++i) {
        path.push_back({i, d3 - i + 1});
        path.push_back({i, d3 - i});
      }
      for (long long i = d3 + 1; i <= d - d1 - 1; ++i) {
        path.push_back({i, 1});
        path.push_back({i, 0});
      }
      for (long long j = 0; j <= d1; ++j) path.push_back({d - d1, d1 - j});
      break;
  }
  // The list must be a lambda^0-admissible path through r+1 points.
  Polygon delta = newton_polygon(s);
  if ((long long)path.size() != r_of(delta) + 1 || !is_admissible_path(path, delta, lambda0()))
    throw std::logic_error("canonical path construction failed for " + s.str());
  return path;
}

struct CanonicalContribution {
  Int128 positives{0};  // odd positive irreducible nodal subdivisions of the canonical path
  Int128 negatives{0};  // odd negative irreducible ones (expected 0 under lambda^0)
};

inline CanonicalContribution canonical_contribution(const SurfaceSpec& in) {
  SurfaceSpec s = pipeline_spec(in);
  Polygon delta = newton_polygon(s);
  PolygonContext ctx(delta, 0);
  Path path = canonical_path(s);
  CanonicalContribution out;
  Inspector inspector = [&](const Contribution& c) {
    if (!c.odd || !c.irreducible) return;
    if (c.sign > 0)
      out.positives += Int128{1};
    else
      out.negatives += Int128{1};
  };
  detail::analyze_path(ctx, path, 0, inspector);
  return out;
}

struct PositivityAudit {
  bool passed = true;
  std::uint64_t negative_subdivisions = 0;  // odd irreducible with sign -1
  std::uint64_t triangles_with_interior = 0;
  std::uint64_t wide_edges = 0;  // edges spanning horizontal width > 1
  CountReport report;
};

// Structural audit for lambda^0 at genus 0: across all paths, no odd
// irreducible nodal subdivision is negative, no triangle of any nodal
// subdivision has an interior point, and no edge spans more than one column.
// The second and third facts force the first, so the three counters are
// independent witnesses.
inline PositivityAudit lambda0_positivity_audit(const SurfaceSpec& spec, int workers = 0) {
  PositivityAudit audit;
  CountRequest req;
  req.spec = spec;
  req.genus = 0;
  req.order = lambda0();
  req.workers = workers;
  audit.report = count(req, [&](const Contribution& c) {
    if (c.odd && c.irreducible && c.sign < 0) ++audit.negative_subdivisions;
    for (const Cell& cell : c.cells) {
      if (cell.kind == CellKind::triangle && cell.interior_point_count() > 0)
        ++audit.triangles_with_interior;
      for (int e = 0; e < cell.nv; ++e) {
        Pt a = cell.v[e], b = cell.v[(e + 1) % cell.nv];
        if (std::llabs(a.i - b.i) > 1) ++audit.wide_edges;
      }
    }
  });
  audit.passed = audit.negative_subdivisions == 0 && audit.triangles_with_interior == 0 &&
                 audit.wide_edges == 0;
  return audit;
}

}  // namespace tropcount
