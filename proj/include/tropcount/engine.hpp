#pragma once

// Pipeline orchestration: enumerate lambda-admissible paths of length
// n = r(Delta) + g, compress both regions of each path, assemble and
// classify the resulting subdivisions, and reduce to exact counts:
//
//   complex_total        sum of multiplicities over all nodal subdivisions
//   complex_irreducible  same, restricted to irreducible ones
//   welschinger          signed count (+1/-1) of odd irreducible ones
//
// Paths are independent tasks; workers pull batches from the shared
// enumerator and accumulate locally, so the reduction is deterministic for
// any worker count.

#include <functional>
#include <mutex>
#include <thread>

#include "tropcount/subdivision.hpp"
#include "tropcount/surface.hpp"

namespace tropcount {

struct genus_out_of_range : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct noninvariant_welschinger : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct order_rejected : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CountRequest {
  SurfaceSpec spec;
  long long genus = 0;
  LambdaOrder order = lambda0();
  bool want_total = true;
  bool want_irreducible = true;
  bool want_welschinger = true;
  // The signed count is an invariant only at genus 0; a genus > 0 request
  // must acknowledge that the result depends on the point configuration.
  bool ack_noninvariant = false;
  int workers = 0;  // 0 = hardware concurrency
};

struct Diagnostics {
  std::uint64_t paths_enumerated = 0;
  std::uint64_t dead_ends = 0;
  std::uint64_t rank_violations = 0;
  std::uint64_t dedup_collisions = 0;
  std::uint64_t face_to_face_rejections = 0;

  Diagnostics& operator+=(const Diagnostics& o) {
    paths_enumerated += o.paths_enumerated;
    dead_ends += o.dead_ends;
    rank_violations += o.rank_violations;
    dedup_collisions += o.dedup_collisions;
    face_to_face_rejections += o.face_to_face_rejections;
    return *this;
  }
};

struct CountReport {
  Int128 complex_total{0};
  Int128 complex_irreducible{0};
  Int128 welschinger{0};
  Diagnostics diagnostics;
  long long r = 0, delta = 0, n = 0;
};

// One nodal subdivision together with its classification; what the
// contribution stream yields.
struct Contribution {
  std::uint64_t path_index = 0;
  Path path;
  CellList cells;
  Int128 mu{1};
  long long rank = 0;
  long long genus = 0;
  bool odd = false;
  bool irreducible = false;
  int sign = 1;
};

using Inspector = std::function<void(const Contribution&)>;

struct PolygonContext {
  RegionGeometry geo;
  std::vector<Pt> boundary;
  long long r, delta_count, n;

  PolygonContext(const Polygon& poly, long long genus)
      : geo(poly), boundary(boundary_lattice_points(poly)) {
    r = (long long)boundary.size() - 1;
    delta_count = delta_of(poly);
    n = r + genus;
  }
};

namespace detail {

struct PathTally {
  Int128 total{0}, irred{0}, wel{0};
  Diagnostics diag;
};

// Compress both sides of one path, assemble every pair, filter to nodal
// subdivisions, classify, and tally.  The inspector (if any) is called once
// per nodal subdivision; caller synchronizes.
inline PathTally analyze_path(const PolygonContext& ctx, const Path& path, std::uint64_t path_index,
                              const Inspector& inspector) {
  PathTally t;
  Region plus{&ctx.geo, Side::plus_side, path};
  Region minus{&ctx.geo, Side::minus_side, path};
  CompressionResult up = compressing_subdivisions(plus);
  CompressionResult down = compressing_subdivisions(minus);
  t.diag.dead_ends = up.dead_ends + down.dead_ends;
  t.diag.dedup_collisions = up.dedup_collisions + down.dedup_collisions;
  for (const CellList& sp : up.subdivisions) {
    for (const CellList& sm : down.subdivisions) {
      CellList cells = assemble(sp, sm);
      NodalityCheck nod = check_nodal(cells, ctx.boundary);
      if (!nod.nodal) {
        if (nod.face_to_face_failed) ++t.diag.face_to_face_rejections;
        continue;
      }
      long long rk = rank(cells);
      if (rk != ctx.n) ++t.diag.rank_violations;
      Int128 mu = multiplicity(cells);
      bool irr = is_irreducible(cells);
      bool odd = is_odd(cells);
      int sg = sign_of(cells);
      t.total += mu;
      if (irr) {
        t.irred += mu;
        if (odd) t.wel += Int128{sg};
      }
      if (inspector) {
        Contribution c;
        c.path_index = path_index;
        c.path = path;
        c.cells = std::move(cells);
        c.mu = mu;
        c.rank = rk;
        c.genus = rk - ctx.r;
        c.odd = odd;
        c.irreducible = irr;
        c.sign = sg;
        inspector(c);
      }
    }
  }
  return t;
}

}  // namespace detail

// Count on an explicit convex lattice polygon (the engine itself is
// surface-agnostic; surface semantics only pick the polygon).
inline CountReport count_polygon(const Polygon& delta, long long genus, const LambdaOrder& order,
                                 int workers = 0, const Inspector& inspector = nullptr) {
  long long dcount = delta_of(delta);
  if (genus < 0 || genus > dcount)
    throw genus_out_of_range("genus must lie in [0, " + std::to_string(dcount) + "]");
  OrderValidation val = validate_for_polygon(order, delta);
  if (!val) throw order_rejected(val.message);

  PolygonContext ctx(delta, genus);
  if (workers <= 0) workers = (int)std::thread::hardware_concurrency();
  if (workers < 1) workers = 1;

  PathEnumerator paths(delta, order, ctx.n);
  std::mutex pull_mutex, sink_mutex;
  std::uint64_t next_index = 0;

  auto pull = [&](std::vector<std::pair<std::uint64_t, Path>>& batch) {
    std::lock_guard<std::mutex> lock(pull_mutex);
    batch.clear();
    for (int k = 0; k < 32; ++k) {
      auto p = paths.next();
      if (!p) break;
      batch.push_back({next_index++, std::move(*p)});
    }
    return !batch.empty();
  };

  Inspector locked_inspector;
  if (inspector) {
    locked_inspector = [&](const Contribution& c) {
      std::lock_guard<std::mutex> lock(sink_mutex);
      inspector(c);
    };
  }

  std::vector<detail::PathTally> tallies(workers);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        std::vector<std::pair<std::uint64_t, Path>> batch;
        while (pull(batch)) {
          for (auto& [idx, path] : batch) {
            detail::PathTally t = detail::analyze_path(ctx, path, idx, locked_inspector);
            tallies[w].total += t.total;
            tallies[w].irred += t.irred;
            tallies[w].wel += t.wel;
            tallies[w].diag += t.diag;
            ++tallies[w].diag.paths_enumerated;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  CountReport rep;
  rep.r = ctx.r;
  rep.delta = ctx.delta_count;
  rep.n = ctx.n;
  for (const auto& t : tallies) {
    rep.complex_total += t.total;
    rep.complex_irreducible += t.irred;
    rep.welschinger += t.wel;
    rep.diagnostics += t.diag;
  }
  return rep;
}

// The surface pipeline always works on Cremona-normalized 3-point blow-ups,
// so every polygon it sees has one of the five documented shapes.
inline SurfaceSpec pipeline_spec(const SurfaceSpec& s) {
  return s.kind == SurfaceKind::p3blow ? cremona_normalize(s) : s;
}

inline CountReport count(const CountRequest& req, const Inspector& inspector = nullptr) {
  if (req.want_welschinger && req.genus != 0 && !req.ack_noninvariant)
    throw noninvariant_welschinger(
        "the Welschinger count is configuration-dependent for genus >= 1; "
        "pass the acknowledgement flag to compute it at the stretched configuration");
  Polygon delta = newton_polygon(pipeline_spec(req.spec));
  return count_polygon(delta, req.genus, req.order, req.workers, inspector);
}

// Deterministic stream: records ordered by path index, then canonical cells.
inline std::vector<Contribution> enumerate_contributions(const CountRequest& req) {
  std::vector<Contribution> out;
  count(req, [&](const Contribution& c) { out.push_back(c); });
  std::sort(out.begin(), out.end(), [](const Contribution& a, const Contribution& b) {
    if (a.path_index != b.path_index) return a.path_index < b.path_index;
    return a.cells < b.cells;
  });
  return out;
}

// True iff all requested counts agree across all given orders.
inline bool invariance_audit(const SurfaceSpec& spec, long long genus,
                             const std::vector<LambdaOrder>& orders, int workers = 0) {
  if (orders.size() < 2) throw std::invalid_argument("invariance audit needs at least two orders");
  std::optional<CountReport> first;
  for (const LambdaOrder& o : orders) {
    CountRequest req;
    req.spec = spec;
    req.genus = genus;
    req.order = o;
    req.ack_noninvariant = genus != 0;
    req.workers = workers;
    CountReport rep = count(req);
    if (!first) {
      first = rep;
    } else if (rep.complex_total != first->complex_total ||
               rep.complex_irreducible != first->complex_irreducible ||
               rep.welschinger != first->welschinger) {
      return false;
    }
  }
  return true;
}

}  // namespace tropcount
