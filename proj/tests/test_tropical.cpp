#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "tropcount/tropical.hpp"

using namespace tropcount;

namespace {

LiftFunction lift(std::vector<Pt> support, std::vector<Rat> values) {
  LiftFunction f;
  f.support = std::move(support);
  f.values = std::move(values);
  return f;
}

std::mt19937 rng(987654321);

LiftFunction random_lift(int max_points = 12) {
  std::uniform_int_distribution<long long> coord(0, 4);
  std::uniform_int_distribution<int> npts(3, max_points);
  std::uniform_int_distribution<long long> num(-24, 24);
  std::uniform_int_distribution<long long> den(1, 16);
  for (;;) {
    PtSet seen;
    std::vector<Pt> pts;
    int n = npts(rng);
    for (int k = 0; k < n; ++k) {
      Pt p{coord(rng), coord(rng)};
      if (seen.insert(p).second) pts.push_back(p);
    }
    if (pts.size() < 3) continue;
    bool collinear = true;
    for (size_t k = 2; k < pts.size() && collinear; ++k)
      if (cross(pts[1] - pts[0], pts[k] - pts[0]) != 0) collinear = false;
    if (collinear) continue;
    std::vector<Rat> vals;
    for (size_t k = 0; k < pts.size(); ++k) vals.push_back(Rat(num(rng), den(rng)));
    return lift(std::move(pts), std::move(vals));
  }
}

}  // namespace

TEST_CASE("legendre transform evaluates the max form") {
  LiftFunction f = lift({{0, 0}, {1, 0}, {0, 1}}, {Rat(0), Rat(0), Rat(0)});
  CHECK(legendre_value(f, {Rat(2), Rat(3)}) == Rat(3));
  CHECK(legendre_value(f, {Rat(-1), Rat(-1)}) == Rat(0));
  LiftFunction g = lift({{0, 0}, {1, 0}, {0, 1}}, {Rat(0), Rat(5), Rat(0)});
  CHECK(legendre_value(g, {Rat(2), Rat(3)}) == Rat(3));
}

TEST_CASE("corner locus of the trivial lift is the tropical line") {
  LiftFunction f = lift({{0, 0}, {1, 0}, {0, 1}}, {Rat(0), Rat(0), Rat(0)});
  TropicalCurve c = corner_locus(f);
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0] == RatPt{Rat(0), Rat(0)});
  CHECK(c.bounded.empty());
  REQUIRE(c.rays.size() == 3);
  std::set<std::pair<long long, long long>> dirs;
  for (const auto& r : c.rays) {
    CHECK(r.weight == 1);
    dirs.insert({r.dir.i, r.dir.j});
  }
  CHECK(dirs == std::set<std::pair<long long, long long>>{{-1, 0}, {0, -1}, {1, 1}});
  CHECK(balancing_check(c));
}

TEST_CASE("collinear support gives weighted parallel lines") {
  LiftFunction f = lift({{0, 0}, {2, 0}}, {Rat(0), Rat(0)});
  TropicalCurve c = corner_locus(f);
  CHECK(c.bounded.empty());
  REQUIRE(c.rays.size() == 2);  // one full line, split at its base point
  CHECK(c.rays[0].weight == 2);
  CHECK(c.rays[1].weight == 2);
  CHECK(c.rays[0].dir.i == 0);
  CHECK(balancing_check(c));

  // Lifting the middle point of a length-2 segment splits the line in two.
  LiftFunction g = lift({{0, 0}, {1, 0}, {2, 0}}, {Rat(0), Rat(0), Rat(1)});
  TropicalCurve c2 = corner_locus(g);
  REQUIRE(c2.rays.size() == 4);
  for (const auto& r : c2.rays) CHECK(r.weight == 1);
}

TEST_CASE("node of two crossing lines") {
  LiftFunction f = lift({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {Rat(0), Rat(0), Rat(0), Rat(0)});
  TropicalCurve c = corner_locus(f);
  REQUIRE(c.vertices.size() == 1);
  REQUIRE(c.rays.size() == 4);
  CHECK(balancing_check(c));
  auto cells = regular_subdivision(f);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].points.size() == 4);
  CHECK(duality_check(c, cells));
}

TEST_CASE("affine shifts of the lift translate the curve") {
  LiftFunction f = lift({{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}},
                        {Rat(1, 2), Rat(0), Rat(3, 4), Rat(-1), Rat(2)});
  TropicalCurve base = corner_locus(f);
  LiftFunction g = f;
  Rat sa(3), sb(-2), sc(5, 7);
  for (size_t k = 0; k < g.support.size(); ++k)
    g.values[k] += sa * g.support[k].i + sb * g.support[k].j + sc;
  TropicalCurve moved = corner_locus(g);
  REQUIRE(base.vertices.size() == moved.vertices.size());
  CHECK(base.bounded.size() == moved.bounded.size());
  CHECK(base.rays.size() == moved.rays.size());
  // Same combinatorics with every vertex translated by (sa, sb).
  std::set<RatPt> expect, got;
  for (const RatPt& v : base.vertices) expect.insert(v + RatPt{sa, sb});
  for (const RatPt& v : moved.vertices) got.insert(v);
  CHECK(expect == got);
}

TEST_CASE("regular subdivision of the trivial lift is one cell") {
  LiftFunction f = lift({{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}},
                        {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  auto cells = regular_subdivision(f);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].points.size() == 3);
}

TEST_CASE("strictly convex lift triangulates with every point") {
  std::vector<Pt> pts = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};
  std::vector<Rat> vals;
  for (Pt p : pts) vals.push_back(Rat(3 * p.i * p.i + 2 * p.j * p.j + p.i * p.j));
  auto cells = regular_subdivision(lift(pts, vals));
  CHECK(cells.size() == 4);
  long long area = 0;
  PtSet used;
  for (const auto& c : cells) {
    CHECK(c.points.size() == 3);
    area += normalized_area(Polygon{c.points});
    for (Pt p : c.points) used.insert(p);
  }
  CHECK(area == 4);
  CHECK(used.size() == 6);
}

TEST_CASE("points above the hull drop out of the subdivision") {
  auto cells = regular_subdivision(
      lift({{0, 0}, {2, 0}, {0, 2}, {1, 1}}, {Rat(0), Rat(0), Rat(0), Rat(7)}));
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].points.size() == 3);
}

TEST_CASE("degenerate support is rejected") {
  CHECK_THROWS_AS(corner_locus(lift({{1, 1}}, {Rat(0)})), degenerate_support);
  CHECK_THROWS_AS(regular_subdivision(lift({{1, 1}}, {Rat(0)})), degenerate_support);
}

TEST_CASE("duality rejects corrupted weights") {
  LiftFunction f = lift({{0, 0}, {1, 0}, {0, 1}}, {Rat(0), Rat(0), Rat(0)});
  TropicalCurve c = corner_locus(f);
  auto cells = regular_subdivision(f);
  REQUIRE(duality_check(c, cells));
  c.rays[0].weight = 2;
  CHECK_FALSE(duality_check(c, cells));
}

TEST_CASE("balancing, duality, and tiling on random lifts") {
  for (int t = 0; t < 100; ++t) {
    LiftFunction f = random_lift();
    TropicalCurve curve = corner_locus(f);
    auto cells = regular_subdivision(f);
    INFO("trial " << t << ", |A|=" << f.support.size());
    CHECK(balancing_check(curve));
    CHECK(duality_check(curve, cells));
    std::vector<Pt> all = f.support;
    long long hull_area = normalized_area(convex_hull(all));
    long long sum = 0;
    for (const auto& c : cells) sum += normalized_area(Polygon{c.points});
    CHECK(sum == hull_area);
  }
}
