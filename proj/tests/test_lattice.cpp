#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tropcount/geometry.hpp"

using namespace tropcount;

namespace {

Polygon tri(long long d) { return Polygon{{{0, 0}, {d, 0}, {0, d}}}; }

// Brute-force lattice point counts over the bounding box; the oracle the
// closed-form and Pick-based code is checked against.
long long brute_contained(const Polygon& p) {
  long long n = 0;
  for (long long i = -20; i <= 20; ++i)
    for (long long j = -20; j <= 20; ++j)
      if (contains(p, {i, j})) ++n;
  return n;
}

std::mt19937 rng(20240809);

Polygon random_polygon() {
  std::uniform_int_distribution<long long> coord(0, 7);
  std::uniform_int_distribution<int> npts(3, 9);
  for (;;) {
    std::vector<Pt> pts;
    int n = npts(rng);
    for (int k = 0; k < n; ++k) pts.push_back({coord(rng), coord(rng)});
    try {
      return convex_hull(pts);
    } catch (const std::invalid_argument&) {
    }
  }
}

Unimodular random_unimodular() {
  Unimodular m;
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<long long> tr(-4, 4);
  for (int step = 0; step < 6; ++step) {
    long long a = m.a, b = m.b, c = m.c, d = m.d;
    switch (coin(rng)) {
      case 0: m.b += m.a; m.d += m.c; break;                  // right shear
      case 1: m.a += m.b; m.c += m.d; break;                  // left shear
      case 2: m.a = -b; m.b = a; m.c = -d; m.d = c; break;    // quarter turn
      case 3: m.a = b; m.b = a; m.c = d; m.d = c; break;      // swap (det -1)
    }
  }
  m.shift = {tr(rng), tr(rng)};
  REQUIRE(std::llabs(m.det()) == 1);
  return m;
}

}  // namespace

TEST_CASE("normalized area") {
  CHECK(normalized_area(tri(1)) == 1);
  CHECK(normalized_area(tri(2)) == 4);
  CHECK(normalized_area(Polygon{{{0, 0}, {1, 0}, {2, 1}, {1, 1}}}) == 2);
}

TEST_CASE("boundary lattice points") {
  CHECK(boundary_lattice_points(tri(3)).size() == 9);
  CHECK(boundary_lattice_points(Polygon{{{0, 0}, {2, 0}, {2, 3}, {0, 3}}}).size() == 10);
  CHECK(boundary_lattice_points(tri(1)).size() == 3);
}

TEST_CASE("interior lattice points") {
  auto in3 = interior_lattice_points(tri(3));
  REQUIRE(in3.size() == 1);
  CHECK(in3[0] == Pt{1, 1});
  CHECK(interior_lattice_points(tri(4)).size() == 3);
  CHECK(interior_lattice_points(tri(1)).empty());
}

TEST_CASE("interior angle test") {
  // Region up-right of the corner of the unit triangle's lower path.
  CHECK(interior_angle_lt_pi({0, 1}, {0, 0}, {1, 0}, Side::plus_side));
  CHECK_FALSE(interior_angle_lt_pi({0, 2}, {0, 1}, {0, 0}, Side::plus_side));
  CHECK_FALSE(interior_angle_lt_pi({0, 2}, {0, 1}, {0, 0}, Side::minus_side));
  CHECK(interior_angle_lt_pi({0, 0}, {1, 1}, {2, 0}, Side::minus_side));
  CHECK_FALSE(interior_angle_lt_pi({0, 0}, {1, 1}, {2, 0}, Side::plus_side));
}

TEST_CASE("Pick consistency and partition on random polygons") {
  for (int t = 0; t < 200; ++t) {
    Polygon p = random_polygon();
    validate_polygon(p);
    long long area = normalized_area(p);
    long long b = (long long)boundary_lattice_points(p).size();
    long long in = (long long)interior_lattice_points(p).size();
    CHECK(area == 2 * in + b - 2);
    CHECK(b + in == brute_contained(p));
    // boundary and interior are disjoint
    PtSet bs;
    for (Pt q : boundary_lattice_points(p)) bs.insert(q);
    for (Pt q : interior_lattice_points(p)) CHECK_FALSE(bs.count(q));
  }
}

TEST_CASE("area is invariant under unimodular maps") {
  for (int t = 0; t < 100; ++t) {
    Polygon p = random_polygon();
    Unimodular m = random_unimodular();
    Polygon q = apply(m, p);
    CHECK(normalized_area(p) == normalized_area(q));
    CHECK(boundary_lattice_points(p).size() == boundary_lattice_points(q).size());
    CHECK(interior_lattice_points(p).size() == interior_lattice_points(q).size());
  }
}

TEST_CASE("cells canonicalize and measure") {
  Cell t = Cell::triangle({1, 0}, {0, 1}, {0, 0});
  CHECK(t.v[0] == Pt{0, 0});
  CHECK(t.area() == 1);
  CHECK(t.interior_point_count() == 0);

  Cell p = Cell::parallelogram({0, 0}, {1, 0}, {2, 1}, {1, 1});
  validate_cell(p);
  CHECK(p.area() == 2);

  Cell big = Cell::triangle({0, 0}, {3, 0}, {0, 3});
  CHECK(big.area() == 9);
  CHECK(big.interior_point_count() == 1);
  CHECK(big.boundary_point_count() == 9);
}
