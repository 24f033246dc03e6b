#include <catch2/catch_amalgamated.hpp>

#include "tropcount/surface.hpp"

using namespace tropcount;

TEST_CASE("newton polygons of the five families") {
  CHECK(newton_polygon(parse_spec("p2:3")).verts == std::vector<Pt>{{0, 0}, {3, 0}, {0, 3}});
  CHECK(newton_polygon(parse_spec("quadric:2,3")).verts ==
        std::vector<Pt>{{0, 0}, {2, 0}, {2, 3}, {0, 3}});
  CHECK(newton_polygon(parse_spec("p1:3;1")).verts ==
        std::vector<Pt>{{0, 0}, {2, 0}, {2, 1}, {0, 3}});
  CHECK(newton_polygon(parse_spec("p2b:4;1,1")).verts ==
        std::vector<Pt>{{0, 0}, {3, 0}, {3, 1}, {1, 3}, {0, 3}});
  CHECK(newton_polygon(parse_spec("p3b:3;1,1,1")).verts ==
        std::vector<Pt>{{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}});
}

TEST_CASE("degenerate multiplicities merge vertices") {
  // d1 = 0 on the 1-point blow-up degenerates to the plane triangle.
  CHECK(newton_polygon(parse_spec("p1:3;0")).verts == newton_polygon(parse_spec("p2:3")).verts);
  // d3 = 0 on the 3-point blow-up degenerates to the 2-point pentagon.
  CHECK(newton_polygon(parse_spec("p3b:4;1,1,0")).verts ==
        newton_polygon(parse_spec("p2b:4;1,1")).verts);
}

TEST_CASE("invalid divisors are rejected") {
  CHECK_THROWS_AS(newton_polygon(parse_spec("p2:0")), invalid_divisor);
  CHECK_THROWS_AS(newton_polygon(parse_spec("quadric:0,2")), invalid_divisor);
  CHECK_THROWS_AS(newton_polygon(parse_spec("p1:3;3")), invalid_divisor);
  CHECK_THROWS_AS(newton_polygon(parse_spec("p2b:3;2,2")), invalid_divisor);
  CHECK_THROWS_AS(newton_polygon(parse_spec("p3b:3;2,2,1")), invalid_divisor);
  CHECK_THROWS_AS(parse_spec("weirdo:3"), invalid_divisor);
}

TEST_CASE("r matches the divisor degree ") {
  CHECK(r_of(parse_spec("p2:3")) == 8);
  CHECK(r_of(parse_spec("quadric:2,2")) == 7);
  CHECK(r_of(parse_spec("p3b:3;1,1,1")) == 5);
  // lattice count == c1·D - 1 across the whole desk range
  for (long long d = 1; d <= 8; ++d) CHECK(r_of(SurfaceSpec::plane(d)) == c1_dot_D(SurfaceSpec::plane(d)) - 1);
  for (long long d1 = 1; d1 <= 8; ++d1)
    for (long long d2 = 1; d2 <= 8; ++d2) {
      SurfaceSpec s = SurfaceSpec::quadric(d1, d2);
      CHECK(r_of(s) == c1_dot_D(s) - 1);
    }
  for (long long d = 2; d <= 8; ++d)
    for (long long d1 = 1; d1 < d; ++d1) {
      SurfaceSpec s = SurfaceSpec::blow1(d, d1);
      CHECK(r_of(s) == c1_dot_D(s) - 1);
    }
  for (long long d = 2; d <= 8; ++d)
    for (long long d1 = 1; d1 <= d; ++d1)
      for (long long d2 = 1; d1 + d2 <= d; ++d2) {
        SurfaceSpec s = SurfaceSpec::blow2(d, d1, d2);
        CHECK(r_of(s) == c1_dot_D(s) - 1);
      }
  for (long long d = 2; d <= 8; ++d)
    for (long long d1 = 1; d1 <= d; ++d1)
      for (long long d2 = 1; d2 <= d1; ++d2)
        for (long long d3 = 1; d3 <= d2; ++d3) {
          if (d1 + d2 > d || d1 + d3 > d || d2 + d3 > d) continue;
          SurfaceSpec s = SurfaceSpec::blow3(d, d1, d2, d3);
          CHECK(r_of(s) == c1_dot_D(s) - 1);
        }
}

TEST_CASE("interior point counts") {
  CHECK(delta_of(parse_spec("p2:4")) == 3);
  CHECK(delta_of(parse_spec("quadric:2,2")) == 1);
  CHECK(delta_of(parse_spec("p2:1")) == 0);
  for (long long d = 1; d <= 8; ++d) CHECK(delta_of(SurfaceSpec::plane(d)) == (d - 1) * (d - 2) / 2);
}

TEST_CASE("cremona normalization") {
  CHECK(cremona_normalize(parse_spec("p3b:5;2,2,2")) == parse_spec("p3b:4;1,1,1"));
  CHECK(cremona_normalize(parse_spec("p3b:4;1,1,1")) == parse_spec("p3b:4;1,1,1"));
  SurfaceSpec once = cremona_normalize(parse_spec("p3b:7;3,3,2"));
  CHECK(once == cremona_normalize(once));
  CHECK_THROWS_AS(cremona_normalize(parse_spec("p3b:3;2,2,2")), invalid_divisor);
  CHECK_THROWS_AS(cremona_normalize(parse_spec("p2:3")), invalid_divisor);
}

TEST_CASE("spec strings round trip") {
  for (const char* s : {"p2:4", "quadric:2,3", "p1:3;1", "p2b:4;2,1", "p3b:5;2,2,2"}) {
    CHECK(parse_spec(s).str() == s);
  }
  // blow-up multiplicities normalize to descending order
  CHECK(parse_spec("p3b:5;1,2,2").str() == "p3b:5;2,2,1");
}
