#include <catch2/catch_amalgamated.hpp>

#include "tropcount/bounds.hpp"

using namespace tropcount;

TEST_CASE("rho case table") {
  CHECK(rho(parse_spec("p2:4")) == Int128{12});
  CHECK(rho(parse_spec("p2:1")) == Int128{1});  // d!/2 rounded up
  CHECK(rho(parse_spec("quadric:3,2")) == Int128{3});
  CHECK(rho(parse_spec("p1:3;1")) == Int128{3});
  CHECK(rho(parse_spec("p2b:4;1,1")) == Int128{6});
  CHECK(rho(parse_spec("p3b:4;1,1,1")) == Int128{2});
  CHECK(rho(parse_spec("p3b:5;2,2,2")) == Int128{2});  // d1!/(d-d2-d3)! case
  CHECK_THROWS_AS(rho(parse_spec("p1:3;0")), hypotheses_violated);
  CHECK_THROWS_AS(rho(parse_spec("p2b:4;2,2")), hypotheses_violated);
  CHECK_THROWS_AS(rho(parse_spec("p3b:3;2,2,1")), hypotheses_violated);
}

TEST_CASE("canonical paths instantiate correctly") {
  CHECK(canonical_path(parse_spec("p2:2")) ==
        Path{{0, 2}, {0, 1}, {0, 0}, {1, 1}, {1, 0}, {2, 0}});
  CHECK(canonical_path(parse_spec("p2:3")) ==
        Path{{0, 3}, {0, 2}, {0, 1}, {0, 0}, {1, 1}, {1, 0}, {2, 1}, {2, 0}, {3, 0}});
  CHECK(canonical_path(parse_spec("p3b:3;1,1,1")) ==
        Path{{0, 2}, {0, 1}, {1, 1}, {1, 0}, {2, 1}, {2, 0}});
}

TEST_CASE("canonical paths are admissible of length r for every family") {
  for (const char* spec :
       {"p2:5", "quadric:3,2", "p1:4;2", "p2b:5;2,1", "p3b:5;2,2,1", "p3b:6;2,2,2"}) {
    SurfaceSpec s = pipeline_spec(parse_spec(spec));
    Polygon delta = newton_polygon(s);
    Path path = canonical_path(s);
    INFO(spec);
    CHECK((long long)path.size() == r_of(delta) + 1);
    CHECK(is_admissible_path(path, delta, lambda0()));
  }
}

TEST_CASE("canonical contributions stay positive and beat rho") {
  for (const char* spec : {"p2:2", "p2:3", "quadric:2,2", "p1:3;1", "p3b:4;1,1,1"}) {
    CanonicalContribution c = canonical_contribution(parse_spec(spec));
    INFO(spec);
    CHECK(c.negatives == Int128{0});
    CHECK(c.positives >= rho(parse_spec(spec)));
  }
  // the proof's packing count is d!/2; the canonical path may admit more
  CanonicalContribution d3 = canonical_contribution(parse_spec("p2:3"));
  CHECK(d3.positives >= Int128{3});
}

TEST_CASE("positivity audit at small degrees") {
  for (const char* spec : {"p2:2", "p2:3", "quadric:2,2", "p3b:3;1,1,1"}) {
    PositivityAudit audit = lambda0_positivity_audit(parse_spec(spec));
    INFO(spec);
    CHECK(audit.passed);
    CHECK(audit.negative_subdivisions == 0);
    CHECK(audit.triangles_with_interior == 0);
    CHECK(audit.wide_edges == 0);
  }
}

TEST_CASE("welschinger dominates rho on desk specs") {
  for (const char* spec : {"p2:3", "quadric:2,2", "p1:3;1", "p3b:4;1,1,1"}) {
    CountRequest req;
    req.spec = parse_spec(spec);
    CountReport rep = count(req);
    INFO(spec);
    CHECK(rep.welschinger >= rho(parse_spec(spec)));
  }
}
