#include <catch_amalgamated.hpp>

#include <random>

#include "volterra/simplex.hpp"

using namespace volterra;

TEST_CASE("vertices and barycenter", "[simplex]") {
  const SimplexPoint v2 = vertex(2, 4);
  REQUIRE(v2.dim() == 4);
  CHECK(v2[0] == 0.0);
  CHECK(v2[1] == 1.0);
  CHECK(v2[2] == 0.0);
  CHECK(v2[3] == 0.0);

  const SimplexPoint b = barycenter(3);
  CHECK(b[0] == Catch::Approx(1.0 / 3));
  CHECK(b[1] == Catch::Approx(1.0 / 3));
  CHECK(b[2] == Catch::Approx(1.0 / 3));

  CHECK_THROWS_AS(vertex(0, 3), IndexError);
  CHECK_THROWS_AS(vertex(4, 3), IndexError);
  CHECK_THROWS_AS(vertex(1, 1), DimensionMismatchError);
}

TEST_CASE("point validation", "[simplex]") {
  CHECK_NOTHROW(SimplexPoint({0.25, 0.75}));
  CHECK_THROWS_AS(SimplexPoint({1.0}), InvalidPointError);             // m >= 2
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.6}), InvalidPointError);        // sum != 1
  CHECK_THROWS_AS(SimplexPoint({-0.1, 1.1}), InvalidPointError);       // negative
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.5, 0.1}), InvalidPointError);

  // a sub-tolerance negative rounds up to exactly zero
  const SimplexPoint p({-1e-13, 1.0 + 1e-13});
  CHECK(p[0] == 0.0);
}

TEST_CASE("distance and renormalization", "[simplex]") {
  CHECK(dist_inf(vertex(1, 3), vertex(2, 3)) == 1.0);
  CHECK(dist_inf(barycenter(3), barycenter(3)) == 0.0);

  const SimplexPoint r = renormalized({2.0, 1.0, 1.0});
  CHECK(r[0] == Catch::Approx(0.5));
  CHECK(r[1] == Catch::Approx(0.25));

  // tiny negative mass is clamped before normalizing
  const SimplexPoint q = renormalized({-1e-18, 1.0, 1.0});
  CHECK(q[0] == 0.0);

  CHECK_THROWS_AS(renormalized({0.0, 0.0}), InvalidPointError);
}

TEST_CASE("faces", "[simplex]") {
  const SimplexPoint v1 = vertex(1, 3);
  CHECK(on_face(v1, FaceId::single(2)));
  CHECK(on_face(v1, FaceId::single(3)));
  CHECK_FALSE(on_face(v1, FaceId::single(1)));
  CHECK(on_face(v1, FaceId{{2, 3}}));

  CHECK(is_interior(barycenter(4)));
  CHECK_FALSE(is_interior(vertex(1, 4)));
  CHECK_FALSE(is_interior(SimplexPoint({0.0, 0.5, 0.5})));
}

TEST_CASE("uniform01 stays in [0,1) and is reproducible", "[simplex]") {
  std::mt19937_64 g1(7), g2(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(g1);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    REQUIRE(u == uniform01(g2));
  }
}

TEST_CASE("interior sampling", "[simplex]") {
  const SimplexPoint a = sample_interior(4, 42);
  const SimplexPoint b = sample_interior(4, 42);
  const SimplexPoint c = sample_interior(4, 43);
  REQUIRE(a.dim() == 4);
  CHECK(is_interior(a));
  CHECK(dist_inf(a, b) == 0.0);      // same seed, same point
  CHECK(dist_inf(a, c) > 0.0);       // different seed, different point

  for (std::uint64_t s = 0; s < 200; ++s) CHECK(is_interior(sample_interior(3, s)));
}
