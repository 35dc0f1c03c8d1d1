#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "catch_amalgamated.hpp"
#include "stickknot/polygon.hpp"
#include "test_support.hpp"

using namespace stickknot;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Polygon unit_square() { return load_polygon("0 0 0\n1 0 0\n1 1 0\n0 1 0\n"); }

Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 axis{g(rng), g(rng), g(rng)};
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  return rotation_matrix(normalized(axis), ang(rng));
}

Vec3 random_point(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

// Dense-sampling oracle: 100 x 100 grid of parameter pairs, re-centred on the
// best pair and narrowed a few times.
// Distance between points of the two segments is convex in (s, t), so
// nested ternary searches converge to the minimum.
double ternary_min(const std::function<double(double)>& f) {
  double lo = 0, hi = 1;
  for (int k = 0; k < 100; ++k) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    (f(m1) < f(m2) ? hi : lo) = (f(m1) < f(m2) ? m2 : m1);
  }
  return f(0.5 * (lo + hi));
}

double sampled_segment_distance(Vec3 p0, Vec3 p1, Vec3 q0, Vec3 q1) {
  return ternary_min([&](double s) {
    const Vec3 a = p0 + s * (p1 - p0);
    return ternary_min([&](double t) { return distance(a, q0 + t * (q1 - q0)); });
  });
}

}  // namespace

TEST_CASE("load_polygon reads fixture coordinates in file order") {
  const Polygon p = testing_support::fixture("9_18");
  REQUIRE(p.size() == 10);
  CHECK(p[0] == Vec3{0, 0, 0});
  CHECK_THAT(p[1].x, WithinAbs(1.0, 1e-15));
  CHECK(p[1].y == 0);
  CHECK(p[1].z == 0);
}

TEST_CASE("load_polygon accepts a unit triangle and rejects bad input") {
  const Polygon t = load_polygon("0 0 0\n1 0 0\n0.5 0.866025403784 0");
  CHECK(t.size() == 3);
  CHECK_THROWS_WITH(load_polygon("0 0 0\n1 0 0\n"), Catch::Matchers::ContainsSubstring("too few vertices"));
  CHECK_THROWS_AS(load_polygon("0 0 0\n1 0\n0 1 0\n"), InputError);
  CHECK_THROWS_AS(load_polygon("0 0 0\n1 0 x\n0 1 0\n"), InputError);
  CHECK_THROWS_AS(load_polygon("0 0 0\n0 0 0\n0 1 0\n"), InputError);
}

TEST_CASE("comments and blank lines are ignored") {
  const Polygon p = load_polygon("# header\n\n0 0 0 # origin\n1. 0. 0.\n\n0 1 0\n");
  CHECK(p.size() == 3);
  CHECK(p[1] == Vec3{1, 0, 0});
}

TEST_CASE("every fixture parses") {
  for (const auto& name : testing_support::kRealizations) {
    const Polygon p = testing_support::fixture(name);
    CHECK(p.size() >= 10);
    CHECK(p.size() <= 11);
  }
  CHECK(load_polygon(testing_support::read_text("fixtures/10_37_integer.txt")).size() == 12);
}

TEST_CASE("edge lengths") {
  const auto sq = edge_lengths(unit_square());
  REQUIRE(sq.size() == 4);
  for (double l : sq) CHECK(l == 1.0);

  const auto l918 = edge_lengths(testing_support::fixture("9_18"));
  CHECK_THAT(l918[0], WithinAbs(1.0, 1e-15));

  const auto l1079 = edge_lengths(testing_support::fixture("10_79"));
  double dev = 0;
  for (double l : l1079) dev = std::max(dev, std::abs(l - 1));
  CHECK(dev < 1e-6);
  // Recomputed from the decimal coordinates beforehand: 5.55e-16.
  CHECK(dev < 1e-15);
}

TEST_CASE("edge vectors telescope to zero") {
  for (const auto& name : testing_support::kRealizations) {
    const Polygon p = testing_support::fixture(name);
    Vec3 sum;
    for (std::size_t i = 0; i < p.size(); ++i) sum += p.vertex(i + 1) - p.vertex(i);
    CHECK(norm(sum) < 1e-13);
  }
}

TEST_CASE("segment distance: basic cases") {
  const Vec3 a{0, 0, 0}, b{1, 0, 0};
  CHECK(segment_distance(a, b, a, b) == 0);
  CHECK_THAT(segment_distance(a, b, {0, 1, 0}, {1, 1, 0}), WithinAbs(1.0, 1e-15));     // parallel
  CHECK_THAT(segment_distance(a, b, {2, 0, 0}, {3, 0, 0}), WithinAbs(1.0, 1e-15));     // collinear, disjoint
  CHECK_THAT(segment_distance(a, b, {0.5, -1, 1}, {0.5, 1, 1}), WithinAbs(1.0, 1e-15)); // skew
  CHECK_THAT(segment_distance(a, b, {0.5, 0, 0}, {0.5, 0, 0}), WithinAbs(0.0, 1e-15));  // point on segment
}

TEST_CASE("segment distance matches a dense-sampling oracle") {
  std::mt19937_64 rng(2024);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const Vec3 p0 = random_point(rng, 1), p1 = random_point(rng, 1);
    Vec3 q0 = random_point(rng, 1), q1 = random_point(rng, 1);
    if (k % 10 == 0) q1 = q0 + 0.7 * (p1 - p0);  // parallel pairs
    const double d = segment_distance(p0, p1, q0, q1);
    CHECK_THAT(d, WithinAbs(segment_distance(q0, q1, p0, p1), 1e-15));
    worst = std::max(worst, std::abs(d - sampled_segment_distance(p0, p1, q0, q1)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("min non-adjacent edge distance") {
  CHECK(min_nonadjacent_edge_distance(unit_square()) == 1.0);
  CHECK_THROWS_WITH(min_nonadjacent_edge_distance(load_polygon("0 0 0\n1 0 0\n0.5 0.866025403784 0")),
                    Catch::Matchers::ContainsSubstring("no non-adjacent edges"));

  const Polygon p = testing_support::fixture("9_18");
  const std::size_t n = p.size();
  double oracle = INFINITY;
  int pairs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      ++pairs;
      oracle = std::min(oracle, sampled_segment_distance(p.vertex(i), p.vertex(i + 1), p.vertex(j), p.vertex(j + 1)));
    }
  CHECK(pairs == 35);
  const double mu = min_nonadjacent_edge_distance(p);
  CHECK(mu > 0);
  CHECK_THAT(mu, WithinAbs(oracle, 1e-9));
  // Independent closed-form evaluation done before the build.
  CHECK_THAT(mu, WithinAbs(0.0051454780350063479, 1e-12));
}

TEST_CASE("self-intersection gives mu = 0") {
  // Bow tie: edges 0 and 2 cross at (0.5, 0.5).
  const Polygon p = load_polygon("0 0 0\n1 1 0\n1 0 0\n0 1 0\n");
  CHECK(min_nonadjacent_edge_distance(p) == 0);
}

TEST_CASE("mu is invariant under rigid motions") {
  std::mt19937_64 rng(7);
  const Polygon p = testing_support::fixture("10_79");
  const double mu = min_nonadjacent_edge_distance(p);
  for (int k = 0; k < 100; ++k) {
    const Polygon q = transformed(p, random_rotation(rng), random_point(rng, 10));
    CHECK_THAT(min_nonadjacent_edge_distance(q), WithinAbs(mu, 1e-9));
  }
}

TEST_CASE("normalize: fixtures are fixed points") {
  for (const auto& name : testing_support::kRealizations) {
    const Polygon p = testing_support::fixture(name);
    const Polygon q = normalize(p);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(distance(p[i], q[i]) < 1e-9);
  }
}

TEST_CASE("normalize: frame conditions and translated square") {
  const Polygon sq = unit_square();
  const Polygon moved = transformed(sq, Mat3{}, {5, 5, 5});
  const Polygon n = normalize(moved);
  for (std::size_t i = 0; i < 4; ++i) CHECK(distance(n[i], sq[i]) < 1e-12);

  CHECK_THROWS_WITH(normalize(load_polygon("0 0 0\n1 0 0\n2 0 0\n1 1 1\n")), Catch::Matchers::ContainsSubstring("degenerate frame"));
}

TEST_CASE("normalize: rigid motions give the same result and distances are preserved") {
  std::mt19937_64 rng(11);
  const Polygon p = testing_support::fixture("10_152");
  const Polygon base = normalize(p);
  for (int k = 0; k < 100; ++k) {
    const Polygon q = transformed(p, random_rotation(rng), random_point(rng, 5));
    const Polygon nq = normalize(q);
    CHECK(nq[0] == Vec3{0, 0, 0});
    CHECK(nq[1].y == 0);
    CHECK(nq[1].z == 0);
    CHECK(nq[1].x > 0);
    CHECK(nq[2].z == 0);
    CHECK(nq[2].y > 0);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(distance(nq[i], base[i]) < 1e-9);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) CHECK_THAT(distance(nq[i], nq[j]), WithinRel(distance(q[i], q[j]), 1e-12));
  }
}

TEST_CASE("normalize never reflects") {
  // Mirror image of a fixture: normalizing must not map it onto the original.
  const Polygon p = testing_support::fixture("10_58");
  Mat3 flip;
  flip.rows[2] = {0, 0, -1};
  const Polygon m = normalize(transformed(p, flip));
  double diff = 0;
  for (std::size_t i = 0; i < p.size(); ++i) diff = std::max(diff, distance(m[i], p[i]));
  CHECK(diff > 1e-3);
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(3);
  const Polygon p = transformed(testing_support::fixture("10_84"), random_rotation(rng), {1, 2, 3});
  const Polygon a = normalize(p), b = normalize(a);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(distance(a[i], b[i]) < 1e-12);
}

TEST_CASE("orthographic projection") {
  const Projection z = project_orthographic(unit_square(), Direction(0, 0, 1));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(z.points[i].x == unit_square()[i].x);
    CHECK(z.points[i].y == unit_square()[i].y);
    CHECK(z.depth[i] == 0);
  }
  const Polygon p = testing_support::fixture("9_18");
  const Projection px = project_orthographic(p, Direction(1, 0, 0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    // Basis for +x is (e_y, e_z) up to orientation; depth is x.
    CHECK_THAT(std::abs(px.points[i].x), WithinAbs(std::abs(p[i].y), 1e-15));
    CHECK_THAT(std::abs(px.points[i].y), WithinAbs(std::abs(p[i].z), 1e-15));
    CHECK(px.depth[i] == p[i].x);
  }
  CHECK_THROWS_AS(Direction(0, 0, 0), InputError);
}

TEST_CASE("format_polygon round-trips") {
  const Polygon p = testing_support::fixture("10_93");
  const Polygon q = load_polygon(format_polygon(p));
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == q[i]);
}
