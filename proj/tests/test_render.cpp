#include <regex>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "stickknot/diagram.hpp"
#include "stickknot/render.hpp"
#include "test_support.hpp"

using namespace stickknot;

namespace {

struct ParsedPath {
  Vec2 first, last;
  std::size_t points = 0;
  bool closed = false;
};

std::vector<ParsedPath> parse_paths(const std::string& svg) {
  std::vector<ParsedPath> out;
  const std::regex path_re("<path class=\"strand\" d=\"([^\"]*)\"/>");
  const std::regex pt_re("[ML] (-?[0-9.]+) (-?[0-9.]+)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path_re); it != std::sregex_iterator(); ++it) {
    const std::string d = (*it)[1];
    ParsedPath p;
    p.closed = d.back() == 'Z';
    for (auto jt = std::sregex_iterator(d.begin(), d.end(), pt_re); jt != std::sregex_iterator(); ++jt) {
      const Vec2 q{std::stod((*jt)[1]), std::stod((*jt)[2])};
      if (p.points++ == 0) p.first = q;
      p.last = q;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("unit square renders as one closed path") {
  const std::string svg = render_svg(load_polygon("0 0 0\n1 0 0\n1 1 0\n0 1 0\n"), Direction(0, 0, 1));
  const auto paths = parse_paths(svg);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].closed);
  CHECK(paths[0].points == 4);
  CHECK(count_strands(svg) == 1);
  // Unit box plus 5% margin on each side, y flipped.
  CHECK(svg.find("viewBox=\"-0.050000 -1.050000 1.100000 1.100000\"") != std::string::npos);
  CHECK(svg.find("stroke-width=\"0.015000\"") != std::string::npos);
}

TEST_CASE("one strand per crossing") {
  for (const auto& name : testing_support::kRealizations) {
    INFO(name);
    const Polygon p = testing_support::fixture(name);
    const Direction axis = perturb_axis_until_generic(p, Direction(0, 0, 1), 1);
    const std::size_t crossings = project_to_diagram(p, axis).crossings.size();
    CHECK(count_strands(render_svg(p, axis)) == crossings);
  }
}

TEST_CASE("strand ends sit in gaps at the crossings") {
  RenderOptions opt;
  opt.stroke_width = 0.02;
  const Polygon p = testing_support::fixture("10_79");
  const Direction axis = perturb_axis_until_generic(p, Direction(0, 0, 1), 1);
  const Diagram d = project_to_diagram(p, axis);
  const auto paths = parse_paths(render_svg(p, axis, opt));
  REQUIRE(paths.size() == d.crossings.size());
  const double half_gap = 0.5 * opt.gap_factor * opt.stroke_width;
  auto near_crossing = [&](Vec2 q) {
    for (const Crossing& c : d.crossings)
      if (norm(Vec2{c.position.x, -c.position.y} - q) <= half_gap + 1e-5) return true;
    return false;
  };
  for (const ParsedPath& path : paths) {
    CHECK_FALSE(path.closed);
    CHECK(near_crossing(path.first));
    CHECK(near_crossing(path.last));
  }
}

TEST_CASE("rendering is deterministic") {
  const Polygon p = testing_support::fixture("10_152");
  const Direction axis(0.3, 0.1, 1);
  CHECK(render_svg(p, axis) == render_svg(p, axis));
  CHECK(render_svg(p, axis) != render_svg(p, Direction(0.31, 0.1, 1)));
}

TEST_CASE("renderer writhe is a mirror-odd invariant of the view") {
  const Polygon p = testing_support::fixture("10_84");
  const Direction axis = perturb_axis_until_generic(p, Direction(0, 0, 1), 1);
  const Direction back(-1.0 * axis.vec());
  // Viewing from the opposite side mirrors the diagram twice over: signs keep.
  CHECK(render_writhe(p, back) == render_writhe(p, axis));
  std::vector<Vec3> reflected;
  for (const Vec3& v : p.vertices()) reflected.push_back({v.x, v.y, -v.z});
  CHECK(render_writhe(Polygon(reflected), Direction(axis.vec().x, axis.vec().y, -axis.vec().z)) == -render_writhe(p, axis));
}
