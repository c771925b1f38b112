#include <catch2/catch_amalgamated.hpp>

#include "rigid/resultants.hpp"

using namespace rigid;

namespace {

HomForm form(int degree, std::initializer_list<std::pair<Mono, long>> terms) {
  TermMap t;
  for (auto& [m, c] : terms) t[m] = c;
  return HomForm::from_terms(degree, t);
}

}  // namespace

TEST_CASE("univariate resultants") {
  // res(x^2-2, x^2-3) = (sqrt2^2-3)(-sqrt2^2-3)... = product of differences = 1.
  CHECK(univariate_resultant({Int(-2), Int(0), Int(1)}, {Int(-3), Int(0), Int(1)}) == 1);
  // res(x-2, x-3) = (2-3)^... = -1 for monic linear: f(3)... = res = a(3)= 1? Known: res(x-a, x-b) = b - a.
  CHECK(univariate_resultant({Int(-2), Int(1)}, {Int(-3), Int(1)}) == -1);
  // Common root makes the resultant vanish.
  CHECK(univariate_resultant({Int(-1), Int(1)}, {Int(-1), Int(0), Int(1)}) == 0);
}

TEST_CASE("resultant of two conics has degree 4") {
  // F = X^2 + Y^2 - Z^2, G = X^2 - YZ: G passes through (0:0:1), so shear
  // the chart before eliminating.
  HomForm f = form(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}});
  HomForm g = form(2, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}});
  auto [a, b] = find_clear_center({f, g});
  BinForm r = resultant_z(shear(f, a, b), shear(g, a, b));
  CHECK(r.degree() == 4);
  CHECK_FALSE(r.is_zero());
  auto profile = multiplicity_profile(r);
  int total = 0;
  for (auto& [m, d] : profile) total += m * d;
  CHECK(total == 4);
}

TEST_CASE("resultant vanishes exactly on shared components") {
  // F = (X+Z) * (X-Z) = X^2 - Z^2 and G = (X+Z) * (Y - Z)... expand:
  HomForm f = form(2, {{{2, 0, 0}, 1}, {{0, 0, 2}, -1}});
  HomForm g = form(2, {{{1, 1, 0}, 1}, {{1, 0, 1}, -1}, {{0, 1, 1}, 1}, {{0, 0, 2}, -1}});
  // Both vanish at (0:0:1)? f(0,0,1) = -1, g(0,0,1) = -1: fine.
  BinForm r = resultant_z(f, g);
  CHECK(r.is_zero());
}

TEST_CASE("shear moves the center off a curve") {
  HomForm g = form(2, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}});  // X^2 - YZ through (0:0:1)
  auto [a, b] = find_clear_center({g});
  HomForm sheared = shear(g, a, b);
  CHECK(sheared.coeff({0, 0, 2}) != 0);  // center off the sheared curve
  // Shear by zero is the identity.
  CHECK(shear(g, Int(0), Int(0)) == g);
}

TEST_CASE("smoothness: lines and the reference conic are smooth") {
  CHECK(smoothness_check(HomForm::from_line(Line::of(Int(1), Int(1), Int(1)))).status ==
        Smoothness::smooth);
  HomForm conic = form(2, {{{2, 0, 0}, 1}, {{0, 0, 2}, -2}, {{0, 1, 1}, -1}});
  CHECK(smoothness_check(conic).status == Smoothness::smooth);
  HomForm circle = form(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}});
  CHECK(smoothness_check(circle).status == Smoothness::smooth);
}

TEST_CASE("smoothness: degenerate conic is singular at the vertex") {
  // XY = 0: pair of lines crossing at (0:0:1).
  HomForm xy = form(2, {{{1, 1, 0}, 1}});
  auto r = smoothness_check(xy);
  CHECK(r.status == Smoothness::singular);
  REQUIRE(r.witness);
  CHECK(*r.witness == Point::of(Int(0), Int(0), Int(1)));
}

TEST_CASE("smoothness: graph cubic is singular at (0:1:0)") {
  // Y Z^2 - X^3 + 2 Z^3 (normalized with X^3 positive).
  HomForm cubic = form(3, {{{0, 1, 2}, 1}, {{3, 0, 0}, -1}, {{0, 0, 3}, 2}});
  auto r = smoothness_check(cubic);
  CHECK(r.status == Smoothness::singular);
  REQUIRE(r.witness);
  CHECK(*r.witness == Point::of(Int(0), Int(1), Int(0)));
}

TEST_CASE("smoothness: graph conics and quartics decide exactly") {
  // Y Z - X^2 + 7 Z^2: smooth (degree 2 graph).
  HomForm g2 = form(2, {{{0, 1, 1}, 1}, {{2, 0, 0}, -1}, {{0, 0, 2}, 7}});
  CHECK(smoothness_check(g2).status == Smoothness::smooth);
  // Y Z^3 - X^4 - X Z^3: degree 4 graph, singular at (0:1:0).
  HomForm g4 = form(4, {{{0, 1, 3}, 1}, {{4, 0, 0}, -1}, {{1, 0, 3}, -1}});
  auto r = smoothness_check(g4);
  CHECK(r.status == Smoothness::singular);
  REQUIRE(r.witness);
  CHECK(*r.witness == Point::of(Int(0), Int(1), Int(0)));
}

TEST_CASE("smoothness: nodal cubic via general elimination") {
  // Y^2 Z - X^3 - X^2 Z has a node at (0:0:1).
  HomForm nodal = form(3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{2, 0, 1}, -1}});
  auto r = smoothness_check(nodal);
  CHECK(r.status == Smoothness::singular);
  REQUIRE(r.witness);
  CHECK(*r.witness == Point::of(Int(0), Int(0), Int(1)));
}

TEST_CASE("smoothness: smooth cubic via general elimination") {
  // Fermat cubic X^3 + Y^3 + Z^3 is smooth.
  HomForm fermat = form(3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
  CHECK(smoothness_check(fermat).status == Smoothness::smooth);
}

TEST_CASE("smoothness: cones are singular at the apex") {
  // X^3 + X Z^2 ignores Y: cone over a binary form with apex (0:1:0).
  HomForm cone = form(3, {{{3, 0, 0}, 1}, {{1, 0, 2}, 1}});
  auto r = smoothness_check(cone);
  CHECK(r.status == Smoothness::singular);
  REQUIRE(r.witness);
  CHECK(*r.witness == Point::of(Int(0), Int(1), Int(0)));
}
