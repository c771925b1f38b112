#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rigid/homform.hpp"

using namespace rigid;

namespace {

// X^2 - 2Z^2 - YZ
HomForm sqrt2_conic() {
  TermMap t;
  t[{2, 0, 0}] = 1;
  t[{0, 0, 2}] = -2;
  t[{0, 1, 1}] = -1;
  return HomForm::from_terms(2, t);
}

}  // namespace

TEST_CASE("evaluation at points") {
  HomForm f = sqrt2_conic();
  CHECK(f.evaluate(Point::of(Int(1), Int(-1), Int(1))) == 0);
  CHECK(f.evaluate(Point::of(Int(0), Int(0), Int(1))) == -2);
  // Z^n at (1:0:0) evaluates to 0.
  TermMap t;
  t[{0, 0, 3}] = 1;
  CHECK(HomForm::from_terms(3, t).evaluate(Point::of(Int(1), Int(0), Int(0))) == 0);
}

TEST_CASE("normalization: primitive, positive leading coefficient") {
  TermMap t;
  t[{2, 0, 0}] = -2;
  t[{0, 0, 2}] = 4;
  t[{0, 1, 1}] = 2;
  HomForm f = HomForm::from_terms(2, t);
  CHECK(f.coeff({2, 0, 0}) == 1);
  CHECK(f.coeff({0, 0, 2}) == -2);
  CHECK(f.coeff({0, 1, 1}) == -1);
  CHECK(f == sqrt2_conic());
}

TEST_CASE("monomial order is graded lex descending") {
  auto monos = monomials_of_degree(2);
  REQUIRE(monos.size() == 6);
  CHECK(monos[0] == Mono{2, 0, 0});
  CHECK(monos[1] == Mono{1, 1, 0});
  CHECK(monos[2] == Mono{1, 0, 1});
  CHECK(monos[3] == Mono{0, 2, 0});
  CHECK(monos[4] == Mono{0, 1, 1});
  CHECK(monos[5] == Mono{0, 0, 2});
  CHECK(monomial_count(2) == 6);
}

TEST_CASE("line basis points follow the fixed kernel rule") {
  auto [a, b] = line_basis_points(Line::of(Int(0), Int(1), Int(0)));  // Y=0
  CHECK(a == Point::of(Int(1), Int(0), Int(0)));
  CHECK(b == Point::of(Int(0), Int(0), Int(1)));
  auto [c, d] = line_basis_points(Line::of(Int(1), Int(0), Int(0)));  // X=0
  CHECK(c == Point::of(Int(0), Int(1), Int(0)));
  CHECK(d == Point::of(Int(0), Int(0), Int(1)));
}

TEST_CASE("restriction to reference lines") {
  HomForm f = sqrt2_conic();
  // Y=0 parametrized by (s:0:t): s^2 - 2t^2.
  BinForm on_y = restrict_to_line(f, Line::of(Int(0), Int(1), Int(0)));
  CHECK(on_y.coeffs() == std::vector<Int>{Int(1), Int(0), Int(-2)});
  // X=0 parametrized by (0:s:t): -2t^2 - st.
  BinForm on_x = restrict_to_line(f, Line::of(Int(1), Int(0), Int(0)));
  CHECK(on_x.coeffs() == std::vector<Int>{Int(0), Int(-1), Int(-2)});
  // A line restricted to another line has a single simple root.
  BinForm lin = restrict_to_line(HomForm::from_line(Line::of(Int(1), Int(0), Int(0))),
                                 Line::of(Int(0), Int(1), Int(0)));
  CHECK(lin.coeffs() == std::vector<Int>{Int(1), Int(0)});
  // Restricting a form to one of its components fails.
  CHECK_THROWS_AS(restrict_to_line(HomForm::from_line(Line::of(Int(1), Int(0), Int(0))),
                                   Line::of(Int(1), Int(0), Int(0))),
                  Error);
}

TEST_CASE("restriction roots map back to intersection points") {
  HomForm f = sqrt2_conic();
  Line x0 = Line::of(Int(1), Int(0), Int(0));
  auto dec = decompose(restrict_to_line(f, x0));
  REQUIRE(dec.rational.size() == 2);
  for (const auto& r : dec.rational) {
    Point p = line_point_from_root(x0, r.s, r.t);
    CHECK(f.evaluate(p) == 0);
    CHECK(incident(p, x0));
  }
}

TEST_CASE("bezout budget: restriction multiplicities sum to the degree") {
  std::mt19937 rng(31415);
  std::uniform_int_distribution<int> d(-4, 4);
  int done = 0;
  while (done < 80) {
    int n = 1 + done % 3;
    auto monos = monomials_of_degree(n);
    TermMap t;
    for (const auto& m : monos) {
      int c = d(rng);
      if (c != 0) t[m] = c;
    }
    if (t.empty()) continue;
    HomForm f = HomForm::from_terms(n, t);
    Int la(d(rng)), lb(d(rng)), lc(d(rng));
    if (la == 0 && lb == 0 && lc == 0) continue;
    Line l = Line::of(la, lb, lc);
    BinForm b;
    try {
      b = restrict_to_line(f, l);
    } catch (const Error&) {
      continue;  // the line divides the form
    }
    auto profile = multiplicity_profile(b);
    int total = 0;
    for (auto& [m, g] : profile) total += m * g;
    CHECK(total == n);
    ++done;
  }
}

TEST_CASE("z slices reassemble the form") {
  HomForm f = sqrt2_conic();
  auto slices = f.z_slices();
  REQUIRE(slices.size() == 3);
  // Z^0 slice: X^2; Z^1: -Y; Z^2: -2.
  CHECK(slices[0].coeffs() == std::vector<Int>{Int(1), Int(0), Int(0)});
  CHECK(slices[1].coeffs() == std::vector<Int>{Int(0), Int(-1)});
  CHECK(slices[2].coeffs() == std::vector<Int>{Int(-2)});
}
