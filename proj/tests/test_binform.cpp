#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rigid/binform.hpp"

using namespace rigid;

namespace {

BinForm bf(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return BinForm(std::move(c));
}

}  // namespace

TEST_CASE("multiplicity profile of reference forms") {
  // s^2 - 2t^2: two conjugate simple roots.
  auto p1 = multiplicity_profile(bf({1, 0, -2}));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == std::pair<int, int>{1, 2});

  // s^2 t: double root (0:1) and simple root (1:0).
  auto p2 = multiplicity_profile(bf({0, 1, 0, 0}));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == std::pair<int, int>{2, 1});
  CHECK(p2[1] == std::pair<int, int>{1, 1});

  // (s - t)^3.
  auto p3 = multiplicity_profile(bf({1, -3, 3, -1}));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0] == std::pair<int, int>{3, 1});
}

TEST_CASE("profile budget sums to the degree") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int it = 0; it < 200; ++it) {
    // Random product of linear and quadratic forms, possibly repeated.
    BinForm b({Int(1)});
    int deg = 0;
    int parts = 1 + it % 4;
    for (int i = 0; i < parts; ++i) {
      int c0 = d(rng), c1 = d(rng);
      if (c0 == 0 && c1 == 0) c1 = 1;
      BinForm lin({Int(c0), Int(c1)});
      int reps = 1 + (it + i) % 3;
      for (int r = 0; r < reps; ++r) {
        b = b * lin;
        deg += 1;
      }
    }
    auto profile = multiplicity_profile(b);
    int total = 0;
    for (auto& [m, g] : profile) total += m * g;
    CHECK(total == deg);
  }
}

TEST_CASE("decompose splits rational and non-rational parts") {
  // (s - 2t)(s^2 - 2t^2): rational root (2:1), irrational pair.
  BinForm b = bf({1, -2}) * bf({1, 0, -2});
  auto dec = decompose(b);
  REQUIRE(dec.rational.size() == 1);
  CHECK(dec.rational[0].s == 2);
  CHECK(dec.rational[0].t == 1);
  CHECK(dec.rational[0].multiplicity == 1);
  REQUIRE(dec.nonrational.size() == 1);
  CHECK(dec.nonrational[0].form == bf({1, 0, -2}));
  CHECK(dec.nonrational[0].multiplicity == 1);

  // -2t^2 - st: roots (0:1) [x=0] and the infinity root? No: s(-t)(... ) =
  // t(-s - 2t): roots at t=0? c0=0 => root (1:0), plus root s=-2t => (-2:1).
  auto dec2 = decompose(bf({0, -1, -2}));
  REQUIRE(dec2.rational.size() == 2);
  CHECK(dec2.nonrational.empty());
  bool has_inf = false, has_m2 = false;
  for (const auto& r : dec2.rational) {
    if (r.s == 1 && r.t == 0) has_inf = true;
    if (r.s == -2 && r.t == 1) has_m2 = true;
    CHECK(r.multiplicity == 1);
  }
  CHECK(has_inf);
  CHECK(has_m2);
}

TEST_CASE("decompose respects multiplicity") {
  // (s - t)^2 (s^2 - 3 t^2)
  BinForm b = bf({1, -1}) * bf({1, -1}) * bf({1, 0, -3});
  auto dec = decompose(b);
  REQUIRE(dec.rational.size() == 1);
  CHECK(dec.rational[0].s == 1);
  CHECK(dec.rational[0].t == 1);
  CHECK(dec.rational[0].multiplicity == 2);
  REQUIRE(dec.nonrational.size() == 1);
  CHECK(dec.nonrational[0].multiplicity == 1);
  CHECK(dec.nonrational[0].form == bf({1, 0, -3}));
}

TEST_CASE("binary form divisibility") {
  BinForm b = bf({1, -1}) * bf({1, 0, -3});
  CHECK(divides(bf({1, 0, -3}), b));
  CHECK(divides(bf({1, -1}), b));
  CHECK_FALSE(divides(bf({1, 1}), b));
  // Powers of t.
  BinForm c = bf({0, 1, 0}) ;  // s t ... degree 2 with coeffs [0,1,0] = st
  CHECK(divides(bf({0, 1}), c));   // t | st
  CHECK(divides(bf({1, 0}), c));   // s | st
  CHECK_FALSE(divides(bf({0, 0, 1}), bf({0, 1})));  // t^2 does not divide t
}

TEST_CASE("normalized forms are primitive with positive lead") {
  CHECK(bf({-2, 0, 4}).normalized() == bf({1, 0, -2}));
  CHECK(bf({0, -3, -6}).normalized() == bf({0, 1, 2}));
}
