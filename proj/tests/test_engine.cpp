#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rigid/engine.hpp"

using namespace rigid;

namespace {

Point pt(long x, long y, long z) { return Point::of(Int(x), Int(y), Int(z)); }
Line ln(long a, long b, long c) { return Line::of(Int(a), Int(b), Int(c)); }

// Exhaustive incidence check: the point is on >= 2 distinct components.
void check_singular(const Config& cfg, const Point& p) {
  int count = 0;
  for (const auto& l : cfg.lines)
    if (incident(p, l)) ++count;
  for (const auto& c : cfg.curves)
    if (c.evaluate(p) == 0) ++count;
  INFO("point " << p.str());
  CHECK(count >= 2);
  int idx = cfg.find_record(p);
  REQUIRE(idx >= 0);
  CHECK(cfg.singular[static_cast<size_t>(idx)].witnesses.size() >= 2);
}

}  // namespace

TEST_CASE("quadrilateral fixture matches the reference data") {
  Config cfg = init_quadrilateral();
  REQUIRE(cfg.lines.size() == 4);
  CHECK(cfg.lines[0] == ln(1, 0, 0));
  CHECK(cfg.lines[1] == ln(0, 1, 0));
  CHECK(cfg.lines[2] == ln(0, 0, 1));
  CHECK(cfg.lines[3] == ln(1, 1, 1));
  REQUIRE(cfg.singular.size() == 6);
  std::set<Point> got;
  for (const auto& r : cfg.singular) {
    got.insert(r.point);
    CHECK(r.witnesses.size() == 2);
    for (auto w : r.witnesses) {
      REQUIRE(w.kind == ComponentKind::line);
      CHECK(incident(r.point, cfg.lines[w.index]));
    }
  }
  std::set<Point> expect{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1),
                         pt(1, -1, 0), pt(1, 0, -1), pt(0, 1, -1)};
  CHECK(got == expect);
  REQUIRE(cfg.trace.size() == 1);
  CHECK(std::holds_alternative<InitStep>(cfg.trace[0]));

  // Each of the 6 points is on exactly 2 of the 4 lines.
  for (const auto& r : cfg.singular) {
    int count = 0;
    for (const auto& l : cfg.lines)
      if (incident(r.point, l)) ++count;
    CHECK(count == 2);
  }

  // No 3 of the 4 lines are concurrent: all 3x3 determinants nonzero.
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        MatZ m;
        for (int i : {a, b, c})
          m.push_back({Int(cfg.lines[static_cast<size_t>(i)].a()),
                       Int(cfg.lines[static_cast<size_t>(i)].b()),
                       Int(cfg.lines[static_cast<size_t>(i)].c())});
        CHECK(determinant(m) != 0);
      }
}

TEST_CASE("add_line records exactly the new rational intersections") {
  Builder b;
  // A diagonal of the complete quadrilateral: not yet a component.
  uint32_t i = b.require(pt(1, 0, 0));
  uint32_t j = b.require(pt(0, 1, -1));
  b.add_line(i, j);
  const Config& cfg = b.config();
  REQUIRE(cfg.lines.size() == 5);
  Line l = cfg.lines[4];
  CHECK(l == join(pt(1, 0, 0), pt(0, 1, -1)));
  // Every pairwise meet of the new line with the old ones is recorded.
  for (int m = 0; m < 4; ++m) {
    Point p = meet(l, cfg.lines[static_cast<size_t>(m)]);
    int idx = cfg.find_record(p);
    REQUIRE(idx >= 0);
    check_singular(cfg, p);
  }
  const auto& step = std::get<AddLineStep>(cfg.trace[1]);
  CHECK(step.anchor_i == i);
  CHECK(step.anchor_j == j);
  CHECK(step.line == l);
  CHECK_FALSE(step.derived.empty());
}

TEST_CASE("add_line rejects bad anchors and duplicates") {
  Builder b;
  CHECK_THROWS_AS(b.add_line(0, 99), Error);           // out of range
  uint32_t i = b.require(pt(0, 1, 0));
  CHECK_THROWS_AS(b.add_line(i, i), Error);            // equal anchors
  uint32_t j = b.require(pt(0, 0, 1));
  try {
    b.add_line(i, j);  // join is X=0, already a component
    FAIL("expected DuplicateLine");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_line);
  }
  // Skip variant leaves the configuration untouched.
  Config before = b.config();
  CHECK_FALSE(b.add_line_or_skip(i, j).has_value());
  CHECK(b.config().trace.size() == before.trace.size());
  CHECK(b.config().lines.size() == before.lines.size());
}

TEST_CASE("gadget_unit reproduces the reference construction") {
  Builder b;
  uint32_t idx = b.gadget_unit();
  const Config& cfg = b.config();
  CHECK(cfg.singular[idx].point == pt(0, 1, 1));
  // L1 = X+Z, L2 = X+Y, M = Y-Z.
  CHECK(cfg.has_line(ln(1, 0, 1)));
  CHECK(cfg.has_line(ln(1, 1, 0)));
  CHECK(cfg.has_line(ln(0, 1, -1)));
  CHECK(cfg.lines.size() == 7);
  // The intermediate (-1:1:1) and the result are singular.
  check_singular(cfg, pt(-1, 1, 1));
  check_singular(cfg, pt(0, 1, 1));

  // Idempotent: a second invocation changes nothing.
  Config snapshot = b.config();
  b.gadget_unit();
  CHECK(b.config().lines.size() == snapshot.lines.size());
  CHECK(b.config().trace.size() == snapshot.trace.size());
  CHECK(b.config().singular.size() == snapshot.singular.size());
}

TEST_CASE("gadget_add_integers lands on the sum with the paper intermediates") {
  Builder b;
  uint32_t one = b.gadget_unit();
  uint32_t got = b.gadget_add_integers(one, one);
  const Config& cfg = b.config();
  CHECK(cfg.singular[got].point == pt(0, 2, 1));
  check_singular(cfg, pt(-1, 1, 1));
  check_singular(cfg, pt(-1, 1, 0));
  check_singular(cfg, pt(-1, 2, 1));
  check_singular(cfg, pt(0, 2, 1));
}

TEST_CASE("gadget_add_integers merges when the sum is already singular") {
  Builder b;
  uint32_t one = b.gadget_unit();
  uint32_t minus_one = b.require(pt(0, -1, 1));  // quadrilateral point (0:1:-1)
  uint32_t got = b.gadget_add_integers(one, minus_one);
  CHECK(b.config().singular[got].point == pt(0, 0, 1));
  check_singular(b.config(), pt(0, 0, 1));
}

TEST_CASE("gadget_add_integers rejects non-integer anchors") {
  Builder b;
  b.construct_rational(Int(1), Int(2), Strategy::naive);
  uint32_t half = b.require(pt(1, 0, 2));
  uint32_t one = b.require(pt(0, 1, 1));
  CHECK_THROWS_AS(b.gadget_add_integers(half, one), Error);
}

TEST_CASE("gadget soundness sweep over small integers") {
  // Scaled-down sweep; the acceptance suite runs |p|,|q| <= 30.
  for (int p = -8; p <= 8; ++p)
    for (int q : {-3, -1, 1, 2, 5}) {
      Builder b;
      uint32_t ip = b.construct_integer(Int(p), Strategy::chain);
      uint32_t iq = b.construct_integer(Int(q), Strategy::chain);
      uint32_t r = b.gadget_add_integers(ip, iq);
      INFO("p=" << p << " q=" << q);
      REQUIRE(b.config().singular[r].point == pt(0, p + q, 1));
      check_singular(b.config(), pt(0, p + q, 1));
      check_singular(b.config(), pt(-1, p, 1));
      check_singular(b.config(), pt(-1, p, 0));
      check_singular(b.config(), pt(-1, p + q, 1));
    }
}

TEST_CASE("construct_integer base cases need no new lines") {
  Builder b;
  size_t lines_before = b.config().lines.size();
  b.construct_integer(Int(0), Strategy::naive);
  b.construct_integer(Int(-1), Strategy::naive);
  CHECK(b.config().lines.size() == lines_before);
  CHECK(b.config().trace.size() == 1);
}

TEST_CASE("construct_integer chain vs naive invocation counts at 37") {
  Builder naive;
  naive.construct_integer(Int(37), Strategy::naive);
  CHECK(naive.counters().add_integers == 36);
  check_singular(naive.config(), pt(0, 37, 1));

  Builder chain;
  chain.construct_integer(Int(37), Strategy::chain);
  CHECK(chain.counters().add_integers <= 8);
  check_singular(chain.config(), pt(0, 37, 1));
}

TEST_CASE("construct_rational reference cases") {
  SECTION("1/2 with intermediate (1:-2:0)") {
    Builder b;
    uint32_t r = b.construct_rational(Int(1), Int(2), Strategy::naive);
    CHECK(b.config().singular[r].point == pt(1, 0, 2));
    check_singular(b.config(), pt(1, 0, 2));
    check_singular(b.config(), pt(1, -2, 0));
  }
  SECTION("3/1 goes through the integer path") {
    Builder b;
    uint32_t r = b.construct_rational(Int(3), Int(1), Strategy::naive);
    CHECK(b.config().singular[r].point == pt(3, 0, 1));
    check_singular(b.config(), pt(3, 0, 1));
  }
  SECTION("-2/4 reduces to -1/2") {
    Builder b;
    uint32_t r = b.construct_rational(Int(-2), Int(4), Strategy::chain);
    CHECK(b.config().singular[r].point == pt(1, 0, -2));
    // Final point is incident to Y=0 and the joining line M exactly.
    const Config& cfg = b.config();
    Point p = pt(1, 0, -2);
    CHECK(incident(p, ln(0, 1, 0)));
    int on = 0;
    for (const auto& l : cfg.lines)
      if (incident(p, l)) ++on;
    CHECK(on >= 2);
  }
}

TEST_CASE("transfer_axis reference cases") {
  SECTION("v = 1") {
    Builder b;
    uint32_t u = b.construct_rational(Int(1), Int(1), Strategy::naive);
    uint32_t r = b.transfer_axis(u);
    CHECK(b.config().singular[r].point == pt(0, 1, 1));
    check_singular(b.config(), pt(0, 1, 1));
  }
  SECTION("v = 0 skips") {
    Builder b;
    uint32_t z = b.require(pt(0, 0, 1));
    size_t lines = b.config().lines.size();
    uint32_t r = b.transfer_axis(z);
    CHECK(b.config().singular[r].point == pt(0, 0, 1));
    CHECK(b.config().lines.size() == lines);
  }
  SECTION("v = -3/2") {
    Builder b;
    uint32_t u = b.construct_rational(Int(-3), Int(2), Strategy::chain);
    uint32_t r = b.transfer_axis(u);
    CHECK(b.config().singular[r].point == pt(0, 3, -2));
    check_singular(b.config(), pt(0, -3, 2));
  }
  SECTION("bad shape") {
    Builder b;
    uint32_t i = b.require(pt(0, 1, 0));
    CHECK_THROWS_AS(b.transfer_axis(i), Error);
  }
}

TEST_CASE("combine_xy reference cases") {
  SECTION("u = v = 1") {
    Builder b;
    uint32_t u = b.construct_rational(Int(1), Int(1), Strategy::naive);
    uint32_t v = b.transfer_axis(u);
    uint32_t r = b.combine_xy(u, v);
    CHECK(b.config().singular[r].point == pt(1, 1, 1));
    check_singular(b.config(), pt(1, 1, 1));
  }
  SECTION("u = 2/3, v = -1") {
    Builder b;
    uint32_t u = b.construct_rational(Int(2), Int(3), Strategy::chain);
    uint32_t v = b.require(pt(0, -1, 1));
    uint32_t r = b.combine_xy(u, v);
    CHECK(b.config().singular[r].point == pt(2, -3, 3));
    check_singular(b.config(), pt(2, -3, 3));
  }
}

TEST_CASE("construct_point covers all chart cases") {
  SECTION("quadrilateral point short-circuits") {
    Builder b;
    size_t lines = b.config().lines.size(), steps = b.config().trace.size();
    b.construct_point(pt(1, -1, 0), Strategy::naive);
    CHECK(b.config().lines.size() == lines);
    CHECK(b.config().trace.size() == steps);
  }
  SECTION("(3:5:1) lands with two witnesses") {
    Builder b;
    uint32_t r = b.construct_point(pt(3, 5, 1), Strategy::chain);
    CHECK(b.config().singular[r].point == pt(3, 5, 1));
    check_singular(b.config(), pt(3, 5, 1));
  }
  SECTION("point at infinity (2:3:0)") {
    Builder b;
    uint32_t r = b.construct_point(pt(2, 3, 0), Strategy::chain);
    CHECK(b.config().singular[r].point == pt(2, 3, 0));
    check_singular(b.config(), pt(2, 3, 0));
    // The joining line (3,-2,0) through (2:3:1) and (0:0:1) is present.
    CHECK(b.config().has_line(ln(3, -2, 0)));
    check_singular(b.config(), pt(2, 3, 1));
  }
  SECTION("planner idempotence") {
    Builder b;
    b.construct_point(pt(3, 5, 1), Strategy::chain);
    Config once = b.config();
    b.construct_point(pt(3, 5, 1), Strategy::chain);
    CHECK(b.config().trace.size() == once.trace.size());
    CHECK(b.config().lines.size() == once.lines.size());
    CHECK(b.config().singular.size() == once.singular.size());
  }
}

TEST_CASE("strategy agreement: both land on the target") {
  std::mt19937 rng(4711);
  std::uniform_int_distribution<int> d(-40, 40);
  std::uniform_int_distribution<int> dz(1, 15);
  for (int it = 0; it < 10; ++it) {
    Point t = Point::of(Int(d(rng)), Int(d(rng)), Int(dz(rng)));
    Config a = construct_point(init_quadrilateral(), t, Strategy::naive);
    Config b = construct_point(init_quadrilateral(), t, Strategy::chain);
    CHECK(a.find_record(t) >= 0);
    CHECK(b.find_record(t) >= 0);
    check_singular(a, t);
    check_singular(b, t);
  }
}

TEST_CASE("monotonicity: components and records only grow") {
  Builder b;
  size_t lines = b.config().lines.size();
  size_t sing = b.config().singular.size();
  for (long k : {7L, -3L, 12L}) {
    b.construct_point(pt(k, 2 * k + 1, 3), Strategy::chain);
    CHECK(b.config().lines.size() >= lines);
    CHECK(b.config().singular.size() >= sing);
    lines = b.config().lines.size();
    sing = b.config().singular.size();
  }
}

TEST_CASE("rule closure: every line joins two recorded singular points") {
  Builder b;
  b.construct_point(pt(5, -7, 3), Strategy::chain);
  const Config& cfg = b.config();
  size_t line_no = 4;  // quadrilateral lines precede the trace-added ones
  for (const auto& step : cfg.trace) {
    if (const auto* al = std::get_if<AddLineStep>(&step)) {
      REQUIRE(al->anchor_i < cfg.singular.size());
      REQUIRE(al->anchor_j < cfg.singular.size());
      CHECK(al->line == join(cfg.singular[al->anchor_i].point, cfg.singular[al->anchor_j].point));
      CHECK(al->line == cfg.lines[line_no]);
      ++line_no;
    }
  }
  CHECK(line_no == cfg.lines.size());
}

TEST_CASE("big chain target stays fast") {
  Builder b;
  Int big(1);
  big <<= 20;  // 2^20
  uint32_t r = b.construct_integer(big, Strategy::chain);
  CHECK(b.config().singular[r].point == Point::of(Int(0), big, Int(1)));
  CHECK(b.counters().add_integers <= 25);
}
