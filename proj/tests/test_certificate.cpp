#include <catch2/catch_amalgamated.hpp>

#include "rigid/certificate.hpp"
#include "rigid/engine.hpp"

using namespace rigid;

namespace {

Point pt(long x, long y, long z) { return Point::of(Int(x), Int(y), Int(z)); }

Certificate sample_cert() {
  Builder b;
  b.construct_point(pt(3, 5, 1), Strategy::chain);
  return make_certificate(b.config(), {Claim{RationalClaim{pt(3, 5, 1)}}});
}

}  // namespace

TEST_CASE("emit -> parse -> emit is byte-identical") {
  Certificate cert = sample_cert();
  std::string once = emit_certificate(cert);
  Certificate parsed = parse_certificate(once);
  std::string twice = emit_certificate(parsed);
  CHECK(once == twice);
  CHECK(parsed.steps.size() == cert.steps.size());
  CHECK(parsed.claims.size() == cert.claims.size());
}

TEST_CASE("algebraic and curve claims round trip") {
  Builder b;
  UniPoly f({Rat(-2), Rat(0), Rat(1)});  // t^2 - 2
  auto w = b.embed_algebraic(f, IntervalQ(Rat(0), Rat(2)), Strategy::chain, Rat(1, 100));
  REQUIRE(w.curve);
  Certificate cert = make_certificate(
      b.config(), {Claim{AlgebraicClaim{f, w.root_interval, *w.curve}},
                   Claim{CurveClaim{b.config().curves[*w.curve]}}});
  std::string once = emit_certificate(cert);
  Certificate parsed = parse_certificate(once);
  CHECK(emit_certificate(parsed) == once);
  const auto& ac = std::get<AlgebraicClaim>(parsed.claims[0]);
  CHECK(ac.minpoly == f);
  CHECK(ac.curve == *w.curve);
}

TEST_CASE("truncated input raises ParseError") {
  std::string bytes = emit_certificate(sample_cert());
  try {
    parse_certificate(bytes.substr(0, bytes.size() / 2));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("non-normalized point triples are rejected on the wire") {
  std::string bytes = emit_certificate(sample_cert());
  // The quadrilateral meets recorded in the first add_line step contain a
  // point "(0:1:...)" somewhere; scale one triple by 2 textually.
  auto pos = bytes.find("\"point\":[\"");
  REQUIRE(pos != std::string::npos);
  // Replace the first coordinate digit string with a doubled, non-primitive
  // triple by injecting a factor of 2 over all three entries is intrusive;
  // instead target a known token: the line ["0","1","-3"] style arrays stay
  // canonical, so craft a tiny certificate by hand.
  std::string tiny = R"({"claims":[],"steps":[{"kind":"init"},)"
                     R"({"anchors":[3,1],"derived":[{"point":["2","0","0"],"self_singular":false,"witnesses":[["line",1],["line",4]]}],"kind":"add_line","line":["0","1","1"]}],"version":1})";
  try {
    parse_certificate(tiny);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("normalized") != std::string::npos);
  }
}

TEST_CASE("non-canonical integers are rejected") {
  std::string tiny = R"({"claims":[{"kind":"rational","point":["01","0","1"]}],"steps":[{"kind":"init"}],"version":1})";
  CHECK_THROWS_AS(parse_certificate(tiny), Error);
  std::string tiny2 = R"({"claims":[{"kind":"rational","point":["-0","1","1"]}],"steps":[{"kind":"init"}],"version":1})";
  CHECK_THROWS_AS(parse_certificate(tiny2), Error);
}

TEST_CASE("unknown keys and kinds are rejected") {
  CHECK_THROWS_AS(parse_certificate(R"({"claims":[],"steps":[{"kind":"init"}],"version":2})"), Error);
  CHECK_THROWS_AS(parse_certificate(R"({"claims":[],"steps":[{"kind":"frobnicate"}],"version":1})"),
                  Error);
  CHECK_THROWS_AS(
      parse_certificate(R"({"claims":[],"extra":0,"steps":[{"kind":"init"}],"version":1})"), Error);
  CHECK_THROWS_AS(parse_certificate(R"({"claims":[],"steps":[],"version":1})"), Error);
  // Trace must start with init.
  CHECK_THROWS_AS(parse_certificate(
                      R"({"claims":[],"steps":[{"anchors":[0,1],"derived":[],"kind":"add_line","line":["0","1","1"]}],"version":1})"),
                  Error);
}

TEST_CASE("claim parsing is strict") {
  // Non-monic minpoly.
  CHECK_THROWS_AS(parse_certificate(
                      R"({"claims":[{"curve":0,"interval":["0","2"],"kind":"algebraic","minpoly":["-2","0","2"]}],"steps":[{"kind":"init"}],"version":1})"),
                  Error);
  // Interval with lo >= hi.
  CHECK_THROWS_AS(parse_certificate(
                      R"({"claims":[{"curve":0,"interval":["2","2"],"kind":"algebraic","minpoly":["-2","0","1"]}],"steps":[{"kind":"init"}],"version":1})"),
                  Error);
  // Fraction strings must be canonical: "2/4" is rejected.
  CHECK_THROWS_AS(parse_certificate(
                      R"({"claims":[{"curve":0,"interval":["0","2/4"],"kind":"algebraic","minpoly":["-2","0","1"]}],"steps":[{"kind":"init"}],"version":1})"),
                  Error);
}
