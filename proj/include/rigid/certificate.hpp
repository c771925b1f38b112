#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rigid/config.hpp"
#include "rigid/errors.hpp"
#include "rigid/numeric.hpp"
#include "rigid/unipoly.hpp"

namespace rigid {

using Json = nlohmann::json;

struct RationalClaim {
  Point point;
  friend bool operator==(const RationalClaim& a, const RationalClaim& b) {
    return a.point == b.point;
  }
};

struct AlgebraicClaim {
  UniPoly minpoly;    // monic, squarefree, ascending coefficients on the wire
  IntervalQ interval; // isolates the encoded root
  uint32_t curve = 0; // curve index in the replayed configuration
  friend bool operator==(const AlgebraicClaim& a, const AlgebraicClaim& b) {
    return a.minpoly == b.minpoly && a.interval.lo == b.interval.lo &&
           a.interval.hi == b.interval.hi && a.curve == b.curve;
  }
};

struct CurveClaim {
  HomForm form;
  friend bool operator==(const CurveClaim& a, const CurveClaim& b) { return a.form == b.form; }
};

using Claim = std::variant<RationalClaim, AlgebraicClaim, CurveClaim>;

struct Certificate {
  int version = 1;
  std::vector<Step> steps;
  std::vector<Claim> claims;
};

inline Certificate make_certificate(const Config& cfg, std::vector<Claim> claims) {
  return Certificate{1, cfg.trace, std::move(claims)};
}

// --- canonical serialization -------------------------------------------------

namespace wire {

inline Json triple_json(const Triple& t) {
  return Json::array({t[0].get_str(), t[1].get_str(), t[2].get_str()});
}

inline Json component_json(const ComponentRef& r) {
  return Json::array({r.kind == ComponentKind::line ? "line" : "curve", r.index});
}

inline Json derived_json(const DerivedRecord& d) {
  Json j;
  j["point"] = triple_json(d.point.t);
  j["self_singular"] = d.self_singular;
  Json w = Json::array();
  for (const auto& r : d.witnesses) w.push_back(component_json(r));
  j["witnesses"] = std::move(w);
  return j;
}

inline Json form_json(const HomForm& f) {
  Json j;
  j["degree"] = f.degree();
  Json monos = Json::array();
  for (const auto& [m, c] : f.terms()) monos.push_back(Json::array({m[0], m[1], m[2], c.get_str()}));
  j["monomials"] = std::move(monos);
  return j;
}

inline Json binform_json(const BinForm& b) {
  Json j;
  j["degree"] = b.degree();
  Json c = Json::array();
  for (const auto& x : b.coeffs()) c.push_back(x.get_str());
  j["coeffs"] = std::move(c);
  return j;
}

inline Json step_json(const Step& s) {
  Json j;
  if (std::holds_alternative<InitStep>(s)) {
    j["kind"] = "init";
  } else if (const auto* al = std::get_if<AddLineStep>(&s)) {
    j["kind"] = "add_line";
    j["anchors"] = Json::array({al->anchor_i, al->anchor_j});
    j["line"] = triple_json(al->line.t);
    Json d = Json::array();
    for (const auto& r : al->derived) d.push_back(derived_json(r));
    j["derived"] = std::move(d);
  } else {
    const auto& ac = std::get<AddCurveStep>(s);
    j["kind"] = "add_curve";
    j["degree"] = ac.degree;
    j["anchors"] = ac.anchors;
    j["form"] = form_json(ac.form);
    Json d = Json::array();
    for (const auto& r : ac.derived) d.push_back(derived_json(r));
    j["derived"] = std::move(d);
    Json nr = Json::array();
    for (const auto& f : ac.nonrational) {
      Json e;
      e["line"] = f.line;
      e["factor"] = binform_json(f.factor);
      nr.push_back(std::move(e));
    }
    j["nonrational"] = std::move(nr);
  }
  return j;
}

inline Json claim_json(const Claim& c) {
  Json j;
  if (const auto* r = std::get_if<RationalClaim>(&c)) {
    j["kind"] = "rational";
    j["point"] = triple_json(r->point.t);
  } else if (const auto* a = std::get_if<AlgebraicClaim>(&c)) {
    j["kind"] = "algebraic";
    Json coeffs = Json::array();
    for (const auto& q : a->minpoly.coeffs()) coeffs.push_back(to_string(q));
    j["minpoly"] = std::move(coeffs);
    j["interval"] = Json::array({to_string(a->interval.lo), to_string(a->interval.hi)});
    j["curve"] = a->curve;
  } else {
    j["kind"] = "curve";
    j["form"] = form_json(std::get<CurveClaim>(c).form);
  }
  return j;
}

}  // namespace wire

// Canonical bytes: sorted keys, no whitespace, arbitrary-precision integers
// as decimal strings. emit(parse(emit(c))) is byte-identical to emit(c).
inline std::string emit_certificate(const Certificate& cert) {
  Json j;
  j["version"] = cert.version;
  Json steps = Json::array();
  for (const auto& s : cert.steps) steps.push_back(wire::step_json(s));
  j["steps"] = std::move(steps);
  Json claims = Json::array();
  for (const auto& c : cert.claims) claims.push_back(wire::claim_json(c));
  j["claims"] = std::move(claims);
  return j.dump();
}

// --- strict parsing -----------------------------------------------------------

namespace wire {

[[noreturn]] inline void bad(const std::string& where, const std::string& why) {
  throw Error(Errc::parse_error, where + ": " + why);
}

inline void expect_keys(const Json& j, const std::string& where,
                        std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const char* k : keys)
    if (!j.contains(k)) bad(where, std::string("missing key \"") + k + "\"");
  if (j.size() != keys.size()) bad(where, "unexpected extra keys");
}

inline Int parse_int_str(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a decimal string");
  auto v = parse_int(j.get_ref<const std::string&>());
  if (!v) bad(where, "not a canonical decimal integer");
  return *v;
}

inline Rat parse_rat_str(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a rational string");
  auto v = parse_rat(j.get_ref<const std::string&>());
  if (!v) bad(where, "not a canonical rational");
  return *v;
}

inline uint32_t parse_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where, "expected an unsigned integer");
  return j.get<uint32_t>();
}

inline Triple parse_triple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) bad(where, "expected a 3-element array");
  Int x = parse_int_str(j[0], where);
  Int y = parse_int_str(j[1], where);
  Int z = parse_int_str(j[2], where);
  if (x == 0 && y == 0 && z == 0) bad(where, "zero triple");
  Triple t = Triple::normalize(x, y, z);
  if (t[0] != x || t[1] != y || t[2] != z) bad(where, "triple is not in normalized form");
  return t;
}

inline ComponentRef parse_component(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [kind, index]");
  if (!j[0].is_string()) bad(where, "component kind must be a string");
  const std::string& k = j[0].get_ref<const std::string&>();
  ComponentKind kind;
  if (k == "line")
    kind = ComponentKind::line;
  else if (k == "curve")
    kind = ComponentKind::curve;
  else
    bad(where, "unknown component kind \"" + k + "\"");
  return {kind, parse_index(j[1], where)};
}

inline DerivedRecord parse_derived(const Json& j, const std::string& where) {
  expect_keys(j, where, {"point", "self_singular", "witnesses"});
  DerivedRecord d;
  d.point = Point{parse_triple(j["point"], where + ".point")};
  if (!j["self_singular"].is_boolean()) bad(where, "self_singular must be a boolean");
  d.self_singular = j["self_singular"].get<bool>();
  if (!j["witnesses"].is_array()) bad(where, "witnesses must be an array");
  for (size_t i = 0; i < j["witnesses"].size(); ++i)
    d.witnesses.push_back(parse_component(j["witnesses"][i], where + ".witnesses"));
  if (d.witnesses.empty()) bad(where, "witnesses must be nonempty");
  for (size_t i = 1; i < d.witnesses.size(); ++i)
    if (!(d.witnesses[i - 1] < d.witnesses[i])) bad(where, "witnesses not sorted");
  return d;
}

inline HomForm parse_form(const Json& j, const std::string& where) {
  expect_keys(j, where, {"degree", "monomials"});
  if (!j["degree"].is_number_unsigned()) bad(where, "degree must be unsigned");
  int n = j["degree"].get<int>();
  if (n < 1) bad(where, "degree must be positive");
  if (!j["monomials"].is_array() || j["monomials"].empty()) bad(where, "monomials must be nonempty");
  TermMap terms;
  Mono prev{0, 0, 0};
  bool first = true;
  for (const auto& e : j["monomials"]) {
    if (!e.is_array() || e.size() != 4) bad(where, "monomial entries are [i,j,k,coeff]");
    for (int t = 0; t < 3; ++t)
      if (!e[static_cast<size_t>(t)].is_number_unsigned()) bad(where, "exponents must be unsigned");
    Mono m{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
    if (m[0] + m[1] + m[2] != n) bad(where, "monomial degree mismatch");
    Int c = parse_int_str(e[3], where);
    if (c == 0) bad(where, "zero coefficient stored");
    if (!first && !MonoGradedLexDesc{}(prev, m)) bad(where, "monomials not sorted");
    prev = m;
    first = false;
    terms[m] = c;
  }
  HomForm f = HomForm::from_terms(n, terms);
  // Canonical on the wire: primitive with positive leading coefficient.
  for (const auto& [m, c] : f.terms())
    if (terms.at(m) != c) bad(where, "form is not in normalized form");
  return f;
}

inline BinForm parse_binform(const Json& j, const std::string& where) {
  expect_keys(j, where, {"coeffs", "degree"});
  if (!j["degree"].is_number_unsigned()) bad(where, "degree must be unsigned");
  int n = j["degree"].get<int>();
  if (!j["coeffs"].is_array() || static_cast<int>(j["coeffs"].size()) != n + 1)
    bad(where, "coefficient count must be degree + 1");
  std::vector<Int> c;
  for (const auto& e : j["coeffs"]) c.push_back(parse_int_str(e, where));
  BinForm b(std::move(c));
  if (b.is_zero()) bad(where, "zero factor");
  if (!(b.normalized() == b)) bad(where, "factor not in normalized form");
  return b;
}

inline Step parse_step(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    bad(where, "step needs a \"kind\"");
  const std::string& kind = j["kind"].get_ref<const std::string&>();
  if (kind == "init") {
    expect_keys(j, where, {"kind"});
    return InitStep{};
  }
  if (kind == "add_line") {
    expect_keys(j, where, {"anchors", "derived", "kind", "line"});
    AddLineStep s;
    if (!j["anchors"].is_array() || j["anchors"].size() != 2) bad(where, "anchors must be [i,j]");
    s.anchor_i = parse_index(j["anchors"][0], where + ".anchors");
    s.anchor_j = parse_index(j["anchors"][1], where + ".anchors");
    s.line = Line{parse_triple(j["line"], where + ".line")};
    if (!j["derived"].is_array()) bad(where, "derived must be an array");
    for (size_t i = 0; i < j["derived"].size(); ++i)
      s.derived.push_back(parse_derived(j["derived"][i], where + ".derived[" + std::to_string(i) + "]"));
    for (size_t i = 1; i < s.derived.size(); ++i)
      if (!(s.derived[i - 1].point < s.derived[i].point)) bad(where, "derived not sorted by point");
    return s;
  }
  if (kind == "add_curve") {
    expect_keys(j, where, {"anchors", "degree", "derived", "form", "kind", "nonrational"});
    AddCurveStep s;
    if (!j["degree"].is_number_unsigned()) bad(where, "degree must be unsigned");
    s.degree = j["degree"].get<int>();
    if (!j["anchors"].is_array()) bad(where, "anchors must be an array");
    for (const auto& a : j["anchors"]) s.anchors.push_back(parse_index(a, where + ".anchors"));
    s.form = parse_form(j["form"], where + ".form");
    if (s.form.degree() != s.degree) bad(where, "degree disagrees with the form");
    if (!j["derived"].is_array()) bad(where, "derived must be an array");
    for (size_t i = 0; i < j["derived"].size(); ++i)
      s.derived.push_back(parse_derived(j["derived"][i], where + ".derived[" + std::to_string(i) + "]"));
    for (size_t i = 1; i < s.derived.size(); ++i)
      if (!(s.derived[i - 1].point < s.derived[i].point)) bad(where, "derived not sorted by point");
    if (!j["nonrational"].is_array()) bad(where, "nonrational must be an array");
    for (size_t i = 0; i < j["nonrational"].size(); ++i) {
      const auto& e = j["nonrational"][i];
      std::string w = where + ".nonrational[" + std::to_string(i) + "]";
      expect_keys(e, w, {"factor", "line"});
      NonRationalIntersection nr;
      nr.line = parse_index(e["line"], w);
      nr.factor = parse_binform(e["factor"], w + ".factor");
      s.nonrational.push_back(std::move(nr));
    }
    for (size_t i = 1; i < s.nonrational.size(); ++i)
      if (s.nonrational[i - 1].line > s.nonrational[i].line)
        bad(where, "nonrational entries not sorted by line");
    return s;
  }
  bad(where, "unknown step kind \"" + kind + "\"");
}

inline Claim parse_claim(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    bad(where, "claim needs a \"kind\"");
  const std::string& kind = j["kind"].get_ref<const std::string&>();
  if (kind == "rational") {
    expect_keys(j, where, {"kind", "point"});
    return RationalClaim{Point{parse_triple(j["point"], where + ".point")}};
  }
  if (kind == "algebraic") {
    expect_keys(j, where, {"curve", "interval", "kind", "minpoly"});
    if (!j["minpoly"].is_array() || j["minpoly"].size() < 2)
      bad(where, "minpoly needs degree >= 1");
    std::vector<Rat> coeffs;
    for (const auto& c : j["minpoly"]) coeffs.push_back(parse_rat_str(c, where + ".minpoly"));
    if (coeffs.back() != 1) bad(where, "minpoly must be monic");
    UniPoly f(std::move(coeffs));
    if (!j["interval"].is_array() || j["interval"].size() != 2)
      bad(where, "interval must be [lo, hi]");
    Rat lo = parse_rat_str(j["interval"][0], where + ".interval");
    Rat hi = parse_rat_str(j["interval"][1], where + ".interval");
    if (!(lo < hi)) bad(where, "interval needs lo < hi");
    return AlgebraicClaim{std::move(f), IntervalQ(lo, hi), parse_index(j["curve"], where + ".curve")};
  }
  if (kind == "curve") {
    expect_keys(j, where, {"form", "kind"});
    return CurveClaim{parse_form(j["form"], where + ".form")};
  }
  bad(where, "unknown claim kind \"" + kind + "\"");
}

}  // namespace wire

inline Certificate parse_certificate(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("invalid JSON at byte ") +
                                       std::to_string(e.byte) + ": " + e.what());
  }
  wire::expect_keys(j, "certificate", {"claims", "steps", "version"});
  if (!j["version"].is_number_unsigned() || j["version"].get<int>() != 1)
    wire::bad("certificate.version", "unsupported version");
  Certificate cert;
  cert.version = 1;
  if (!j["steps"].is_array() || j["steps"].empty()) wire::bad("certificate.steps", "must be nonempty");
  for (size_t i = 0; i < j["steps"].size(); ++i)
    cert.steps.push_back(wire::parse_step(j["steps"][i], "steps[" + std::to_string(i) + "]"));
  if (!std::holds_alternative<InitStep>(cert.steps[0]))
    wire::bad("steps[0]", "the trace must start with the init step");
  for (size_t i = 1; i < cert.steps.size(); ++i)
    if (std::holds_alternative<InitStep>(cert.steps[i]))
      wire::bad("steps[" + std::to_string(i) + "]", "only one init step is allowed");
  if (!j["claims"].is_array()) wire::bad("certificate.claims", "must be an array");
  for (size_t i = 0; i < j["claims"].size(); ++i)
    cert.claims.push_back(wire::parse_claim(j["claims"][i], "claims[" + std::to_string(i) + "]"));
  return cert;
}

}  // namespace rigid
