#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rigid/certificate.hpp"
#include "rigid/config.hpp"
#include "rigid/engine.hpp"
#include "rigid/errors.hpp"
#include "rigid/resultants.hpp"

namespace rigid {

struct CheckResult {
  bool ok = true;
  std::string reason;
};

struct BezoutEntry {
  ComponentRef a;
  ComponentRef b;
  Int total;
  Int expected;
  bool ok = false;
};

struct BezoutReport {
  bool ok = true;
  uint64_t line_pairs = 0;  // line/line pairs meet once each, by exactness of meet()
  std::vector<BezoutEntry> entries;  // pairs involving at least one curve
};

struct NCViolation {
  enum class Kind { multiple_point, tangency, tangency_factor, self_singular, undecided };
  Kind kind;
  std::optional<Point> point;
  std::string detail;
};

struct NCReport {
  bool nc = false;
  std::vector<NCViolation> violations;
};

struct VerifyCounts {
  uint64_t lines = 0;
  uint64_t curves = 0;
  uint64_t singular_points = 0;
  uint64_t steps = 0;
};

struct VerificationReport {
  bool ok = false;
  std::vector<CheckResult> steps;
  std::vector<CheckResult> claims;
  VerifyCounts counts;
  std::optional<BezoutReport> bezout_audit;
  std::optional<NCReport> normal_crossings;
  std::string first_failure;

  Config replayed;  // the configuration rebuilt from the trace
};

struct VerifyOptions {
  bool audits = true;  // run the Bezout and normal-crossings analyses
};

// --- independent structural analyses -----------------------------------------

// Brute force over the line components: all pairwise meets, deduplicated,
// with multiplicity = number of lines through each point.
inline std::vector<std::pair<Point, int>> singular_locus_oracle(const Config& cfg) {
  if (cfg.lines.size() < 2)
    throw Error(Errc::parse_error, "oracle needs at least two lines");
  std::map<Point, int> points;
  for (size_t i = 0; i < cfg.lines.size(); ++i)
    for (size_t j = i + 1; j < cfg.lines.size(); ++j) points[meet(cfg.lines[i], cfg.lines[j])] = 0;
  for (auto& [p, mult] : points)
    for (const auto& l : cfg.lines)
      if (incident(p, l)) ++mult;
  return {points.begin(), points.end()};
}

// Recorded line-arrangement singular points must equal the oracle set, with
// line-witness counts equal to the oracle multiplicities.
inline CheckResult oracle_compare(const Config& cfg) {
  auto oracle = singular_locus_oracle(cfg);
  std::map<Point, int> recorded;
  for (const auto& r : cfg.singular) {
    int line_witnesses = 0;
    for (auto w : r.witnesses)
      if (w.kind == ComponentKind::line) ++line_witnesses;
    if (line_witnesses >= 2) recorded[r.point] = line_witnesses;
  }
  if (oracle.size() != recorded.size())
    return {false, "oracle found " + std::to_string(oracle.size()) + " points, " +
                       std::to_string(recorded.size()) + " recorded"};
  for (const auto& [p, mult] : oracle) {
    auto it = recorded.find(p);
    if (it == recorded.end()) return {false, "oracle point " + p.str() + " is not recorded"};
    if (it->second != mult)
      return {false, "witness count mismatch at " + p.str() + ": recorded " +
                         std::to_string(it->second) + ", oracle " + std::to_string(mult)};
  }
  return {true, ""};
}

inline BezoutReport bezout_audit(const Config& cfg) {
  BezoutReport rep;
  const size_t nl = cfg.lines.size();
  rep.line_pairs = nl * (nl - 1) / 2;  // distinct lines meet exactly once
  for (uint32_t li = 0; li < cfg.lines.size(); ++li)
    for (uint32_t ci = 0; ci < cfg.curves.size(); ++ci) {
      BinForm b;
      try {
        b = restrict_to_line(cfg.curves[ci], cfg.lines[li]);
      } catch (const Error& e) {
        if (e.code() == Errc::component_contained)
          throw Error(Errc::shared_component,
                      "line " + std::to_string(li) + " divides curve " + std::to_string(ci));
        throw;
      }
      Int total(0);
      for (auto& [m, d] : multiplicity_profile(b)) total += Int(m) * Int(d);
      BezoutEntry e{line_ref(li), curve_ref(ci), total, Int(cfg.curves[ci].degree()), false};
      e.ok = e.total == e.expected;
      rep.ok = rep.ok && e.ok;
      rep.entries.push_back(std::move(e));
    }
  for (uint32_t a = 0; a < cfg.curves.size(); ++a)
    for (uint32_t b2 = a + 1; b2 < cfg.curves.size(); ++b2) {
      auto [sa, sb] = find_clear_center({cfg.curves[a], cfg.curves[b2]});
      BinForm r = resultant_z(shear(cfg.curves[a], sa, sb), shear(cfg.curves[b2], sa, sb));
      if (r.is_zero())
        throw Error(Errc::shared_component, "curves " + std::to_string(a) + " and " +
                                                std::to_string(b2) + " share a component");
      Int total(0);
      for (auto& [m, d] : multiplicity_profile(r)) total += Int(m) * Int(d);
      BezoutEntry e{curve_ref(a), curve_ref(b2), total,
                    Int(cfg.curves[a].degree()) * Int(cfg.curves[b2].degree()), false};
      e.ok = e.total == e.expected;
      rep.ok = rep.ok && e.ok;
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

// Normal-crossings analysis specialized to a single divisor: every component
// smooth, every singular point on exactly two components, every intersection
// transversal.
inline NCReport normal_crossings_report(const Config& cfg) {
  NCReport rep;
  bool all_known = true;

  for (uint32_t ci = 0; ci < cfg.curves.size(); ++ci) {
    auto s = smoothness_check(cfg.curves[ci]);
    if (s.status == Smoothness::singular)
      rep.violations.push_back({NCViolation::Kind::self_singular, s.witness,
                                "curve " + std::to_string(ci) + " is singular"});
    else if (s.status == Smoothness::unknown) {
      all_known = false;
      rep.violations.push_back({NCViolation::Kind::undecided, std::nullopt,
                                "smoothness of curve " + std::to_string(ci) + " undecided: " + s.note});
    }
  }

  // Points on three or more components, straight off the witness counts.
  for (const auto& r : cfg.singular)
    if (r.witnesses.size() >= 3)
      rep.violations.push_back({NCViolation::Kind::multiple_point, r.point,
                                std::to_string(r.witnesses.size()) + " components meet here"});

  // Line/curve tangencies from the restriction multiplicities.
  for (uint32_t li = 0; li < cfg.lines.size(); ++li)
    for (uint32_t ci = 0; ci < cfg.curves.size(); ++ci) {
      BinForm b;
      try {
        b = restrict_to_line(cfg.curves[ci], cfg.lines[li]);
      } catch (const Error&) {
        rep.violations.push_back({NCViolation::Kind::undecided, std::nullopt,
                                  "line " + std::to_string(li) + " divides curve " + std::to_string(ci)});
        all_known = false;
        continue;
      }
      auto dec = decompose(b);
      for (const auto& root : dec.rational)
        if (root.multiplicity >= 2)
          rep.violations.push_back(
              {NCViolation::Kind::tangency, line_point_from_root(cfg.lines[li], root.s, root.t),
               "line " + std::to_string(li) + " meets curve " + std::to_string(ci) +
                   " with multiplicity " + std::to_string(root.multiplicity)});
      for (const auto& f : dec.nonrational)
        if (f.multiplicity >= 2)
          rep.violations.push_back({NCViolation::Kind::tangency_factor, std::nullopt,
                                    "line " + std::to_string(li) + " tangent to curve " +
                                        std::to_string(ci) + " along " + f.form.str()});
    }

  // Algebraic triple points of (line, curve, curve): the restrictions of two
  // curves to a common line sharing an irrational factor.
  for (uint32_t li = 0; li < cfg.lines.size(); ++li) {
    std::vector<std::pair<uint32_t, BinForm>> parts;
    for (uint32_t ci = 0; ci < cfg.curves.size(); ++ci) {
      try {
        for (const auto& f : decompose(restrict_to_line(cfg.curves[ci], cfg.lines[li])).nonrational)
          parts.emplace_back(ci, f.form);
      } catch (const Error&) {
        // handled above
      }
    }
    for (size_t a = 0; a < parts.size(); ++a)
      for (size_t b = a + 1; b < parts.size(); ++b) {
        if (parts[a].first == parts[b].first) continue;
        if (detail::binform_gcd(parts[a].second, parts[b].second).degree() > 0)
          rep.violations.push_back(
              {NCViolation::Kind::multiple_point, std::nullopt,
               "curves " + std::to_string(parts[a].first) + " and " + std::to_string(parts[b].first) +
                   " meet line " + std::to_string(li) + " in a common algebraic point"});
      }
  }

  // Curve/curve tangency: certified transversal when some projection center
  // yields a squarefree resultant.
  for (uint32_t a = 0; a < cfg.curves.size(); ++a)
    for (uint32_t b = a + 1; b < cfg.curves.size(); ++b) {
      bool certified = false;
      for (int attempt = 0; attempt < 40 && !certified; ++attempt) {
        Int sa(attempt % 8), sb(attempt / 8);
        if (detail::eval_affine(cfg.curves[a], sa, sb) == 0 ||
            detail::eval_affine(cfg.curves[b], sa, sb) == 0)
          continue;
        BinForm r = resultant_z(shear(cfg.curves[a], sa, sb), shear(cfg.curves[b], sa, sb));
        if (r.is_zero()) break;
        auto profile = multiplicity_profile(r);
        bool squarefree = true;
        for (auto& [m, d] : profile)
          if (m > 1) squarefree = false;
        certified = squarefree;
      }
      if (!certified) {
        all_known = false;
        rep.violations.push_back({NCViolation::Kind::undecided, std::nullopt,
                                  "transversality of curves " + std::to_string(a) + ", " +
                                      std::to_string(b) + " not certified"});
      }
    }

  rep.nc = rep.violations.empty() && all_known;
  return rep;
}

// --- certificate replay --------------------------------------------------------

// Replays the trace from a fresh quadrilateral, recomputing every join,
// intersection, kernel dimension and smoothness flag, and compares the
// recomputed step data against the certificate. Claims are then checked on
// the replayed configuration. Nothing in the certificate is trusted.
inline VerificationReport verify_certificate(const Certificate& cert,
                                             const VerifyOptions& opts = {}) {
  VerificationReport rep;
  Builder b;
  bool replay_ok = true;
  std::map<uint32_t, uint32_t> curve_step;  // curve index -> trace position

  for (size_t k = 0; k < cert.steps.size(); ++k) {
    if (!replay_ok) {
      rep.steps.push_back({false, "not replayed: an earlier step failed"});
      continue;
    }
    const Step& step = cert.steps[k];
    CheckResult r{true, ""};
    if (std::holds_alternative<InitStep>(step)) {
      if (k != 0) r = {false, "init step after the start"};
    } else if (const auto* al = std::get_if<AddLineStep>(&step)) {
      try {
        b.add_line(al->anchor_i, al->anchor_j);
        const Step& got = b.config().trace.back();
        if (!(std::get<AddLineStep>(got) == *al))
          r = {false, "recomputed line step disagrees with the certificate"};
      } catch (const Error& e) {
        r = {false, e.what()};
      }
    } else {
      const auto& ac = std::get<AddCurveStep>(step);
      try {
        uint32_t idx = b.add_curve(ac.form, ac.anchors);
        const Step& got = b.config().trace.back();
        if (!(std::get<AddCurveStep>(got) == ac))
          r = {false, "recomputed curve step disagrees with the certificate"};
        else
          curve_step[idx] = static_cast<uint32_t>(k);
      } catch (const Error& e) {
        r = {false, e.what()};
      }
    }
    if (!r.ok) {
      replay_ok = false;
      if (rep.first_failure.empty())
        rep.first_failure = "StepMismatch(" + std::to_string(k) + "): " + r.reason;
      r.reason = "StepMismatch: " + r.reason;
    }
    rep.steps.push_back(std::move(r));
  }

  const Config& cfg = b.config();
  const uint32_t y_axis_line = 1;  // Y=0 is the second quadrilateral line

  for (size_t k = 0; k < cert.claims.size(); ++k) {
    CheckResult r{true, ""};
    if (!replay_ok) {
      r = {false, "not checked: replay failed"};
    } else if (const auto* rc = std::get_if<RationalClaim>(&cert.claims[k])) {
      int idx = b.find(rc->point);
      if (idx < 0)
        r = {false, rc->point.str() + " is not a recorded singular point"};
      else if (cfg.singular[static_cast<size_t>(idx)].witnesses.size() < 2)
        r = {false, rc->point.str() + " has fewer than 2 witnesses"};
    } else if (const auto* ac = std::get_if<AlgebraicClaim>(&cert.claims[k])) {
      r = [&]() -> CheckResult {
        if (ac->curve >= cfg.curves.size()) return {false, "claim names a missing curve"};
        if (!is_squarefree(ac->minpoly)) return {false, "minpoly is not squarefree"};
        if (sign(ac->minpoly(ac->interval.lo)) == 0 || sign(ac->minpoly(ac->interval.hi)) == 0)
          return {false, "interval endpoint is a root of the minpoly"};
        SturmChain chain(ac->minpoly);
        if (chain.count_roots(ac->interval.lo, ac->interval.hi) != 1)
          return {false, "interval does not isolate one root of the minpoly"};
        auto it = curve_step.find(ac->curve);
        if (it == curve_step.end()) return {false, "claimed curve has no trace step"};
        const auto& step = std::get<AddCurveStep>(cert.steps[it->second]);
        BinForm restriction = restrict_to_line(cfg.curves[ac->curve], cfg.lines[y_axis_line]);
        for (const auto& nr : step.nonrational) {
          if (nr.line != y_axis_line) continue;
          if (!divides(nr.factor, restriction)) continue;
          UniPoly g = nr.factor.dehomogenize();
          if (!is_squarefree(g)) continue;
          int slo = sign(g(ac->interval.lo));
          int shi = sign(g(ac->interval.hi));
          if (slo != 0 && shi != 0 && slo != shi) {
            SturmChain gc(g);
            if (gc.count_roots(ac->interval.lo, ac->interval.hi) == 1) return {true, ""};
          }
        }
        return {false, "no recorded squarefree factor on Y=0 brackets the root"};
      }();
    } else {
      const auto& cc = std::get<CurveClaim>(cert.claims[k]);
      if (cc.form.degree() == 1) {
        if (!cfg.has_line(*cc.form.as_line())) r = {false, "claimed line is not a component"};
      } else if (!cfg.has_curve(cc.form)) {
        r = {false, "claimed curve is not a component"};
      }
    }
    if (!r.ok && rep.first_failure.empty())
      rep.first_failure = "ClaimFailed(" + std::to_string(k) + "): " + r.reason;
    rep.claims.push_back(std::move(r));
  }

  rep.counts = {cfg.lines.size(), cfg.curves.size(), cfg.singular.size(), cert.steps.size()};
  rep.ok = replay_ok;
  for (const auto& c : rep.claims) rep.ok = rep.ok && c.ok;

  if (opts.audits && replay_ok) {
    try {
      rep.bezout_audit = bezout_audit(cfg);
    } catch (const Error& e) {
      BezoutReport br;
      br.ok = false;
      rep.bezout_audit = std::move(br);
      if (rep.first_failure.empty()) rep.first_failure = e.what();
    }
    rep.normal_crossings = normal_crossings_report(cfg);
  }
  rep.replayed = cfg;
  return rep;
}

inline VerificationReport verify_certificate_bytes(const std::string& bytes,
                                                   const VerifyOptions& opts = {}) {
  return verify_certificate(parse_certificate(bytes), opts);
}

}  // namespace rigid
