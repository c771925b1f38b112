#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rigid/certificate.hpp"
#include "rigid/config.hpp"
#include "rigid/engine.hpp"
#include "rigid/numeric.hpp"

namespace rigid {

struct TargetStats {
  std::string label;
  Int height;
  uint64_t lines_added = 0;
  uint64_t curves_added = 0;
  uint64_t steps_added = 0;
  GadgetCounters gadgets;
};

struct StatsReport {
  std::vector<TargetStats> targets;
  uint64_t lines = 0;
  uint64_t curves = 0;
  uint64_t singular_points = 0;
  uint64_t trace_steps = 0;
};

inline StatsReport stats(const Config& cfg, std::vector<TargetStats> per_target = {}) {
  StatsReport r;
  r.targets = std::move(per_target);
  r.lines = cfg.lines.size();
  r.curves = cfg.curves.size();
  r.singular_points = cfg.singular.size();
  r.trace_steps = cfg.trace.size();
  return r;
}

inline Int claim_height(const Claim& c) {
  if (const auto* rc = std::get_if<RationalClaim>(&c)) return height(rc->point);
  if (const auto* ac = std::get_if<AlgebraicClaim>(&c)) {
    Int h(0);
    for (const auto& q : ac->minpoly.coeffs()) {
      if (abs(num(q)) > h) h = abs(num(q));
      if (den(q) > h) h = den(q);
    }
    return h;
  }
  const auto& cc = std::get<CurveClaim>(c);
  Int h(0);
  for (const auto& [m, coeff] : cc.form.terms())
    if (abs(coeff) > h) h = abs(coeff);
  return h;
}

inline std::string claim_label(const Claim& c) {
  if (const auto* rc = std::get_if<RationalClaim>(&c)) return rc->point.str();
  if (const auto* ac = std::get_if<AlgebraicClaim>(&c))
    return "root of " + ac->minpoly.str() + " in " + ac->interval.str();
  return std::get<CurveClaim>(c).form.str();
}

namespace detail {

inline bool claim_satisfied(const Claim& c, const Builder& b) {
  const Config& cfg = b.config();
  if (const auto* rc = std::get_if<RationalClaim>(&c)) {
    int idx = b.find(rc->point);
    return idx >= 0 && cfg.singular[static_cast<size_t>(idx)].witnesses.size() >= 2;
  }
  if (const auto* ac = std::get_if<AlgebraicClaim>(&c)) return ac->curve < cfg.curves.size();
  const auto& cc = std::get<CurveClaim>(c);
  if (cc.form.degree() == 1) return cfg.has_line(*cc.form.as_line());
  return cfg.has_curve(cc.form);
}

}  // namespace detail

// Attributes trace steps to claims by replay: the steps between one claim
// becoming satisfied and the next belong to the next claim. The trace is
// order-sensitive by design, so this matches how certificates are built.
inline StatsReport stats_from_certificate(const Certificate& cert) {
  Builder b;
  std::vector<TargetStats> targets;
  size_t next_claim = 0;
  uint64_t lines_mark = b.config().lines.size();
  uint64_t curves_mark = b.config().curves.size();
  uint64_t steps_mark = 0;

  auto flush_satisfied = [&](uint64_t step_no) {
    while (next_claim < cert.claims.size() &&
           detail::claim_satisfied(cert.claims[next_claim], b)) {
      TargetStats t;
      t.label = claim_label(cert.claims[next_claim]);
      t.height = claim_height(cert.claims[next_claim]);
      t.lines_added = b.config().lines.size() - lines_mark;
      t.curves_added = b.config().curves.size() - curves_mark;
      t.steps_added = step_no - steps_mark;
      targets.push_back(std::move(t));
      lines_mark = b.config().lines.size();
      curves_mark = b.config().curves.size();
      steps_mark = step_no;
      ++next_claim;
    }
  };

  uint64_t applied = 0;
  flush_satisfied(0);
  for (const auto& step : cert.steps) {
    if (std::holds_alternative<InitStep>(step)) continue;
    if (const auto* al = std::get_if<AddLineStep>(&step)) {
      b.add_line(al->anchor_i, al->anchor_j);
    } else {
      const auto& ac = std::get<AddCurveStep>(step);
      b.add_curve(ac.form, ac.anchors);
    }
    ++applied;
    flush_satisfied(applied);
  }
  // Claims never satisfied get the remaining tail attributed as zero.
  while (next_claim < cert.claims.size()) {
    TargetStats t;
    t.label = claim_label(cert.claims[next_claim]);
    t.height = claim_height(cert.claims[next_claim]);
    targets.push_back(std::move(t));
    ++next_claim;
  }
  return stats(b.config(), std::move(targets));
}

}  // namespace rigid
