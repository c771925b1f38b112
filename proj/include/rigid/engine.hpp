#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigid/config.hpp"
#include "rigid/errors.hpp"
#include "rigid/homform.hpp"
#include "rigid/linalg.hpp"
#include "rigid/projective.hpp"
#include "rigid/resultants.hpp"
#include "rigid/unipoly.hpp"

namespace rigid {

// Identifies which root of the minimal polynomial is encoded as (u:0:1) on
// the embedded curve, along the axis Y=0.
struct AlgebraicWitness {
  UniPoly minpoly;            // monic, squarefree
  IntervalQ root_interval;    // isolates exactly one real root
  std::optional<uint32_t> curve;  // configuration curve index; empty for the
                                  // degree-1 case, which degenerates to a line
  bool root_is_rational = false;
};

// The unique degree-n curve through the given points, by the kernel of the
// vanishing-condition matrix.
inline HomForm unique_curve_through(const std::vector<Point>& points, int n) {
  if (n < 1) throw Error(Errc::no_curve, "degree must be positive");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(Errc::equal_points, "interpolation points must be pairwise distinct");
  auto monos = monomials_of_degree(n);
  MatQ m;
  m.reserve(points.size());
  for (const auto& p : points) {
    VecQ row;
    row.reserve(monos.size());
    for (const auto& mono : monos) {
      Int v(1);
      for (int k = 0; k < mono[0]; ++k) v *= p.x();
      for (int k = 0; k < mono[1]; ++k) v *= p.y();
      for (int k = 0; k < mono[2]; ++k) v *= p.z();
      row.emplace_back(v);
    }
    m.push_back(std::move(row));
  }
  auto basis = kernel_basis(m, static_cast<int>(monos.size()));
  if (basis.empty()) throw Error(Errc::no_curve, "no curve of this degree through the points");
  if (basis.size() > 1)
    throw Error(Errc::not_unique, "a " + std::to_string(basis.size()) +
                                      "-dimensional family passes through the points");
  return HomForm::from_dense(n, basis[0]);
}

// Mutable companion of Config: owns the point index and applies rule steps.
// Public engine operations copy a Config in, build in place, and hand the
// Config back out, so the value-semantics API stays cheap to reason about.
class Builder {
 public:
  Builder() { init_quadrilateral(); }

  explicit Builder(Config cfg) : cfg_(std::move(cfg)) {
    for (uint32_t i = 0; i < cfg_.singular.size(); ++i) index_[cfg_.singular[i].point.t] = i;
    for (uint32_t i = 0; i < cfg_.lines.size(); ++i) line_index_[cfg_.lines[i].t] = i;
  }

  const Config& config() const { return cfg_; }
  Config take() && { return std::move(cfg_); }
  const GadgetCounters& counters() const { return counters_; }

  int find(const Point& p) const {
    auto it = index_.find(p.t);
    return it == index_.end() ? -1 : static_cast<int>(it->second);
  }

  uint32_t require(const Point& p) const {
    int i = find(p);
    if (i < 0)
      throw Error(Errc::anchor_out_of_range, p.str() + " is not a recorded singular point");
    return static_cast<uint32_t>(i);
  }

  const SingRecord& record(uint32_t i) const {
    if (i >= cfg_.singular.size())
      throw Error(Errc::anchor_out_of_range, "singular index " + std::to_string(i));
    return cfg_.singular[i];
  }

  // --- rule applications ---------------------------------------------------

  uint32_t add_line(uint32_t i, uint32_t j) {
    auto r = add_line_impl(i, j, /*allow_skip=*/false);
    return *r;
  }

  // Skip-if-present variant: gadgets freely reuse lines across steps.
  std::optional<uint32_t> add_line_or_skip(uint32_t i, uint32_t j) {
    return add_line_impl(i, j, /*allow_skip=*/true);
  }

  uint32_t add_curve(const HomForm& form, const std::vector<uint32_t>& anchors) {
    const int n = form.degree();
    if (n == 1) {
      // Degree-1 divisors are lines; route through the line rule.
      if (anchors.size() != 2) throw Error(Errc::uniqueness_failure, "a line needs 2 anchors");
      Line l = *form.as_line();
      Line expect = join(record(anchors[0]).point, record(anchors[1]).point);
      if (l != expect) throw Error(Errc::anchor_not_on_curve, "anchors do not span the line");
      if (auto idx = add_line_or_skip(anchors[0], anchors[1])) return *idx;
      return line_index_.at(l.t);
    }
    if (static_cast<int>(anchors.size()) != n * n + 1)
      throw Error(Errc::uniqueness_failure,
                  "degree " + std::to_string(n) + " needs " + std::to_string(n * n + 1) + " anchors");
    std::vector<Point> pts;
    pts.reserve(anchors.size());
    for (auto a : anchors) {
      if (a >= cfg_.singular.size())
        throw Error(Errc::anchor_not_singular, "anchor index " + std::to_string(a));
      pts.push_back(cfg_.singular[a].point);
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j]) throw Error(Errc::equal_anchors, "duplicate anchor " + pts[i].str());
    for (const auto& p : pts)
      if (form.evaluate(p) != 0)
        throw Error(Errc::anchor_not_on_curve, p.str() + " is not on the curve");
    HomForm unique = unique_curve_through(pts, n);
    if (!(unique == form))
      throw Error(Errc::uniqueness_failure, "anchors select a different curve");
    if (cfg_.has_curve(form)) throw Error(Errc::duplicate_component, "curve already present");

    // Restriction to every line: rational roots become singular records,
    // the non-rational squarefree factors are kept in the step data.
    std::vector<BinForm> restrictions;
    restrictions.reserve(cfg_.lines.size());
    for (const auto& l : cfg_.lines) {
      try {
        restrictions.push_back(restrict_to_line(form, l));
      } catch (const Error& e) {
        if (e.code() == Errc::component_contained)
          throw Error(Errc::duplicate_component, "line " + l.str() + " divides the curve");
        throw;
      }
    }

    const uint32_t curve_idx = static_cast<uint32_t>(cfg_.curves.size());
    cfg_.curves.push_back(form);
    std::map<Point, DerivedRecord> touched;
    std::vector<NonRationalIntersection> nonrational;
    for (uint32_t li = 0; li < restrictions.size(); ++li) {
      auto dec = decompose(restrictions[li]);
      for (const auto& root : dec.rational) {
        Point p = line_point_from_root(cfg_.lines[li], root.s, root.t);
        upsert(touched, p, {line_ref(li), curve_ref(curve_idx)}, false);
      }
      for (const auto& f : dec.nonrational)
        nonrational.push_back({li, f.form.normalized()});
    }
    auto smooth = smoothness_check(form);
    if (smooth.status == Smoothness::singular && smooth.witness)
      upsert(touched, *smooth.witness, {curve_ref(curve_idx)}, /*self_singular=*/true);

    AddCurveStep step;
    step.degree = n;
    step.anchors = anchors;
    step.form = form;
    for (auto& [p, d] : touched) step.derived.push_back(std::move(d));
    step.nonrational = std::move(nonrational);
    cfg_.trace.emplace_back(std::move(step));
    return curve_idx;
  }

  // --- gadgets from the constructive proofs --------------------------------

  // Reference points, looked up on demand so gadget preconditions surface
  // as AnchorOutOfRange when the quadrilateral is missing.
  uint32_t ref(long x, long y, long z) const { return require(Point::of(Int(x), Int(y), Int(z))); }

  uint32_t gadget_unit() {
    ++counters_.unit;
    Point target = Point::of(Int(0), Int(1), Int(1));
    if (int i = find(target); i >= 0) return static_cast<uint32_t>(i);
    add_line_or_skip(ref(0, 1, 0), ref(-1, 0, 1));   // L1: X+Z
    add_line_or_skip(ref(-1, 1, 0), ref(0, 0, 1));   // L2: X+Y
    add_line_or_skip(ref(-1, 1, 1), ref(1, 0, 0));   // M: Y-Z through their meet
    return require(target);
  }

  // Anchors (0:p:1) and (0:q:1); lands on (0:p+q:1) through the paper's
  // five-line chain with intermediates (-1:p:1), (-1:p:0), (-1:p+q:1).
  uint32_t gadget_add_integers(uint32_t sp_p, uint32_t sp_q) {
    ++counters_.add_integers;
    Int p = integer_anchor_value(sp_p);
    Int q = integer_anchor_value(sp_q);
    add_line_or_skip(sp_p, ref(1, 0, 0));           // L1: Y = pZ
    add_line_or_skip(ref(-1, 0, 1), ref(0, 1, 0));  // L2: X+Z
    uint32_t mid = require(Point::of(Int(-1), p, Int(1)));
    add_line_or_skip(ref(0, 0, 1), mid);            // M1
    uint32_t inf = require(Point::of(Int(-1), p, Int(0)));
    add_line_or_skip(inf, sp_q);                    // M2
    uint32_t sum_mid = require(Point::of(Int(-1), p + q, Int(1)));
    add_line_or_skip(ref(1, 0, 0), sum_mid);        // M3
    return require(Point::of(Int(0), p + q, Int(1)));
  }

  uint32_t construct_integer(const Int& p, Strategy strategy) {
    Point target = Point::of(Int(0), p, Int(1));
    if (int i = find(target); i >= 0) return static_cast<uint32_t>(i);
    if (p == 1) return gadget_unit();
    // (0:0:1) and (0:-1:1) are quadrilateral points; everything else builds
    // from them by the addition gadget.
    if (strategy == Strategy::naive) {
      uint32_t step_idx = p > 0 ? gadget_unit() : ref(0, -1, 1);
      Int dir = p > 0 ? 1 : -1;
      for (Int k = 2 * dir; ; k += dir) {
        Point pk = Point::of(Int(0), k, Int(1));
        if (find(pk) < 0) {
          uint32_t prev = require(Point::of(Int(0), Int(k - dir), Int(1)));
          gadget_add_integers(prev, step_idx);
        }
        if (k == p) break;
      }
      return require(target);
    }
    // Double-and-add over the gadget, built from the MSB of |p|.
    uint32_t base = p > 0 ? gadget_unit() : ref(0, -1, 1);
    Int mag = abs(p);
    int bits = static_cast<int>(mpz_sizeinbase(mag.get_mpz_t(), 2));
    Int cur_val = p > 0 ? 1 : -1;
    uint32_t cur = base;
    for (int b = bits - 2; b >= 0; --b) {
      Int next = cur_val * 2;
      Point np = Point::of(Int(0), next, Int(1));
      cur = find(np) >= 0 ? require(np) : gadget_add_integers(cur, cur);
      cur_val = next;
      if (mpz_tstbit(mag.get_mpz_t(), static_cast<mp_bitcnt_t>(b))) {
        next = cur_val + (p > 0 ? 1 : -1);
        Point ap = Point::of(Int(0), next, Int(1));
        cur = find(ap) >= 0 ? require(ap) : gadget_add_integers(cur, base);
        cur_val = next;
      }
    }
    return require(target);
  }

  // Lands on the normalized (p:0:q) through (0:p:1), (0:-q:1) and the
  // intermediate (1:-q:0) on Z=0.
  uint32_t construct_rational(Int p, Int q, Strategy strategy) {
    if (q == 0) throw Error(Errc::bad_anchor_shape, "rational target needs q != 0");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    Int g = gcd(abs(p), q);
    if (g > 1) {
      p = divexact(p, g);
      q = divexact(q, g);
    }
    Point target = Point::of(p, Int(0), q);
    if (int i = find(target); i >= 0) return static_cast<uint32_t>(i);
    ++counters_.rational;
    uint32_t sp = construct_integer(p, strategy);
    uint32_t smq = construct_integer(-q, strategy);
    add_line_or_skip(ref(1, 0, -1), smq);  // L through (1:0:-1), (0:-q:1)
    uint32_t inf = require(Point::of(Int(1), Int(-q), Int(0)));
    add_line_or_skip(sp, inf);             // M through (0:p:1), (1:-q:0)
    return require(target);
  }

  // (v:0:1) -> (0:v:1) via the line through (1:-1:0).
  uint32_t transfer_axis(uint32_t sp) {
    const Point& a = record(sp).point;
    if (a.y() != 0 || a.z() == 0)
      throw Error(Errc::bad_anchor_shape, a.str() + " is not of the form (v:0:1)");
    Point target = Point::of(Int(a.y()), Int(a.x()), Int(a.z()));
    if (int i = find(target); i >= 0) return static_cast<uint32_t>(i);
    ++counters_.transfer_axis;
    add_line_or_skip(sp, ref(1, -1, 0));
    return require(target);
  }

  // (u:0:1) x (0:v:1) -> (u:v:1) as the meet of two axis-parallel joins.
  uint32_t combine_xy(uint32_t sp_u, uint32_t sp_v) {
    const Point& a = record(sp_u).point;
    const Point& b = record(sp_v).point;
    if (a.y() != 0 || a.z() == 0)
      throw Error(Errc::bad_anchor_shape, a.str() + " is not of the form (u:0:1)");
    if (b.x() != 0 || b.z() == 0)
      throw Error(Errc::bad_anchor_shape, b.str() + " is not of the form (0:v:1)");
    Int tx = a.x() * b.z();
    Int ty = b.y() * a.z();
    Int tz = a.z() * b.z();
    Point target = Point::of(std::move(tx), std::move(ty), std::move(tz));
    if (int i = find(target); i >= 0) return static_cast<uint32_t>(i);
    ++counters_.combine_xy;
    add_line_or_skip(sp_u, ref(0, 1, 0));
    add_line_or_skip(sp_v, ref(1, 0, 0));
    return require(target);
  }

  uint32_t construct_point(const Point& t, Strategy strategy) {
    if (int i = find(t); i >= 0) return static_cast<uint32_t>(i);
    if (t.z() != 0) {
      if (t.y() == 0) return construct_rational(t.x(), t.z(), strategy);
      if (t.x() == 0) return transfer_axis(construct_rational(t.y(), t.z(), strategy));
      uint32_t ru = construct_rational(t.x(), t.z(), strategy);
      uint32_t rv = construct_rational(t.y(), t.z(), strategy);
      return combine_xy(ru, transfer_axis(rv));
    }
    // Point at infinity: build the affine shadow (a:b:1), join it with
    // (0:0:1) and pick up the meet with Z=0.
    ++counters_.infinity_hop;
    uint32_t aff = construct_point(Point::of(Int(t.x()), Int(t.y()), Int(1)), strategy);
    add_line_or_skip(aff, ref(0, 0, 1));
    return require(t);
  }

  AlgebraicWitness embed_algebraic(const UniPoly& f, const IntervalQ& root_choice,
                                   Strategy strategy, const Rat& refine_width) {
    if (f.degree() < 1) throw Error(Errc::not_monic, "minimal polynomial must have degree >= 1");
    if (!f.is_monic()) throw Error(Errc::not_monic, "minimal polynomial must be monic");
    if (!is_squarefree(f)) throw Error(Errc::not_squarefree, "minimal polynomial must be squarefree");
    SturmChain chain(f);
    if (sign(f(root_choice.lo)) == 0 || sign(f(root_choice.hi)) == 0 ||
        chain.count_roots(root_choice.lo, root_choice.hi) != 1)
      throw Error(Errc::root_not_isolated,
                  "interval " + root_choice.str() + " does not isolate one root");
    const int n = f.degree();
    std::vector<uint32_t> anchors;
    std::vector<Point> pts;
    for (int k = 0; k <= n * n; ++k) {
      Rat y = f(Rat(k));
      Point p = Point::of_rat(Rat(k), y, Rat(1));
      anchors.push_back(construct_point(p, strategy));
      pts.push_back(p);
    }
    AlgebraicWitness w{f, refine_root(f, root_choice, refine_width), std::nullopt, false};
    // Rational roots inside the interval mean the encoded point is rational.
    for (const auto& [r, m] : rational_roots(f)) {
      (void)m;
      if (w.root_interval.contains(r)) w.root_is_rational = true;
    }
    if (n == 1) {
      // Degenerates to the line Y = f(X/Z) Z; the encoded point is rational.
      add_line_or_skip(anchors[0], anchors[1]);
      w.root_is_rational = true;
      return w;
    }
    // E: Y Z^(n-1) = f(X/Z) Z^n, cleared to integer coefficients.
    TermMap terms;
    Int d(1);
    for (const auto& c : f.coeffs()) d = lcm(d, den(c));
    terms[{0, 1, n - 1}] = d;
    for (int i = 0; i <= n; ++i) {
      const Rat c = f.coeff(i);
      if (c == 0) continue;
      terms[{i, 0, n - i}] -= num(c) * divexact(d, den(c));
    }
    HomForm curve = HomForm::from_terms(n, terms);
    if (cfg_.has_curve(curve)) {
      for (uint32_t i = 0; i < cfg_.curves.size(); ++i)
        if (cfg_.curves[i] == curve) w.curve = i;
    } else {
      w.curve = add_curve(curve, anchors);
    }
    return w;
  }

  uint32_t embed_curve(const HomForm& curve, const std::vector<Point>& points,
                       Strategy strategy) {
    const int n = curve.degree();
    if (static_cast<int>(points.size()) != n * n + 1)
      throw Error(Errc::uniqueness_failure, "degree " + std::to_string(n) + " needs " +
                                                std::to_string(n * n + 1) + " points");
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw Error(Errc::point_not_on_curve, "duplicate point " + points[i].str());
    for (const auto& p : points)
      if (curve.evaluate(p) != 0)
        throw Error(Errc::point_not_on_curve, p.str() + " is not on the curve");
    if (n >= 2 && !(unique_curve_through(points, n) == curve))
      throw Error(Errc::uniqueness_failure, "points select a different curve");
    std::vector<uint32_t> anchors;
    anchors.reserve(points.size());
    for (const auto& p : points) anchors.push_back(construct_point(p, strategy));
    return add_curve(curve, anchors);
  }

 private:
  void init_quadrilateral() {
    cfg_.lines = {Line::of(Int(1), Int(0), Int(0)), Line::of(Int(0), Int(1), Int(0)),
                  Line::of(Int(0), Int(0), Int(1)), Line::of(Int(1), Int(1), Int(1))};
    for (uint32_t i = 0; i < 4; ++i) line_index_[cfg_.lines[i].t] = i;
    std::map<Point, DerivedRecord> touched;
    for (uint32_t i = 0; i < 4; ++i)
      for (uint32_t j = i + 1; j < 4; ++j)
        upsert(touched, meet(cfg_.lines[i], cfg_.lines[j]), {line_ref(i), line_ref(j)}, false);
    cfg_.trace.emplace_back(InitStep{});
  }

  Int integer_anchor_value(uint32_t i) const {
    const Point& p = record(i).point;
    if (p.x() != 0 || (p.z() != 1 && p.z() != -1))
      throw Error(Errc::bad_anchor_shape, p.str() + " is not of the form (0:k:1)");
    return p.y() * p.z();
  }

  std::optional<uint32_t> add_line_impl(uint32_t i, uint32_t j, bool allow_skip) {
    if (i >= cfg_.singular.size() || j >= cfg_.singular.size())
      throw Error(Errc::anchor_out_of_range,
                  "anchor " + std::to_string(i >= cfg_.singular.size() ? i : j));
    if (i == j) throw Error(Errc::equal_anchors, "anchors must differ");
    const Point& p = cfg_.singular[i].point;
    const Point& q = cfg_.singular[j].point;
    if (p == q) throw Error(Errc::equal_anchors, "anchor points coincide");
    Line l = join(p, q);
    if (auto it = line_index_.find(l.t); it != line_index_.end()) {
      if (allow_skip) return std::nullopt;
      throw Error(Errc::duplicate_line, l.str() + " is already a component");
    }
    const uint32_t line_idx = static_cast<uint32_t>(cfg_.lines.size());
    std::map<Point, DerivedRecord> touched;
    for (uint32_t m = 0; m < line_idx; ++m)
      upsert(touched, meet(l, cfg_.lines[m]), {line_ref(m), line_ref(line_idx)}, false);
    for (uint32_t c = 0; c < cfg_.curves.size(); ++c) {
      BinForm b;
      try {
        b = restrict_to_line(cfg_.curves[c], l);
      } catch (const Error& e) {
        if (e.code() == Errc::component_contained)
          throw Error(Errc::duplicate_component, "new line divides curve " + std::to_string(c));
        throw;
      }
      for (const auto& root : decompose(b).rational)
        upsert(touched, line_point_from_root(l, root.s, root.t),
               {line_ref(line_idx), curve_ref(c)}, false);
    }
    cfg_.lines.push_back(l);
    line_index_[l.t] = line_idx;
    AddLineStep step;
    step.anchor_i = i;
    step.anchor_j = j;
    step.line = l;
    for (auto& [pt, d] : touched) step.derived.push_back(std::move(d));
    cfg_.trace.emplace_back(std::move(step));
    return line_idx;
  }

  // Merges witnesses into the record for `p`, creating it if needed, and
  // accumulates this step's delta.
  void upsert(std::map<Point, DerivedRecord>& touched, const Point& p,
              std::initializer_list<ComponentRef> refs, bool self_singular) {
    auto it = index_.find(p.t);
    uint32_t idx;
    if (it == index_.end()) {
      idx = static_cast<uint32_t>(cfg_.singular.size());
      cfg_.singular.push_back({p, {}, false});
      index_[p.t] = idx;
    } else {
      idx = it->second;
    }
    SingRecord& rec = cfg_.singular[idx];
    DerivedRecord* delta = nullptr;
    for (ComponentRef r : refs) {
      auto pos = std::lower_bound(rec.witnesses.begin(), rec.witnesses.end(), r);
      if (pos != rec.witnesses.end() && *pos == r) continue;
      rec.witnesses.insert(pos, r);
      if (!delta) delta = &touched[p];
      auto dpos = std::lower_bound(delta->witnesses.begin(), delta->witnesses.end(), r);
      delta->witnesses.insert(dpos, r);
    }
    if (self_singular && !rec.self_singular) {
      rec.self_singular = true;
      if (!delta) delta = &touched[p];
      delta->self_singular = true;
    }
    if (delta) delta->point = p;
  }

  Config cfg_;
  std::unordered_map<Triple, uint32_t, TripleHash> index_;
  std::unordered_map<Triple, uint32_t, TripleHash> line_index_;
  GadgetCounters counters_;
};

// --- value-semantics operations over Config --------------------------------

inline Config init_quadrilateral() { return Builder().config(); }

inline Config add_line(const Config& cfg, uint32_t i, uint32_t j) {
  Builder b(cfg);
  b.add_line(i, j);
  return std::move(b).take();
}

inline Config add_line_or_skip(const Config& cfg, uint32_t i, uint32_t j) {
  Builder b(cfg);
  b.add_line_or_skip(i, j);
  return std::move(b).take();
}

inline Config gadget_unit(const Config& cfg) {
  Builder b(cfg);
  b.gadget_unit();
  return std::move(b).take();
}

inline Config gadget_add_integers(const Config& cfg, uint32_t i, uint32_t j) {
  Builder b(cfg);
  b.gadget_add_integers(i, j);
  return std::move(b).take();
}

inline Config construct_integer(const Config& cfg, const Int& p, Strategy s) {
  Builder b(cfg);
  b.construct_integer(p, s);
  return std::move(b).take();
}

inline Config construct_rational(const Config& cfg, const Int& p, const Int& q, Strategy s) {
  Builder b(cfg);
  b.construct_rational(p, q, s);
  return std::move(b).take();
}

inline Config transfer_axis(const Config& cfg, uint32_t sp) {
  Builder b(cfg);
  b.transfer_axis(sp);
  return std::move(b).take();
}

inline Config combine_xy(const Config& cfg, uint32_t su, uint32_t sv) {
  Builder b(cfg);
  b.combine_xy(su, sv);
  return std::move(b).take();
}

inline Config construct_point(const Config& cfg, const Point& t, Strategy s) {
  Builder b(cfg);
  b.construct_point(t, s);
  return std::move(b).take();
}

inline Config add_curve(const Config& cfg, const HomForm& f, const std::vector<uint32_t>& anchors) {
  Builder b(cfg);
  b.add_curve(f, anchors);
  return std::move(b).take();
}

inline std::pair<Config, AlgebraicWitness> embed_algebraic(const Config& cfg, const UniPoly& f,
                                                           const IntervalQ& root, Strategy s,
                                                           const Rat& width = Rat(1, 1000000)) {
  Builder b(cfg);
  AlgebraicWitness w = b.embed_algebraic(f, root, s, width);
  return {std::move(b).take(), std::move(w)};
}

inline Config embed_curve(const Config& cfg, const HomForm& curve,
                          const std::vector<Point>& points, Strategy s) {
  Builder b(cfg);
  b.embed_curve(curve, points, s);
  return std::move(b).take();
}

}  // namespace rigid
