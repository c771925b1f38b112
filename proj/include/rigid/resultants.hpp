#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigid/binform.hpp"
#include "rigid/errors.hpp"
#include "rigid/homform.hpp"
#include "rigid/linalg.hpp"
#include "rigid/numeric.hpp"
#include "rigid/projective.hpp"
#include "rigid/unipoly.hpp"

namespace rigid {

// Resultant of two nonzero integer polynomials (ascending coefficients,
// nonzero leading) via the Sylvester determinant.
inline Int univariate_resultant(const VecZ& a, const VecZ& b) {
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  if (da < 0 || db < 0) throw Error(Errc::parse_error, "resultant of zero polynomial");
  if (da == 0 && db == 0) return Int(1);
  if (da == 0) {
    Int r(1);
    for (int i = 0; i < db; ++i) r *= a[0];
    return r;
  }
  if (db == 0) {
    Int r(1);
    for (int i = 0; i < da; ++i) r *= b[0];
    return r;
  }
  const int n = da + db;
  MatZ m(static_cast<size_t>(n), VecZ(static_cast<size_t>(n), Int(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a[static_cast<size_t>(da - j)];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j)
      m[static_cast<size_t>(db + i)][static_cast<size_t>(i + j)] = b[static_cast<size_t>(db - j)];
  return determinant(std::move(m));
}

namespace detail {

// F(x, y, Z) as integer polynomial in Z, ascending; degree equals deg F
// exactly when the Z^degF coefficient of F is nonzero.
inline VecZ z_poly_at(const HomForm& f, const Int& x, const Int& y) {
  auto slices = f.z_slices();
  VecZ out(slices.size());
  for (size_t k = 0; k < slices.size(); ++k) out[k] = slices[k](x, y);
  return out;
}

inline Int z_leading_coeff(const HomForm& f) {
  return f.coeff({0, 0, f.degree()});
}

}  // namespace detail

// Res_Z(F, G) as a binary form in (X, Y) of degree (deg F)(deg G), computed
// by interpolation. Requires the point (0:0:1) to lie on neither curve so
// both Z-degrees stay full. Identically zero iff F and G share a factor.
inline BinForm resultant_z(const HomForm& f, const HomForm& g) {
  if (detail::z_leading_coeff(f) == 0 || detail::z_leading_coeff(g) == 0)
    throw Error(Errc::parse_error, "resultant_z requires (0:0:1) off both curves");
  const int mn = f.degree() * g.degree();
  if (mn == 0) return BinForm({Int(1)});
  // Values r(i, 1) for i = 0..mn, then one extra sample r(1, 0) is implied by
  // homogeneity; the Vandermonde solve recovers all mn+1 coefficients from
  // the affine samples alone.
  MatQ vand;
  VecQ rhs;
  for (int i = 0; i <= mn; ++i) {
    Int x(i);
    VecZ a = detail::z_poly_at(f, x, Int(1));
    VecZ b = detail::z_poly_at(g, x, Int(1));
    Int r = univariate_resultant(a, b);
    VecQ row(static_cast<size_t>(mn) + 1);
    Rat p(1);
    for (int j = 0; j <= mn; ++j) {
      row[static_cast<size_t>(j)] = p;
      p *= Rat(x);
    }
    vand.push_back(std::move(row));
    rhs.emplace_back(r);
  }
  VecQ coef = solve_square(vand, rhs);
  // coef[j] multiplies X^j Y^(mn-j); BinForm stores s^d first with s = X.
  std::vector<Int> c(static_cast<size_t>(mn) + 1);
  Int d(1);
  for (const auto& q : coef) d = lcm(d, den(q));
  if (d != 1) throw Error(Errc::parse_error, "resultant interpolation not integral");
  for (int j = 0; j <= mn; ++j) c[static_cast<size_t>(mn - j)] = num(coef[static_cast<size_t>(j)]);
  return BinForm(std::move(c));
}

namespace detail {

inline TermMap term_mul(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline TermMap term_pow(const TermMap& a, int k) {
  TermMap out;
  out[{0, 0, 0}] = 1;
  for (int i = 0; i < k; ++i) out = term_mul(out, a);
  return out;
}

}  // namespace detail

// F(X + a Z, Y + b Z, Z): shears the coordinate chart so that the projection
// center (0:0:1) moves off the curve.
inline HomForm shear(const HomForm& f, const Int& a, const Int& b) {
  TermMap x_sub, y_sub, z_sub;
  x_sub[{1, 0, 0}] = 1;
  if (a != 0) x_sub[{0, 0, 1}] = a;
  y_sub[{0, 1, 0}] = 1;
  if (b != 0) y_sub[{0, 0, 1}] = b;
  z_sub[{0, 0, 1}] = 1;
  TermMap acc;
  for (const auto& [m, c] : f.terms()) {
    TermMap t;
    t[{0, 0, 0}] = c;
    t = detail::term_mul(t, detail::term_pow(x_sub, m[0]));
    t = detail::term_mul(t, detail::term_pow(y_sub, m[1]));
    t = detail::term_mul(t, detail::term_pow(z_sub, m[2]));
    for (const auto& [mm, cc] : t) acc[mm] += cc;
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  return HomForm::from_terms(f.degree(), acc);
}

namespace detail {

inline Int eval_affine(const HomForm& f, const Int& a, const Int& b) {
  Int acc(0);
  for (const auto& [m, c] : f.terms()) {
    Int t = c;
    for (int k = 0; k < m[0]; ++k) t *= a;
    for (int k = 0; k < m[1]; ++k) t *= b;
    acc += t;  // z = 1
  }
  return acc;
}

}  // namespace detail

// Finds a small shear (a, b) so that the projection center (0:0:1) of the
// sheared chart, i.e. the point (a : b : 1), misses every given curve.
inline std::pair<Int, Int> find_clear_center(const std::vector<HomForm>& forms) {
  for (int s = 0; s < 200; ++s)
    for (int a = 0; a <= s; ++a) {
      int b = s - a;
      bool ok = true;
      for (const auto& f : forms)
        if (detail::eval_affine(f, Int(a), Int(b)) == 0) {
          ok = false;
          break;
        }
      if (ok) return {Int(a), Int(b)};
    }
  throw Error(Errc::parse_error, "no clear projection center found");
}

enum class Smoothness { smooth, singular, unknown };

struct SmoothnessResult {
  Smoothness status = Smoothness::unknown;
  std::optional<Point> witness;  // a rational singular point when known
  std::string note;
};

namespace detail {

inline Int eval_terms(const TermMap& t, const Int& x, const Int& y, const Int& z) {
  Int acc(0);
  for (const auto& [m, c] : t) {
    Int v = c;
    for (int k = 0; k < m[0]; ++k) v *= x;
    for (int k = 0; k < m[1]; ++k) v *= y;
    for (int k = 0; k < m[2]; ++k) v *= z;
    acc += v;
  }
  return acc;
}

// gcd of binary forms: common t-power plus the gcd of dehomogenizations.
inline BinForm binform_gcd(const BinForm& a, const BinForm& b) {
  int ta = 0;
  while (ta <= a.degree() && a.coeff(ta) == 0) ++ta;
  int tb = 0;
  while (tb <= b.degree() && b.coeff(tb) == 0) ++tb;
  UniPoly g = gcd_monic(a.dehomogenize(), b.dehomogenize());
  return homogenize(g, std::min(ta, tb));
}

inline VecZ clear_unipoly(const UniPoly& p) {
  Int d(1);
  for (const auto& c : p.coeffs()) d = lcm(d, den(c));
  VecZ out;
  for (const auto& c : p.coeffs()) out.push_back(num(c) * divexact(d, den(c)));
  return out;
}

}  // namespace detail

// Exact where the structure allows, Unknown when elimination degenerates.
inline SmoothnessResult smoothness_check(const HomForm& f) {
  const int n = f.degree();
  if (n == 1) return {Smoothness::smooth, std::nullopt, "line"};

  if (n == 2) {
    // Symmetric matrix of the doubled form; singular iff det = 0.
    Int a = f.coeff({2, 0, 0}), b = f.coeff({0, 2, 0}), c = f.coeff({0, 0, 2});
    Int d = f.coeff({1, 1, 0}), e = f.coeff({1, 0, 1}), g = f.coeff({0, 1, 1});
    MatZ m{{2 * a, d, e}, {d, 2 * b, g}, {e, g, 2 * c}};
    if (determinant(m) != 0) return {Smoothness::smooth, std::nullopt, "nondegenerate conic"};
    MatQ mq(3, VecQ(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mq[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    auto k = kernel_basis(mq, 3);
    Point w = Point::of_rat(k[0][0], k[0][1], k[0][2]);
    return {Smoothness::singular, w, "degenerate conic"};
  }

  // Graph-shaped forms c*Y*Z^(n-1) + G(X, Z) with X^n present: the only
  // possible singular point is (0:1:0), singular exactly when n >= 3.
  {
    bool graph = f.coeff({n, 0, 0}) != 0 && f.coeff({0, 1, n - 1}) != 0;
    if (graph)
      for (const auto& [m, c] : f.terms())
        if (m[1] != 0 && !(m[0] == 0 && m[1] == 1 && m[2] == n - 1)) {
          graph = false;
          break;
        }
    if (graph) {
      if (n >= 3)
        return {Smoothness::singular, Point::of(Int(0), Int(1), Int(0)), "graph curve, degree >= 3"};
      return {Smoothness::smooth, std::nullopt, "graph curve"};
    }
  }

  TermMap fx = f.partial(0), fy = f.partial(1), fz = f.partial(2);
  // A vanishing partial means the form ignores one variable: a cone over a
  // binary form, singular at the apex for degree >= 2.
  if (fx.empty()) return {Smoothness::singular, Point::of(Int(1), Int(0), Int(0)), "cone"};
  if (fy.empty()) return {Smoothness::singular, Point::of(Int(0), Int(1), Int(0)), "cone"};
  if (fz.empty()) return {Smoothness::singular, Point::of(Int(0), Int(0), Int(1)), "cone"};

  HomForm hx = HomForm::from_terms(n - 1, fx);
  HomForm hy = HomForm::from_terms(n - 1, fy);
  HomForm hz = HomForm::from_terms(n - 1, fz);

  // Shear so all three partials keep full Z-degree; the partials of the
  // sheared form are combinations of sheared partials, so eliminating those
  // is equivalent.
  Int sa(0), sb(0);
  {
    bool found = false;
    for (int s = 0; s < 100 && !found; ++s)
      for (int a = 0; a <= s && !found; ++a) {
        int b = s - a;
        Int va = detail::eval_terms(fx, Int(a), Int(b), Int(1));
        Int vb = detail::eval_terms(fy, Int(a), Int(b), Int(1));
        Int vc = detail::eval_terms(fz, Int(a), Int(b), Int(1));
        // G_X = F_X o T, G_Y = F_Y o T, G_Z = a F_X o T + b F_Y o T + F_Z o T;
        // all three need nonzero values at the center (a, b, 1).
        if (va != 0 && vb != 0 && (Int(a) * va + Int(b) * vb + vc) != 0) {
          sa = a;
          sb = b;
          found = true;
        }
      }
    if (!found) return {Smoothness::unknown, std::nullopt, "no nondegenerate shear found"};
  }

  HomForm g = shear(f, sa, sb);
  TermMap gx = g.partial(0), gy = g.partial(1), gz = g.partial(2);
  if (gx.empty() || gy.empty() || gz.empty())
    return {Smoothness::unknown, std::nullopt, "sheared partial vanished"};
  HomForm gxf = HomForm::from_terms(n - 1, gx);
  HomForm gyf = HomForm::from_terms(n - 1, gy);
  HomForm gzf = HomForm::from_terms(n - 1, gz);
  if (detail::z_leading_coeff(gxf) == 0 || detail::z_leading_coeff(gyf) == 0 ||
      detail::z_leading_coeff(gzf) == 0)
    return {Smoothness::unknown, std::nullopt, "partials degenerate at projection center"};

  BinForm rxy = resultant_z(gxf, gyf);
  BinForm rxz = resultant_z(gxf, gzf);
  BinForm ryz = resultant_z(gyf, gzf);
  if (rxy.is_zero() || rxz.is_zero() || ryz.is_zero())
    return {Smoothness::unknown, std::nullopt, "partials share a component"};
  BinForm common = detail::binform_gcd(detail::binform_gcd(rxy, rxz), ryz);
  if (common.degree() == 0) {
    // No common direction; (0:0:1) itself was excluded by the shear since
    // gz evaluated there is the leading coefficient check above.
    return {Smoothness::smooth, std::nullopt, "partial resultants coprime"};
  }

  // Candidate directions exist; certify a rational singular point if any.
  auto dec = decompose(common.normalized());
  for (const auto& root : dec.rational) {
    // Direction (x0 : y0); intersect the three Z-polynomials.
    VecZ px = detail::z_poly_at(gxf, root.s, root.t);
    VecZ py = detail::z_poly_at(gyf, root.s, root.t);
    VecZ pz = detail::z_poly_at(gzf, root.s, root.t);
    auto to_poly = [](const VecZ& v) {
      std::vector<Rat> q;
      q.reserve(v.size());
      for (const auto& x : v) q.emplace_back(x);
      return UniPoly(std::move(q));
    };
    UniPoly h = gcd_monic(gcd_monic(to_poly(px), to_poly(py)), to_poly(pz));
    if (h.degree() < 1) continue;
    for (const auto& [z0, mult] : rational_roots(h)) {
      (void)mult;
      // Sheared singular point (s*den : t*den : num); in original
      // coordinates that is (x + sa*z, y + sb*z, z).
      Int z = num(z0);
      Int x = root.s * den(z0) + sa * z;
      Int y = root.t * den(z0) + sb * z;
      return {Smoothness::singular, Point::of(x, y, z), "resultant witness"};
    }
    // Nonconstant gcd with no rational root: the three partials share an
    // algebraic zero at this rational direction.
    return {Smoothness::singular, std::nullopt, "irrational singular point certified by gcd"};
  }
  return {Smoothness::unknown, std::nullopt, "resultants share roots but no certified point"};
}

}  // namespace rigid
