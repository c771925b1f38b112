#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigid/errors.hpp"
#include "rigid/numeric.hpp"

namespace rigid {

struct IntervalQ {
  Rat lo;
  Rat hi;

  IntervalQ(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw Error(Errc::parse_error, "interval requires lo < hi");
  }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo < x && x < hi; }
  std::string str() const { return "(" + to_string(lo) + "," + to_string(hi) + ")"; }
};

// Univariate polynomial over Q, coefficients ascending by degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& r) { return UniPoly({r}); }
  static UniPoly variable() { return UniPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rat(0);
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const UniPoly& a, const Rat& s) {
    std::vector<Rat> r = a.c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a) { return a * Rat(-1); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; b must be nonzero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot;
    int db = b.degree();
    if (db < 0) throw Error(Errc::parse_error, "division by zero polynomial");
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < db) return {UniPoly(), a};
    quot.assign(static_cast<size_t>(dr - db + 1), Rat(0));
    for (int k = dr; k >= db; --k) {
      Rat q = rem[static_cast<size_t>(k)] / b.c_.back();
      if (q == 0) continue;
      quot[static_cast<size_t>(k - db)] = q;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<size_t>(k - db + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / c_.back());
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      Rat c = coeff(i);
      if (c == 0) continue;
      if (!out.empty()) out += sign(c) < 0 ? " - " : " + ";
      else if (sign(c) < 0) out += "-";
      Rat a = sign(c) < 0 ? Rat(-c) : c;
      bool unit = (a == 1 && i > 0);
      if (!unit) out += to_string(a);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

inline UniPoly gcd_monic(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const UniPoly& f) {
  if (f.degree() <= 1) return !f.is_zero();
  return gcd_monic(f, f.derivative()).degree() == 0;
}

// Yun's squarefree decomposition: returns monic (factor, multiplicity) pairs
// with multiplicities strictly increasing, product of factor^mult = f/lc.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() <= 0) return out;
  UniPoly a = f.monic();
  UniPoly g = gcd_monic(a, a.derivative());
  if (g.degree() == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  UniPoly w = divmod(a, g).first;
  UniPoly y = divmod(a.derivative() * (Rat(1) / a.leading()), g).first;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly z = y - w.derivative();
    UniPoly p = gcd_monic(w, z);
    if (p.degree() > 0) out.emplace_back(p.monic(), i);
    w = divmod(w, p).first;
    y = divmod(z, p).first;
    ++i;
  }
  return out;
}

namespace detail {

inline int sign_at(const std::vector<UniPoly>& chain, const Rat& x, bool at_plus_inf,
                   bool at_minus_inf, int* variations) {
  int var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s;
    if (at_plus_inf)
      s = p.is_zero() ? 0 : sign(p.leading());
    else if (at_minus_inf)
      s = p.is_zero() ? 0 : (p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading()));
    else
      s = sign(p(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  *variations = var;
  return prev;
}

}  // namespace detail

class SturmChain {
 public:
  explicit SturmChain(const UniPoly& f) {
    chain_.push_back(f);
    chain_.push_back(f.derivative());
    while (!chain_.back().is_zero()) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      chain_.push_back(-r);
    }
    chain_.pop_back();
  }

  int variations_at(const Rat& x) const {
    int v;
    detail::sign_at(chain_, x, false, false, &v);
    return v;
  }

  int variations_at_plus_inf() const {
    int v;
    detail::sign_at(chain_, Rat(0), true, false, &v);
    return v;
  }

  int variations_at_minus_inf() const {
    int v;
    detail::sign_at(chain_, Rat(0), false, true, &v);
    return v;
  }

  // Number of distinct real roots in (a, b]; requires a < b.
  int count_roots(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
  }

  int count_real_roots() const { return variations_at_minus_inf() - variations_at_plus_inf(); }

 private:
  std::vector<UniPoly> chain_;
};

// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
inline Rat cauchy_bound(const UniPoly& f) {
  Rat b(0);
  for (int i = 0; i < f.degree(); ++i) {
    Rat q = f.coeff(i) / f.leading();
    if (sign(q) < 0) q = -q;
    if (q > b) b = q;
  }
  return b + 1;
}

// Isolating intervals for all real roots of a squarefree polynomial, in
// increasing order; open intervals with non-root endpoints.
inline std::vector<IntervalQ> sturm_isolate(const UniPoly& f) {
  if (f.degree() < 1) {
    if (f.is_zero()) throw Error(Errc::not_squarefree, "zero polynomial");
    return {};
  }
  if (!is_squarefree(f)) throw Error(Errc::not_squarefree, "gcd(f, f') is not constant");
  SturmChain chain(f);
  Rat bound = cauchy_bound(f);
  std::vector<IntervalQ> out;
  struct Seg {
    Rat lo, hi;
    int nroots;
  };
  // f(-bound) != 0 and f(bound) != 0 since roots are strictly inside.
  std::vector<Seg> stack;
  stack.push_back({-bound, bound, chain.count_roots(-bound, bound)});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.nroots == 0) continue;
    if (s.nroots == 1 && sign(f(s.lo)) != 0 && sign(f(s.hi)) != 0) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (sign(f(mid)) == 0) {
      // Exact rational root at the midpoint: shave off a bracket around it
      // small enough to isolate it, then recurse on the outsides.
      Rat delta = (s.hi - s.lo) / 4;
      while (chain.count_roots(mid - delta, mid + delta) != 1 || sign(f(mid - delta)) == 0 ||
             sign(f(mid + delta)) == 0)
        delta /= 2;
      stack.push_back({s.lo, mid - delta, chain.count_roots(s.lo, mid - delta)});
      out.emplace_back(mid - delta, mid + delta);
      stack.push_back({mid + delta, s.hi, chain.count_roots(mid + delta, s.hi)});
    } else {
      // Push in reverse so intervals come out in increasing order.
      stack.push_back({mid, s.hi, chain.count_roots(mid, s.hi)});
      stack.push_back({s.lo, mid, chain.count_roots(s.lo, mid)});
    }
  }
  std::sort(out.begin(), out.end(), [](const IntervalQ& a, const IntervalQ& b) { return a.lo < b.lo; });
  return out;
}

// Bisection refinement of an isolating interval down to the requested width.
// The interval must bracket a sign change (or contain the root strictly).
inline IntervalQ refine_root(const UniPoly& f, const IntervalQ& iv, const Rat& width) {
  if (sign(width) <= 0) throw Error(Errc::parse_error, "refinement width must be positive");
  Rat lo = iv.lo, hi = iv.hi;
  int slo = sign(f(lo)), shi = sign(f(hi));
  if (slo == 0 || shi == 0 || slo == shi)
    throw Error(Errc::no_sign_change, "interval " + iv.str() + " does not bracket a root");
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = sign(f(mid));
    if (sm == 0) {
      // Landed exactly on the root; shrink a symmetric bracket around it.
      Rat delta = (hi - lo) / 4;
      while (delta * 2 > width || sign(f(mid - delta)) == sign(f(mid + delta)) ||
             sign(f(mid - delta)) == 0)
        delta /= 2;
      Rat nlo = mid - delta < lo ? lo : mid - delta;
      Rat nhi = mid + delta > hi ? hi : mid + delta;
      return IntervalQ(nlo, nhi);
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return IntervalQ(lo, hi);
}

namespace detail {

// Integer roots of a polynomial with integer coefficients (ascending), found
// by isolation and exact evaluation; no divisor enumeration.
inline std::vector<Int> integer_roots_of_integer_poly(std::vector<Int> c) {
  std::vector<Int> roots;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return roots;
  size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Int(0));
  std::vector<Rat> q;
  for (size_t i = shift; i < c.size(); ++i) q.emplace_back(c[i]);
  UniPoly f{std::move(q)};
  if (f.degree() < 1) return roots;
  // Work with the squarefree part; multiplicity is not needed here.
  UniPoly sf = divmod(f, gcd_monic(f, f.derivative())).first;
  for (const auto& iv : sturm_isolate(sf)) {
    IntervalQ narrow = iv;
    while (narrow.width() >= 1) narrow = refine_root(sf, narrow, narrow.width() / 4);
    Int lo_ceil;
    mpz_cdiv_q(lo_ceil.get_mpz_t(), num(narrow.lo).get_mpz_t(), den(narrow.lo).get_mpz_t());
    Int hi_floor;
    mpz_fdiv_q(hi_floor.get_mpz_t(), num(narrow.hi).get_mpz_t(), den(narrow.hi).get_mpz_t());
    for (Int k = lo_ceil; k <= hi_floor; ++k)
      if (sf(Rat(k)) == 0) roots.push_back(k);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

// All rational roots with multiplicities, exactly, via the substitution
// x = y / lc which turns rational roots into integer roots of a monic model.
inline std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& f) {
  std::vector<std::pair<Rat, int>> out;
  if (f.degree() < 1) return out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    if (factor.degree() < 1) continue;
    // Clear denominators to integer coefficients.
    Int d(1);
    for (const auto& c : factor.coeffs()) d = lcm(d, den(c));
    std::vector<Int> ic;
    for (const auto& c : factor.coeffs()) ic.push_back(num(c) * divexact(d, den(c)));
    int n = factor.degree();
    const Int lead = ic.back();
    // h(y) = lead^(n-1) * g(y/lead) is monic with integer coefficients.
    std::vector<Int> h(static_cast<size_t>(n) + 1);
    Int p(1);
    for (int i = n; i >= 0; --i) {
      h[static_cast<size_t>(i)] = ic[static_cast<size_t>(i)] * p;
      if (i > 0) p *= lead;
    }
    for (const auto& y : detail::integer_roots_of_integer_poly(h))
      out.emplace_back(make_rat(y, lead), mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace rigid
