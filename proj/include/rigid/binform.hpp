#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rigid/errors.hpp"
#include "rigid/numeric.hpp"
#include "rigid/unipoly.hpp"

namespace rigid {

// Homogeneous binary form in (s, t) with integer coefficients, stored as
// coefficients of s^d, s^(d-1) t, ..., t^d.
class BinForm {
 public:
  BinForm() = default;
  explicit BinForm(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}

  static BinForm zero(int degree) {
    return BinForm(std::vector<Int>(static_cast<size_t>(degree) + 1, Int(0)));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  Int& coeff(int i) { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }

  Int operator()(const Int& s, const Int& t) const {
    Int acc(0);
    Int sp(1);
    std::vector<Int> tp(c_.size());
    Int cur(1);
    for (size_t i = 0; i < c_.size(); ++i) {
      tp[i] = cur;
      cur *= t;
    }
    for (size_t i = c_.size(); i-- > 0;) {
      acc += c_[i] * sp * tp[i];
      sp *= s;
    }
    return acc;
  }

  // Primitive with the first nonzero coefficient positive.
  BinForm normalized() const {
    Int g(0);
    for (const auto& c : c_) g = gcd(g, abs(c));
    if (g == 0) return *this;
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(divexact(c, g));
    for (const auto& c : out) {
      if (c != 0) {
        if (c < 0)
          for (auto& x : out) x = -x;
        break;
      }
    }
    return BinForm(std::move(out));
  }

  friend BinForm operator*(const BinForm& a, const BinForm& b) {
    BinForm r = zero(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    return r;
  }

  friend bool operator==(const BinForm& a, const BinForm& b) { return a.c_ == b.c_; }

  // b(x, 1) with rational coefficients; degree drops by the multiplicity of
  // the root at (1:0).
  UniPoly dehomogenize() const {
    std::vector<Rat> q(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) q[c_.size() - 1 - i] = Rat(c_[i]);
    return UniPoly(std::move(q));
  }

  std::string str() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += c_[i].get_str();
    }
    return out + "]";
  }

 private:
  std::vector<Int> c_;
};

// Builds the primitive binary form with the given monic rational polynomial
// as dehomogenization times t^inf_mult.
inline BinForm homogenize(const UniPoly& p, int inf_mult) {
  Int d(1);
  for (const auto& c : p.coeffs()) d = lcm(d, den(c));
  int n = p.degree();
  std::vector<Int> c(static_cast<size_t>(n + 1 + inf_mult), Int(0));
  for (int i = 0; i <= n; ++i)
    c[static_cast<size_t>(n - i)] = num(p.coeff(i)) * divexact(d, den(p.coeff(i)));
  return BinForm(std::move(c)).normalized();
}

struct BinRoot {
  Int s;  // root (s : t), normalized: gcd 1, t >= 0, s > 0 when t = 0
  Int t;
  int multiplicity;
};

struct BinFactor {
  BinForm form;  // squarefree, primitive, no rational roots
  int multiplicity;
};

struct BinDecomposition {
  std::vector<BinRoot> rational;      // ordered by (t==0 last handled first? see below)
  std::vector<BinFactor> nonrational; // ascending multiplicity
};

// Splits a nonzero binary form into rational roots (with multiplicity) and
// the remaining squarefree non-rational factors per multiplicity class.
inline BinDecomposition decompose(const BinForm& b) {
  if (b.is_zero()) throw Error(Errc::parse_error, "decompose of zero binary form");
  BinDecomposition out;
  int d = b.degree();
  UniPoly p = b.dehomogenize();
  int inf_mult = d - (p.degree() < 0 ? 0 : p.degree());
  if (inf_mult > 0) out.rational.push_back({Int(1), Int(0), inf_mult});
  if (p.degree() >= 1) {
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
      UniPoly remaining = factor;
      for (const auto& [root, m] : rational_roots(factor)) {
        (void)m;  // factor is squarefree, so every root is simple in it
        out.rational.push_back({num(root), den(root), mult});
        UniPoly lin({-root, Rat(1)});
        remaining = divmod(remaining, lin).first;
      }
      if (remaining.degree() >= 1)
        out.nonrational.push_back({homogenize(remaining, 0), mult});
    }
  }
  return out;
}

// Multiplicities of the roots over the algebraic closure, grouped by
// squarefree factors of the binary form (the factor t counts toward its
// multiplicity class): (multiplicity, factor degree) pairs sorted by
// descending multiplicity. Sum of mult * degree equals deg b.
inline std::vector<std::pair<int, int>> multiplicity_profile(const BinForm& b) {
  if (b.is_zero()) throw Error(Errc::parse_error, "multiplicity profile of zero form");
  std::vector<std::pair<int, int>> classes;  // (mult, degree)
  UniPoly p = b.dehomogenize();
  int inf_mult = b.degree() - (p.degree() < 0 ? 0 : p.degree());
  if (p.degree() >= 1)
    for (const auto& [factor, mult] : squarefree_decomposition(p))
      classes.emplace_back(mult, factor.degree());
  if (inf_mult > 0) {
    bool joined = false;
    for (auto& [mult, deg] : classes)
      if (mult == inf_mult) {
        ++deg;
        joined = true;
        break;
      }
    if (!joined) classes.emplace_back(inf_mult, 1);
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b2) { return a.first > b2.first; });
  return classes;
}

// Exact divisibility test for binary forms.
inline bool divides(const BinForm& a, const BinForm& b) {
  if (a.is_zero() || b.is_zero()) return false;
  // Strip powers of t (zero leading s-coefficients) from both.
  int ta = 0;
  while (ta <= a.degree() && a.coeff(ta) == 0) ++ta;
  int tb = 0;
  while (tb <= b.degree() && b.coeff(tb) == 0) ++tb;
  if (ta > tb) return false;
  UniPoly pa = a.dehomogenize();
  UniPoly pb = b.dehomogenize();
  if (pa.degree() > pb.degree()) return false;
  auto [q, r] = divmod(pb, pa);
  (void)q;
  return r.is_zero();
}

}  // namespace rigid
