#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigid/binform.hpp"
#include "rigid/errors.hpp"
#include "rigid/linalg.hpp"
#include "rigid/numeric.hpp"
#include "rigid/projective.hpp"

namespace rigid {

using Mono = std::array<int, 3>;  // exponents of X, Y, Z

// Graded lex with X > Y > Z; within one form all monomials share a degree,
// so this is lex descending on (i, j).
struct MonoGradedLexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    if (a[0] != b[0]) return a[0] > b[0];
    if (a[1] != b[1]) return a[1] > b[1];
    return a[2] > b[2];
  }
};

using TermMap = std::map<Mono, Int, MonoGradedLexDesc>;

// Monomials of total degree n in canonical (descending graded lex) order.
inline std::vector<Mono> monomials_of_degree(int n) {
  std::vector<Mono> out;
  for (int i = n; i >= 0; --i)
    for (int j = n - i; j >= 0; --j) out.push_back({i, j, n - i - j});
  return out;
}

inline int monomial_count(int n) { return (n + 1) * (n + 2) / 2; }

// Homogeneous form in X, Y, Z: primitive integer coefficients, at least one
// nonzero, leading coefficient positive.
class HomForm {
 public:
  HomForm() = default;

  // Normalizes a sparse term map of homogeneous degree `degree`.
  static HomForm from_terms(int degree, const TermMap& terms) {
    Int g(0);
    for (const auto& [m, c] : terms) {
      if (m[0] + m[1] + m[2] != degree)
        throw Error(Errc::parse_error, "non-homogeneous term map");
      g = gcd(g, abs(c));
    }
    std::vector<std::pair<Mono, Int>> t;
    for (const auto& [m, c] : terms)
      if (c != 0) t.emplace_back(m, c);
    if (t.empty()) throw Error(Errc::parse_error, "zero form");
    if (g > 1)
      for (auto& [m, c] : t) c = divexact(c, g);
    if (t.front().second < 0)
      for (auto& [m, c] : t) c = -c;
    HomForm f;
    f.degree_ = degree;
    f.terms_ = std::move(t);
    return f;
  }

  // Builds from dense coefficients in canonical monomial order.
  static HomForm from_dense(int degree, const std::vector<Rat>& coeffs) {
    auto monos = monomials_of_degree(degree);
    if (coeffs.size() != monos.size())
      throw Error(Errc::parse_error, "dense coefficient count mismatch");
    Int d(1);
    for (const auto& c : coeffs) d = lcm(d, den(c));
    TermMap terms;
    for (size_t i = 0; i < monos.size(); ++i) {
      Int c = num(coeffs[i]) * divexact(d, den(coeffs[i]));
      if (c != 0) terms[monos[i]] = c;
    }
    return from_terms(degree, terms);
  }

  static HomForm from_line(const Line& l) {
    TermMap t;
    if (l.a() != 0) t[{1, 0, 0}] = l.a();
    if (l.b() != 0) t[{0, 1, 0}] = l.b();
    if (l.c() != 0) t[{0, 0, 1}] = l.c();
    return from_terms(1, t);
  }

  int degree() const { return degree_; }
  const std::vector<std::pair<Mono, Int>>& terms() const { return terms_; }

  Int coeff(const Mono& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return Int(0);
  }

  std::optional<Line> as_line() const {
    if (degree_ != 1) return std::nullopt;
    return Line::of(coeff({1, 0, 0}), coeff({0, 1, 0}), coeff({0, 0, 1}));
  }

  Int evaluate(const Point& p) const {
    Int acc(0);
    for (const auto& [m, c] : terms_) {
      Int t = c;
      for (int k = 0; k < m[0]; ++k) t *= p.x();
      for (int k = 0; k < m[1]; ++k) t *= p.y();
      for (int k = 0; k < m[2]; ++k) t *= p.z();
      acc += t;
    }
    return acc;
  }

  // Partial derivative as a raw term map (may be empty).
  TermMap partial(int var) const {
    TermMap out;
    for (const auto& [m, c] : terms_) {
      if (m[static_cast<size_t>(var)] == 0) continue;
      Mono d = m;
      --d[static_cast<size_t>(var)];
      out[d] += c * m[static_cast<size_t>(var)];
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  // Coefficients as univariate in Z: slice k is the coefficient of Z^k, a
  // binary form in (X, Y) of degree (degree - k).
  std::vector<BinForm> z_slices() const {
    std::vector<BinForm> out;
    out.reserve(static_cast<size_t>(degree_) + 1);
    for (int k = 0; k <= degree_; ++k) out.push_back(BinForm::zero(degree_ - k));
    for (const auto& [m, c] : terms_) {
      // X^i Y^j Z^k contributes to slice k at position j (s=X, t=Y).
      out[static_cast<size_t>(m[2])].coeff(m[1]) += c;
    }
    return out;
  }

  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HomForm& a, const HomForm& b) { return !(a == b); }
  friend bool operator<(const HomForm& a, const HomForm& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first)
        return MonoGradedLexDesc{}(a.terms_[i].first, b.terms_[i].first);
      int c = cmp(a.terms_[i].second, b.terms_[i].second);
      if (c != 0) return c < 0;
    }
    return false;
  }

  std::string str() const {
    std::string out;
    static const char* vars = "XYZ";
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += sign(c) < 0 ? " - " : " + ";
      else if (sign(c) < 0) out += "-";
      Int a = abs(c);
      bool unit = a == 1 && (m[0] + m[1] + m[2]) > 0;
      if (!unit) out += a.get_str();
      for (int v = 0; v < 3; ++v) {
        if (m[static_cast<size_t>(v)] == 0) continue;
        out += vars[v];
        if (m[static_cast<size_t>(v)] > 1) out += "^" + std::to_string(m[static_cast<size_t>(v)]);
      }
    }
    return out;
  }

 private:
  int degree_ = 0;
  std::vector<std::pair<Mono, Int>> terms_;  // descending graded lex
};

// The two canonical basis points of a line: the normalized standard kernel
// generators of the 1x3 system, in increasing free-column order. This fixed
// rule makes restrictions reproducible across platforms.
inline std::pair<Point, Point> line_basis_points(const Line& l) {
  MatQ m{{Rat(l.a()), Rat(l.b()), Rat(l.c())}};
  auto basis = kernel_basis(m, 3);
  if (basis.size() != 2) throw Error(Errc::parse_error, "line kernel must be 2-dimensional");
  return {Point::of_rat(basis[0][0], basis[0][1], basis[0][2]),
          Point::of_rat(basis[1][0], basis[1][1], basis[1][2])};
}

// Substitutes the canonical parametrization p(s,t) = s*A + t*B of the line
// into F. Degree is preserved; roots are the intersection points of F with
// the line, with multiplicity.
inline BinForm restrict_to_line(const HomForm& f, const Line& l) {
  auto [a, b] = line_basis_points(l);
  // Binary forms for each coordinate of s*A + t*B: linear forms in (s, t).
  std::array<BinForm, 3> coord;
  for (int i = 0; i < 3; ++i) coord[static_cast<size_t>(i)] = BinForm({a.t[i], b.t[i]});
  BinForm acc = BinForm::zero(f.degree());
  for (const auto& [m, c] : f.terms()) {
    BinForm term({c});
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < m[static_cast<size_t>(v)]; ++k) term = term * coord[static_cast<size_t>(v)];
    for (int i = 0; i <= term.degree(); ++i) acc.coeff(i) += term.coeff(i);
  }
  if (acc.is_zero())
    throw Error(Errc::component_contained,
                "form vanishes identically on " + l.str());
  return acc;
}

// Maps a root (s : t) of a restriction back to the point on the line.
inline Point line_point_from_root(const Line& l, const Int& s, const Int& t) {
  auto [a, b] = line_basis_points(l);
  Int px = s * a.t[0] + t * b.t[0];
  Int py = s * a.t[1] + t * b.t[1];
  Int pz = s * a.t[2] + t * b.t[2];
  return Point::of(std::move(px), std::move(py), std::move(pz));
}

}  // namespace rigid
