#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rigid/errors.hpp"
#include "rigid/numeric.hpp"

namespace rigid {

// Primitive integer triple up to scaling: gcd of entries is 1 and the first
// nonzero entry is positive, so equal rays have bitwise-equal representatives.
class Triple {
 public:
  Triple() : v_{0, 0, 0} {}

  static Triple normalize(Int x, Int y, Int z) {
    if (x == 0 && y == 0 && z == 0) throw Error(Errc::zero_vector, "cannot normalize (0,0,0)");
    Int g = gcd(gcd(abs(x), abs(y)), abs(z));
    if (g > 1) {
      x = divexact(x, g);
      y = divexact(y, g);
      z = divexact(z, g);
    }
    int s = sign(x) != 0 ? sign(x) : (sign(y) != 0 ? sign(y) : sign(z));
    if (s < 0) {
      x = -x;
      y = -y;
      z = -z;
    }
    Triple t;
    t.v_ = {std::move(x), std::move(y), std::move(z)};
    return t;
  }

  static Triple normalize(const std::array<Int, 3>& v) { return normalize(v[0], v[1], v[2]); }

  // Clears denominators of a rational triple, then normalizes.
  static Triple normalize_rat(const Rat& x, const Rat& y, const Rat& z) {
    Int m = lcm(lcm(den(x), den(y)), den(z));
    Int nx = num(x) * divexact(m, den(x));
    Int ny = num(y) * divexact(m, den(y));
    Int nz = num(z) * divexact(m, den(z));
    return normalize(std::move(nx), std::move(ny), std::move(nz));
  }

  const Int& operator[](int i) const { return v_[static_cast<size_t>(i)]; }

  friend bool operator==(const Triple& a, const Triple& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Triple& a, const Triple& b) { return !(a == b); }
  friend bool operator<(const Triple& a, const Triple& b) {
    for (int i = 0; i < 3; ++i) {
      int c = cmp(a.v_[static_cast<size_t>(i)], b.v_[static_cast<size_t>(i)]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  size_t hash() const {
    return hash_combine(hash_int(v_[0]), hash_combine(hash_int(v_[1]), hash_int(v_[2])));
  }

  std::string str() const {
    return "(" + v_[0].get_str() + ":" + v_[1].get_str() + ":" + v_[2].get_str() + ")";
  }

 private:
  std::array<Int, 3> v_;
};

inline Int dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline std::array<Int, 3> cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Point {
  Triple t;

  static Point of(Int x, Int y, Int z) { return {Triple::normalize(std::move(x), std::move(y), std::move(z))}; }
  static Point of_rat(const Rat& x, const Rat& y, const Rat& z) { return {Triple::normalize_rat(x, y, z)}; }

  const Int& x() const { return t[0]; }
  const Int& y() const { return t[1]; }
  const Int& z() const { return t[2]; }
  bool at_infinity() const { return t[2] == 0; }

  friend bool operator==(const Point& a, const Point& b) { return a.t == b.t; }
  friend bool operator!=(const Point& a, const Point& b) { return a.t != b.t; }
  friend bool operator<(const Point& a, const Point& b) { return a.t < b.t; }

  std::string str() const { return t.str(); }
};

struct Line {
  Triple t;

  static Line of(Int a, Int b, Int c) { return {Triple::normalize(std::move(a), std::move(b), std::move(c))}; }

  const Int& a() const { return t[0]; }
  const Int& b() const { return t[1]; }
  const Int& c() const { return t[2]; }

  friend bool operator==(const Line& a, const Line& b) { return a.t == b.t; }
  friend bool operator!=(const Line& a, const Line& b) { return a.t != b.t; }
  friend bool operator<(const Line& a, const Line& b) { return a.t < b.t; }

  std::string str() const { return t.str(); }
};

inline Line join(const Point& p, const Point& q) {
  if (p == q) throw Error(Errc::equal_points, "join of " + p.str() + " with itself");
  auto c = cross(p.t, q.t);
  return {Triple::normalize(c)};
}

inline Point meet(const Line& l, const Line& m) {
  if (l == m) throw Error(Errc::equal_lines, "meet of " + l.str() + " with itself");
  auto c = cross(l.t, m.t);
  return {Triple::normalize(c)};
}

inline bool incident(const Point& p, const Line& l) { return dot(p.t, l.t) == 0; }

// Max absolute value of the primitive coordinates.
inline Int height(const Point& p) {
  Int h = abs(p.x());
  if (abs(p.y()) > h) h = abs(p.y());
  if (abs(p.z()) > h) h = abs(p.z());
  return h;
}

// Parses "( a : b : c )" with integer or fraction entries. Whitespace is
// optional, the parentheses too.
inline std::optional<Point> parse_point(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) return std::nullopt;
  std::array<Rat, 3> vals;
  for (int i = 0; i < 3; ++i) {
    auto r = parse_rat_lenient(parts[static_cast<size_t>(i)]);
    if (!r) return std::nullopt;
    vals[static_cast<size_t>(i)] = *r;
  }
  if (vals[0] == 0 && vals[1] == 0 && vals[2] == 0) return std::nullopt;
  return Point::of_rat(vals[0], vals[1], vals[2]);
}

struct TripleHash {
  size_t operator()(const Triple& t) const { return t.hash(); }
};
struct PointHash {
  size_t operator()(const Point& p) const { return p.t.hash(); }
};
struct LineHash {
  size_t operator()(const Line& l) const { return l.t.hash(); }
};

}  // namespace rigid
