#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rigid {

using Int = mpz_class;
using Rat = mpq_class;

inline Int abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Quotient of an exact division; the caller guarantees divisibility.
inline Int divexact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Int num(const Rat& r) { return Int(r.get_num()); }
inline const Int den(const Rat& r) { return Int(r.get_den()); }

inline std::string to_string(const Int& a) { return a.get_str(); }

// Canonical rational rendering: reduced, "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Canonical decimal integer: optional '-', no leading zeros, no "-0".
inline bool is_canonical_int_string(std::string_view s) {
  if (s.empty()) return false;
  if (s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  if (s.size() > 1 && s[0] == '0') return false;
  if (s == "0") return true;
  return true;
}

inline std::optional<Int> parse_int(std::string_view s) {
  if (!is_canonical_int_string(s)) return std::nullopt;
  if (s == "-0") return std::nullopt;
  return Int(std::string(s), 10);
}

// Canonical rational: "a" or "a/b" with b > 1 and gcd(|a|,b) = 1.
inline std::optional<Rat> parse_rat(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(s.substr(0, slash));
  auto d = parse_int(s.substr(slash + 1));
  if (!n || !d) return std::nullopt;
  if (*d <= 1) return std::nullopt;  // "a/1" and "a/0" are not canonical
  if (gcd(abs(*n), *d) != 1) return std::nullopt;
  return make_rat(*n, *d);
}

// Lenient rational parsing for user input: integers, fractions a/b with any
// nonzero b, and plain decimals like "0.25".
inline std::optional<Rat> parse_rat_lenient(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    auto n = s.substr(0, slash);
    auto d = s.substr(slash + 1);
    try {
      Int ni(std::string(n), 10), di(std::string(d), 10);
      if (di == 0) return std::nullopt;
      if (di < 0) { ni = -ni; di = -di; }
      return make_rat(ni, di);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    auto head = std::string(s.substr(0, dot));
    auto tail = std::string(s.substr(dot + 1));
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = neg ? "-0" : "0";
    try {
      Int whole(head, 10);
      Int frac(tail, 10);
      Int scale = 1;
      for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
      Int n = abs(whole) * scale + frac;
      if (neg || whole < 0) n = -n;
      return make_rat(n, scale);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  try {
    return Rat(Int(std::string(s), 10));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

inline size_t hash_int(const Int& a) {
  const mpz_srcptr z = a.get_mpz_t();
  size_t h = static_cast<size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ull;
  int n = static_cast<int>(mpz_size(z));
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

inline size_t hash_combine(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace rigid
