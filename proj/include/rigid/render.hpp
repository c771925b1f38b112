#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rigid/config.hpp"
#include "rigid/errors.hpp"
#include "rigid/numeric.hpp"
#include "rigid/unipoly.hpp"

namespace rigid {

struct RenderOptions {
  Rat x0 = Rat(-3), x1 = Rat(3);
  Rat y0 = Rat(-3), y1 = Rat(3);
  int width = 640;
  int height = 640;
  int samples = 0;  // x-samples for curve tracing; 0 means 2 per pixel column
  bool label_points = false;
  bool mark_infinity = false;
};

namespace render_detail {

// Fixed-point decimal with two digits, exact rounding half up.
inline std::string decimal(const Rat& v) {
  Int scaled;
  Rat t = v * 100 + Rat(1, 2);
  mpz_fdiv_q(scaled.get_mpz_t(), num(t).get_mpz_t(), den(t).get_mpz_t());
  bool neg = scaled < 0;
  Int a = abs(scaled);
  std::string digits = a.get_str();
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
  return neg ? "-" + out : out;
}

struct Mapper {
  const RenderOptions& o;
  Rat px(const Rat& x) const { return (x - o.x0) / (o.x1 - o.x0) * o.width; }
  Rat py(const Rat& y) const { return (o.y1 - y) / (o.y1 - o.y0) * o.height; }
};

inline void append_attr(std::string& s, const char* k, const std::string& v) {
  s += " ";
  s += k;
  s += "=\"" + v + "\"";
}

}  // namespace render_detail

// Deterministic SVG: exact rational clipping and root bisection throughout,
// decimal conversion only at emission. Identical input and options yield
// byte-identical output.
inline std::string render_svg(const Config& cfg, const RenderOptions& opt) {
  using render_detail::decimal;
  if (!(opt.x0 < opt.x1) || !(opt.y0 < opt.y1) || opt.width < 1 || opt.height < 1)
    throw Error(Errc::parse_error, "degenerate viewport");
  int samples = opt.samples > 0 ? opt.samples : 2 * opt.width;
  if (samples < 2) throw Error(Errc::parse_error, "sampling density must be at least 2");
  render_detail::Mapper map{opt};
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opt.width) + "\" height=\"" + std::to_string(opt.height) +
         "\" viewBox=\"0 0 " + std::to_string(opt.width) + " " + std::to_string(opt.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Lines: aX + bY + cZ = 0 in the z = 1 chart, clipped exactly.
  for (size_t li = 0; li < cfg.lines.size(); ++li) {
    const Line& l = cfg.lines[li];
    if (l.a() == 0 && l.b() == 0) {
      svg += "<!-- line " + std::to_string(li) + " is the line at infinity -->\n";
      continue;
    }
    std::vector<std::pair<Rat, Rat>> hits;
    auto push = [&](const Rat& x, const Rat& y) {
      if (x < opt.x0 || x > opt.x1 || y < opt.y0 || y > opt.y1) return;
      for (const auto& h : hits)
        if (h.first == x && h.second == y) return;
      hits.emplace_back(x, y);
    };
    if (l.b() != 0) {
      push(opt.x0, Rat(-(l.a() * opt.x0 + l.c())) / Rat(l.b()));
      push(opt.x1, Rat(-(l.a() * opt.x1 + l.c())) / Rat(l.b()));
    }
    if (l.a() != 0) {
      push(Rat(-(l.b() * opt.y0 + l.c())) / Rat(l.a()), opt.y0);
      push(Rat(-(l.b() * opt.y1 + l.c())) / Rat(l.a()), opt.y1);
    }
    std::sort(hits.begin(), hits.end());
    if (hits.size() >= 2) {
      const auto& p = hits.front();
      const auto& q = hits.back();
      svg += "<line x1=\"" + decimal(map.px(p.first)) + "\" y1=\"" + decimal(map.py(p.second)) +
             "\" x2=\"" + decimal(map.px(q.first)) + "\" y2=\"" + decimal(map.py(q.second)) +
             "\" stroke=\"#335\" stroke-width=\"1\"/>\n";
    }
  }

  // Curves: per-column exact sign bisection of F(x, y, 1) in y.
  const Rat step = (opt.x1 - opt.x0) / (samples - 1);
  const Rat yres = (opt.y1 - opt.y0) / Rat(4 * opt.height);
  const Rat pair_gap = (opt.y1 - opt.y0) / 8;
  for (size_t ci = 0; ci < cfg.curves.size(); ++ci) {
    const HomForm& f = cfg.curves[ci];
    std::vector<std::vector<Rat>> columns(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      Rat x = opt.x0 + step * i;
      // F(x, y, 1) as a univariate polynomial in y.
      std::vector<Rat> coeffs(static_cast<size_t>(f.degree()) + 1, Rat(0));
      for (const auto& [m, c] : f.terms()) {
        Rat v(c);
        for (int k = 0; k < m[0]; ++k) v *= x;
        coeffs[static_cast<size_t>(m[1])] += v;
      }
      UniPoly p{std::move(coeffs)};
      if (p.degree() < 1) continue;
      UniPoly sf = p;
      if (!is_squarefree(p)) sf = divmod(p, gcd_monic(p, p.derivative())).first;
      for (const auto& iv : sturm_isolate(sf)) {
        IntervalQ narrow = iv;
        while (narrow.width() > yres) narrow = refine_root(sf, narrow, narrow.width() / 4);
        Rat y = narrow.mid();
        if (y >= opt.y0 && y <= opt.y1) columns[static_cast<size_t>(i)].push_back(y);
      }
      std::sort(columns[static_cast<size_t>(i)].begin(), columns[static_cast<size_t>(i)].end());
    }
    std::string path;
    for (int i = 0; i + 1 < samples; ++i) {
      const auto& a = columns[static_cast<size_t>(i)];
      const auto& b = columns[static_cast<size_t>(i + 1)];
      size_t n = std::min(a.size(), b.size());
      for (size_t k = 0; k < n; ++k) {
        Rat d = a[k] - b[k];
        if (sign(d) < 0) d = -d;
        if (d > pair_gap) continue;
        Rat xa = opt.x0 + step * i;
        Rat xb = opt.x0 + step * (i + 1);
        path += "M" + decimal(map.px(xa)) + " " + decimal(map.py(a[k])) + "L" +
                decimal(map.px(xb)) + " " + decimal(map.py(b[k]));
      }
    }
    if (!path.empty())
      svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#a33\" stroke-width=\"1\"/>\n";
  }

  // Recorded singular points.
  for (const auto& r : cfg.singular) {
    const Point& p = r.point;
    if (p.z() != 0) {
      Rat x = Rat(p.x()) / Rat(p.z());
      Rat y = Rat(p.y()) / Rat(p.z());
      if (x < opt.x0 || x > opt.x1 || y < opt.y0 || y > opt.y1) continue;
      svg += "<circle cx=\"" + decimal(map.px(x)) + "\" cy=\"" + decimal(map.py(y)) +
             "\" r=\"2.5\" fill=\"#181\"/>\n";
      if (opt.label_points)
        svg += "<text x=\"" + decimal(map.px(x) + 4) + "\" y=\"" + decimal(map.py(y) - 4) +
               "\" font-size=\"9\" fill=\"#333\">" + p.str() + "</text>\n";
    } else if (opt.mark_infinity) {
      // Direction (x:y): mark where the ray from the viewport center exits.
      Rat cx = (opt.x0 + opt.x1) / 2, cy = (opt.y0 + opt.y1) / 2;
      Rat dx(p.x()), dy(p.y());
      std::optional<Rat> best;
      auto consider = [&](const Rat& t) {
        if (sign(t) <= 0) return;
        Rat x = cx + dx * t, y = cy + dy * t;
        if (x < opt.x0 || x > opt.x1 || y < opt.y0 || y > opt.y1) return;
        if (!best || t > *best) best = t;
      };
      if (dx != 0) {
        consider((opt.x1 - cx) / dx);
        consider((opt.x0 - cx) / dx);
      }
      if (dy != 0) {
        consider((opt.y1 - cy) / dy);
        consider((opt.y0 - cy) / dy);
      }
      if (best) {
        Rat x = cx + dx * *best, y = cy + dy * *best;
        svg += "<rect x=\"" + decimal(map.px(x) - 3) + "\" y=\"" + decimal(map.py(y) - 3) +
               "\" width=\"6\" height=\"6\" fill=\"#818\"/>\n";
        if (opt.label_points)
          svg += "<text x=\"" + decimal(map.px(x) + 4) + "\" y=\"" + decimal(map.py(y) - 4) +
                 "\" font-size=\"9\" fill=\"#333\">" + p.str() + "</text>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace rigid
