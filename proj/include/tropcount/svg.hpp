#pragma once

// Minimal SVG 1.1 emitter for the planar objects of this project: polygons,
// lattice paths, subdivisions, and tropical curves next to their dual
// subdivisions.  Output is byte-deterministic: all coordinates are integers
// or exact rationals formatted with fixed precision through integer math.

#include <fstream>
#include <sstream>
#include <string>

#include "tropcount/subdivision.hpp"
#include "tropcount/tropical.hpp"

namespace tropcount {
namespace svg {

// Fixed-point decimal of a rational, 3 digits, round half away from zero.
inline std::string fixed(const Rat& r) {
  long long num = r.numerator(), den = r.denominator();
  long long sign = (num < 0) ? -1 : 1;
  num = std::llabs(num);
  long long scaled = (num * 1000 + den / 2) / den;
  std::ostringstream os;
  if (sign < 0 && scaled != 0) os << '-';
  os << scaled / 1000;
  long long frac = scaled % 1000;
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(f.begin(), 3 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    os << '.' << f;
  }
  return os.str();
}

class Writer {
 public:
  Writer(long long width, long long height) : w_(width), h_(height) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w_
        << "\" height=\"" << h_ << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n";
  }

  void polygon(const std::string& pts, const std::string& fill, const std::string& stroke,
               const std::string& extra = "") {
    os_ << "<polygon points=\"" << pts << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\"" << extra << "/>\n";
  }

  void polyline(const std::string& pts, const std::string& stroke, const std::string& width) {
    os_ << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void line(const std::string& x1, const std::string& y1, const std::string& x2,
            const std::string& y2, const std::string& stroke, const std::string& width) {
    os_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void circle(const std::string& cx, const std::string& cy, const std::string& r,
              const std::string& fill) {
    os_ << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill
        << "\"/>\n";
  }

  void text(long long x, long long y, const std::string& s) {
    os_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"14\">"
        << s << "</text>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  long long w_, h_;
  std::ostringstream os_;
};

struct Frame {
  long long scale = 40, margin = 30, height = 0;

  std::string px(Pt p) const {
    std::ostringstream os;
    os << margin + scale * p.i << "," << height - margin - scale * p.j;
    return os.str();
  }
  std::string x(const Rat& v) const { return fixed(Rat(margin) + Rat(scale) * v); }
  std::string y(const Rat& v) const { return fixed(Rat(height - margin) - Rat(scale) * v); }
};

// One subdivision: outline of Delta, cells filled by kind, the provenance
// path highlighted, and a classification caption.
inline std::string render_subdivision(const Polygon& delta, const Path& path, const CellList& cells,
                                      const std::string& caption) {
  long long max_i = 0, max_j = 0;
  for (Pt v : delta.verts) {
    max_i = std::max(max_i, v.i);
    max_j = std::max(max_j, v.j);
  }
  Frame fr;
  fr.height = 2 * fr.margin + fr.scale * max_j + 30;
  Writer w(2 * fr.margin + fr.scale * max_i, fr.height);

  auto ring = [&](const std::vector<Pt>& vs) {
    std::ostringstream os;
    for (size_t k = 0; k < vs.size(); ++k) os << (k ? " " : "") << fr.px(vs[k]);
    return os.str();
  };

  for (const Cell& c : cells) {
    std::vector<Pt> vs(c.v.begin(), c.v.begin() + c.nv);
    bool odd = c.kind == CellKind::triangle && c.area() % 2 == 1;
    std::string fill = c.kind == CellKind::parallelogram ? "#c8dcf0"
                       : odd                             ? "#f0e0c0"
                                                         : "#e0c0c8";
    w.polygon(ring(vs), fill, "#606060");
  }
  w.polygon(ring(delta.verts), "none", "#000000");
  if (!path.empty()) {
    std::ostringstream os;
    for (size_t k = 0; k < path.size(); ++k) os << (k ? " " : "") << fr.px(path[k]);
    w.polyline(os.str(), "#c03030", "3");
    for (Pt p : path) {
      auto xy = fr.px(p);
      auto comma = xy.find(',');
      w.circle(xy.substr(0, comma), xy.substr(comma + 1), "4", "#c03030");
    }
  }
  if (!caption.empty()) w.text(8, fr.height - 8, caption);
  return w.finish();
}

// Tropical curve and its dual subdivision side by side.  Rays are clipped to
// the picture box.
inline std::string render_tropical(const TropicalCurve& curve, const std::vector<HullCell>& cells) {
  Rat lo_x(0), hi_x(0), lo_y(0), hi_y(0);
  bool first = true;
  for (const RatPt& v : curve.vertices) {
    if (first || v.x < lo_x) lo_x = v.x;
    if (first || v.x > hi_x) hi_x = v.x;
    if (first || v.y < lo_y) lo_y = v.y;
    if (first || v.y > hi_y) hi_y = v.y;
    first = false;
  }
  Rat reach(3);
  lo_x -= reach;
  hi_x += reach;
  lo_y -= reach;
  hi_y += reach;

  Frame left;
  left.height = 360;
  long long panel = 320;
  Writer w(2 * panel + 60, left.height);

  Rat span_x = hi_x - lo_x, span_y = hi_y - lo_y;
  Rat span = span_x > span_y ? span_x : span_y;
  auto cx = [&](const Rat& v) { return fixed((Rat(panel - 40) * (v - lo_x)) / span + Rat(20)); };
  auto cy = [&](const Rat& v) {
    return fixed(Rat(left.height - 20) - (Rat(panel - 40) * (v - lo_y)) / span);
  };

  for (const auto& e : curve.bounded) {
    const RatPt &a = curve.vertices[e.a], &b = curve.vertices[e.b];
    w.line(cx(a.x), cy(a.y), cx(b.x), cy(b.y), "#2040a0", e.weight > 1 ? "4" : "2");
  }
  for (const auto& r : curve.rays) {
    const RatPt& a = curve.vertices[r.a];
    // extend far past the box; the viewport clips
    RatPt b{a.x + Rat(r.dir.i) * (span + reach), a.y + Rat(r.dir.j) * (span + reach)};
    w.line(cx(a.x), cy(a.y), cx(b.x), cy(b.y), "#2040a0", r.weight > 1 ? "4" : "2");
  }
  for (const RatPt& v : curve.vertices) w.circle(cx(v.x), cy(v.y), "3", "#202020");

  long long max_i = 1, max_j = 1;
  for (const auto& c : cells)
    for (Pt p : c.points) {
      max_i = std::max(max_i, p.i);
      max_j = std::max(max_j, p.j);
    }
  long long sc = std::min((panel - 40) / std::max(max_i, (long long)1),
                          (left.height - 40) / std::max(max_j, (long long)1));
  sc = std::max(sc, (long long)8);
  auto dx = [&](Pt p) { return std::to_string(panel + 40 + sc * p.i); };
  auto dy = [&](Pt p) { return std::to_string(left.height - 20 - sc * p.j); };
  for (const auto& c : cells) {
    std::ostringstream pts;
    for (size_t k = 0; k < c.points.size(); ++k)
      pts << (k ? " " : "") << dx(c.points[k]) << "," << dy(c.points[k]);
    w.polygon(pts.str(), "#f0ead0", "#404040");
  }
  for (const auto& c : cells)
    for (Pt p : c.points) w.circle(dx(p), dy(p), "3", "#202020");
  return w.finish();
}

}  // namespace svg
}  // namespace tropcount
