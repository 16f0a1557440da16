#include "atgp/svg.hpp"

#include "atgp/preprocess.hpp"

namespace atgp {

namespace {

struct Mapper {
  Rational top;  // scene top in data coordinates (SVG y grows downward)
  int decimals;

  std::string x(const Rational& v) const { return v.to_decimal(decimals); }
  std::string y(const Rational& v) const { return (top - v).to_decimal(decimals); }
};

}  // namespace

std::string render_svg(const Instance& instance, const Solution* solution,
                       const RenderOptions& options) {
  const Terrain& t = instance.terrain;
  Rational y_lo = t.vertex(0).y, y_hi = instance.altitude.y;
  for (const auto& v : t.vertices()) y_lo = min(y_lo, v.y);
  Rational width = t.x_max() - t.x_min();
  Rational margin = max((y_hi - y_lo) / Rational(8), width / Rational(20));
  if (margin.sign() <= 0) margin = 1;

  Mapper m{y_hi + margin, options.decimals};
  Rational view_x = t.x_min() - margin;
  Rational view_w = width + Rational(2) * margin;
  Rational view_h = (y_hi - y_lo) + Rational(2) * margin;
  Rational r_glyph = max(margin / Rational(6), Rational(1, 100));

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + view_x.to_decimal(options.decimals) +
         " 0 " + view_w.to_decimal(options.decimals) + " " + view_h.to_decimal(options.decimals) +
         "\">\n";

  // witness strips behind everything else
  if (solution) {
    for (const auto& w : solution->witnesses) {
      VisibilityInterval iv = visibility_interval(w.realized_point, t, instance.altitude);
      out += "  <rect class=\"witness-strip\" x=\"" + m.x(iv.lo) + "\" y=\"" + m.y(y_hi) +
             "\" width=\"" + (iv.hi - iv.lo).to_decimal(options.decimals) + "\" height=\"" +
             (y_hi - y_lo).to_decimal(options.decimals) +
             "\" fill=\"#888888\" fill-opacity=\"0.25\"/>\n";
    }
  }

  out += "  <polyline class=\"terrain\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
         (r_glyph / Rational(2)).to_decimal(options.decimals) + "\" points=\"";
  bool first = true;
  for (const auto& v : t.vertices()) {
    if (!first) out += " ";
    out += m.x(v.x) + "," + m.y(v.y);
    first = false;
  }
  out += "\"/>\n";

  out += "  <line class=\"altitude\" stroke=\"red\" stroke-width=\"" +
         (r_glyph / Rational(2)).to_decimal(options.decimals) + "\" x1=\"" + m.x(t.x_min()) +
         "\" y1=\"" + m.y(y_hi) + "\" x2=\"" + m.x(t.x_max()) + "\" y2=\"" + m.y(y_hi) + "\"/>\n";

  if (options.show_events) {
    MarkSet marks = marks_convex_hull(t);
    std::vector<EdgeEvents> events = edge_events(t, instance.altitude, marks);
    for (const auto& ev : events) {
      out += "  <circle class=\"event-soft\" fill=\"#2aa198\" cx=\"" + m.x(ev.soft_open) +
             "\" cy=\"" + m.y(y_hi) + "\" r=\"" + (r_glyph / Rational(2)).to_decimal(options.decimals) +
             "\"/>\n";
      out += "  <circle class=\"event-open\" fill=\"#268bd2\" cx=\"" + m.x(ev.open) + "\" cy=\"" +
             m.y(y_hi) + "\" r=\"" + (r_glyph / Rational(2)).to_decimal(options.decimals) + "\"/>\n";
      out += "  <circle class=\"event-close\" fill=\"#6c71c4\" cx=\"" + m.x(ev.close) +
             "\" cy=\"" + m.y(y_hi) + "\" r=\"" + (r_glyph / Rational(2)).to_decimal(options.decimals) +
             "\"/>\n";
    }
  }

  if (solution) {
    for (const auto& g : solution->guards) {
      out += "  <circle class=\"guard\" fill=\"red\" cx=\"" + m.x(g) + "\" cy=\"" + m.y(y_hi) +
             "\" r=\"" + r_glyph.to_decimal(options.decimals) + "\"/>\n";
    }
    for (const auto& w : solution->witnesses) {
      out += "  <circle class=\"witness\" fill=\"#859900\" cx=\"" + m.x(w.realized_point.x) +
             "\" cy=\"" + m.y(w.realized_point.y) + "\" r=\"" +
             r_glyph.to_decimal(options.decimals) + "\"/>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace atgp
