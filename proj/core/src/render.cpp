#include "sadp/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace sadp {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string renderSvg(const Placement& p, const ProfiledLibrary& lib, const RenderOptions& opts) {
  const double k = opts.scale;
  Coord x_max = 0;
  Coord y_max = 0;
  for (const auto& row : p.rows) {
    x_max = std::max(x_max, row.capacity);
    y_max = std::max(y_max, row.y + p.row_height);
    for (const auto& c : row.cells) x_max = std::max(x_max, c.x + lib.at(c.cell).cell.width);
  }
  const double margin = 2 * k;
  const double w = static_cast<double>(x_max) * k + 2 * margin;
  const double h = static_cast<double>(y_max) * k + 2 * margin;
  // Layout y grows upward; SVG y grows downward.
  auto sx = [&](double x) { return num(margin + x * k); };
  auto sy = [&](double y) { return num(margin + (static_cast<double>(y_max) - y) * k); };

  std::set<std::pair<std::string, std::string>> flagged;  // (instance, pattern id)
  if (opts.annotate)
    for (const auto& v : auditPlacement(p, lib, lib.params.s_dp))
      for (const auto& [a, b] : v.patterns) {
        flagged.insert({v.instance_a, a});
        flagged.insert({v.instance_b, b});
      }

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
       "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  s += "<style>.mandrel{fill:#4a78c2}.trim{fill:#e0a030}.cell{fill:none;stroke:#333;stroke-width:1}"
       ".row{fill:none;stroke:#999;stroke-dasharray:4 2}.bad{fill:none;stroke:#d00;stroke-width:2}"
       "text{font:10px monospace;fill:#000}</style>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" fill=\"#fff\"/>\n";

  for (const auto& row : p.rows) {
    const double y0 = static_cast<double>(row.y);
    const double y1 = y0 + static_cast<double>(p.row_height);
    s += "<rect class=\"row\" x=\"" + sx(0) + "\" y=\"" + sy(y1) + "\" width=\"" +
         num(static_cast<double>(row.capacity) * k) + "\" height=\"" + num(static_cast<double>(p.row_height) * k) +
         "\"/>\n";
    for (const auto& pc : row.cells) {
      const CellProfile& prof = lib.at(pc.cell);
      const Cell& c = prof.as(pc.orient);
      const auto& colors = prof.colorings.at(static_cast<std::size_t>(pc.coloring));
      s += "<g id=\"" + escape(pc.instance) + "\">\n";
      for (std::size_t i = 0; i < c.patterns.size(); ++i) {
        const auto& pat = c.patterns[i];
        const bool bad = flagged.count({pc.instance, pat.id}) != 0;
        for (const auto& r0 : pat.rects) {
          const Rect r = r0.translated(pc.x, row.y);
          const std::string geom = "x=\"" + sx(static_cast<double>(r.x_lo)) + "\" y=\"" +
                                   sy(static_cast<double>(r.y_hi)) + "\" width=\"" +
                                   num(static_cast<double>(r.width()) * k) + "\" height=\"" +
                                   num(static_cast<double>(r.height()) * k) + "\"";
          s += "<rect class=\"" + std::string(colors[i] == Color::Mandrel ? "mandrel" : "trim") + "\" " + geom +
               "/>\n";
          if (bad) s += "<rect class=\"bad\" " + geom + "/>\n";
        }
      }
      s += "<rect class=\"cell\" x=\"" + sx(static_cast<double>(pc.x)) + "\" y=\"" + sy(y1) + "\" width=\"" +
           num(static_cast<double>(c.width) * k) + "\" height=\"" + num(static_cast<double>(c.height) * k) + "\"/>\n";
      if (opts.annotate)
        s += "<text x=\"" + sx(static_cast<double>(pc.x) + 0.3) + "\" y=\"" + sy(y1 - 0.3) +
             "\" dominant-baseline=\"hanging\">" + escape(pc.instance) + " " + toString(pc.orient) + "</text>\n";
      s += "</g>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace sadp
