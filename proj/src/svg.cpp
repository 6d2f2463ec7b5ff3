#include "toricmin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "toricmin/boundary.hpp"

namespace toricmin {

Polygon region_polygon(const ConvexRegion &region, int per_arc) {
  PlanarBoundary b = trace_boundary(region);
  return sample_boundary(b, region, per_arc);
}

Polygon orthant_hull_polygon(const ConvexRegion &base, double xmax, double ymax, int per_arc) {
  Polygon ring = region_polygon(base, per_arc);
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  size_t n = ring.size();
  // Counterclockwise from the lowest leftmost point to the leftmost lowest one.
  auto left = std::min_element(ring.begin(), ring.end(), [](const auto &a, const auto &b) {
    return a.first < b.first - 1e-12 || (std::fabs(a.first - b.first) <= 1e-12 && a.second < b.second);
  });
  auto bottom = std::min_element(ring.begin(), ring.end(), [](const auto &a, const auto &b) {
    return a.second < b.second - 1e-12 || (std::fabs(a.second - b.second) <= 1e-12 && a.first < b.first);
  });
  size_t i0 = static_cast<size_t>(left - ring.begin()), i1 = static_cast<size_t>(bottom - ring.begin());
  Polygon out;
  out.emplace_back(ring[i0].first, ymax);
  for (size_t i = i0;; i = (i + 1) % n) {
    out.push_back(ring[i]);
    if (i == i1) break;
  }
  out.emplace_back(xmax, ring[i1].second);
  out.emplace_back(xmax, ymax);
  return out;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string render_svg(const SvgPlot &plot) {
  const double px = 400.0, margin = 20.0;
  double w = plot.xmax - plot.xmin, h = plot.ymax - plot.ymin;
  double s = px / std::max(w, h);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * s + 2 * margin) << "\" height=\""
    << num(h * s + 2 * margin) << "\">\n";
  if (!plot.title.empty()) o << "  <title>" << plot.title << "</title>\n";
  o << "  <g transform=\"translate(" << num(margin - plot.xmin * s) << " " << num(margin + plot.ymax * s) << ") scale("
    << num(s) << " " << num(-s) << ")\">\n";
  // axes
  o << "    <path d=\"M " << num(plot.xmin) << " 0 L " << num(plot.xmax) << " 0 M 0 " << num(plot.ymin) << " L 0 "
    << num(plot.ymax) << "\" stroke=\"black\" stroke-width=\"" << num(1.0 / s) << "\" fill=\"none\"/>\n";
  o << "    <path id=\"region\" d=\"";
  for (size_t i = 0; i < plot.region.size(); ++i)
    o << (i ? " L " : "M ") << num(plot.region[i].first) << " " << num(plot.region[i].second);
  o << " Z\" fill=\"#9ab\" fill-opacity=\"0.5\" stroke=\"#234\" stroke-width=\"" << num(1.5 / s) << "\"/>\n";
  for (const auto &[x, y] : plot.lattice)
    o << "    <circle class=\"lattice\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << num(3.0 / s) << "\"/>\n";
  o << "  </g>\n</svg>\n";
  return o.str();
}

Polygon parse_region_path(const std::string &svg) {
  auto at = svg.find("id=\"region\"");
  if (at == std::string::npos) return {};
  auto d = svg.find(" d=\"", at);  // the leading space skips the d=" inside id="
  if (d == std::string::npos) return {};
  ++d;
  auto end = svg.find('"', d + 3);
  std::istringstream in(svg.substr(d + 3, end - d - 3));
  Polygon out;
  std::string tok;
  while (in >> tok) {
    if (tok == "M" || tok == "L") {
      double x, y;
      in >> x >> y;
      out.emplace_back(x, y);
    }
  }
  return out;
}

bool polygon_contains(const Polygon &poly, double x, double y, double tol) {
  size_t n = poly.size();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    auto [xi, yi] = poly[i];
    auto [xj, yj] = poly[j];
    // on the edge
    double dx = xj - xi, dy = yj - yi;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? std::clamp(((x - xi) * dx + (y - yi) * dy) / len2, 0.0, 1.0) : 0.0;
    double ex = xi + t * dx - x, ey = yi + t * dy - y;
    if (ex * ex + ey * ey <= tol * tol) return true;
    if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi) inside = !inside;
  }
  return inside;
}

}  // namespace toricmin
