#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "udg/errors.hpp"
#include "udg/geometry.hpp"

namespace udg {

/// Intersection points of two radius-r circles centered at p and q.
/// For a lens outline r = |pq|, giving corners at distance r*sqrt(3)/2 from
/// the chord midpoint.
inline std::pair<Point, Point> circle_intersections(const Point& p,
                                                    const Point& q, double r) {
  const double d = std::sqrt(dist_sq(p, q));
  if (d == 0.0 || d > 2.0 * r) {
    throw InputError("circle_intersections: circles do not meet");
  }
  const double half = d / 2.0;
  const double h = std::sqrt(std::max(0.0, r * r - half * half));
  const Point mid{(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
  const double ux = (q.x - p.x) / d;
  const double uy = (q.y - p.y) / d;
  return {Point{mid.x - h * uy, mid.y + h * ux},
          Point{mid.x + h * uy, mid.y - h * ux}};
}

/// Renders the point set as an SVG scatter, with optional highlighted clique
/// and the lens outline of an edge (two circular arcs of radius |pq|). A
/// length-1 scale bar anchors the unit-disk scale.
inline void render_svg(std::ostream& out, const PointSet& ps,
                       std::span<const std::size_t> clique = {},
                       std::optional<std::pair<std::size_t, std::size_t>>
                           lens = std::nullopt) {
  for (std::size_t id : clique) {
    if (id >= ps.size()) throw InputError("render_svg: clique id out of range");
  }
  if (lens && (lens->first >= ps.size() || lens->second >= ps.size() ||
               lens->first == lens->second)) {
    throw InputError("render_svg: invalid lens edge");
  }

  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!ps.empty()) {
    min_x = max_x = ps[0].x;
    min_y = max_y = ps[0].y;
    for (const Point& p : ps) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double pad = std::max(0.6, 0.05 * std::max(max_x - min_x, max_y - min_y));
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;

  const double width = 800.0;
  const double scale = width / (max_x - min_x);
  const double height = (max_y - min_y) * scale;
  auto sx = [&](double x) { return (x - min_x) * scale; };
  auto sy = [&](double y) { return height - (y - min_y) * scale; };  // y up

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (lens) {
    const Point& p = ps[lens->first];
    const Point& q = ps[lens->second];
    const double r = std::sqrt(dist_sq(p, q));
    auto [c1, c2] = circle_intersections(p, q, r);
    const double rr = r * scale;
    // two minor arcs (each subtends 120 degrees) bounding the lens
    out << "  <path d=\"M " << sx(c1.x) << ' ' << sy(c1.y) << " A " << rr
        << ' ' << rr << " 0 0 0 " << sx(c2.x) << ' ' << sy(c2.y) << " A "
        << rr << ' ' << rr << " 0 0 0 " << sx(c1.x) << ' ' << sy(c1.y)
        << " Z\" fill=\"#fff3c4\" stroke=\"#d4a017\" stroke-width=\"1.5\"/>\n";
  }

  std::vector<char> in_clique(ps.size(), 0);
  for (std::size_t id : clique) in_clique[id] = 1;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      const Point& a = ps[clique[i]];
      const Point& b = ps[clique[j]];
      out << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
          << sx(b.x) << "\" y2=\"" << sy(b.y)
          << "\" stroke=\"#e05555\" stroke-width=\"0.8\" opacity=\"0.5\"/>\n";
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (in_clique[i]) {
      out << "  <circle cx=\"" << sx(ps[i].x) << "\" cy=\"" << sy(ps[i].y)
          << "\" r=\"4.5\" fill=\"#c0392b\"/>\n";
    } else {
      out << "  <circle cx=\"" << sx(ps[i].x) << "\" cy=\"" << sy(ps[i].y)
          << "\" r=\"3\" fill=\"#5d6d7e\"/>\n";
    }
  }

  // unit scale bar, bottom left
  const double bar_y = height - 12.0;
  out << "  <line x1=\"10\" y1=\"" << bar_y << "\" x2=\"" << 10.0 + scale
      << "\" y2=\"" << bar_y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "  <text x=\"" << 10.0 + scale / 2.0 << "\" y=\"" << bar_y - 4.0
      << "\" font-size=\"11\" text-anchor=\"middle\">1</text>\n";
  out << "</svg>\n";
}

inline void render_svg_file(const std::string& path, const PointSet& ps,
                            std::span<const std::size_t> clique = {},
                            std::optional<std::pair<std::size_t, std::size_t>>
                                lens = std::nullopt) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write SVG file: " + path);
  render_svg(f, ps, clique, lens);
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace udg
