#include "ribbon/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ribbon/intersect.hpp"

namespace ribbon::plot {

namespace {

constexpr double kCanvas = 480.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kCanvas) + "\" height=\"" + fmt(kCanvas) +
         "\" viewBox=\"0 0 " + fmt(kCanvas) + " " + fmt(kCanvas) + "\">\n";
}

struct Pt {
  double x, y;
};

std::string polyline(const std::vector<Pt>& pts, const char* cls) {
  std::string out = "<polygon class=\"" + std::string(cls) + "\" fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(pts[i].x) + "," + fmt(pts[i].y);
  }
  return out + "\"/>\n";
}

// Orthonormal e1, e2 completing the unit vector c.
void basis(const Vec3& c, Vec3& e1, Vec3& e2) {
  e1 = c.unitOrthogonal();
  e2 = c.cross(e1);
}

}  // namespace

std::string diagram_svg(const RibbonFrame& frame) {
  constexpr std::size_t kSamples = 1024;
  const auto pts = frame.field.sample(kSamples);

  // Centre the view on the antipode of the emptiest direction.
  const int probes = 2000;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  Vec3 empty = Vec3::UnitZ();
  double best = -1;
  for (int i = 0; i < probes; ++i) {
    const double z = 1 - 2 * (i + 0.5) / probes, r = std::sqrt(1 - z * z);
    const Vec3 p(r * std::cos(golden * i), r * std::sin(golden * i), z);
    double d = 4;
    for (std::size_t k = 0; k < kSamples; k += 4) d = std::min(d, (pts[k] - p).squaredNorm());
    if (d > best) {
      best = d;
      empty = p;
    }
  }
  const Vec3 c = -empty;
  Vec3 e1, e2;
  basis(c, e1, e2);
  const double half = kCanvas / 2, scale = 0.95 * half / 2;
  auto project = [&](const Vec3& p) {
    const double k = std::sqrt(2 / std::max(1e-12, 1 + p.dot(c)));
    return Pt{half + scale * k * p.dot(e1), half - scale * k * p.dot(e2)};
  };

  std::string out = header();
  out += "<circle class=\"horizon\" cx=\"" + fmt(half) + "\" cy=\"" + fmt(half) + "\" r=\"" + fmt(2 * scale) +
         "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  std::vector<Pt> line;
  for (const auto& p : pts) line.push_back(project(p));
  out += polyline(line, "field");
  const auto dps = sphere_double_points(frame.field, frame.tol, frame.grid_n);
  for (std::size_t i = 0; i < dps.size(); ++i) {
    const Pt q = project(dps[i].point);
    out += "<circle class=\"crossing\" cx=\"" + fmt(q.x) + "\" cy=\"" + fmt(q.y) + "\" r=\"5\" fill=\"red\"/>\n";
    out += "<text x=\"" + fmt(q.x + 7) + "\" y=\"" + fmt(q.y - 7) + "\" font-size=\"12\">" + std::to_string(i + 1) +
           "</text>\n";
  }
  return out + "</svg>\n";
}

std::vector<double> sweep_radii(double r_star) {
  const double top = 3 * std::max(r_star, 1.0);
  std::vector<double> r;
  for (int i = 1; i <= 48; ++i) r.push_back(top * i / 48.0);
  return r;
}

std::string sweep_csv(const RibbonFrame& frame, std::vector<double> radii) {
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::ostringstream out;
  out.precision(10);
  out << "R,embedded,min_gap\n";
  for (double R : radii) {
    const auto e = edge_embedded(frame, R);
    out << R << ',' << (e.embedded ? 1 : 0) << ',' << e.gap.distance << '\n';
  }
  return out.str();
}

std::string curve_svg(const ClosedCurve3& curve, const Vec3& view) {
  Vec3 e1, e2;
  basis(view.normalized(), e1, e2);
  const auto pts = curve.sample(1024);
  double extent = 1e-12;
  for (const auto& p : pts) extent = std::max({extent, std::abs(p.dot(e1)), std::abs(p.dot(e2))});
  const double half = kCanvas / 2, scale = 0.9 * half / extent;
  std::vector<Pt> line;
  for (const auto& p : pts) line.push_back({half + scale * p.dot(e1), half - scale * p.dot(e2)});
  return header() + polyline(line, "curve") + "</svg>\n";
}

}  // namespace ribbon::plot
