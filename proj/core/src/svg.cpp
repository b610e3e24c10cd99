#include "sweephull/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "sweephull/errors.hpp"

namespace sweephull {

namespace {

constexpr double kCanvas = 800.0;

// Maps world coordinates into an 800x800 canvas with the y axis flipped.
struct Frame {
  double min_x, min_y, scale;

  static Frame fit(std::span<const Point> pts) {
    double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
    for (const Point& p : pts) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double margin = 0.04 * span;
    return {lo_x - margin, lo_y - margin, (kCanvas) / (span + 2.0 * margin)};
  }
  double x(Point p) const { return (p.x - min_x) * scale; }
  double y(Point p) const { return kCanvas - (p.y - min_y) * scale; }
};

void open_svg(std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' '
      << kCanvas << "\">\n";
}

void close_svg(std::ostream& out) {
  out << "</svg>\n";
  if (!out) fail(ErrorCode::FileWrite, "svg write failed");
}

void emit_points(std::ostream& out, const Frame& f, std::span<const Point> pts) {
  const double s = 3.0;
  for (const Point& p : pts) {
    out << "<rect class=\"pt\" x=\"" << f.x(p) - s / 2 << "\" y=\""
        << f.y(p) - s / 2 << "\" width=\"" << s << "\" height=\"" << s
        << "\" fill=\"#222\"/>\n";
  }
}

void emit_triangle(std::ostream& out, const Frame& f, std::span<const Point> pts,
                   const Triangle& tr, const char* cls, const char* color) {
  out << "<polygon class=\"" << cls << "\" points=\"";
  for (int e = 0; e < 3; ++e) {
    const Point p = pts[tr.v[e]];
    out << f.x(p) << ',' << f.y(p) << (e < 2 ? " " : "");
  }
  out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
}

}  // namespace

void render_seed_svg(std::ostream& out, std::span<const Point> points,
                     const SeedTriangle& seed) {
  const Frame f = Frame::fit(points);
  open_svg(out);
  emit_points(out, f, points);
  Triangle tr;
  tr.v = {seed.i0, seed.ij, seed.ik};
  emit_triangle(out, f, points, tr, "tri new", "#cc3333");
  out << "<circle class=\"circumcircle\" cx=\"" << f.x(seed.circumcenter)
      << "\" cy=\"" << f.y(seed.circumcenter) << "\" r=\""
      << std::sqrt(seed.radius_sq) * f.scale
      << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  close_svg(out);
}

void render_sweep_svg(std::ostream& out, const Triangulation& t, TriIndex first_new) {
  const Frame f = Frame::fit(t.points);
  open_svg(out);
  for (TriIndex i = 0; i < static_cast<TriIndex>(t.triangles.size()); ++i) {
    const bool fresh = i >= first_new;
    emit_triangle(out, f, t.points, t.triangles[i], fresh ? "tri new" : "tri old",
                  fresh ? "#cc3333" : "#3366cc");
  }
  emit_points(out, f, t.points);
  close_svg(out);
}

void render_final_svg(std::ostream& out, const Triangulation& t) {
  const Frame f = Frame::fit(t.points);
  open_svg(out);
  for (const Triangle& tr : t.triangles) {
    emit_triangle(out, f, t.points, tr, "tri", "#3366cc");
  }
  const auto ring = t.hull_cycle();
  out << "<polygon class=\"hull\" points=\"";
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point p = t.points[ring[i]];
    out << f.x(p) << ',' << f.y(p) << (i + 1 < ring.size() ? " " : "");
  }
  out << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  emit_points(out, f, t.points);
  close_svg(out);
}

namespace {

std::ofstream open_svg_file(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::FileWrite, "cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void render_seed_svg_file(const std::string& path, std::span<const Point> points,
                          const SeedTriangle& seed) {
  std::ofstream out = open_svg_file(path);
  render_seed_svg(out, points, seed);
}

void render_sweep_svg_file(const std::string& path, const Triangulation& t,
                           TriIndex first_new) {
  std::ofstream out = open_svg_file(path);
  render_sweep_svg(out, t, first_new);
}

void render_final_svg_file(const std::string& path, const Triangulation& t) {
  std::ofstream out = open_svg_file(path);
  render_final_svg(out, t);
}

}  // namespace sweephull
