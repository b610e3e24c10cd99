#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "sweephull/seeding.hpp"
#include "sweephull/triangulation.hpp"

namespace sweephull {

/// Seed stage: all points, the seed triangle (red) and its circumcircle.
/// The circumcircle is the only <circle> element; point markers are rects.
void render_seed_svg(std::ostream& out, std::span<const Point> points,
                     const SeedTriangle& seed);

/// Sweep snapshot: triangles with pool index below `first_new` in blue
/// ("tri old"), the rest in red ("tri new").
void render_sweep_svg(std::ostream& out, const Triangulation& t, TriIndex first_new);

/// Final mesh: every triangle plus the hull outline.
void render_final_svg(std::ostream& out, const Triangulation& t);

/// File wrappers; throw FileWrite.
void render_seed_svg_file(const std::string& path, std::span<const Point> points,
                          const SeedTriangle& seed);
void render_sweep_svg_file(const std::string& path, const Triangulation& t,
                           TriIndex first_new);
void render_final_svg_file(const std::string& path, const Triangulation& t);

}  // namespace sweephull
