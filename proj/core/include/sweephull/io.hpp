#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sweephull/triangulation.hpp"

namespace sweephull {

/// Point file: one `x y` (or `x,y`) pair per line, `#` starts a comment.
/// Values are written with 17 significant digits so read(write(p)) == p
/// bit-exactly. `line_numbers`, when given, receives the 1-based source line
/// of each point. Throws ParseError / FileRead / FileWrite.
std::vector<Point> read_points(std::istream& in, std::vector<int>* line_numbers = nullptr);
std::vector<Point> read_points_file(const std::string& path,
                                    std::vector<int>* line_numbers = nullptr);
void write_points(std::ostream& out, std::span<const Point> points);
void write_points_file(const std::string& path, std::span<const Point> points);

/// Triangle mesh file: header `n_points n_triangles hull_size`, then the
/// points, then one CCW index triple per triangle, then the hull cycle on one
/// line.
struct MeshFile {
  std::vector<Point> points;
  std::vector<std::array<Index, 3>> triangles;
  std::vector<Index> hull;
};

MeshFile read_mesh(std::istream& in);
MeshFile read_mesh_file(const std::string& path);
void write_mesh(std::ostream& out, const MeshFile& mesh);
void write_mesh_file(const std::string& path, const MeshFile& mesh);

MeshFile to_mesh_file(const Triangulation& t);

/// Rebuild a linked Triangulation from a mesh file: circumcircles are
/// recomputed and neighbour/hull links derived from shared edges. Broken
/// meshes reconstruct best-effort so that audit can report what is wrong;
/// only structurally unusable input (bad indices) throws ParseError.
Triangulation from_mesh_file(const MeshFile& mesh);

}  // namespace sweephull
