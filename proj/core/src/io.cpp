#include "sweephull/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "sweephull/errors.hpp"

namespace sweephull {

namespace {

void format_double(std::string* out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out->append(buf);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Strip comments, turn commas into spaces, return false for blank lines.
bool prepare_line(std::string* line) {
  const size_t hash = line->find('#');
  if (hash != std::string::npos) line->erase(hash);
  bool any = false;
  for (char& c : *line) {
    if (c == ',') c = ' ';
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  }
  return any;
}

double parse_double(const std::string& token, int line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) {
    parse_fail(line, "bad number '" + token + "'");
  }
  if (!std::isfinite(v)) parse_fail(line, "non-finite coordinate '" + token + "'");
  return v;
}

long parse_index(const std::string& token, int line, long limit) {
  char* end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size()) {
    parse_fail(line, "bad index '" + token + "'");
  }
  if (v < 0 || v >= limit) parse_fail(line, "index " + token + " out of range");
  return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileRead, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::FileWrite, "cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

std::vector<Point> read_points(std::istream& in, std::vector<int>* line_numbers) {
  std::vector<Point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!prepare_line(&line)) continue;
    const auto toks = tokens_of(line);
    if (toks.size() != 2) parse_fail(lineno, "expected 'x y'");
    pts.push_back({parse_double(toks[0], lineno), parse_double(toks[1], lineno)});
    if (line_numbers) line_numbers->push_back(lineno);
  }
  return pts;
}

std::vector<Point> read_points_file(const std::string& path,
                                    std::vector<int>* line_numbers) {
  std::ifstream in = open_in(path);
  return read_points(in, line_numbers);
}

void write_points(std::ostream& out, std::span<const Point> points) {
  std::string buf;
  for (const Point& p : points) {
    buf.clear();
    format_double(&buf, p.x);
    buf += ' ';
    format_double(&buf, p.y);
    buf += '\n';
    out << buf;
  }
  if (!out) fail(ErrorCode::FileWrite, "write failed");
}

void write_points_file(const std::string& path, std::span<const Point> points) {
  std::ofstream out = open_out(path);
  write_points(out, points);
}

MeshFile read_mesh(std::istream& in) {
  std::string line;
  int lineno = 0;
  const auto next_content_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      if (prepare_line(&line)) return line;
    }
    parse_fail(lineno, "unexpected end of mesh file");
  };

  MeshFile mesh;
  const auto header = tokens_of(next_content_line());
  if (header.size() != 3) parse_fail(lineno, "expected 'n_points n_triangles hull_size'");
  const long np = parse_index(header[0], lineno, 1L << 30);
  const long nt = parse_index(header[1], lineno, 1L << 30);
  const long nh = parse_index(header[2], lineno, 1L << 30);

  mesh.points.reserve(static_cast<size_t>(np));
  for (long i = 0; i < np; ++i) {
    const auto toks = tokens_of(next_content_line());
    if (toks.size() != 2) parse_fail(lineno, "expected 'x y'");
    mesh.points.push_back(
        {parse_double(toks[0], lineno), parse_double(toks[1], lineno)});
  }
  mesh.triangles.reserve(static_cast<size_t>(nt));
  for (long i = 0; i < nt; ++i) {
    const auto toks = tokens_of(next_content_line());
    if (toks.size() != 3) parse_fail(lineno, "expected three vertex indices");
    mesh.triangles.push_back({static_cast<Index>(parse_index(toks[0], lineno, np)),
                              static_cast<Index>(parse_index(toks[1], lineno, np)),
                              static_cast<Index>(parse_index(toks[2], lineno, np))});
  }
  if (nh > 0) {
    const auto hull_toks = tokens_of(next_content_line());
    if (static_cast<long>(hull_toks.size()) != nh) {
      parse_fail(lineno, "hull line must list hull_size indices");
    }
    mesh.hull.reserve(static_cast<size_t>(nh));
    for (const auto& tok : hull_toks) {
      mesh.hull.push_back(static_cast<Index>(parse_index(tok, lineno, np)));
    }
  }
  return mesh;
}

MeshFile read_mesh_file(const std::string& path) {
  std::ifstream in = open_in(path);
  return read_mesh(in);
}

void write_mesh(std::ostream& out, const MeshFile& mesh) {
  out << mesh.points.size() << ' ' << mesh.triangles.size() << ' '
      << mesh.hull.size() << '\n';
  write_points(out, mesh.points);
  for (const auto& tr : mesh.triangles) {
    out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
  }
  for (size_t i = 0; i < mesh.hull.size(); ++i) {
    out << mesh.hull[i] << (i + 1 < mesh.hull.size() ? ' ' : '\n');
  }
  if (!out) fail(ErrorCode::FileWrite, "write failed");
}

void write_mesh_file(const std::string& path, const MeshFile& mesh) {
  std::ofstream out = open_out(path);
  write_mesh(out, mesh);
}

MeshFile to_mesh_file(const Triangulation& t) {
  MeshFile mesh;
  mesh.points = t.points;
  mesh.triangles.reserve(t.triangles.size());
  for (const Triangle& tr : t.triangles) mesh.triangles.push_back(tr.v);
  mesh.hull = t.hull_cycle();
  return mesh;
}

Triangulation from_mesh_file(const MeshFile& mesh) {
  Triangulation t;
  t.points = mesh.points;
  t.triangles.reserve(mesh.triangles.size());
  for (const auto& tr : mesh.triangles) {
    Triangle tri;
    tri.v = tr;
    try {
      const Circumcircle cc = circumcircle(t.points[tr[0]], t.points[tr[1]],
                                           t.points[tr[2]]);
      tri.circumcenter = cc.center;
      tri.radius_sq = cc.radius_sq;
    } catch (const Error&) {
      // Degenerate triangle in the file; audit will flag it.
    }
    t.triangles.push_back(tri);
  }

  // Pair up opposite directed edges.
  std::unordered_map<std::uint64_t, std::pair<TriIndex, int>> directed;
  const auto dkey = [](Index a, Index b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  };
  for (TriIndex i = 0; i < static_cast<TriIndex>(t.triangles.size()); ++i) {
    for (int e = 0; e < 3; ++e) {
      directed.emplace(dkey(t.triangles[i].v[e], t.triangles[i].v[(e + 1) % 3]),
                       std::make_pair(i, e));
    }
  }
  for (TriIndex i = 0; i < static_cast<TriIndex>(t.triangles.size()); ++i) {
    for (int e = 0; e < 3; ++e) {
      const auto it =
          directed.find(dkey(t.triangles[i].v[(e + 1) % 3], t.triangles[i].v[e]));
      if (it != directed.end()) t.triangles[i].nbr[e] = it->second.first;
    }
  }

  HullRing& hull = t.hull;
  const size_t n = t.points.size();
  hull.next.assign(n, kNoIndex);
  hull.prev.assign(n, kNoIndex);
  hull.edge_tri.assign(n, kNoTri);
  hull.size = static_cast<Index>(mesh.hull.size());
  if (!mesh.hull.empty()) {
    hull.start = mesh.hull[0];
    for (size_t i = 0; i < mesh.hull.size(); ++i) {
      const Index u = mesh.hull[i];
      const Index v = mesh.hull[(i + 1) % mesh.hull.size()];
      hull.next[u] = v;
      hull.prev[v] = u;
      const auto it = directed.find(dkey(u, v));
      if (it != directed.end()) hull.edge_tri[u] = it->second.first;
    }
  }
  return t;
}

}  // namespace sweephull
