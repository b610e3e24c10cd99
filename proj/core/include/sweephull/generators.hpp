#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sweephull/geometry.hpp"

namespace sweephull {

enum class PointKind { Uniform, Disk, Circle, Grid, Collinear, Clustered };

/// Parse "uniform", "disk", "circle", "grid", "collinear" or "clustered".
/// Throws UsageError.
PointKind parse_kind(const std::string& name);
const char* to_string(PointKind kind);

/// Deterministic point-set generator: same (kind, n, seed) always produces
/// the same points. `circle` places all points at the same distance from a
/// common center (cocircular stress input), `grid` is an integer lattice,
/// `collinear` lies on one line.
std::vector<Point> generate(PointKind kind, int n, std::uint64_t seed);

}  // namespace sweephull
