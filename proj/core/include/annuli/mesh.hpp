#pragma once

#include <array>
#include <string>
#include <vector>

#include "annuli/linalg.hpp"
#include "annuli/surface.hpp"

namespace annuli {

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
};

// Row-major triangulation of the chart's quad grid, u-major vertex order.
// For closed charts the seam is welded: the last v-column references the
// first, giving watertight period topology.
Mesh mesh_from_chart(const SurfaceChart& chart, bool weld_seam = true);

void write_obj(const Mesh& mesh, const std::string& path);
void write_ply_ascii(const Mesh& mesh, const std::string& path);
void write_ply_binary(const Mesh& mesh, const std::string& path);  // float64 fields

Mesh read_obj(const std::string& path);
Mesh read_ply(const std::string& path);  // ascii or binary_little_endian, float64

}  // namespace annuli
