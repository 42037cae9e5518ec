#include "annuli/mesh.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "annuli/error.hpp"

namespace annuli {

Mesh mesh_from_chart(const SurfaceChart& chart, bool weld_seam) {
  Mesh m;
  int nu = chart.nu(), nv = chart.nv();
  bool weld = weld_seam && chart.closed_v;
  int nvm = weld ? nv - 1 : nv;  // stored v columns
  m.vertices.reserve(static_cast<std::size_t>(nu) * nvm);
  for (int iu = 0; iu < nu; ++iu)
    for (int iv = 0; iv < nvm; ++iv) m.vertices.push_back(chart.at(iu, iv));
  auto vid = [&](int iu, int iv) {
    if (weld) iv %= nvm;
    return iu * nvm + iv;
  };
  int cols = weld ? nvm : nv - 1;
  m.triangles.reserve(static_cast<std::size_t>(nu - 1) * cols * 2);
  for (int iu = 0; iu + 1 < nu; ++iu)
    for (int j = 0; j < cols; ++j) {
      int a = vid(iu, j), b = vid(iu + 1, j), c = vid(iu + 1, j + 1), d = vid(iu, j + 1);
      m.triangles.push_back({a, b, c});
      m.triangles.push_back({a, c, d});
    }
  return m;
}

void write_obj(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  for (const auto& v : mesh.vertices)
    std::fprintf(f, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
  for (const auto& t : mesh.triangles)
    std::fprintf(f, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
  std::fclose(f);
}

void write_ply_ascii(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  std::fprintf(f,
               "ply\nformat ascii 1.0\nelement vertex %zu\n"
               "property double x\nproperty double y\nproperty double z\n"
               "element face %zu\nproperty list uchar int vertex_indices\nend_header\n",
               mesh.vertices.size(), mesh.triangles.size());
  for (const auto& v : mesh.vertices)
    std::fprintf(f, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
  for (const auto& t : mesh.triangles)
    std::fprintf(f, "3 %d %d %d\n", t[0], t[1], t[2]);
  std::fclose(f);
}

void write_ply_binary(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  std::fprintf(f,
               "ply\nformat binary_little_endian 1.0\nelement vertex %zu\n"
               "property double x\nproperty double y\nproperty double z\n"
               "element face %zu\nproperty list uchar int vertex_indices\nend_header\n",
               mesh.vertices.size(), mesh.triangles.size());
  for (const auto& v : mesh.vertices) {
    double xyz[3] = {v.x, v.y, v.z};
    std::fwrite(xyz, sizeof(double), 3, f);
  }
  for (const auto& t : mesh.triangles) {
    unsigned char n = 3;
    std::fwrite(&n, 1, 1, f);
    int idx[3] = {t[0], t[1], t[2]};
    std::fwrite(idx, sizeof(int), 3, f);
  }
  std::fclose(f);
}

Mesh read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path);
  Mesh m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) {
      Vec3 v;
      if (std::sscanf(line.c_str(), "v %lf %lf %lf", &v.x, &v.y, &v.z) == 3)
        m.vertices.push_back(v);
    } else if (line.rfind("f ", 0) == 0) {
      int a, b, c;
      if (std::sscanf(line.c_str(), "f %d %d %d", &a, &b, &c) == 3)
        m.triangles.push_back({a - 1, b - 1, c - 1});
    }
  }
  return m;
}

Mesh read_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path);
  std::string line;
  std::size_t nvert = 0, nface = 0;
  bool binary = false;
  while (std::getline(in, line)) {
    if (line.rfind("format binary_little_endian", 0) == 0) binary = true;
    else if (line.rfind("element vertex ", 0) == 0) nvert = std::stoul(line.substr(15));
    else if (line.rfind("element face ", 0) == 0) nface = std::stoul(line.substr(13));
    else if (line == "end_header") break;
  }
  Mesh m;
  m.vertices.resize(nvert);
  m.triangles.resize(nface);
  if (binary) {
    for (auto& v : m.vertices) {
      double xyz[3];
      in.read(reinterpret_cast<char*>(xyz), sizeof(xyz));
      v = {xyz[0], xyz[1], xyz[2]};
    }
    for (auto& t : m.triangles) {
      unsigned char n;
      in.read(reinterpret_cast<char*>(&n), 1);
      int idx[3];
      in.read(reinterpret_cast<char*>(idx), sizeof(idx));
      t = {idx[0], idx[1], idx[2]};
    }
  } else {
    for (auto& v : m.vertices) in >> v.x >> v.y >> v.z;
    for (auto& t : m.triangles) {
      int n;
      in >> n >> t[0] >> t[1] >> t[2];
    }
  }
  if (!in) fail(ErrorKind::IoError, "truncated mesh file " + path);
  return m;
}

}  // namespace annuli
