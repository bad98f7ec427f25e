// Copyright Contributors to the AeroSurrogate Project
// SPDX-License-Identifier: Apache-2.0

#include "aero/geometry/trimesh.hpp"

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace aero {

DomainSpec default_domain() {
  DomainSpec d;
  d.box.min = Vec3(-3.0, -1.2, -1.2);
  d.box.max = Vec3(3.0, 1.2, 1.2);
  d.dims = Vec3i(128, 32, 32);
  return d;
}

void validate(const TriMesh& mesh) {
  if (mesh.vertex_count() < 3) throw std::runtime_error("mesh has fewer than 3 vertices");
  if (mesh.triangle_count() < 1) throw std::runtime_error("mesh has no triangles");
  const int nv = static_cast<int>(mesh.vertex_count());
  for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
    const int a = mesh.triangles(t, 0);
    const int b = mesh.triangles(t, 1);
    const int c = mesh.triangles(t, 2);
    if (a < 0 || b < 0 || c < 0 || a >= nv || b >= nv || c >= nv)
      throw std::runtime_error("triangle " + std::to_string(t) + " references vertex out of range");
    if (a == b || b == c || a == c)
      throw std::runtime_error("triangle " + std::to_string(t) + " has repeated vertex indices");
  }
}

void validate(const DomainSpec& domain) {
  if (!domain.box.valid() || (domain.box.extent().array() <= 0.0).any())
    throw std::runtime_error("domain box must have strictly positive extent on every axis");
  if ((domain.dims.array() < 2).any())
    throw std::runtime_error("domain dims must be >= 2 per axis");
}

Aabb compute_bbox(const TriMesh& mesh) {
  validate(mesh);
  Aabb box;
  for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) box.expand(mesh.vertex(mesh.triangles(t, k)));
  return box;
}

TriMesh center_in_domain(const TriMesh& mesh, const DomainSpec& domain) {
  validate(domain);
  const Aabb box = compute_bbox(mesh);
  const Vec3 mesh_extent = box.extent();
  const Vec3 dom_extent = domain.box.extent();
  static const char* axis_names[3] = {"X", "Y", "Z"};
  for (int a = 0; a < 3; ++a) {
    if (mesh_extent[a] > dom_extent[a])
      throw std::runtime_error(std::string("domain overflow on axis ") + axis_names[a]);
  }

  Vec3 shift = domain.box.center() - box.center();
  bool moved = false;
  for (int a = 0; a < 3; ++a) {
    // Snap sub-ulp residuals so re-centering is an exact identity.
    const double scale = std::max({std::abs(domain.box.center()[a]), std::abs(box.center()[a]),
                                   dom_extent[a], 1.0});
    if (std::abs(shift[a]) <= 4.0 * DBL_EPSILON * scale) {
      shift[a] = 0.0;
    } else {
      moved = true;
    }
  }
  if (!moved) return mesh;

  TriMesh out = mesh;
  out.vertices.rowwise() += shift.transpose();
  return out;
}

namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

bool is_closed_manifold(const TriMesh& mesh) {
  std::unordered_map<std::uint64_t, int> edge_count;
  edge_count.reserve(static_cast<std::size_t>(mesh.triangle_count()) * 3);
  for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) {
      ++edge_count[edge_key(mesh.triangles(t, k), mesh.triangles(t, (k + 1) % 3))];
    }
  }
  for (const auto& [key, count] : edge_count)
    if (count != 2) return false;
  return true;
}

long euler_characteristic(const TriMesh& mesh) {
  std::unordered_map<std::uint64_t, int> edges;
  edges.reserve(static_cast<std::size_t>(mesh.triangle_count()) * 3);
  std::unordered_map<int, int> used_vertices;
  for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) {
      ++edges[edge_key(mesh.triangles(t, k), mesh.triangles(t, (k + 1) % 3))];
      ++used_vertices[mesh.triangles(t, k)];
    }
  }
  return static_cast<long>(used_vertices.size()) - static_cast<long>(edges.size()) +
         static_cast<long>(mesh.triangle_count());
}

}  // namespace aero
