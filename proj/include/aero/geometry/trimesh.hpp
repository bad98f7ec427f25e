// Copyright Contributors to the AeroSurrogate Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include <limits>
#include <string>

namespace aero {

using Vec3 = Eigen::Vector3d;
using Vec3i = Eigen::Vector3i;

/// Indexed triangle soup in meters. Triangle rows keep file-order winding.
struct TriMesh {
  Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor> vertices;
  Eigen::Matrix<int, Eigen::Dynamic, 3, Eigen::RowMajor> triangles;
  std::string name;

  Eigen::Index vertex_count() const { return vertices.rows(); }
  Eigen::Index triangle_count() const { return triangles.rows(); }
  Vec3 vertex(Eigen::Index i) const { return vertices.row(i).transpose(); }
};

struct Aabb {
  Vec3 min = Vec3::Constant(std::numeric_limits<double>::max());
  Vec3 max = Vec3::Constant(std::numeric_limits<double>::lowest());

  Vec3 center() const { return 0.5 * (min + max); }
  Vec3 extent() const { return max - min; }
  double diagonal() const { return extent().norm(); }
  bool valid() const { return (min.array() <= max.array()).all(); }
  void expand(const Vec3& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
};

/// Fixed voxelization domain shared by the whole dataset: one box, one grid.
struct DomainSpec {
  Aabb box;
  Vec3i dims = Vec3i(128, 32, 32);
};

/// Default fleet domain, 6.0 x 2.4 x 2.4 m centered at the origin.
DomainSpec default_domain();

/// Throws std::runtime_error on any structural invariant violation.
void validate(const TriMesh& mesh);
void validate(const DomainSpec& domain);

/// Tight bounds over vertices referenced by at least one triangle.
Aabb compute_bbox(const TriMesh& mesh);

/// Translates the mesh so its bbox center coincides with the domain box
/// center. Sub-ulp shifts snap to zero, making the op an exact identity on
/// already-centered meshes. Throws "domain overflow" naming the axis when
/// the mesh does not fit.
TriMesh center_in_domain(const TriMesh& mesh, const DomainSpec& domain);

/// True when every edge is shared by exactly two triangles (closed 2-manifold).
bool is_closed_manifold(const TriMesh& mesh);

/// V - E + F over unique undirected edges.
long euler_characteristic(const TriMesh& mesh);

}  // namespace aero
