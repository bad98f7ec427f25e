// Copyright Contributors to the AeroSurrogate Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "aero/geometry/trimesh.hpp"

#include <filesystem>

namespace aero {

/// Loads binary STL, ASCII STL, or OBJ (triangular faces only). STL vertices
/// are welded on exact coordinate equality. Zero-area triangles and triangles
/// with repeated indices are dropped when fix_degenerate is set, otherwise
/// loading fails.
TriMesh load_mesh(const std::filesystem::path& path, bool fix_degenerate = true);

/// Little-endian binary STL with recomputed facet normals.
void write_stl_binary(const TriMesh& mesh, const std::filesystem::path& path);

}  // namespace aero
