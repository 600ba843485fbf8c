#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nullsurf/surface.hpp"

namespace nullsurf {

struct ObjCounts {
    int surface_vertices = 0;
    int curve_vertices = 0;
    int faces = 0;
};

// Writes the sampled surface grid plus the base curve as a Wavefront OBJ.
// Vertices are emitted in s-major order, one quad face per grid cell, then the
// curve as a polyline object. Output is byte-deterministic for a given member.
// The write is atomic: the target appears only after a complete write.
ObjCounts export_obj(const SurfaceFamilyMember& mem, const std::string& path);

// One row per sample, fixed column set, full-precision values. Returns the
// number of data rows written.
std::size_t export_csv(const std::vector<ResidualSample>& samples, const std::string& path);

}  // namespace nullsurf
