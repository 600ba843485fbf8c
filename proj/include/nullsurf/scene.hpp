#pragma once

#include <string>

#include "nullsurf/surface.hpp"

// Scene files are JSON, schema_version 1. The schema is strict: unknown keys
// are rejected with a JSON-pointer path so typos cannot silently disable a
// setting.

namespace nullsurf {

struct Scene {
    SurfaceFamilyMember member;
    int samples = 256;
    Tolerances tol;
    std::string out_obj;
    std::string out_csv;
};

// Parses and validates scene text. `origin` names the source in error
// messages (a file path, or a tag like "<preset>").
Scene parse_scene(const std::string& text, const std::string& origin);

Scene load_scene(const std::string& path);

}  // namespace nullsurf
