#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "nullsurf/scene.hpp"

namespace nullsurf {

// Built-in scenes with known closed-form surfaces. scene_json is the canonical
// scene text; the files under scenes/ mirror it byte for byte.
struct Preset {
    std::string name;
    std::string description;
    std::string scene_json;
    // Closed-form surface components in s and t, used as an independent check
    // of the frame-based construction.
    std::array<std::string, 3> oracle;
    // Whether `verify` is expected to succeed on this preset.
    bool expected_pass = true;
};

const std::vector<Preset>& presets();

// nullptr when no preset has that name.
const Preset* find_preset(std::string_view name);

Scene preset_scene(const Preset& p);

std::array<ExprPtr, 3> preset_oracle(const Preset& p);

}  // namespace nullsurf
