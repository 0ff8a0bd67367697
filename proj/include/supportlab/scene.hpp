#pragma once

// Two-block support scenes: parameterization, random sampling and the
// centre-of-mass stability test.
//
// World frame: y up, floor at y = 0. The lower block stands on the floor
// with its bottom-face centre at the origin. Block-local frames have their
// origin at the bottom-face centre; yaw rotates about +y.

#include <array>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "supportlab/geometry.hpp"

namespace supportlab {

enum class BlockShape { Cube, LShape };

// L profile in the block's local x–y plane, extruded along z. The horizontal
// arm (length a, thickness t) is the bottom face; the vertical arm (height
// b, width t) rises at the +x end when heavy_side = +1, at the −x end for −1.
struct LShapeArms {
    double a = 1.0;
    double b = 1.0;
    double t = 0.25;
    int heavy_side = 1;
    bool operator==(const LShapeArms&) const = default;
};

struct BlockSpec {
    BlockShape shape = BlockShape::Cube;
    LShapeArms arms;        // LShape only
    Vec3 extent{1, 1, 1};   // edge lengths; for LShape (a, b, depth)
    std::array<double, 3> color{0.5, 0.5, 0.5};
    double yaw = 0.0;

    // Throws ConfigError mentioning `which`.
    void validate(const std::string& which) const;

    struct Box {
        Vec3 lo, hi;
    };
    // Solid pieces in the local frame: one box for a cube, two for an L.
    std::vector<Box> boxes() const;
    double volume() const;
    Vec3 local_center_of_mass() const;
    // Bottom face in the local x–z plane, counter-clockwise.
    Polygon local_footprint() const;

    bool operator==(const BlockSpec&) const = default;
};

struct SceneSpec {
    BlockSpec lower;
    BlockSpec upper;
    Vec2 upper_offset;          // (x, z) of the upper bottom-face centre relative to the lower top-face centre
    double upper_height = 0.0;  // gap between lower top face and upper bottom face
    double camera_azimuth = 0.0;
    std::uint64_t rng_seed = 0;

    // upper_height may be negative only for side placement, where the two
    // footprints do not overlap.
    void validate() const;

    Pose lower_pose() const;
    Pose upper_rest_pose() const;
    double lower_top() const { return lower.extent.y; }

    bool operator==(const SceneSpec&) const = default;
};

struct StabilityOutcome {
    enum class Kind { Stable, TipOverEdge, FreeDrop };
    Kind kind = Kind::Stable;
    int edge = -1;  // index into support_polygon() for TipOverEdge

    static StabilityOutcome stable() { return {Kind::Stable, -1}; }
    static StabilityOutcome free_drop() { return {Kind::FreeDrop, -1}; }
    static StabilityOutcome tip(int edge) { return {Kind::TipOverEdge, edge}; }
    bool falls() const { return kind != Kind::Stable; }
    bool operator==(const StabilityOutcome&) const = default;
};

std::string to_string(StabilityOutcome::Kind kind);
StabilityOutcome::Kind outcome_kind_from_string(std::string_view s);

struct Range {
    double min = 0.0;
    double max = 0.0;
    bool operator==(const Range&) const = default;
};

constexpr double degrees(double d) { return d * std::numbers::pi / 180.0; }

// Sampling ranges for training scenes.
struct GenerationConfig {
    Range lower_size{0.8, 1.6};
    double upper_cube_size = 0.8;
    // Colours are drawn in HSV and converted to RGB.
    Range hue{0.0, 1.0};
    Range saturation{0.6, 1.0};
    Range value{0.7, 1.0};
    Range lower_yaw{degrees(-15), degrees(15)};
    Range upper_yaw{degrees(-15), degrees(15)};
    // x offset as a fraction of (lower half-width + upper half-width).
    Range offset_fraction{-0.9, 0.9};
    // z offset as a fraction of the lower half-width.
    Range depth_offset_fraction{-0.15, 0.15};
    Range camera_azimuth{degrees(-20), degrees(20)};
    Range l_arm_a{0.8, 1.1};
    Range l_arm_b{0.8, 1.2};
    Range l_thickness{0.22, 0.32};
    double l_depth = 0.7;
    double lshape_probability = 0.5;

    void validate() const;
    bool operator==(const GenerationConfig&) const = default;
};

SceneSpec sample_scene(std::uint64_t seed, const GenerationConfig& config);

// World-frame support region: upper bottom face ∩ lower top face, CCW in
// (x, z). Empty (or zero-area) when the faces do not overlap.
Polygon support_polygon(const SceneSpec& scene);
// Centre of mass of the upper block at rest, world frame.
Vec3 upper_center_of_mass(const SceneSpec& scene);

StabilityOutcome stability_oracle(const SceneSpec& scene);

std::array<double, 3> hsv_to_rgb(double h, double s, double v);

// Fixed key order; see README for the field list.
std::string to_json(const SceneSpec& scene);
SceneSpec scene_from_json(std::string_view json);
std::string to_json(const GenerationConfig& cfg);
GenerationConfig generation_config_from_json(std::string_view json);

}  // namespace supportlab
