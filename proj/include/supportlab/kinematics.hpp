#pragma once

#include <vector>

#include "supportlab/scene.hpp"

namespace supportlab {

// Piecewise-analytic motion of the upper block. Frame i is sampled at
// time max(0, i − onset_frames) · frame_dt, so the first onset_frames + 1
// frames always show the initial configuration.
struct KinematicsConfig {
    double frame_dt = 1.0 / 15.0;
    int onset_frames = 2;
    double gravity = 9.81;
    double tip_angular_accel = 12.0;           // rad/s² while pivoting on the support edge
    double release_angle = std::numbers::pi / 4;  // pivot angle at which the block leaves the support

    void validate() const;
    bool operator==(const KinematicsConfig&) const = default;
};

// Per-frame pose of the upper block (local -> world).
//   Stable        constant rest pose
//   FreeDrop      vertical drop at g until the block lands, then rest
//   TipOverEdge   rotation about the named support edge at constant angular
//                 acceleration up to the release angle, then ballistic fall
//                 (rotation continuing at the release rate, capped at 90°)
//                 until floor contact, then rest lying at 90°.
// A dropping block lands on the lower block's top face when the footprints
// overlap, otherwise on the floor.
std::vector<Pose> simulate_kinematics(const SceneSpec& scene, const StabilityOutcome& outcome, int frames,
                                      const KinematicsConfig& config = {});

// Lowest world y over the block's vertices at `pose`.
double lowest_point(const BlockSpec& block, const Pose& pose);
// Rotation angle of `pose` relative to `reference` (radians, in [0, π]).
double relative_angle(const Pose& pose, const Pose& reference);

}  // namespace supportlab
