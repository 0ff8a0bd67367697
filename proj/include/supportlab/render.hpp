#pragma once

// Flat-shaded perspective software rasterizer for the two-block room.

#include <vector>

#include "supportlab/frame.hpp"
#include "supportlab/kinematics.hpp"
#include "supportlab/scene.hpp"

namespace supportlab {

// The camera orbits `target` at `distance`, raised by `elevation`, and
// rotated about +y by the scene's camera_azimuth. Azimuth 0 looks along −z.
struct RenderConfig {
    Vec3 target{0.0, 0.9, 0.0};
    double distance = 4.2;
    double elevation = degrees(20);
    double fov_y = degrees(45);
    double near_plane = 0.05;
    double floor_gray = 0.45;
    double wall_gray = 0.7;
    double wall_z = -3.0;    // back wall plane; the clear colour is wall_gray
    Vec3 light{0.4, 0.8, 0.5};  // direction towards the light (normalized on use)
    double ambient = 0.35;

    bool operator==(const RenderConfig&) const = default;
};

struct VideoSequence {
    std::vector<Frame> frames;
    SceneSpec scene;
    StabilityOutcome label;
};

// Pixel values lie on the 8-bit grid (see quantize_unit).
Frame render_frame(const SceneSpec& scene, const Pose& upper_pose, int height, int width,
                   const RenderConfig& config = {});
// Floor and wall only, same camera.
Frame render_room(const SceneSpec& scene, int height, int width, const RenderConfig& config = {});

VideoSequence render_sequence(const SceneSpec& scene, int frames, int height, int width,
                              const KinematicsConfig& kinematics = {}, const RenderConfig& config = {});
// As render_sequence but with the motion of `forced` instead of the oracle's.
VideoSequence render_counterfactual(const SceneSpec& scene, const StabilityOutcome& forced, int frames, int height,
                                    int width, const KinematicsConfig& kinematics = {},
                                    const RenderConfig& config = {});

}  // namespace supportlab
