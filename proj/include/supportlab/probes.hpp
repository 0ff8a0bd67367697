#pragma once

// Violation-of-expectation probe pairs and KL surprise.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supportlab/model.hpp"
#include "supportlab/render.hpp"
#include "supportlab/scene.hpp"

namespace supportlab {

// In order of acquisition age.
enum class PhysicalRule { ContactOrNoContact, TypeOfContact, Overlap, Shape };
inline constexpr std::array<PhysicalRule, 4> kAllRules{PhysicalRule::ContactOrNoContact, PhysicalRule::TypeOfContact,
                                                      PhysicalRule::Overlap, PhysicalRule::Shape};

// "contact", "type_of_contact", "overlap", "shape"
std::string to_string(PhysicalRule rule);
PhysicalRule rule_from_string(std::string_view s);

// Inclusive 1-based frame range; last = 0 means the final frame.
struct FrameWindow {
    int first = 1;
    int last = 0;
    bool operator==(const FrameWindow&) const = default;
};
// "all", "skip3" (frames 4..T) or "a:b".
FrameWindow parse_window(std::string_view s);
std::string to_string(const FrameWindow& w);

// Versioned probe geometry. Variant 0 of each rule is the canonical scene;
// variants 1.. recolour the blocks and turn the camera by up to
// azimuth_jitter, drawn from Rng(variant_seed).split(rule).split(variant).
struct ProbeConfig {
    int version = 1;
    std::array<SceneSpec, 4> scenes = canonical_scenes();
    int variants = 1;
    std::uint64_t variant_seed = 0;
    double azimuth_jitter = degrees(15);
    FrameWindow window;
    std::uint64_t noise_seed = 0;

    static std::array<SceneSpec, 4> canonical_scenes();
    const SceneSpec& scene(PhysicalRule r) const { return scenes[static_cast<std::size_t>(r)]; }
    bool operator==(const ProbeConfig&) const = default;
};

std::string to_json(const ProbeConfig& cfg);
ProbeConfig probe_config_from_json(std::string_view json);

struct ProbePair {
    PhysicalRule rule = PhysicalRule::ContactOrNoContact;
    int variant = 0;
    SceneSpec scene;
    VideoSequence expected;  // oracle outcome
    VideoSequence violated;  // forced Stable
};

SceneSpec probe_scene(PhysicalRule rule, const ProbeConfig& cfg, int variant);

// Throws ConfigError when the scene's oracle outcome is Stable (the two
// members would be identical).
ProbePair build_probe_pair(PhysicalRule rule, const ProbeConfig& cfg, int frames, int size, int variant = 0,
                           const KinematicsConfig& kinematics = {}, const RenderConfig& render = {});
// All rules × variants, rule-major.
std::vector<ProbePair> build_probe_pairs(const ProbeConfig& cfg, int frames, int size,
                                         const KinematicsConfig& kinematics = {}, const RenderConfig& render = {});

struct SurpriseTrace {
    std::vector<double> kl;  // nats, one per frame
    int epoch = 0;
    std::string sequence_id;
};

// trace[t] = KL(posterior_t || prior_t) along the filtered sequence.
SurpriseTrace surprise(const WorldModel& model, std::span<const Frame> frames, std::uint64_t noise_seed);
// Several sequences of equal length in one batched pass; same values as
// calling surprise() on each.
std::vector<std::vector<double>> surprise_batch(const WorldModel& model,
                                                const std::vector<std::span<const Frame>>& sequences,
                                                std::uint64_t noise_seed);

struct SurpriseRecord {
    PhysicalRule rule = PhysicalRule::ContactOrNoContact;
    int epoch = 0;
    double kl_expected = 0.0;
    double kl_violated = 0.0;
    double difference = 0.0;  // violated − expected
};

double window_sum(std::span<const double> trace, const FrameWindow& window);

SurpriseRecord surprise_difference(const WorldModel& model, int epoch, const ProbePair& pair,
                                   const FrameWindow& window, std::uint64_t noise_seed);

// One record per (epoch, rule), epoch-major in checkpoint order; with
// several variants per rule the sums are averaged over variants.
std::vector<SurpriseRecord> probe_models(const std::vector<std::pair<int, WorldModel>>& models,
                                         const std::vector<ProbePair>& pairs, const FrameWindow& window,
                                         std::uint64_t noise_seed);
std::vector<SurpriseRecord> probe_all(const std::vector<std::filesystem::path>& checkpoints,
                                      const std::vector<ProbePair>& pairs, const FrameWindow& window,
                                      std::uint64_t noise_seed);

// CSV with header rule,epoch,kl_expected,kl_violated,difference.
std::string surprise_csv(const std::vector<SurpriseRecord>& records);
std::vector<SurpriseRecord> parse_surprise_csv(std::string_view text);

// Mean absolute pixel difference between two equally long frame lists.
double mean_pixel_error(std::span<const Frame> a, std::span<const Frame> b);

struct RolloutComparison {
    std::vector<Frame> prediction;  // frames k+1 .. T
    double error_to_expected = 0.0;
    double error_to_violated = 0.0;
};
// Open-loop rollout from the first `context` frames of the violated member,
// compared with both members over the predicted frames.
RolloutComparison compare_rollout(const WorldModel& model, const ProbePair& pair, int context,
                                  std::uint64_t noise_seed);

}  // namespace supportlab
