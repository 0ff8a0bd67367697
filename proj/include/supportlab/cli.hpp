#pragma once

// Command-line driver: gen, train, probe, analyze, report.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "supportlab/dataset.hpp"
#include "supportlab/kinematics.hpp"
#include "supportlab/model.hpp"
#include "supportlab/probes.hpp"
#include "supportlab/render.hpp"
#include "supportlab/scene.hpp"
#include "supportlab/trainer.hpp"

namespace supportlab {

inline constexpr const char* kToolVersion = "supportlab 1.0.0";

// Everything a run depends on. Loaded from a JSON file with the sections
// below (all optional, missing keys keep their defaults), then overridden by
// command-line flags.
struct PipelineConfig {
    // "corpus"
    std::uint64_t count = 100000;
    std::uint64_t corpus_seed = 0;
    int frames = 20;
    int size = 64;
    // "split"
    std::uint64_t validation_count = 1000;
    std::uint64_t split_seed = 0;
    // remaining sections
    GenerationConfig generation;
    KinematicsConfig kinematics;
    RenderConfig render;
    ModelConfig model;
    TrainConfig train;
    ProbeConfig probe;
};

std::string to_json(const PipelineConfig& cfg);
PipelineConfig pipeline_config_from_json(std::string_view json);

// Written next to each command's outputs as <command>.manifest.json.
struct RunManifest {
    std::string command;
    std::string config_hash;  // FNV-1a 64 of the effective config JSON, hex
    std::map<std::string, std::uint64_t> seeds;
    std::string corpus;
    std::string checkpoint_dir;
    std::string output_dir;
    std::string tool_version = kToolVersion;
    std::string config_json;  // effective config

    std::string to_json() const;
};

std::string fnv1a_hex(std::string_view data);
// FNV-1a 64 of a file's bytes, hex.
std::string file_checksum(const std::filesystem::path& path);

// Returns the process exit status. Errors print one line to stderr:
// "error <category>: <message>".
int run_cli(int argc, const char* const* argv);
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace supportlab
