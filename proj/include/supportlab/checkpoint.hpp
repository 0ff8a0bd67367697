#pragma once

// Checkpoint file, little-endian:
//   char[8] "SLCKPT\0\1"
//   u32 epoch
//   u32 config json length, config json bytes (model config)
//   f64 train_loss, f64 val_loss, f64 lr
//   u64 optimizer step, f64 beta1, f64 beta2, f64 epsilon
//   u32 block count, then per block:
//     u32 name length, name bytes, u32 rank, rank × i32 dims,
//     value[n] f64, first moment[n] f64, second moment[n] f64

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "supportlab/model.hpp"

namespace supportlab {

struct OptimizerState {
    Parameters first_moment;
    Parameters second_moment;
    std::uint64_t step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static OptimizerState for_parameters(const Parameters& params);
    bool operator==(const OptimizerState&) const = default;
};

struct Checkpoint {
    int epoch = 0;
    ModelConfig config;
    Parameters params;
    OptimizerState optimizer;
    double train_loss = 0.0;
    double val_loss = 0.0;
    double lr = 0.0;
};

// Atomic write (temporary sibling, then rename).
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// "epoch_0007.ckpt"
std::string checkpoint_name(int epoch);
// Checkpoint files in `dir` sorted by epoch.
std::vector<std::filesystem::path> list_checkpoints(const std::filesystem::path& dir);

}  // namespace supportlab
