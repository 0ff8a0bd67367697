#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "supportlab/checkpoint.hpp"
#include "supportlab/dataset.hpp"
#include "supportlab/model.hpp"

namespace supportlab {

struct TrainConfig {
    int epochs = 200;
    int batch_size = 32;
    double learning_rate = 1e-3;
    double decay_factor = 10.0;
    int decay_interval = 50;  // epochs per decay step
    std::uint64_t shuffle_seed = 0;
    std::uint64_t noise_seed = 1;
    std::uint64_t validation_noise_seed = 2;
    double clip_norm = 100.0;  // global gradient norm; <= 0 disables clipping
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    bool save_initial = false;  // also write epoch_0000.ckpt before any update
    int kl_warmup_epochs = 0;   // KL weight ramps linearly from 0 over this many epochs
    std::filesystem::path checkpoint_dir;

    void validate(std::size_t train_size) const;
    bool operator==(const TrainConfig&) const = default;
};

std::string to_json(const TrainConfig& cfg);
TrainConfig train_config_from_json(std::string_view json);

// base / decay_factor^floor(epoch / decay_interval); epoch counts from 0.
double lr_schedule(int epoch, const TrainConfig& cfg);

// min(1, epoch / kl_warmup_epochs), or 1 without warm-up; epoch counts from 0.
double kl_weight_schedule(int epoch, const TrainConfig& cfg);

// One Adam update with bias correction. Throws NumericalError naming the
// first parameter block whose gradient is not finite; nothing is modified
// in that case.
void adam_step(Parameters& params, const Gradients& grads, OptimizerState& state, double rate);

// Scales `grads` in place so their global L2 norm is at most max_norm.
// Returns the norm before scaling.
double clip_gradients(Gradients& grads, double max_norm);

// ln p constant of the unit-variance likelihood for one sequence:
// frames · 3·H·W · ½ ln 2π.
double likelihood_constant(const ModelConfig& cfg, int frames);

// Batch gradient of the mean per-sequence negative ELBO with the KL term
// scaled by kl_weight. `loss` is always the unweighted ELBO.
struct BatchGradient {
    double loss = 0.0;
    Gradients grads;
};
BatchGradient batch_gradient(const WorldModel& model, const Tensor& images, int steps, int batch,
                             std::span<const std::uint64_t> noise_seeds, double kl_weight = 1.0);

// Mean per-sequence loss over `indices` with the likelihood constant removed,
// noise for item i drawn from record_seed(noise_seed, i).
double evaluate_loss(const WorldModel& model, const Corpus& corpus, std::span<const std::uint64_t> indices,
                     int batch_size, std::uint64_t noise_seed);

struct EpochMetrics {
    int epoch = 0;
    double train_loss = 0.0;  // likelihood constant removed
    double val_loss = 0.0;    // likelihood constant removed
    double lr = 0.0;
};

struct TrainResult {
    std::vector<EpochMetrics> history;
    std::vector<std::filesystem::path> checkpoints;  // written by this call
};

using TrainProgress = std::function<void(const EpochMetrics&)>;

// Sequential training. Each epoch shuffles the training indices with
// Rng(shuffle_seed).split(epoch), drops the last partial batch, and writes
// epoch_####.ckpt plus metrics.csv (epoch,train_loss,val_loss,lr) to
// checkpoint_dir. With `resume`, training continues after that
// checkpoint's epoch and the result is bit-identical to an uninterrupted run.
TrainResult train(const Corpus& corpus, const SplitSpec& split, const ModelConfig& model_config,
                  const TrainConfig& config, const std::optional<std::filesystem::path>& resume = std::nullopt,
                  const TrainProgress& progress = {});

// Central-difference audit of the ELBO gradient on `images` ([T·B, 3, H, W]).
struct AuditResult {
    double max_relative_error = 0.0;
    std::size_t coordinates = 0;
    std::size_t blocks_covered = 0;
    std::size_t skipped_kinks = 0;  // perturbations that crossed an activation kink
    std::string worst_block;
};
// Samples at least `per_block` coordinates from every parameter block
// (all of a block if it is smaller) and at least `min_total` overall.
// Relative error is |a − n| / max(|a|, |n|, floor). Coordinates whose ±ε
// perturbation changes the sign of any leaky-ReLU input are skipped and
// replaced, since the loss is not differentiable inside that interval.
AuditResult finite_difference_audit(const WorldModel& model, const Tensor& images, int steps, int batch,
                                    std::span<const std::uint64_t> noise_seeds, double epsilon,
                                    std::uint64_t sample_seed, std::size_t min_total = 200,
                                    std::size_t per_block = 4, double floor = 1e-6);

}  // namespace supportlab
