#pragma once

// Recurrent state-space world model.
//
//   h_t = GRU(h_{t-1}, proj(s_{t-1}))          deterministic path
//   p(s_t | h_t)         = N(prior_mean, prior_std²)
//   q(s_t | h_t, e_t)    = N(post_mean, post_std²),  e_t = encode(o_t)
//   p(o_t | h_t, s_t)    = N(decode(h_t, s_t), I)
//
// Images enter the graph as [N, 3, H, W]. Batched sequences are laid out
// time-major: row t·B + b holds frame t of sequence b.

#include <array>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "supportlab/autograd.hpp"
#include "supportlab/frame.hpp"
#include "supportlab/rng.hpp"
#include "supportlab/tensor.hpp"

namespace supportlab {

struct ModelConfig {
    int image_size = 64;    // H = W, power of two, ≥ 4
    int state_size = 200;   // d_h
    int latent_size = 20;   // d_s
    int hidden_size = 200;  // width of the belief heads
    // Encoder widths after the stem conv, the first 1×1 conv and the second
    // 1×1 conv; the decoder mirrors them.
    std::array<int, 3> channels{16, 32, 64};
    int res_blocks = 2;  // residual blocks per stage
    double min_stddev = 1e-3;
    double leaky_slope = 0.01;
    std::uint64_t seed = 0;

    // Throws ConfigError naming the offending field.
    void validate() const;
    // Average-pool stages in the encoder (and ×2 upsamples in the decoder
    // besides the final one): log2(image_size) − 2. Paper scale (64) has 4.
    int pool_stages() const;
    // Encoder output: channels[2] × 2 × 2.
    int embedding_size() const { return channels[2] * 4; }

    bool operator==(const ModelConfig&) const = default;
};

std::string to_json(const ModelConfig& cfg);
ModelConfig model_config_from_json(std::string_view json);

// Named trainable tensors in a fixed insertion order. The order is part of
// the checkpoint format and of gradient-audit sampling.
class Parameters {
public:
    void add(std::string name, Tensor value);
    std::size_t count() const { return tensors_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    Tensor& tensor(std::size_t i) { return tensors_.at(i); }
    const Tensor& tensor(std::size_t i) const { return tensors_.at(i); }
    Tensor& at(std::string_view name);
    const Tensor& at(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;
    std::size_t scalar_count() const;
    // Same names and shapes, all zeros.
    Parameters zeros_like() const;
    bool same_layout(const Parameters& other) const;
    bool operator==(const Parameters& other) const;

private:
    std::vector<std::string> names_;
    std::vector<Tensor> tensors_;
    std::unordered_map<std::string, std::size_t> index_;
};

using Gradients = Parameters;

// Diagonal Gaussian belief over s_t.
struct GaussianBelief {
    std::vector<double> mean;
    std::vector<double> stddev;
    bool operator==(const GaussianBelief&) const = default;
};

struct LatentState {
    std::vector<double> h;
    std::vector<double> s;
};

struct StepOutput {
    std::vector<double> h;
    GaussianBelief prior;
    std::optional<GaussianBelief> posterior;  // absent during open-loop steps
    std::vector<double> s;
    Frame reconstruction;
};

struct ElboResult {
    double loss = 0.0;
    std::vector<double> reconstruction;  // −ln p(o_t | h_t, s_t) per frame, constants included
    std::vector<double> kl;              // KL(q_t || p_t) per frame
};

// Closed-form KL(q || p) between diagonal Gaussians, summed over dimensions.
double kl_divergence(const GaussianBelief& q, const GaussianBelief& p);

// s = mean + stddev ⊙ noise
std::vector<double> sample_latent(const GaussianBelief& belief, std::span<const double> noise);

// Frames -> [N, 3, H, W] tensor, in order.
Tensor frames_to_tensor(std::span<const Frame> frames);
Frame tensor_row_to_frame(const Tensor& images, int row);

class WorldModel {
public:
    // Fresh parameters drawn from config.seed.
    explicit WorldModel(ModelConfig config);
    // Adopt existing parameters; throws ConfigError on any layout mismatch.
    WorldModel(ModelConfig config, Parameters params);

    const ModelConfig& config() const { return config_; }
    const Parameters& parameters() const { return params_; }
    Parameters& parameters() { return params_; }

    // ---- single-item evaluation ----
    std::vector<double> encode(const Frame& frame) const;
    std::vector<double> deterministic_step(std::span<const double> h_prev, std::span<const double> s_prev) const;
    // Reset and update gate activations of the GRU for the given inputs.
    std::pair<std::vector<double>, std::vector<double>> gate_values(std::span<const double> h_prev,
                                                                    std::span<const double> s_prev) const;
    GaussianBelief prior_belief(std::span<const double> h) const;
    GaussianBelief posterior_belief(std::span<const double> h, std::span<const double> embedding) const;
    // Decoded mean, clamped to [0, 1].
    Frame decode(std::span<const double> h, std::span<const double> s) const;

    // Posterior filtering over the whole sequence, one sample per step.
    std::vector<StepOutput> filter_sequence(std::span<const Frame> frames, std::uint64_t noise_seed) const;
    ElboResult elbo_loss(std::span<const Frame> frames, std::uint64_t noise_seed) const;
    // Filter on `context`, then `horizon` prior-only steps. Returns the
    // predicted frames for steps k+1 .. k+horizon.
    std::vector<Frame> open_loop_rollout(std::span<const Frame> context, int horizon,
                                         std::uint64_t noise_seed) const;

    // ---- graph API used by training ----
    struct Bound {
        std::vector<ag::Var> vars;
        const Parameters* params = nullptr;
        ag::Var operator()(std::string_view name) const { return vars[params->index_of(name)]; }
    };
    Bound bind(ag::Graph& g) const;

    ag::Var encode_graph(const Bound& p, ag::Var images) const;
    ag::Var step_graph(const Bound& p, ag::Var h_prev, ag::Var s_prev) const;
    std::pair<ag::Var, ag::Var> prior_graph(const Bound& p, ag::Var h) const;
    std::pair<ag::Var, ag::Var> posterior_graph(const Bound& p, ag::Var h, ag::Var embedding) const;
    ag::Var decode_graph(const Bound& p, ag::Var h, ag::Var s) const;

    struct BatchElbo {
        ag::Var loss;                // mean per-sequence reconstruction + kl_weight · KL
        double elbo = 0.0;           // mean per-sequence negative ELBO (KL weight 1)
        Tensor reconstruction;       // [T, B] per-frame −ln p(o_t | ·)
        Tensor kl;                   // [T, B] per-frame KL
        std::vector<GaussianBelief> priors;      // t-major, T·B entries (filled when requested)
        std::vector<GaussianBelief> posteriors;  // t-major, T·B entries (filled when requested)
    };
    // images: [T·B, 3, H, W] time-major. One noise seed per sequence; the
    // noise for sequence b is drawn step by step from Rng(noise_seeds[b]),
    // so the batch result matches per-sequence elbo_loss().
    BatchElbo elbo_graph(ag::Graph& g, const Bound& p, const Tensor& images, int steps, int batch,
                         std::span<const std::uint64_t> noise_seeds, bool keep_beliefs = false,
                         double kl_weight = 1.0) const;

private:
    void init_parameters();
    void check_frame(const Frame& f) const;
    ag::Var residual(const Bound& p, const std::string& prefix, ag::Var x) const;

    ModelConfig config_;
    Parameters params_;
};

}  // namespace supportlab
