#pragma once

// Single-file corpus of rendered sequences.
//
// Byte layout (all integers little-endian):
//   header   64 bytes
//     0   char[8]  magic "SLCORPUS"
//     8   u32      format version (1)
//     12  u32      T
//     16  u32      H
//     20  u32      W
//     24  u32      channels (3)
//     28  u32      dtype tag (1 = uint8, linear intensity)
//     32  u64      record count N
//     40  u64      master seed
//     48  u64      byte offset of the index table
//     56  u64      reserved (0)
//   records, each
//     u64 index, u8 outcome kind, i32 tip edge, u32 json length,
//     json bytes (scene), T·H·W·3 frame bytes (frame-major, then HWC)
//   index    N × (u64 record offset, u64 record length)

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "supportlab/render.hpp"
#include "supportlab/scene.hpp"
#include "supportlab/tensor.hpp"

namespace supportlab {

struct CorpusHeader {
    std::uint32_t version = 1;
    std::uint32_t frames = 0;
    std::uint32_t height = 0;
    std::uint32_t width = 0;
    std::uint32_t channels = 3;
    std::uint32_t dtype = 1;
    std::uint64_t count = 0;
    std::uint64_t master_seed = 0;

    bool operator==(const CorpusHeader&) const = default;
};

struct SequenceRecord {
    std::uint64_t index = 0;
    SceneSpec scene;
    StabilityOutcome label;
    std::vector<std::uint8_t> bytes;  // T·H·W·3

    // Frames decoded with v / 255.
    std::vector<Frame> frames(const CorpusHeader& h) const;
};

struct CorpusOptions {
    std::uint64_t count = 1;
    std::uint64_t master_seed = 0;
    int frames = 20;
    int size = 64;  // H = W
    GenerationConfig generation;
    KinematicsConfig kinematics;
    RenderConfig render;
    int threads = 0;  // 0 = hardware concurrency; output does not depend on it
};

// Seed of record i: Rng(master_seed).split(i).next_u64().
std::uint64_t record_seed(std::uint64_t master_seed, std::uint64_t index);

// Writes to `path` via a temporary sibling that is renamed on success and
// removed on failure.
void generate_corpus(const std::filesystem::path& path, const CorpusOptions& options);

// Read-only handle. Record reads are positional and safe to issue from
// several threads at once.
class Corpus {
public:
    explicit Corpus(const std::filesystem::path& path);
    ~Corpus();
    Corpus(const Corpus&) = delete;
    Corpus& operator=(const Corpus&) = delete;

    const CorpusHeader& header() const { return header_; }
    std::uint64_t size() const { return header_.count; }
    const std::filesystem::path& path() const { return path_; }

    SequenceRecord record(std::uint64_t index) const;
    // Frame bytes of one record written into `out` (T·H·W·3 bytes).
    void read_frames(std::uint64_t index, std::span<std::uint8_t> out) const;

private:
    std::filesystem::path path_;
    int fd_ = -1;
    CorpusHeader header_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint64_t> lengths_;
};

struct SplitSpec {
    std::vector<std::uint64_t> train;
    std::vector<std::uint64_t> validation;
    std::uint64_t seed = 0;
    bool operator==(const SplitSpec&) const = default;
};

// Seeded permutation of [0, n): the first `train` entries go to training,
// the next `validation` to validation. Each list is returned sorted.
SplitSpec split(std::uint64_t n, std::uint64_t train, std::uint64_t validation, std::uint64_t seed);
// Validation gets round(n · validation_fraction) items, training the rest.
SplitSpec split_fraction(std::uint64_t n, double validation_fraction, std::uint64_t seed);

// Canonical batch layout [B, T, H, W, 3], values v / 255.
Tensor load_batch(const Corpus& corpus, std::span<const std::uint64_t> indices);
// Model layout [T·B, 3, H, W], time-major (row t·B + b).
Tensor load_batch_time_major(const Corpus& corpus, std::span<const std::uint64_t> indices);
// [B, T, H, W, 3] -> [T·B, 3, H, W].
Tensor to_time_major(const Tensor& batch);

}  // namespace supportlab
