#pragma once

#include <cstdint>
#include <vector>

namespace supportlab {

// H×W RGB image, channels interleaved (row-major, then x, then channel).
// Values are in [0, 1]. The renderer emits values on the 8-bit grid k/255,
// so a frame survives corpus storage bit-exactly.
struct Frame {
    int height = 0;
    int width = 0;
    std::vector<double> rgb;

    Frame() = default;
    Frame(int h, int w, double fill = 0.0)
        : height(h), width(w), rgb(static_cast<std::size_t>(h) * w * 3, fill) {}

    double& at(int y, int x, int c) { return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    double at(int y, int x, int c) const {
        return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    bool operator==(const Frame&) const = default;
};

// 8-bit <-> [0, 1] conversion: v / 255 on load, round(255 x) on store.
std::vector<std::uint8_t> to_bytes(const Frame& f);
Frame from_bytes(int height, int width, const std::uint8_t* bytes);
double quantize_unit(double v);

}  // namespace supportlab
