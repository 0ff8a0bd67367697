#pragma once

// Minimal raster canvas for report figures, written as binary PPM.

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "supportlab/frame.hpp"

namespace supportlab {

using Rgb = std::array<std::uint8_t, 3>;

class Canvas {
public:
    Canvas(int width, int height, Rgb background = {255, 255, 255});

    int width() const { return width_; }
    int height() const { return height_; }
    Rgb pixel(int x, int y) const;

    void set(int x, int y, Rgb c);
    void fill_rect(int x0, int y0, int x1, int y1, Rgb c);  // inclusive
    void rect_outline(int x0, int y0, int x1, int y1, Rgb c);
    void line(double x0, double y0, double x1, double y1, Rgb c, int thickness = 1);
    void marker(double x, double y, int radius, Rgb c);
    // Frame pasted 1:1 with its top-left corner at (x, y), 8-bit quantized.
    void blit(const Frame& f, int x, int y);

    void write_ppm(const std::filesystem::path& path) const;

private:
    int width_, height_;
    std::vector<std::uint8_t> rgb_;
};

// Maps a data rectangle onto a pixel rectangle (y grows upwards in data).
struct PlotArea {
    int left, top, right, bottom;
    double x_min, x_max, y_min, y_max;

    double px(double x) const;
    double py(double y) const;
};

// Axes box, zero line and a light grid.
void draw_axes(Canvas& c, const PlotArea& a);
// Shaded band between lower(x) and upper(x), sampled at xs.
void draw_band(Canvas& c, const PlotArea& a, const std::vector<double>& xs, const std::vector<double>& lower,
               const std::vector<double>& upper, Rgb color);
void draw_polyline(Canvas& c, const PlotArea& a, const std::vector<double>& xs, const std::vector<double>& ys,
                   Rgb color, int thickness = 1);

}  // namespace supportlab
