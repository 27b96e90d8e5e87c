#pragma once

#include <cstdint>
#include <vector>

namespace ripeline {

// 8-bit sRGB raster, interleaved row-major triples.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // width * height * 3

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::size_t idx(int x, int y) const {
        return (static_cast<std::size_t>(y) * width + x) * 3;
    }
    std::uint8_t* px(int x, int y) { return data.data() + idx(x, y); }
    const std::uint8_t* px(int x, int y) const { return data.data() + idx(x, y); }

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        auto* p = px(x, y);
        p[0] = r;
        p[1] = g;
        p[2] = b;
    }

    bool operator==(const RgbImage&) const = default;
};

// CIELAB raster (D65, 2 degree observer), planar doubles. L in [0,100],
// a and b clamped to [-128,127].
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<double> L, a, b;

    LabImage() = default;
    LabImage(int w, int h)
        : width(w),
          height(h),
          L(static_cast<std::size_t>(w) * h, 0.0),
          a(static_cast<std::size_t>(w) * h, 0.0),
          b(static_cast<std::size_t>(w) * h, 0.0) {}

    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

// sRGB -> linear RGB (D65) -> XYZ -> CIELAB, per pixel.
LabImage rgb_to_lab(const RgbImage& img);

// Single-pixel conversion used by the raster routine and by callers that
// only need one color.
void srgb_pixel_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b,
                       double& L, double& a, double& bb);

// Euclidean norm over (L,a,b) of central differences in x and y.
// Border pixels use clamped neighbors. Throws CoordinateError out of bounds.
double gradient_magnitude(const LabImage& img, int x, int y);

// Bilinear resize; an identity-size call copies the input exactly.
RgbImage resize_bilinear(const RgbImage& img, int out_w, int out_h);

// Crop [x0,x1] x [y0,y1] (inclusive, clamped by caller).
RgbImage crop(const RgbImage& img, int x0, int y0, int x1, int y1);

}  // namespace ripeline
