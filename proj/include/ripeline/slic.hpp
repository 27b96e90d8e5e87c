#pragma once

#include <cstdint>
#include <vector>

#include "ripeline/image.hpp"

namespace ripeline {

// One cluster center: Lab color plus continuous image coordinates.
struct ClusterCenter {
    double l = 0, a = 0, b = 0;
    double x = 0, y = 0;
};

// Per-pixel superpixel assignment. Labels are a partition of the raster,
// dense in [0, k).
struct SuperpixelLabels {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    int k = 0;

    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

struct SlicConfig {
    int k_target = 100;
    double compactness = 10.0;  // m
    int max_iters = 10;
    double residual_threshold = 1.0;
};

struct SlicResult {
    SuperpixelLabels labels;
    int iterations_run = 0;
    double final_residual = 0.0;
};

// Grid step S = round(sqrt(w*h/k_target)), never below 1. Used for the
// assignment window radius and the orphan absorption threshold.
int slic_grid_step(int width, int height, int k_target);

// Centers on a regular grid. The grid is nx * ny with nx chosen to balance
// the image aspect ratio, so the effective count can differ slightly from
// k_target. Throws ConfigError when k_target < 1 or exceeds the pixel count.
std::vector<ClusterCenter> init_centers(const LabImage& img, int k_target);

// Moves the center to the lowest-gradient pixel of its 3x3 neighborhood
// (ties by raster order: smallest y, then smallest x) and refreshes its
// color from that pixel.
ClusterCenter perturb_to_lowest_gradient(const ClusterCenter& center, const LabImage& img);

// Full segmentation: init, perturb, iterate window assignment with
//   D^2 = d_lab^2 + (d_xy / S)^2 * m^2
// until the summed center movement drops to the residual threshold or
// max_iters is hit, then enforce connectivity.
SlicResult slic_segment(const LabImage& img, const SlicConfig& cfg);

// Splits disconnected labels into their 4-connected components and absorbs
// components smaller than S^2/4 into their largest adjacent component.
// Output labels are dense in [0, k).
SuperpixelLabels enforce_connectivity(const SuperpixelLabels& in);

}  // namespace ripeline
