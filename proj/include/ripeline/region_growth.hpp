#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ripeline/image.hpp"
#include "ripeline/slic.hpp"

namespace ripeline {

// Per-superpixel summary plus the adjacency produced by 4-neighbor scans.
struct GraphNode {
    double mean_l = 0, mean_a = 0, mean_b = 0;
    double centroid_x = 0, centroid_y = 0;
    std::int64_t pixel_count = 0;
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

struct SuperpixelGraph {
    std::vector<GraphNode> nodes;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // a < b, sorted
    std::vector<std::vector<std::int32_t>> neighbors;          // sorted per node
};

struct Region {
    std::vector<std::int32_t> members;  // superpixel ids, in absorption order
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double mean_l = 0, mean_a = 0, mean_b = 0;
    std::int64_t pixel_count = 0;
};

enum class SeedOrder { redness, size, raster };

struct GrowthConfig {
    double similarity_threshold = 12.0;  // tau, Delta-E units
    std::int64_t min_region_pixels = 64;
    SeedOrder seed_order = SeedOrder::redness;
};

SeedOrder seed_order_from_name(const std::string& name);
const char* seed_order_name(SeedOrder order);

// Exact adjacency and per-superpixel means from the label map.
// Throws InputError when labels and image dimensions differ.
SuperpixelGraph build_graph(const SuperpixelLabels& labels, const LabImage& img);

// Euclidean Lab distance (Delta-E 76).
double delta_e(double l1, double a1, double b1, double l2, double a2, double b2);

// Breadth-first growth from seeds. A neighbor joins when its Delta-E to the
// running region mean is within the threshold; the mean is pixel-weighted
// and updated after every absorption. Regions below min_region_pixels are
// discarded (their superpixels stay consumed). Disjoint by construction.
std::vector<Region> grow_regions(const SuperpixelGraph& graph, const GrowthConfig& cfg);

// Crop the region's bbox padded by 5% per side (clamped to the image) and
// resize to out_size x out_size.
RgbImage region_to_thumbnail(const RgbImage& img, const Region& region, int out_size);

}  // namespace ripeline
