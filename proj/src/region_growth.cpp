#include "ripeline/region_growth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "ripeline/errors.hpp"

namespace ripeline {

SeedOrder seed_order_from_name(const std::string& name) {
    if (name == "redness") return SeedOrder::redness;
    if (name == "size") return SeedOrder::size;
    if (name == "raster") return SeedOrder::raster;
    throw ConfigError("unknown seed order: " + name);
}

const char* seed_order_name(SeedOrder order) {
    switch (order) {
        case SeedOrder::redness: return "redness";
        case SeedOrder::size: return "size";
        case SeedOrder::raster: return "raster";
    }
    return "?";
}

double delta_e(double l1, double a1, double b1, double l2, double a2, double b2) {
    const double dl = l1 - l2, da = a1 - a2, db = b1 - b2;
    return std::sqrt(dl * dl + da * da + db * db);
}

SuperpixelGraph build_graph(const SuperpixelLabels& labels, const LabImage& img) {
    if (labels.width != img.width || labels.height != img.height)
        throw InputError("build_graph: label map and image dimensions differ");
    const int w = labels.width, h = labels.height;

    SuperpixelGraph g;
    g.nodes.resize(labels.k);
    std::vector<double> sum_l(labels.k, 0.0), sum_a(labels.k, 0.0), sum_b(labels.k, 0.0);
    std::vector<double> sum_x(labels.k, 0.0), sum_y(labels.k, 0.0);
    std::vector<bool> seen(labels.k, false);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t at = labels.idx(x, y);
            const std::int32_t id = labels.labels[at];
            if (id < 0 || id >= labels.k)
                throw InputError("build_graph: label out of range");
            GraphNode& node = g.nodes[id];
            if (!seen[id]) {
                seen[id] = true;
                node.min_x = node.max_x = x;
                node.min_y = node.max_y = y;
            } else {
                node.min_x = std::min(node.min_x, x);
                node.max_x = std::max(node.max_x, x);
                node.min_y = std::min(node.min_y, y);
                node.max_y = std::max(node.max_y, y);
            }
            ++node.pixel_count;
            sum_l[id] += img.L[at];
            sum_a[id] += img.a[at];
            sum_b[id] += img.b[at];
            sum_x[id] += x;
            sum_y[id] += y;
        }
    }
    for (int id = 0; id < labels.k; ++id) {
        if (g.nodes[id].pixel_count == 0)
            throw InputError("build_graph: empty label " + std::to_string(id));
        const double n = static_cast<double>(g.nodes[id].pixel_count);
        g.nodes[id].mean_l = sum_l[id] / n;
        g.nodes[id].mean_a = sum_a[id] / n;
        g.nodes[id].mean_b = sum_b[id] / n;
        g.nodes[id].centroid_x = sum_x[id] / n;
        g.nodes[id].centroid_y = sum_y[id] / n;
    }

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::int32_t id = labels.labels[labels.idx(x, y)];
            if (x + 1 < w) {
                const std::int32_t r = labels.labels[labels.idx(x + 1, y)];
                if (r != id) g.edges.emplace_back(std::min(id, r), std::max(id, r));
            }
            if (y + 1 < h) {
                const std::int32_t d = labels.labels[labels.idx(x, y + 1)];
                if (d != id) g.edges.emplace_back(std::min(id, d), std::max(id, d));
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    g.neighbors.resize(labels.k);
    for (const auto& [a, b] : g.edges) {
        g.neighbors[a].push_back(b);
        g.neighbors[b].push_back(a);
    }
    for (auto& v : g.neighbors) std::sort(v.begin(), v.end());
    return g;
}

std::vector<Region> grow_regions(const SuperpixelGraph& graph, const GrowthConfig& cfg) {
    if (cfg.similarity_threshold < 0)
        throw ConfigError("grow_regions: similarity threshold must be >= 0");
    if (cfg.min_region_pixels < 1)
        throw ConfigError("grow_regions: min_region_pixels must be >= 1");

    const std::size_t n = graph.nodes.size();
    std::vector<std::int32_t> seeds(n);
    std::iota(seeds.begin(), seeds.end(), 0);
    switch (cfg.seed_order) {
        case SeedOrder::redness:
            std::stable_sort(seeds.begin(), seeds.end(), [&](std::int32_t a, std::int32_t b) {
                if (graph.nodes[a].mean_a != graph.nodes[b].mean_a)
                    return graph.nodes[a].mean_a > graph.nodes[b].mean_a;
                return a < b;
            });
            break;
        case SeedOrder::size:
            std::stable_sort(seeds.begin(), seeds.end(), [&](std::int32_t a, std::int32_t b) {
                if (graph.nodes[a].pixel_count != graph.nodes[b].pixel_count)
                    return graph.nodes[a].pixel_count > graph.nodes[b].pixel_count;
                return a < b;
            });
            break;
        case SeedOrder::raster:
            break;
    }

    std::vector<bool> assigned(n, false);
    std::vector<std::int32_t> visited_epoch(n, -1);
    std::vector<Region> out;

    for (std::size_t s = 0; s < seeds.size(); ++s) {
        const std::int32_t seed = seeds[s];
        if (assigned[seed]) continue;

        Region region;
        const GraphNode& sn = graph.nodes[seed];
        region.members.push_back(seed);
        region.min_x = sn.min_x;
        region.min_y = sn.min_y;
        region.max_x = sn.max_x;
        region.max_y = sn.max_y;
        region.pixel_count = sn.pixel_count;
        double sum_l = sn.mean_l * sn.pixel_count;
        double sum_a = sn.mean_a * sn.pixel_count;
        double sum_b = sn.mean_b * sn.pixel_count;
        assigned[seed] = true;

        const std::int32_t epoch = static_cast<std::int32_t>(s);
        std::deque<std::int32_t> queue;
        visited_epoch[seed] = epoch;
        for (const std::int32_t nb : graph.neighbors[seed]) {
            if (!assigned[nb] && visited_epoch[nb] != epoch) {
                visited_epoch[nb] = epoch;
                queue.push_back(nb);
            }
        }

        while (!queue.empty()) {
            const std::int32_t cand = queue.front();
            queue.pop_front();
            if (assigned[cand]) continue;
            const GraphNode& cn = graph.nodes[cand];
            const double inv = 1.0 / static_cast<double>(region.pixel_count);
            const double de = delta_e(sum_l * inv, sum_a * inv, sum_b * inv,
                                      cn.mean_l, cn.mean_a, cn.mean_b);
            if (de > cfg.similarity_threshold) continue;  // rejected for this region

            assigned[cand] = true;
            region.members.push_back(cand);
            region.pixel_count += cn.pixel_count;
            sum_l += cn.mean_l * cn.pixel_count;
            sum_a += cn.mean_a * cn.pixel_count;
            sum_b += cn.mean_b * cn.pixel_count;
            region.min_x = std::min(region.min_x, cn.min_x);
            region.min_y = std::min(region.min_y, cn.min_y);
            region.max_x = std::max(region.max_x, cn.max_x);
            region.max_y = std::max(region.max_y, cn.max_y);
            for (const std::int32_t nb : graph.neighbors[cand]) {
                if (!assigned[nb] && visited_epoch[nb] != epoch) {
                    visited_epoch[nb] = epoch;
                    queue.push_back(nb);
                }
            }
        }

        if (region.pixel_count >= cfg.min_region_pixels) {
            const double inv = 1.0 / static_cast<double>(region.pixel_count);
            region.mean_l = sum_l * inv;
            region.mean_a = sum_a * inv;
            region.mean_b = sum_b * inv;
            out.push_back(std::move(region));
        }
    }
    return out;
}

RgbImage region_to_thumbnail(const RgbImage& img, const Region& region, int out_size) {
    if (out_size < 8) throw InputError("region_to_thumbnail: out_size must be >= 8");
    if (region.max_x < region.min_x || region.max_y < region.min_y)
        throw RegionError("region_to_thumbnail: degenerate bounding box");
    if (region.min_x < 0 || region.min_y < 0 || region.max_x >= img.width ||
        region.max_y >= img.height)
        throw RegionError("region_to_thumbnail: bounding box outside image");

    const int bw = region.max_x - region.min_x + 1;
    const int bh = region.max_y - region.min_y + 1;
    const int pad_x = static_cast<int>(std::lround(0.05 * bw));
    const int pad_y = static_cast<int>(std::lround(0.05 * bh));
    const int x0 = std::max(0, region.min_x - pad_x);
    const int y0 = std::max(0, region.min_y - pad_y);
    const int x1 = std::min(img.width - 1, region.max_x + pad_x);
    const int y1 = std::min(img.height - 1, region.max_y + pad_y);

    return resize_bilinear(crop(img, x0, y0, x1, y1), out_size, out_size);
}

}  // namespace ripeline
