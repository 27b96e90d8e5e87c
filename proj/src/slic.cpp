#include "ripeline/slic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ripeline/errors.hpp"
#include "ripeline/kernels.hpp"

namespace ripeline {

int slic_grid_step(int width, int height, int k_target) {
    const double s = std::sqrt(static_cast<double>(width) * height / k_target);
    return std::max(1, static_cast<int>(std::lround(s)));
}

std::vector<ClusterCenter> init_centers(const LabImage& img, int k_target) {
    const std::int64_t pixels = static_cast<std::int64_t>(img.width) * img.height;
    if (k_target < 1) throw ConfigError("init_centers: k_target must be >= 1");
    if (k_target > pixels)
        throw ConfigError("init_centers: k_target " + std::to_string(k_target) +
                          " exceeds pixel count " + std::to_string(pixels));

    // Balance grid columns/rows against the aspect ratio so the effective
    // count stays close to k_target even when k is small or the image is
    // far from square.
    int nx = static_cast<int>(
        std::ceil(std::sqrt(static_cast<double>(k_target) * img.width / img.height)));
    nx = std::clamp(nx, 1, std::min(k_target, img.width));
    int ny = static_cast<int>(std::ceil(static_cast<double>(k_target) / nx));
    ny = std::clamp(ny, 1, img.height);

    std::vector<ClusterCenter> centers;
    centers.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        const int cy = static_cast<int>((j + 0.5) * img.height / ny);
        for (int i = 0; i < nx; ++i) {
            const int cx = static_cast<int>((i + 0.5) * img.width / nx);
            ClusterCenter c;
            c.x = cx;
            c.y = cy;
            const std::size_t at = img.idx(cx, cy);
            c.l = img.L[at];
            c.a = img.a[at];
            c.b = img.b[at];
            centers.push_back(c);
        }
    }
    return centers;
}

ClusterCenter perturb_to_lowest_gradient(const ClusterCenter& center, const LabImage& img) {
    const int cx = static_cast<int>(std::lround(center.x));
    const int cy = static_cast<int>(std::lround(center.y));
    if (cx < 0 || cy < 0 || cx >= img.width || cy >= img.height)
        throw CoordinateError("perturb_to_lowest_gradient: center out of bounds");

    int best_x = -1, best_y = -1;
    double best_g = std::numeric_limits<double>::infinity();
    for (int y = std::max(0, cy - 1); y <= std::min(img.height - 1, cy + 1); ++y) {
        for (int x = std::max(0, cx - 1); x <= std::min(img.width - 1, cx + 1); ++x) {
            const double g = gradient_magnitude(img, x, y);
            if (g < best_g) {  // strict: raster order wins ties
                best_g = g;
                best_x = x;
                best_y = y;
            }
        }
    }
    ClusterCenter out;
    out.x = best_x;
    out.y = best_y;
    const std::size_t at = img.idx(best_x, best_y);
    out.l = img.L[at];
    out.a = img.a[at];
    out.b = img.b[at];
    return out;
}

namespace {

// Assigns every pixel to its best center within the 2S windows. Pixels no
// window reaches (possible with clamped grids on extreme aspect ratios)
// fall back to a full scan.
void assign_pixels(const LabImage& img, const std::vector<ClusterCenter>& centers,
                   int S, double spatial_weight, std::vector<double>& best_d2,
                   std::vector<double>& best_label) {
    const auto& k = kernels::ops();
    std::fill(best_d2.begin(), best_d2.end(), std::numeric_limits<double>::infinity());
    std::fill(best_label.begin(), best_label.end(), -1.0);

    for (std::size_t c = 0; c < centers.size(); ++c) {
        const ClusterCenter& ctr = centers[c];
        const int icx = static_cast<int>(std::lround(ctr.x));
        const int icy = static_cast<int>(std::lround(ctr.y));
        const int y0 = std::max(0, icy - S), y1 = std::min(img.height - 1, icy + S);
        const int x0 = std::max(0, icx - S), x1 = std::min(img.width - 1, icx + S);
        for (int y = y0; y <= y1; ++y) {
            const std::size_t row = img.idx(0, y);
            k.slic_assign_row(img.L.data() + row, img.a.data() + row, img.b.data() + row,
                              static_cast<std::size_t>(x0), static_cast<std::size_t>(x1) + 1,
                              static_cast<double>(y), ctr.l, ctr.a, ctr.b, ctr.x, ctr.y,
                              spatial_weight, static_cast<double>(c), best_d2.data() + row,
                              best_label.data() + row);
        }
    }

    // Fallback for unreached pixels: nearest center by the full distance.
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const std::size_t at = img.idx(x, y);
            if (best_label[at] >= 0.0) continue;
            for (std::size_t c = 0; c < centers.size(); ++c) {
                const ClusterCenter& ctr = centers[c];
                const double dl = img.L[at] - ctr.l;
                const double da = img.a[at] - ctr.a;
                const double db = img.b[at] - ctr.b;
                const double dx = x - ctr.x;
                const double dy = y - ctr.y;
                const double d2 =
                    dl * dl + da * da + db * db + (dx * dx + dy * dy) * spatial_weight;
                if (d2 < best_d2[at]) {
                    best_d2[at] = d2;
                    best_label[at] = static_cast<double>(c);
                }
            }
        }
    }
}

}  // namespace

SlicResult slic_segment(const LabImage& img, const SlicConfig& cfg) {
    if (cfg.max_iters < 1) throw ConfigError("slic_segment: max_iters must be >= 1");
    if (cfg.compactness <= 0) throw ConfigError("slic_segment: compactness must be > 0");
    if (cfg.residual_threshold < 0)
        throw ConfigError("slic_segment: residual_threshold must be >= 0");

    std::vector<ClusterCenter> centers = init_centers(img, cfg.k_target);
    for (auto& c : centers) c = perturb_to_lowest_gradient(c, img);

    const int S = slic_grid_step(img.width, img.height, cfg.k_target);
    const double spatial_weight =
        (cfg.compactness * cfg.compactness) / (static_cast<double>(S) * S);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    std::vector<double> best_d2(n), best_label(n);

    int iterations = 0;
    double residual = 0.0;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        assign_pixels(img, centers, S, spatial_weight, best_d2, best_label);

        // Recompute centers as the mean Lab and xy of their pixels.
        std::vector<double> sum_l(centers.size(), 0.0), sum_a(centers.size(), 0.0),
            sum_b(centers.size(), 0.0), sum_x(centers.size(), 0.0), sum_y(centers.size(), 0.0);
        std::vector<std::int64_t> count(centers.size(), 0);
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                const std::size_t at = img.idx(x, y);
                const std::size_t c = static_cast<std::size_t>(best_label[at]);
                sum_l[c] += img.L[at];
                sum_a[c] += img.a[at];
                sum_b[c] += img.b[at];
                sum_x[c] += x;
                sum_y[c] += y;
                ++count[c];
            }
        }
        residual = 0.0;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            if (count[c] == 0) continue;  // empty cluster keeps its position
            ClusterCenter next;
            next.l = sum_l[c] / count[c];
            next.a = sum_a[c] / count[c];
            next.b = sum_b[c] / count[c];
            next.x = sum_x[c] / count[c];
            next.y = sum_y[c] / count[c];
            const double mx = next.x - centers[c].x;
            const double my = next.y - centers[c].y;
            residual += std::sqrt(mx * mx + my * my);
            centers[c] = next;
        }
        iterations = iter + 1;
        if (residual <= cfg.residual_threshold) break;
    }

    SuperpixelLabels raw;
    raw.width = img.width;
    raw.height = img.height;
    raw.k = static_cast<int>(centers.size());
    raw.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        raw.labels[i] = static_cast<std::int32_t>(best_label[i]);

    SlicResult out;
    out.labels = enforce_connectivity(raw);
    out.iterations_run = iterations;
    out.final_residual = residual;
    return out;
}

SuperpixelLabels enforce_connectivity(const SuperpixelLabels& in) {
    const int w = in.width, h = in.height;
    const std::size_t n = static_cast<std::size_t>(w) * h;
    if (in.labels.size() != n) throw InputError("enforce_connectivity: size mismatch");
    if (in.k < 1) throw InputError("enforce_connectivity: k must be >= 1");

    const int S = slic_grid_step(w, h, in.k);
    const double min_size = static_cast<double>(S) * S / 4.0;

    // Pass 1: 4-connected components in raster discovery order.
    std::vector<std::int32_t> comp(n, -1);
    std::vector<std::int64_t> comp_size;
    std::vector<std::int32_t> comp_label;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const std::int32_t id = static_cast<std::int32_t>(comp_size.size());
        const std::int32_t lab = in.labels[start];
        std::int64_t size = 0;
        comp[start] = id;
        stack.assign(1, start);
        while (!stack.empty()) {
            const std::size_t at = stack.back();
            stack.pop_back();
            ++size;
            const int x = static_cast<int>(at % w), y = static_cast<int>(at / w);
            const std::size_t nb[4] = {at - 1, at + 1, at - w, at + w};
            const bool ok[4] = {x > 0, x < w - 1, y > 0, y < h - 1};
            for (int d = 0; d < 4; ++d) {
                if (!ok[d] || comp[nb[d]] >= 0 || in.labels[nb[d]] != lab) continue;
                comp[nb[d]] = id;
                stack.push_back(nb[d]);
            }
        }
        comp_size.push_back(size);
        comp_label.push_back(lab);
    }
    const std::size_t ncomp = comp_size.size();

    // Component adjacency (unique, sorted neighbor lists).
    std::vector<std::vector<std::int32_t>> adj(ncomp);
    for (std::size_t at = 0; at < n; ++at) {
        const int x = static_cast<int>(at % w), y = static_cast<int>(at / w);
        if (x + 1 < w && comp[at] != comp[at + 1]) {
            adj[comp[at]].push_back(comp[at + 1]);
            adj[comp[at + 1]].push_back(comp[at]);
        }
        if (y + 1 < h && comp[at] != comp[at + w]) {
            adj[comp[at]].push_back(comp[at + w]);
            adj[comp[at + w]].push_back(comp[at]);
        }
    }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // Pass 2: in discovery order, absorb small components into the largest
    // adjacent merged unit (ties to the smaller root id).
    std::vector<std::int32_t> parent(ncomp);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::int64_t> root_size = comp_size;
    auto find = [&](std::int32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::size_t c = 0; c < ncomp; ++c) {
        const std::int32_t root = find(static_cast<std::int32_t>(c));
        if (static_cast<double>(root_size[root]) >= min_size) continue;
        std::int32_t target = -1;
        std::int64_t target_size = -1;
        for (const std::int32_t nb : adj[c]) {
            const std::int32_t nb_root = find(nb);
            if (nb_root == root) continue;
            if (root_size[nb_root] > target_size ||
                (root_size[nb_root] == target_size && nb_root < target)) {
                target = nb_root;
                target_size = root_size[nb_root];
            }
        }
        if (target < 0) continue;  // isolated small component stays
        parent[root] = target;
        root_size[target] += root_size[root];
    }

    // Pass 3: dense relabel. Surviving roots are ordered by their original
    // label first so an already-connected input maps to itself.
    std::vector<std::int32_t> roots;
    for (std::size_t c = 0; c < ncomp; ++c)
        if (find(static_cast<std::int32_t>(c)) == static_cast<std::int32_t>(c))
            roots.push_back(static_cast<std::int32_t>(c));
    std::stable_sort(roots.begin(), roots.end(), [&](std::int32_t x, std::int32_t y) {
        if (comp_label[x] != comp_label[y]) return comp_label[x] < comp_label[y];
        return x < y;
    });
    std::vector<std::int32_t> new_label(ncomp, -1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        new_label[roots[i]] = static_cast<std::int32_t>(i);

    SuperpixelLabels out;
    out.width = w;
    out.height = h;
    out.k = static_cast<int>(roots.size());
    out.labels.resize(n);
    for (std::size_t at = 0; at < n; ++at) out.labels[at] = new_label[find(comp[at])];
    return out;
}

}  // namespace ripeline
