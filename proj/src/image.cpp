#include "ripeline/image.hpp"

#include <algorithm>
#include <cmath>

#include "ripeline/errors.hpp"

namespace ripeline {

namespace {

// sRGB 8-bit -> linear, tabulated once. The table keeps the per-pixel loop
// free of pow() and guarantees every pixel sees the exact same value.
const double* srgb_linear_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(256);
        for (int v = 0; v < 256; ++v) {
            const double c = v / 255.0;
            t[v] = (c <= 0.04045) ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
        }
        return t;
    }();
    return table.data();
}

constexpr double kXn = 0.95047;
constexpr double kYn = 1.0;
constexpr double kZn = 1.08883;
constexpr double kEps = 216.0 / 24389.0;   // (6/29)^3
constexpr double kKappa = 24389.0 / 27.0;

inline double lab_pivot(double t) {
    return t > kEps ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

}  // namespace

void srgb_pixel_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b,
                       double& L, double& a, double& bb) {
    const double* lin = srgb_linear_table();
    const double rl = lin[r];
    const double gl = lin[g];
    const double bl = lin[b];

    const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
    const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
    const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;

    const double fx = lab_pivot(x / kXn);
    const double fy = lab_pivot(y / kYn);
    const double fz = lab_pivot(z / kZn);

    L = std::clamp(116.0 * fy - 16.0, 0.0, 100.0);
    a = std::clamp(500.0 * (fx - fy), -128.0, 127.0);
    bb = std::clamp(200.0 * (fy - fz), -128.0, 127.0);
}

LabImage rgb_to_lab(const RgbImage& img) {
    LabImage out(img.width, img.height);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* p = img.data.data() + i * 3;
        srgb_pixel_to_lab(p[0], p[1], p[2], out.L[i], out.a[i], out.b[i]);
    }
    return out;
}

double gradient_magnitude(const LabImage& img, int x, int y) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height)
        throw CoordinateError("gradient_magnitude: (" + std::to_string(x) + "," +
                              std::to_string(y) + ") outside " + std::to_string(img.width) +
                              "x" + std::to_string(img.height));
    const int xm = std::max(0, x - 1), xp = std::min(img.width - 1, x + 1);
    const int ym = std::max(0, y - 1), yp = std::min(img.height - 1, y + 1);
    const std::size_t ixm = img.idx(xm, y), ixp = img.idx(xp, y);
    const std::size_t iym = img.idx(x, ym), iyp = img.idx(x, yp);

    const double gxL = (img.L[ixp] - img.L[ixm]) * 0.5;
    const double gxa = (img.a[ixp] - img.a[ixm]) * 0.5;
    const double gxb = (img.b[ixp] - img.b[ixm]) * 0.5;
    const double gyL = (img.L[iyp] - img.L[iym]) * 0.5;
    const double gya = (img.a[iyp] - img.a[iym]) * 0.5;
    const double gyb = (img.b[iyp] - img.b[iym]) * 0.5;

    return std::sqrt(gxL * gxL + gxa * gxa + gxb * gxb +
                     gyL * gyL + gya * gya + gyb * gyb);
}

RgbImage resize_bilinear(const RgbImage& img, int out_w, int out_h) {
    if (img.width < 1 || img.height < 1)
        throw InputError("resize_bilinear: empty source");
    if (out_w < 1 || out_h < 1)
        throw InputError("resize_bilinear: empty destination");

    RgbImage out(out_w, out_h);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;
    for (int oy = 0; oy < out_h; ++oy) {
        double fy = (oy + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double wy = fy - y0;
        for (int ox = 0; ox < out_w; ++ox) {
            double fx = (ox + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double wx = fx - x0;

            const std::uint8_t* p00 = img.px(x0, y0);
            const std::uint8_t* p10 = img.px(x1, y0);
            const std::uint8_t* p01 = img.px(x0, y1);
            const std::uint8_t* p11 = img.px(x1, y1);
            std::uint8_t* dst = out.px(ox, oy);
            for (int c = 0; c < 3; ++c) {
                const double top = p00[c] + (p10[c] - p00[c]) * wx;
                const double bot = p01[c] + (p11[c] - p01[c]) * wx;
                const double v = top + (bot - top) * wy;
                dst[c] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

RgbImage crop(const RgbImage& img, int x0, int y0, int x1, int y1) {
    if (x0 < 0 || y0 < 0 || x1 >= img.width || y1 >= img.height || x0 > x1 || y0 > y1)
        throw InputError("crop: bad rectangle");
    RgbImage out(x1 - x0 + 1, y1 - y0 + 1);
    for (int y = y0; y <= y1; ++y) {
        const std::uint8_t* src = img.px(x0, y);
        std::uint8_t* dst = out.px(0, y - y0);
        std::copy(src, src + static_cast<std::size_t>(out.width) * 3, dst);
    }
    return out;
}

}  // namespace ripeline
