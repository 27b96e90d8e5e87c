#include "ripeline/kernels.hpp"

#include <cstring>

// Scalar reference kernels. These define the numerical contract: any SIMD
// variant must reproduce these results bit-for-bit.

namespace ripeline::kernels::scalar {

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n, bool acc) {
    if (!acc) std::memset(c, 0, m * n * sizeof(double));
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double av = arow[p];
            const double* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += av * brow[j];
            }
        }
    }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void slic_assign_row(const double* L, const double* a, const double* b,
                     std::size_t x0, std::size_t x1, double y,
                     double cl, double ca, double cb, double cx, double cy,
                     double w, double label,
                     double* best_d2, double* best_label) {
    const double dy = y - cy;
    const double dy2 = dy * dy;
    for (std::size_t x = x0; x < x1; ++x) {
        const double dl = L[x] - cl;
        const double da = a[x] - ca;
        const double db = b[x] - cb;
        const double dx = static_cast<double>(x) - cx;
        const double color = dl * dl + da * da + db * db;
        const double spatial = dx * dx + dy2;
        const double d2 = color + spatial * w;
        if (d2 < best_d2[x]) {
            best_d2[x] = d2;
            best_label[x] = label;
        }
    }
}

}  // namespace ripeline::kernels::scalar
