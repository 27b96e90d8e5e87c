#include "ripeline/kernels.hpp"

#include <cstring>
#include <immintrin.h>

// AVX2 variants of the reference kernels. Only mul/add/cmp/blend intrinsics
// are used (never FMA) and per-element operation order matches scalar.cpp
// exactly, so outputs are bit-identical to the reference. Equivalence is
// enforced by tests/test_kernels.cpp.

namespace ripeline::kernels::avx2 {

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n, bool acc) {
    if (!acc) std::memset(c, 0, m * n * sizeof(double));
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double av = arow[p];
            const double* brow = b + p * n;
            const __m256d vav = _mm256_set1_pd(av);
            std::size_t j = 0;
            for (; j < n4; j += 4) {
                __m256d vb = _mm256_loadu_pd(brow + j);
                __m256d vc = _mm256_loadu_pd(crow + j);
                vc = _mm256_add_pd(vc, _mm256_mul_pd(vav, vb));
                _mm256_storeu_pd(crow + j, vc);
            }
            for (; j < n; ++j) {
                crow[j] += av * brow[j];
            }
        }
    }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const std::size_t n4 = n - n % 4;
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) {
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

    const __m256d vcl = _mm256_set1_pd(cl);
    const __m256d vca = _mm256_set1_pd(ca);
    const __m256d vcb = _mm256_set1_pd(cb);
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vdy2 = _mm256_set1_pd(dy2);
    const __m256d vw = _mm256_set1_pd(w);
    const __m256d vlabel = _mm256_set1_pd(label);

    std::size_t x = x0;
    for (; x + 4 <= x1; x += 4) {
        const double xd = static_cast<double>(x);
        const __m256d vx = _mm256_set_pd(xd + 3.0, xd + 2.0, xd + 1.0, xd);

        const __m256d dl = _mm256_sub_pd(_mm256_loadu_pd(L + x), vcl);
        const __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a + x), vca);
        const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b + x), vcb);
        const __m256d dx = _mm256_sub_pd(vx, vcx);

        // color = (dl*dl + da*da) + db*db, matching scalar association
        const __m256d color = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(dl, dl), _mm256_mul_pd(da, da)),
            _mm256_mul_pd(db, db));
        const __m256d spatial = _mm256_add_pd(_mm256_mul_pd(dx, dx), vdy2);
        const __m256d d2 = _mm256_add_pd(color, _mm256_mul_pd(spatial, vw));

        const __m256d cur = _mm256_loadu_pd(best_d2 + x);
        const __m256d mask = _mm256_cmp_pd(d2, cur, _CMP_LT_OQ);

        const __m256d newd = _mm256_blendv_pd(cur, d2, mask);
        const __m256d curlab = _mm256_loadu_pd(best_label + x);
        const __m256d newlab = _mm256_blendv_pd(curlab, vlabel, mask);
        _mm256_storeu_pd(best_d2 + x, newd);
        _mm256_storeu_pd(best_label + x, newlab);
    }
    for (; x < x1; ++x) {
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

}  // namespace ripeline::kernels::avx2
