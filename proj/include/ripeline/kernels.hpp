#pragma once

#include <cstddef>
#include <string>

namespace ripeline::kernels {

// Inner-loop kernels behind the segmentation and network code. Every kernel
// has a scalar reference implementation and may have SIMD variants; the
// active variant is picked once at startup from CPU capabilities (override
// with RIPELINE_KERNELS=scalar|avx2). SIMD variants are required to produce
// bit-identical results to the scalar reference: element-parallel work only,
// same operation order per element, no fused multiply-add.

enum class Backend { scalar, avx2 };

struct Ops {
    // C (m x n) = A (m x k) * B (k x n); accumulates into C when acc is set.
    // Accumulation runs in k order for every output element.
    void (*matmul)(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n, bool acc);

    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

    // One row of the SLIC assignment step. For x in [x0, x1):
    //   d2 = (L-cl)^2 + (a-ca)^2 + (b-cb)^2 + ((x-cx)^2 + (y-cy)^2) * w
    // and where d2 < best_d2[x], best_d2 and best_label are replaced.
    // Labels travel as doubles so distance and label blend identically.
    void (*slic_assign_row)(const double* L, const double* a, const double* b,
                            std::size_t x0, std::size_t x1, double y,
                            double cl, double ca, double cb, double cx, double cy,
                            double w, double label,
                            double* best_d2, double* best_label);
};

// Active backend, resolved on first use.
Backend active();

// Kernel table for the active backend.
const Ops& ops();

// Kernel table for a specific backend; throws ConfigError if unavailable.
const Ops& ops_for(Backend b);

bool available(Backend b);
const char* name(Backend b);

// Test hook: force a backend for the rest of the process.
void force(Backend b);

}  // namespace ripeline::kernels
