#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ripeline/kernels.hpp"

namespace ripeline {

// at (n x m) = transpose of a (m x n). Pure data movement.
inline void transpose(const double* a, double* at, std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) at[j * m + i] = a[i * n + j];
}

// Numerically stable in-place softmax.
inline void softmax_inplace(double* v, std::size_t n) {
    double mx = v[0];
    for (std::size_t i = 1; i < n; ++i) mx = std::max(mx, v[i]);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = std::exp(v[i] - mx);
        sum += v[i];
    }
    for (std::size_t i = 0; i < n; ++i) v[i] /= sum;
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace ripeline
