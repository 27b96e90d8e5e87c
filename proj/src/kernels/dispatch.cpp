#include "ripeline/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "ripeline/errors.hpp"

namespace ripeline::kernels {

namespace scalar {
void matmul(const double*, const double*, double*, std::size_t, std::size_t, std::size_t, bool);
void axpy(double, const double*, double*, std::size_t);
void slic_assign_row(const double*, const double*, const double*, std::size_t, std::size_t,
                     double, double, double, double, double, double, double, double,
                     double*, double*);
}  // namespace scalar

#if RIPELINE_HAVE_AVX2
namespace avx2 {
void matmul(const double*, const double*, double*, std::size_t, std::size_t, std::size_t, bool);
void axpy(double, const double*, double*, std::size_t);
void slic_assign_row(const double*, const double*, const double*, std::size_t, std::size_t,
                     double, double, double, double, double, double, double, double,
                     double*, double*);
}  // namespace avx2
#endif

namespace {

const Ops kScalarOps{&scalar::matmul, &scalar::axpy, &scalar::slic_assign_row};

#if RIPELINE_HAVE_AVX2
const Ops kAvx2Ops{&avx2::matmul, &avx2::axpy, &avx2::slic_assign_row};
#endif

bool cpu_has_avx2() {
#if RIPELINE_HAVE_AVX2
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend resolve_initial() {
    if (const char* env = std::getenv("RIPELINE_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return Backend::scalar;
        if (want == "avx2") {
            if (!cpu_has_avx2())
                throw ConfigError("RIPELINE_KERNELS=avx2 but this CPU has no AVX2");
            return Backend::avx2;
        }
        throw ConfigError("unknown RIPELINE_KERNELS value: " + want);
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_forced{-1};

}  // namespace

bool available(Backend b) {
    if (b == Backend::scalar) return true;
    return cpu_has_avx2();
}

const char* name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

Backend active() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Backend>(forced);
    static const Backend initial = resolve_initial();
    return initial;
}

void force(Backend b) {
    if (!available(b))
        throw ConfigError(std::string("kernel backend unavailable: ") + name(b));
    g_forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

const Ops& ops_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return kScalarOps;
        case Backend::avx2:
#if RIPELINE_HAVE_AVX2
            if (cpu_has_avx2()) return kAvx2Ops;
#endif
            throw ConfigError("kernel backend unavailable: avx2");
    }
    throw ConfigError("bad backend");
}

const Ops& ops() { return ops_for(active()); }

}  // namespace ripeline::kernels
