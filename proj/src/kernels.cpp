#include "rclus/kernels.hpp"

#include <atomic>

#include "rclus/types.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define RCLUS_X86 1
#include <immintrin.h>
#endif

namespace rclus::kernels {

double l2_sq_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

bool cpu_has_avx2() {
#if defined(RCLUS_X86) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

#if defined(RCLUS_X86) && defined(__GNUC__)

__attribute__((target("avx2,fma"))) double l2_sq_avx2(const double* a, const double* b,
                                                      std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc0 = _mm256_fmadd_pd(d, d, acc0);
    }
    const __m256d acc = _mm256_add_pd(acc0, acc1);
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    double out = _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        out += d * d;
    }
    return out;
}

#else

double l2_sq_avx2(const double* a, const double* b, std::size_t n) {
    return l2_sq_scalar(a, b, n);
}

#endif

namespace {

using KernelFn = double (*)(const double*, const double*, std::size_t);

std::atomic<KernelFn> g_kernel{nullptr};
std::atomic<Simd> g_active{Simd::Auto};

void resolve(Simd mode) {
    if (mode == Simd::Auto) mode = cpu_has_avx2() ? Simd::Avx2 : Simd::Scalar;
    if (mode == Simd::Avx2 && !cpu_has_avx2())
        throw ComputeError("simd kernel 'avx2' not supported by this CPU");
    g_kernel.store(mode == Simd::Avx2 ? &l2_sq_avx2 : &l2_sq_scalar);
    g_active.store(mode);
}

}  // namespace

void set_simd_mode(Simd mode) { resolve(mode); }

Simd active_simd() {
    if (g_kernel.load() == nullptr) resolve(Simd::Auto);
    return g_active.load();
}

std::string simd_name(Simd mode) {
    switch (mode) {
        case Simd::Scalar: return "scalar";
        case Simd::Avx2: return "avx2";
        default: return "auto";
    }
}

double l2_sq(const double* a, const double* b, std::size_t n) {
    KernelFn fn = g_kernel.load();
    if (fn == nullptr) {
        resolve(Simd::Auto);
        fn = g_kernel.load();
    }
    return fn(a, b, n);
}

}  // namespace rclus::kernels
