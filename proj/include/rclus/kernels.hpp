#pragma once

#include <cstddef>
#include <string>

namespace rclus::kernels {

/// Which squared-L2 kernel services l2_sq(). Auto resolves at first use from
/// CPU features and stays fixed for the life of the process (results on a
/// given machine are therefore bit-stable regardless of call site).
enum class Simd {
    Auto,
    Scalar,
    Avx2,
};

/// Scalar reference: sequential accumulation, the semantics SIMD variants
/// are equivalence-tested against.
double l2_sq_scalar(const double* a, const double* b, std::size_t n);

/// AVX2+FMA variant; falls back to scalar when built for other targets.
double l2_sq_avx2(const double* a, const double* b, std::size_t n);

bool cpu_has_avx2();

/// Selects the kernel; Simd::Auto picks AVX2 when the CPU supports it.
/// Throws ComputeError if an unsupported kernel is forced.
void set_simd_mode(Simd mode);

/// The kernel actually in service after resolution.
Simd active_simd();
std::string simd_name(Simd mode);

/// Squared Euclidean distance between two length-n vectors via the active kernel.
double l2_sq(const double* a, const double* b, std::size_t n);

}  // namespace rclus::kernels
