#pragma once

// Data-parallel evaluation of diagram profiles on a grid of points.
//
// For a diagram with rows r_1 >= ... >= r_l the profile is
//
//     f(x) = x + 2 * ( sum_i clamp(r_i - i + 1 - x, 0, 1) + max(0, -l - x) ),
//
// i.e. |x| plus twice the rotated box mass above x. Every variant performs
// the same operations in the same order per grid point, so results are
// bit-identical across instruction sets.

#include <span>
#include <string_view>

namespace blockchar::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
/// Best instruction set supported by the running CPU.
Isa detect_isa();
/// detect_isa(), unless BLOCKCHAR_SIMD=scalar forces the reference kernel.
Isa active_isa();

/// out[j] = f(points[j]) where shifted_rows[i] = r_{i+1} - i (0-based i) and
/// `length` = l. `out` must be at least as long as `points`.
void evaluate_profile(std::span<const double> shifted_rows, double length, std::span<const double> points,
                      std::span<double> out, Isa isa);

void evaluate_profile_scalar(std::span<const double> shifted_rows, double length, std::span<const double> points,
                             std::span<double> out);
#if defined(__x86_64__) || defined(_M_X64)
void evaluate_profile_avx2(std::span<const double> shifted_rows, double length, std::span<const double> points,
                           std::span<double> out);
#endif
#if defined(__aarch64__)
void evaluate_profile_neon(std::span<const double> shifted_rows, double length, std::span<const double> points,
                           std::span<double> out);
#endif

}  // namespace blockchar::simd
