// Built on aarch64 only.

#include "blockchar/profile_kernels.hpp"

#include <arm_neon.h>

namespace blockchar::simd {

void evaluate_profile_neon(std::span<const double> shifted_rows, double length, std::span<const double> points,
                           std::span<double> out) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t two = vdupq_n_f64(2.0);
    const float64x2_t neg_length = vdupq_n_f64(-length);
    std::size_t j = 0;
    for (; j + 2 <= points.size(); j += 2) {
        const float64x2_t x = vld1q_f64(points.data() + j);
        float64x2_t mass = zero;
        for (double row : shifted_rows) {
            const float64x2_t shifted = vsubq_f64(vaddq_f64(vdupq_n_f64(row), one), x);
            mass = vaddq_f64(mass, vminq_f64(vmaxq_f64(shifted, zero), one));
        }
        mass = vaddq_f64(mass, vmaxq_f64(vsubq_f64(neg_length, x), zero));
        vst1q_f64(out.data() + j, vaddq_f64(x, vmulq_f64(two, mass)));
    }
    if (j < points.size()) evaluate_profile_scalar(shifted_rows, length, points.subspan(j), out.subspan(j));
}

}  // namespace blockchar::simd
