// Compiled with -mavx2; only reached after a runtime CPU check.

#include "blockchar/profile_kernels.hpp"

#include <immintrin.h>

namespace blockchar::simd {

void evaluate_profile_avx2(std::span<const double> shifted_rows, double length, std::span<const double> points,
                           std::span<double> out) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d neg_length = _mm256_set1_pd(-length);
    std::size_t j = 0;
    for (; j + 4 <= points.size(); j += 4) {
        const __m256d x = _mm256_loadu_pd(points.data() + j);
        __m256d mass = zero;
        for (double row : shifted_rows) {
            const __m256d shifted = _mm256_sub_pd(_mm256_add_pd(_mm256_set1_pd(row), one), x);
            mass = _mm256_add_pd(mass, _mm256_min_pd(_mm256_max_pd(shifted, zero), one));
        }
        mass = _mm256_add_pd(mass, _mm256_max_pd(_mm256_sub_pd(neg_length, x), zero));
        _mm256_storeu_pd(out.data() + j, _mm256_add_pd(x, _mm256_mul_pd(two, mass)));
    }
    if (j < points.size()) evaluate_profile_scalar(shifted_rows, length, points.subspan(j), out.subspan(j));
}

}  // namespace blockchar::simd
